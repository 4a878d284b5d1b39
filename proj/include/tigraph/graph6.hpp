#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tigraph/graph.hpp"

namespace tigraph {

// graph6 text codec. Layout: a vertex-count header N(n), then the upper
// triangle of the adjacency matrix read column by column (x_{0,1}, x_{0,2},
// x_{1,2}, x_{0,3}, ...), packed big-endian into 6-bit groups, each group
// stored as one printable byte value+63. Headers: n <= 62 is a single byte;
// 63 <= n <= 258047 is '~' plus three bytes; larger uses '~~' plus six.
//
// Parsing is strict: exact length, bytes in [63,126], zero padding bits.
// Parsed graphs are NOT connectivity-checked here; analysis code calls
// Graph::require_connected() before computing anything distance-based.

namespace detail {
inline int g6_byte(std::string_view s, std::size_t i) {
  if (i >= s.size())
    fail(Errc::MalformedGraph6, "input truncated at byte " + std::to_string(i));
  unsigned char c = static_cast<unsigned char>(s[i]);
  if (c < 63 || c > 126)
    fail(Errc::MalformedGraph6, "invalid byte at offset " + std::to_string(i));
  return c - 63;
}
}  // namespace detail

inline Graph parse_graph6(std::string_view s) {
  std::size_t pos = 0;
  long long n = 0;
  int b0 = detail::g6_byte(s, pos);
  if (b0 < 63) {
    n = b0;
    pos = 1;
  } else {
    int b1 = detail::g6_byte(s, 1);
    if (b1 < 63) {
      n = (static_cast<long long>(b1) << 12) | (detail::g6_byte(s, 2) << 6) |
          detail::g6_byte(s, 3);
      pos = 4;
    } else {
      n = 0;
      for (int k = 0; k < 6; ++k) n = (n << 6) | detail::g6_byte(s, 2 + k);
      pos = 8;
    }
  }
  if (n < 1)
    fail(Errc::MalformedGraph6, "vertex count " + std::to_string(n) + " out of range");
  const long long nbits = n * (n - 1) / 2;
  const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
  if (s.size() != pos + nbytes)
    fail(Errc::MalformedGraph6, "expected " + std::to_string(pos + nbytes) + " bytes, got " +
                                     std::to_string(s.size()));
  std::vector<Edge> edges;
  long long bit = 0;
  for (VertexId j = 1; j < n; ++j)
    for (VertexId i = 0; i < j; ++i, ++bit) {
      int byte = detail::g6_byte(s, pos + static_cast<std::size_t>(bit / 6));
      if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  // Reject stray bits in the final partial group: canonical encoders pad
  // with zeros, anything else signals a corrupt line.
  for (long long b = bit; b < static_cast<long long>(nbytes) * 6; ++b) {
    int byte = detail::g6_byte(s, pos + static_cast<std::size_t>(b / 6));
    if ((byte >> (5 - b % 6)) & 1)
      fail(Errc::MalformedGraph6,
           "nonzero padding at offset " + std::to_string(pos + static_cast<std::size_t>(b / 6)));
  }
  return Graph::from_edge_list(static_cast<int>(n), std::move(edges), false);
}

inline std::string to_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int k = 5; k >= 0; --k) out.push_back(static_cast<char>(((n >> (6 * k)) & 63) + 63));
  }
  const long long nbits = n * (n - 1) / 2;
  std::vector<std::uint8_t> groups(static_cast<std::size_t>((nbits + 5) / 6), 0);
  long long bit = 0;
  for (VertexId j = 1; j < n; ++j)
    for (VertexId i = 0; i < j; ++i, ++bit)
      if (g.has_edge(i, j)) groups[static_cast<std::size_t>(bit / 6)] |= 1u << (5 - bit % 6);
  for (std::uint8_t grp : groups) out.push_back(static_cast<char>(grp + 63));
  return out;
}

}  // namespace tigraph
