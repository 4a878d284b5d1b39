#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tigraph/graph.hpp"
#include "tigraph/setfam.hpp"

namespace tigraph {

// Family constructors share one labeling convention: core vertices first in
// a fixed documented order, then pendant-path vertices in attachment order,
// each path numbered from the vertex nearest its root outwards. Tests and
// the predicted-set oracles rely on this layout.

namespace detail {
// Appends a path of `len` new vertices hanging off `root`. len = 0 attaches
// nothing. Returns the id one past the last vertex used.
inline int attach_path(std::vector<Edge>& edges, int next_id, VertexId root, int len) {
  VertexId prev = root;
  for (int i = 0; i < len; ++i) {
    edges.emplace_back(prev, next_id);
    prev = next_id++;
  }
  return next_id;
}
}  // namespace detail

// Spider: one branching vertex 0 with pendant paths of the given lengths.
inline Graph starlike(std::span<const int> arms) {
  if (arms.size() < 3) fail(Errc::BadArity, "starlike tree needs at least 3 arms");
  int n = 1;
  for (int a : arms) {
    if (a < 1) fail(Errc::BadLength, "arm lengths must be >= 1");
    n += a;
  }
  std::vector<Edge> edges;
  int next = 1;
  for (int a : arms) next = detail::attach_path(edges, next, 0, a);
  return Graph::from_edge_list(n, std::move(edges));
}

// Two branching vertices joined by a path of length k: vertex 0 carries
// pendant paths a1 and a2, vertex 1 carries b1 and b2. Vertex layout:
// 0, 1, a1-path, a2-path, interior of the k-path (from 0 towards 1),
// b1-path, b2-path.
inline Graph h_tree(int k, int a1, int a2, int b1, int b2) {
  if (k < 1 || a1 < 1 || a2 < 1 || b1 < 1 || b2 < 1)
    fail(Errc::BadLength, "h_tree needs k, a1, a2, b1, b2 all >= 1");
  int n = 1 + a1 + a2 + k + b1 + b2;
  std::vector<Edge> edges;
  int next = 2;
  next = detail::attach_path(edges, next, 0, a1);
  next = detail::attach_path(edges, next, 0, a2);
  // k-path between the cores: k-1 interior vertices, then close onto 1.
  VertexId prev = 0;
  for (int i = 0; i < k - 1; ++i) {
    edges.emplace_back(prev, next);
    prev = next++;
  }
  edges.emplace_back(prev, 1);
  next = detail::attach_path(edges, next, 1, b1);
  next = detail::attach_path(edges, next, 1, b2);
  (void)next;
  return Graph::from_edge_list(n, std::move(edges));
}

// The two sporadic small TI chemical trees (orders 7 and 9) that the odd
// family below falls back on.
inline const std::vector<Edge>& sporadic_ti_tree_edges(int n) {
  static const std::vector<Edge> order7 = {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {0, 5}, {5, 6}};
  static const std::vector<Edge> order9 = {{0, 1}, {1, 2}, {2, 3}, {0, 4},
                                           {0, 5}, {5, 6}, {6, 8}, {3, 7}};
  if (n == 7) return order7;
  if (n == 9) return order9;
  fail(Errc::BadOrder, "sporadic TI trees exist only for orders 7 and 9");
}

// A transmission-irregular chemical tree of any odd order n >= 7: sporadic
// trees for 7 and 9, otherwise an h_tree instance picked by n mod 4.
inline Graph ti_odd_tree(int n) {
  if (n < 7 || n % 2 == 0)
    fail(Errc::BadOrder, "TI chemical trees of this family need odd order >= 7");
  if (n == 7 || n == 9) return Graph::from_edge_list(n, sporadic_ti_tree_edges(n));
  if (n % 4 == 3) {
    int a = (n - 3) / 4;  // a >= 2
    return h_tree(2, a - 1, a, a, a + 1);
  }
  int b = (n - 1) / 4;  // n % 4 == 1, b >= 3
  return h_tree(2, b - 2, b - 1, b, b + 1);
}

// K4 minus an edge with a pendant path on each vertex. Core labels:
// 0, 1 are the adjacent degree-3 vertices of the base (they keep paths q1
// and q2), 2, 3 are the endpoints of the missing edge (paths p1 and p2).
// Zero lengths attach nothing.
inline Graph z0_graph(int q2, int q1, int p2, int p1) {
  if (q2 < 0 || q1 < 0 || p2 < 0 || p1 < 0) fail(Errc::BadLength, "path lengths must be >= 0");
  int n = 4 + q2 + q1 + p2 + p1;
  std::vector<Edge> edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
  int next = 4;
  next = detail::attach_path(edges, next, 1, q2);
  next = detail::attach_path(edges, next, 0, q1);
  next = detail::attach_path(edges, next, 3, p2);
  next = detail::attach_path(edges, next, 2, p1);
  (void)next;
  return Graph::from_edge_list(n, std::move(edges));
}

// Whether z0_graph(a-1, a+1, a-2, a+2) is transmission irregular.
inline bool z0_is_ti_predicate(int a) {
  if (a < 2) fail(Errc::BadParam, "family is defined for a >= 2");
  return a % 2 == 1 && a % 3 != 1;
}

// Complete graph K4 with a pendant path on each vertex; path k_i hangs off
// vertex i-1. Zero lengths attach nothing.
inline Graph k4_pendant(int k1, int k2, int k3, int k4) {
  if (k1 < 0 || k2 < 0 || k3 < 0 || k4 < 0) fail(Errc::BadLength, "path lengths must be >= 0");
  int n = 4 + k1 + k2 + k3 + k4;
  std::vector<Edge> edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  int next = 4;
  next = detail::attach_path(edges, next, 0, k1);
  next = detail::attach_path(edges, next, 1, k2);
  next = detail::attach_path(edges, next, 2, k3);
  next = detail::attach_path(edges, next, 3, k4);
  (void)next;
  return Graph::from_edge_list(n, std::move(edges));
}

// Whether k4_pendant(a-2, a-1, a+1, a+2) is transmission irregular.
inline bool k4_is_ti_predicate(int a) {
  if (a < 2) fail(Errc::BadParam, "family is defined for a >= 2");
  return a >= 3 && a % 3 != 2;
}

// Closed-form transmission sets, all relative to Tr(base_vertex). Each part
// lists the transmissions along one pendant path; part sizes match the
// number of path vertices covered (roots included only where stated).
struct PredictedSets {
  IntSetFamily family;
  VertexId base_vertex;
};

// For ti_odd_tree(n), n >= 11. Base is vertex 1, the branching vertex
// carrying the two longest paths. Parts, in order:
//   n = 4a+3: A1 (path a-1 at vertex 0), A2 (path a at 1),
//             A3 (path a at 0), A4 (path a+1 at 1); roots excluded,
//             cores sit at offsets {0, 1, 4}.
//   n = 4b+1: B1 (path b+1 at 1), B2 (path b at 1), B3 (path b-1 at 0),
//             B4 (path b-2 at 0); roots excluded, cores at {0, 3, 8}.
inline PredictedSets predicted_sets_ti_odd(int n) {
  if (n < 11 || n % 2 == 0) fail(Errc::BadOrder, "closed-form sets need odd order >= 11");
  std::vector<IntSet> parts(4);
  if (n % 4 == 3) {
    const long long a = (n - 3) / 4;
    for (long long k = 1; k <= a - 1; ++k) parts[0].push_back(2 * k * a + (k + 2) * (k + 2));
    for (long long k = 1; k <= a; ++k) parts[1].push_back(2 * k * a + (k + 1) * (k + 1) - 1);
    for (long long k = 1; k <= a; ++k) parts[2].push_back(2 * k * a + (k + 1) * (k + 1) - 1 + 4);
    for (long long k = 1; k <= a + 1; ++k) parts[3].push_back(2 * k * a + k * k);
  } else {
    const long long b = (n - 1) / 4;
    for (long long k = 1; k <= b + 1; ++k) parts[0].push_back(2 * k * b + k * k - 2 * k);
    for (long long k = 1; k <= b; ++k) parts[1].push_back(2 * k * b + k * k);
    for (long long k = 1; k <= b - 1; ++k) parts[2].push_back(2 * k * b + (k + 1) * (k + 1) - 1 + 8);
    for (long long k = 1; k <= b - 2; ++k) parts[3].push_back(2 * k * b + (k + 2) * (k + 2) - 4 + 8);
  }
  return {IntSetFamily::of(std::move(parts)), 1};
}

// For z0_graph(a-1, a+1, a-2, a+2), a >= 3. Base is vertex 0. Parts cover
// the paths INCLUDING their core roots: A1 (path a+2 with root 2),
// A2 (path a-2 with root 3), B1 (path a+1 with root 0), B2 (path a-1 with
// root 1); sizes a+3, a-1, a+2, a.
inline PredictedSets predicted_sets_z0(int a_) {
  if (a_ < 3) fail(Errc::BadParam, "closed-form sets need a >= 3");
  const long long a = a_;
  std::vector<IntSet> parts(4);
  for (long long j = 0; j <= a + 2; ++j) parts[0].push_back((2 * j + 1) * a + (j - 2) * (j + 1));
  for (long long j = 0; j <= a - 2; ++j) parts[1].push_back((2 * j + 1) * a + (j + 6) * (j + 1));
  for (long long j = 0; j <= a + 1; ++j) parts[2].push_back(2 * j * a + j * (j + 1));
  for (long long j = 0; j <= a - 1; ++j) parts[3].push_back(2 * j * a + j * (j + 5) + 2);
  return {IntSetFamily::of(std::move(parts)), 0};
}

// For k4_pendant(a-2, a-1, a+1, a+2), a >= 3. Base is vertex 3 (the one
// carrying the a+2 path). Parts cover paths including their K4 roots:
// A1 (path a+2, root 3), A2 (path a+1, root 2), A3 (path a-1, root 1),
// A4 (path a-2, root 0); sizes a+3, a+2, a, a-1.
inline PredictedSets predicted_sets_k4(int a_) {
  if (a_ < 3) fail(Errc::BadParam, "closed-form sets need a >= 3");
  const long long a = a_;
  std::vector<IntSet> parts(4);
  for (long long j = 0; j <= a + 2; ++j) parts[0].push_back(2 * j * a + j * (j - 1));
  for (long long j = 0; j <= a + 1; ++j) parts[1].push_back(2 * j * a + j * (j + 1) + 1);
  for (long long j = 0; j <= a - 1; ++j) parts[2].push_back(2 * j * a + (j + 1) * (j + 4) - 1);
  for (long long j = 0; j <= a - 2; ++j) parts[3].push_back(2 * j * a + j * (j + 7) + 4);
  return {IntSetFamily::of(std::move(parts)), 3};
}

// Text form used by the CLI: "starlike:1,2,3", "h:2;2,3;3,4",
// "z0:2,4,1,5", "k4:1,2,4,5", "ti-odd:7".
enum class FamilyKind { Starlike, HTree, Z0, K4Pendant, TiOdd };

struct FamilySpec {
  FamilyKind kind;
  std::vector<int> params;
};

namespace detail {
inline std::vector<int> parse_int_list(std::string_view text, char sep) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(sep, pos);
    if (end == std::string_view::npos) end = text.size();
    std::string token(text.substr(pos, end - pos));
    if (token.empty() || token.find_first_not_of("-0123456789") != std::string::npos)
      fail(Errc::BadParam, "bad integer '" + token + "' in family spec");
    out.push_back(std::stoi(token));
    pos = end + 1;
  }
  return out;
}
}  // namespace detail

inline FamilySpec parse_family_spec(std::string_view text) {
  std::size_t colon = text.find(':');
  if (colon == std::string_view::npos)
    fail(Errc::BadParam, "family spec needs the form kind:params");
  std::string_view kind = text.substr(0, colon);
  std::string_view rest = text.substr(colon + 1);
  if (kind == "starlike") return {FamilyKind::Starlike, detail::parse_int_list(rest, ',')};
  if (kind == "z0") return {FamilyKind::Z0, detail::parse_int_list(rest, ',')};
  if (kind == "k4") return {FamilyKind::K4Pendant, detail::parse_int_list(rest, ',')};
  if (kind == "ti-odd") return {FamilyKind::TiOdd, detail::parse_int_list(rest, ',')};
  if (kind == "h") {
    // k;a1,a2;b1,b2
    std::vector<int> params;
    std::size_t s1 = rest.find(';');
    std::size_t s2 = s1 == std::string_view::npos ? s1 : rest.find(';', s1 + 1);
    if (s1 == std::string_view::npos || s2 == std::string_view::npos)
      fail(Errc::BadParam, "h spec needs the form h:k;a1,a2;b1,b2");
    auto k = detail::parse_int_list(rest.substr(0, s1), ',');
    auto as = detail::parse_int_list(rest.substr(s1 + 1, s2 - s1 - 1), ',');
    auto bs = detail::parse_int_list(rest.substr(s2 + 1), ',');
    if (k.size() != 1 || as.size() != 2 || bs.size() != 2)
      fail(Errc::BadParam, "h spec needs the form h:k;a1,a2;b1,b2");
    params = {k[0], as[0], as[1], bs[0], bs[1]};
    return {FamilyKind::HTree, std::move(params)};
  }
  fail(Errc::BadParam, "unknown family kind '" + std::string(kind) + "'");
}

inline Graph build_family(const FamilySpec& spec) {
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::Starlike:
      return starlike(p);
    case FamilyKind::HTree:
      if (p.size() != 5) fail(Errc::BadParam, "h family needs 5 parameters");
      return h_tree(p[0], p[1], p[2], p[3], p[4]);
    case FamilyKind::Z0:
      if (p.size() != 4) fail(Errc::BadParam, "z0 family needs 4 parameters");
      return z0_graph(p[0], p[1], p[2], p[3]);
    case FamilyKind::K4Pendant:
      if (p.size() != 4) fail(Errc::BadParam, "k4 family needs 4 parameters");
      return k4_pendant(p[0], p[1], p[2], p[3]);
    case FamilyKind::TiOdd:
      if (p.size() != 1) fail(Errc::BadParam, "ti-odd family needs 1 parameter");
      return ti_odd_tree(p[0]);
  }
  fail(Errc::BadParam, "unreachable family kind");
}

}  // namespace tigraph
