#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <vector>

#include "tigraph/error.hpp"

namespace tigraph {

using IntSet = std::vector<long long>;  // kept sorted, duplicate-free

// Ordered family A_1, ..., A_k of finite integer sets. The order matters:
// both predicates below compare consecutive or near-consecutive parts.
struct IntSetFamily {
  std::vector<IntSet> parts;

  static IntSetFamily of(std::vector<IntSet> raw) {
    if (raw.empty()) fail(Errc::BadParam, "family needs at least one part");
    for (auto& p : raw) {
      if (p.empty()) fail(Errc::BadParam, "family parts must be nonempty");
      std::sort(p.begin(), p.end());
      p.erase(std::unique(p.begin(), p.end()), p.end());
    }
    return IntSetFamily{std::move(raw)};
  }

  std::size_t size() const { return parts.size(); }
};

namespace detail {
inline int parity(long long x) { return static_cast<int>(((x % 2) + 2) % 2); }
}  // namespace detail

// Intersecting parity: each part is parity-pure, and consecutive parts
// alternate parity (so A_i and A_j share parity iff i = j mod 2).
inline bool has_intersecting_parity(const IntSetFamily& f) {
  std::vector<int> part_parity(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    int p = detail::parity(f.parts[i].front());
    for (long long x : f.parts[i])
      if (detail::parity(x) != p) return false;
    part_parity[i] = p;
  }
  for (std::size_t i = 1; i < f.size(); ++i)
    if (part_parity[i] == part_parity[i - 1]) return false;
  return true;
}

// 2-distance monotone: min(A_{j+1}) >= max(A_{j-1}) for every inner index j
// (1-based j from 2 to k-1). Parts two apart may not slide past each other.
inline bool is_2_distance_monotonic(const IntSetFamily& f) {
  for (std::size_t j = 2; j + 1 <= f.size(); ++j)
    if (f.parts[j].front() < f.parts[j - 2].back()) return false;
  return true;
}

inline bool pairwise_disjoint(const IntSetFamily& f) {
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      const IntSet& a = f.parts[i];
      const IntSet& b = f.parts[j];
      std::size_t x = 0, y = 0;
      while (x < a.size() && y < b.size()) {
        if (a[x] == b[y]) return false;
        (a[x] < b[y]) ? ++x : ++y;
      }
    }
  return true;
}

// A_i -> A_i + a for every part.
inline IntSetFamily shift_uniform(const IntSetFamily& f, long long a) {
  IntSetFamily out = f;
  for (auto& p : out.parts)
    for (auto& x : p) x += a;
  return out;
}

// A_i -> A_i + i*t (1-based i); t must be a positive even constant, which is
// what keeps parity-alternating families parity-alternating.
inline IntSetFamily shift_arithmetic(const IntSetFamily& f, long long t) {
  if (t <= 0 || t % 2 != 0) fail(Errc::InvalidShift, "arithmetic shift needs a positive even t");
  IntSetFamily out = f;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (auto& x : out.parts[i]) x += static_cast<long long>(i + 1) * t;
  return out;
}

}  // namespace tigraph
