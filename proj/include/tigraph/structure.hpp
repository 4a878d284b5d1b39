#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "tigraph/graph.hpp"
#include "tigraph/transmission.hpp"

namespace tigraph {

// Proper pendant path: root of degree >= 3, interior vertices of degree 2
// (listed root to leaf), pendant leaf. length counts edges.
struct PendantPath {
  VertexId root = -1;
  std::vector<VertexId> interior;
  VertexId leaf = -1;
  int length = 0;
};

// All maximal proper pendant paths, one per qualifying leaf, ordered by
// leaf id. Leaves of a pure path graph have no branching root and are
// skipped.
inline std::vector<PendantPath> find_pendant_paths(const Graph& g) {
  g.require_connected();
  std::vector<PendantPath> out;
  for (VertexId leaf = 0; leaf < g.order(); ++leaf) {
    if (g.degree(leaf) != 1) continue;
    PendantPath p;
    p.leaf = leaf;
    VertexId prev = leaf;
    VertexId cur = g.neighbors(leaf)[0];
    while (g.degree(cur) == 2) {
      p.interior.push_back(cur);
      VertexId nxt = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
      prev = cur;
      cur = nxt;
    }
    if (g.degree(cur) < 3) continue;
    p.root = cur;
    std::reverse(p.interior.begin(), p.interior.end());
    p.length = static_cast<int>(p.interior.size()) + 1;
    out.push_back(std::move(p));
  }
  return out;
}

namespace detail {
inline void validate_pendant_path(const Graph& g, const PendantPath& p) {
  auto bad = [&](const std::string& why) { fail(Errc::NotAProperPath, why); };
  if (!g.has_vertex(p.root) || !g.has_vertex(p.leaf)) bad("path vertices out of range");
  if (p.length != static_cast<int>(p.interior.size()) + 1) bad("length does not match interior");
  if (g.degree(p.root) < 3) bad("path root must have degree >= 3");
  if (g.degree(p.leaf) != 1) bad("path leaf must have degree 1");
  VertexId prev = p.root;
  for (VertexId v : p.interior) {
    if (!g.has_vertex(v) || g.degree(v) != 2) bad("path interior must have degree 2");
    if (!g.has_edge(prev, v)) bad("path vertices must form a chain");
    prev = v;
  }
  if (!g.has_edge(prev, p.leaf)) bad("path vertices must form a chain");
}
}  // namespace detail

// Vertices of `subtree` grouped by distance from root measured inside the
// induced subgraph. layers[0] = {root}; eccentricity = last layer index.
struct DistancePartition {
  VertexId root = -1;
  std::vector<std::vector<VertexId>> layers;
  int eccentricity = 0;
};

inline DistancePartition distance_partition(const Graph& g, std::span<const VertexId> subtree,
                                            VertexId root) {
  std::vector<VertexId> members(subtree.begin(), subtree.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty()) fail(Errc::EmptySubset, "subtree is empty");
  for (VertexId v : members)
    if (!g.has_vertex(v)) fail(Errc::BadParam, "subtree vertex out of range");
  if (!std::binary_search(members.begin(), members.end(), root))
    fail(Errc::BadParam, "root must belong to the subtree");

  std::vector<int> dist(g.order(), -1);
  std::vector<VertexId> frontier{root};
  dist[root] = 0;
  std::size_t reached = 1;
  DistancePartition part;
  part.root = root;
  while (!frontier.empty()) {
    part.layers.push_back(frontier);
    std::vector<VertexId> next;
    for (VertexId u : frontier)
      for (VertexId w : g.neighbors(u)) {
        if (dist[w] >= 0 || !std::binary_search(members.begin(), members.end(), w)) continue;
        dist[w] = dist[u] + 1;
        next.push_back(w);
        ++reached;
      }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
  if (reached != members.size())
    fail(Errc::NotConnectedSubtree, "subtree does not induce a connected subgraph");
  // The monotonicity notions are defined around non-leaf roots; a root with
  // at most one subtree neighbor (including the singleton subtree) is out.
  int root_deg = 0;
  for (VertexId w : g.neighbors(root))
    if (std::binary_search(members.begin(), members.end(), w)) ++root_deg;
  if (root_deg <= 1) fail(Errc::RootIsLeaf, "root is a leaf of the subtree");
  part.eccentricity = static_cast<int>(part.layers.size()) - 1;
  return part;
}

// Distance-based transmission monotonicity: with layers V_0..V_a of the
// subtree around root and transmissions taken in the ambient graph g,
// require min Tr(V_{j+1}) >= max Tr(V_j) for j in 1..a-1. The root layer is
// exempt by definition.
inline bool is_dbtm(const Graph& g, std::span<const VertexId> subtree, VertexId root) {
  auto part = distance_partition(g, subtree, root);
  auto profile = transmission_profile(g);
  for (std::size_t j = 1; j + 1 < part.layers.size(); ++j) {
    Transmission hi = profile.values[part.layers[j][0]];
    for (VertexId v : part.layers[j]) hi = std::max(hi, profile.values[v]);
    Transmission lo = profile.values[part.layers[j + 1][0]];
    for (VertexId v : part.layers[j + 1]) lo = std::min(lo, profile.values[v]);
    if (lo < hi) return false;
  }
  return true;
}

// Weaker two-apart variant on a whole tree: layers V_j by distance from
// root, require min Tr(V_{j+1}) >= max Tr(V_{j-1}) for j in 2..a-1.
inline bool is_2_dbtm(const Graph& g, VertexId root) {
  if (!is_tree(g)) fail(Errc::NotATree, "2-distance monotonicity is defined on trees");
  if (!g.has_vertex(root)) fail(Errc::BadParam, "root out of range");
  auto dist = bfs_distances(g, root);
  int ecc = 0;
  for (int d : dist) ecc = std::max(ecc, d);
  std::vector<Transmission> layer_min(ecc + 1), layer_max(ecc + 1);
  std::vector<char> seen(ecc + 1, 0);
  auto profile = transmission_profile(g);
  for (VertexId v = 0; v < g.order(); ++v) {
    int d = dist[v];
    Transmission t = profile.values[v];
    if (!seen[d]) {
      seen[d] = 1;
      layer_min[d] = layer_max[d] = t;
    } else {
      layer_min[d] = std::min(layer_min[d], t);
      layer_max[d] = std::max(layer_max[d], t);
    }
  }
  for (int j = 2; j + 1 <= ecc; ++j)
    if (layer_min[j + 1] < layer_max[j - 1]) return false;
  return true;
}

// Doubling eligibility for a tree t0 with a chosen proper pendant path of
// length k: the remainder subtree (t0 minus the path's non-root vertices)
// must have pairwise distinct transmissions, be DBTM at the path root, and
// 2n must fall strictly inside (j^2 + 1, (j+1)^2) for some j <= k.
// window_j reports the smallest such j.
struct DoublingReport {
  bool partially_ti = false;
  bool dbtm = false;
  std::optional<int> window_j;
  bool eligible = false;
};

namespace detail {
inline std::vector<VertexId> subtree_without_path(const Graph& g, const PendantPath& p) {
  std::vector<char> drop(g.order(), 0);
  for (VertexId v : p.interior) drop[v] = 1;
  drop[p.leaf] = 1;
  std::vector<VertexId> keep;
  for (VertexId v = 0; v < g.order(); ++v)
    if (!drop[v]) keep.push_back(v);
  return keep;
}

inline void validate_doubling_input(const Graph& t0, const PendantPath& path) {
  if (!is_tree(t0)) fail(Errc::NotATree, "doubling needs a tree");
  if (t0.order() < 7) fail(Errc::BadOrder, "doubling needs order >= 7");
  validate_pendant_path(t0, path);
}
}  // namespace detail

inline DoublingReport doubling_check(const Graph& t0, const PendantPath& path) {
  detail::validate_doubling_input(t0, path);
  const int n = t0.order();
  auto rest = detail::subtree_without_path(t0, path);
  DoublingReport r;
  r.partially_ti = is_partially_ti(t0, rest);
  r.dbtm = is_dbtm(t0, rest, path.root);
  for (int j = 1; j <= path.length; ++j) {
    long long lo = 1LL * j * j + 1, hi = 1LL * (j + 1) * (j + 1);
    if (lo < 2LL * n && 2LL * n < hi) {
      r.window_j = j;
      break;
    }
  }
  r.eligible = r.partially_ti && r.dbtm && r.window_j.has_value();
  return r;
}

// Doubled tree of order 2n+1: the original, a copy shifted by n, an edge
// joining the two copies of the path leaf, and a fresh leaf 2n attached to
// the original path leaf. Construction does not require eligibility.
inline Graph doubling_construct(const Graph& t0, const PendantPath& path) {
  detail::validate_doubling_input(t0, path);
  const int n = t0.order();
  std::vector<Edge> edges = t0.edges();
  edges.reserve(2 * edges.size() + 2);
  for (auto [u, v] : t0.edges()) edges.emplace_back(u + n, v + n);
  edges.emplace_back(path.leaf, path.leaf + n);
  edges.emplace_back(path.leaf, 2 * n);
  return Graph::from_edge_list(2 * n + 1, std::move(edges));
}

// Edge insertions that preserve transmission irregularity. Both detectors
// require their input to already be TI, locate the three largest
// transmissions Tr(v1) > Tr(v2) > Tr(v3), and return the augmented graph
// plus the witness vertices v1..v4 when the pattern is present.
struct EdgeAddWitness {
  Graph result;
  std::array<VertexId, 4> vertices;  // v1, v2, v3, v4
};

namespace detail {
inline std::vector<VertexId> by_transmission_desc(const TransmissionProfile& p) {
  std::vector<VertexId> idx(p.values.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<VertexId>(i);
  std::sort(idx.begin(), idx.end(),
            [&](VertexId a, VertexId b) { return p.values[a] > p.values[b]; });
  return idx;
}
}  // namespace detail

// Pattern: v1 pendant, chain v1-v2-v3-v4 with deg(v2) = deg(v3) = 2.
// New edge: v2v4 (closing a triangle v2v3v4).
inline std::optional<EdgeAddWitness> edge_add_case_i(const Graph& g) {
  auto profile = transmission_profile(g);
  if (!profile.is_ti) fail(Errc::NotTI, "edge insertion needs a TI input graph");
  if (g.order() < 5) return std::nullopt;
  auto idx = detail::by_transmission_desc(profile);
  VertexId v1 = idx[0], v2 = idx[1], v3 = idx[2];
  if (g.degree(v1) != 1 || g.neighbors(v1)[0] != v2) return std::nullopt;
  if (g.degree(v2) != 2) return std::nullopt;
  VertexId w = g.neighbors(v2)[0] == v1 ? g.neighbors(v2)[1] : g.neighbors(v2)[0];
  if (w != v3 || g.degree(v3) != 2) return std::nullopt;
  VertexId v4 = g.neighbors(v3)[0] == v2 ? g.neighbors(v3)[1] : g.neighbors(v3)[0];
  return EdgeAddWitness{g.with_edge(v2, v4), {v1, v2, v3, v4}};
}

// Pattern: v1 and v2 pendant, v1 adjacent to v3, and v2's support vertex v4
// adjacent to v3 (the unique common neighbor). Additionally even
// Tr(v3) - 1 must exceed every transmission outside {v1, v2, v3}.
// New edge: v2v3.
inline std::optional<EdgeAddWitness> edge_add_case_ii(const Graph& g) {
  auto profile = transmission_profile(g);
  if (!profile.is_ti) fail(Errc::NotTI, "edge insertion needs a TI input graph");
  if (g.order() < 5) return std::nullopt;
  auto idx = detail::by_transmission_desc(profile);
  VertexId v1 = idx[0], v2 = idx[1], v3 = idx[2];
  if (g.degree(v1) != 1 || g.degree(v2) != 1) return std::nullopt;
  if (g.neighbors(v1)[0] != v3) return std::nullopt;
  std::vector<VertexId> common;
  for (VertexId w : g.neighbors(v2))
    if (g.has_edge(w, v3)) common.push_back(w);
  if (common.size() != 1) return std::nullopt;
  VertexId v4 = common[0];
  if (profile.values[v3] - 1 <= profile.values[idx[3]]) return std::nullopt;
  return EdgeAddWitness{g.with_edge(v2, v3), {v1, v2, v3, v4}};
}

}  // namespace tigraph
