#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "tigraph/graph.hpp"

namespace tigraph {

// Transmissions fit easily in 64 bits for any graph we can enumerate
// (Tr(v) < n^2), but keep them wide so nothing downstream has to think.
using Transmission = std::int64_t;

// Tr(v): sum of distances from v to every vertex.
inline Transmission transmission(const Graph& g, VertexId v) {
  g.require_connected();
  if (!g.has_vertex(v)) fail(Errc::BadParam, "vertex out of range");
  Transmission sum = 0;
  for (int d : bfs_distances(g, v)) sum += d;
  return sum;
}

struct TransmissionProfile {
  std::vector<Transmission> values;  // indexed by vertex
  std::vector<Transmission> set;     // sorted distinct values
  int complexity = 0;                // |set|, the Wiener complexity
  bool is_ti = false;                // complexity == order
};

namespace detail {

// Trees get the two-pass rerooting computation: one BFS orders vertices and
// finds subtree sizes plus Tr(root); then walking outward,
//   Tr(child) = Tr(parent) + n - 2*size(child)
// since crossing the edge moves the child's subtree one step closer and
// everything else one step further.
inline std::vector<Transmission> tree_transmissions(const Graph& g) {
  const int n = g.order();
  std::vector<VertexId> order;
  order.reserve(n);
  std::vector<VertexId> parent(n, -1);
  std::vector<int> depth(n, -1);
  order.push_back(0);
  depth[0] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    VertexId u = order[head];
    for (VertexId w : g.neighbors(u))
      if (depth[w] < 0) {
        depth[w] = depth[u] + 1;
        parent[w] = u;
        order.push_back(w);
      }
  }
  std::vector<long long> size(n, 1);
  Transmission tr_root = 0;
  for (std::size_t i = order.size(); i-- > 1;) {
    VertexId v = order[i];
    size[parent[v]] += size[v];
    tr_root += depth[v];
  }
  std::vector<Transmission> tr(n);
  tr[0] = tr_root;
  for (std::size_t i = 1; i < order.size(); ++i) {
    VertexId v = order[i];
    tr[v] = tr[parent[v]] + n - 2 * size[v];
  }
  return tr;
}

inline std::vector<Transmission> bfs_transmissions(const Graph& g) {
  std::vector<Transmission> tr(g.order(), 0);
  for (VertexId v = 0; v < g.order(); ++v) {
    Transmission sum = 0;
    for (int d : bfs_distances(g, v)) sum += d;
    tr[v] = sum;
  }
  return tr;
}

}  // namespace detail

inline TransmissionProfile transmission_profile(const Graph& g) {
  g.require_connected();
  TransmissionProfile p;
  p.values = is_tree(g) ? detail::tree_transmissions(g) : detail::bfs_transmissions(g);
  p.set = p.values;
  std::sort(p.set.begin(), p.set.end());
  p.set.erase(std::unique(p.set.begin(), p.set.end()), p.set.end());
  p.complexity = static_cast<int>(p.set.size());
  p.is_ti = p.complexity == g.order();
  return p;
}

// Transmission irregular: all n transmissions pairwise distinct.
inline bool is_transmission_irregular(const Graph& g) { return transmission_profile(g).is_ti; }

struct CloserCounts {
  long long closer_to_u = 0;  // n_u: vertices strictly closer to u than to v
  long long closer_to_v = 0;  // n_v
  long long ties = 0;
};

// For an edge uv these satisfy Tr(u) - Tr(v) = n_v - n_u; on bipartite
// graphs (so all trees) ties = 0.
inline CloserCounts closer_counts(const Graph& g, VertexId u, VertexId v) {
  g.require_connected();
  if (!g.has_edge(u, v))
    fail(Errc::NotAnEdge, "(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
  auto du = bfs_distances(g, u);
  auto dv = bfs_distances(g, v);
  CloserCounts c;
  for (VertexId x = 0; x < g.order(); ++x) {
    if (du[x] < dv[x])
      ++c.closer_to_u;
    else if (dv[x] < du[x])
      ++c.closer_to_v;
    else
      ++c.ties;
  }
  return c;
}

// Pairwise distinct transmissions on a subset of vertices, computed in the
// whole graph g (the subset only selects which values are compared).
inline bool is_partially_ti(const Graph& g, std::span<const VertexId> subset) {
  if (subset.empty()) fail(Errc::EmptySubset, "subset of vertices is empty");
  std::vector<VertexId> ids(subset.begin(), subset.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (VertexId v : ids)
    if (!g.has_vertex(v)) fail(Errc::BadParam, "subset vertex out of range");
  auto profile = transmission_profile(g);
  std::vector<Transmission> vals;
  vals.reserve(ids.size());
  for (VertexId v : ids) vals.push_back(profile.values[v]);
  std::sort(vals.begin(), vals.end());
  return std::adjacent_find(vals.begin(), vals.end()) == vals.end();
}

}  // namespace tigraph
