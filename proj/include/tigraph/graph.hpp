#pragma once

#include <algorithm>
#include <queue>
#include <utility>
#include <vector>

#include "tigraph/error.hpp"

namespace tigraph {

using VertexId = int;
using Edge = std::pair<VertexId, VertexId>;

// Immutable simple undirected graph over dense vertex ids [0, n).
// Construction validates edges; connectivity is computed once and cached.
// Analysis entry points that need connectivity call require_connected(),
// so the relaxed path (graph6 parsing) can still hand out disconnected
// graphs for inspection.
class Graph {
 public:
  Graph() = default;

  static Graph from_edge_list(int n, std::vector<Edge> edges, bool require_connected = true) {
    if (n < 1) fail(Errc::BadOrder, "graph order must be >= 1");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    for (auto& [u, v] : edges) {
      if (u > v) std::swap(u, v);
      if (u < 0 || v >= n || u == v)
        fail(Errc::InvalidEdge, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                     ") out of range for order " + std::to_string(n));
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i)
      if (edges[i] == edges[i - 1])
        fail(Errc::DuplicateEdge, "edge (" + std::to_string(edges[i].first) + "," +
                                       std::to_string(edges[i].second) + ") listed twice");
    g.edges_ = std::move(edges);
    for (auto [u, v] : g.edges_) {
      g.adj_[u].push_back(v);
      g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    g.connected_ = g.compute_connected();
    if (require_connected && !g.connected_)
      fail(Errc::Disconnected, "graph with " + std::to_string(n) + " vertices is not connected");
    return g;
  }

  int order() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[v]; }
  int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }

  bool has_vertex(VertexId v) const { return v >= 0 && v < n_; }

  bool has_edge(VertexId u, VertexId v) const {
    if (!has_vertex(u) || !has_vertex(v)) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  bool connected() const { return connected_; }

  void require_connected() const {
    if (!connected_) fail(Errc::Disconnected, "operation requires a connected graph");
  }

  // Copy with one extra edge; used by the edge-insertion constructions.
  Graph with_edge(VertexId u, VertexId v) const {
    if (!has_vertex(u) || !has_vertex(v) || u == v)
      fail(Errc::InvalidEdge, "cannot add edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (has_edge(u, v)) fail(Errc::DuplicateEdge, "edge already present");
    std::vector<Edge> e = edges_;
    e.emplace_back(u, v);
    return from_edge_list(n_, std::move(e), false);
  }

 private:
  bool compute_connected() const {
    if (n_ == 0) return false;
    std::vector<char> seen(n_, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      for (VertexId w : adj_[u])
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
    }
    return count == n_;
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adj_;
  bool connected_ = false;
};

// Distances from source by breadth-first search; -1 for unreachable vertices.
inline std::vector<int> bfs_distances(const Graph& g, VertexId source) {
  if (!g.has_vertex(source)) fail(Errc::BadParam, "bfs source out of range");
  std::vector<int> dist(g.order(), -1);
  std::queue<VertexId> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    VertexId u = q.front();
    q.pop();
    for (VertexId w : g.neighbors(u))
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
  }
  return dist;
}

inline int max_degree(const Graph& g) {
  int d = 0;
  for (VertexId v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

// Chemical graphs model molecular skeletons: every degree at most 4.
inline bool is_chemical(const Graph& g) { return max_degree(g) <= 4; }

inline bool is_tree(const Graph& g) {
  return g.connected() && g.edge_count() == static_cast<std::size_t>(g.order()) - 1;
}

}  // namespace tigraph
