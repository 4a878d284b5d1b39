#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "tigraph/graph.hpp"

namespace tigraph {

// Graphviz DOT writer for eyeballing small graphs. Optional per-vertex
// labels (typically transmissions); vertex count must match when given.
inline std::string to_dot(const Graph& g, const std::vector<std::string>& labels = {}) {
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(g.order()))
    fail(Errc::BadParam, "label count does not match graph order");
  std::ostringstream out;
  out << "graph G {\n";
  for (VertexId v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (!labels.empty()) out << " [label=\"" << v << ": " << labels[v] << "\"]";
    out << ";\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace tigraph
