#pragma once

#include <vector>

#include "mtree/graph.hpp"

namespace mtree::testing {

// Graph with integer densities; edges as (u, v) pairs.
inline DensityGraph graph_of(const std::vector<int>& densities,
                             const std::vector<std::pair<int, int>>& edges) {
  std::vector<Rational> f(densities.begin(), densities.end());
  DensityGraph g(std::move(f), {});
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline DensityGraph path_graph(const std::vector<int>& densities) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < static_cast<int>(densities.size()); ++v) edges.emplace_back(v - 1, v);
  return graph_of(densities, edges);
}

}  // namespace mtree::testing
