#pragma once

#include <utility>
#include <vector>

#include "mtree/rational.hpp"

namespace mtree {

// Undirected edge in canonical form (first < second).
using Edge = std::pair<int, int>;

// Canonicalizes an edge; throws on self-loops.
Edge make_edge(int u, int v);

// Simple undirected graph with an exact non-negative density per vertex.
// Vertex ids are dense 0-based integers. Adjacency lists and the edge list
// are kept in ascending order so every traversal in the library is
// deterministic.
class DensityGraph {
 public:
  DensityGraph() = default;
  explicit DensityGraph(int vertex_count);
  DensityGraph(std::vector<Rational> densities, const std::vector<Edge>& edges);

  int vertex_count() const { return static_cast<int>(densities_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const Rational& density(int v) const;
  void set_density(int v, Rational value);  // value must be >= 0

  void add_edge(int u, int v);  // rejects self-loops, duplicates, bad ids
  bool has_edge(int u, int v) const;

  // Sorted canonical edge list.
  const std::vector<Edge>& edges() const { return edges_; }
  // Neighbors in ascending vertex-id order.
  const std::vector<int>& neighbors(int v) const;

  bool all_zero() const;

  bool operator==(const DensityGraph& other) const = default;

 private:
  void check_vertex(int v) const;

  std::vector<Rational> densities_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

}  // namespace mtree
