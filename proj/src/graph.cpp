#include "mtree/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mtree {

Edge make_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  return u < v ? Edge{u, v} : Edge{v, u};
}

DensityGraph::DensityGraph(int vertex_count)
    : densities_(vertex_count), adj_(vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
}

DensityGraph::DensityGraph(std::vector<Rational> densities, const std::vector<Edge>& edges)
    : densities_(std::move(densities)), adj_(densities_.size()) {
  for (const auto& d : densities_) {
    if (d < 0) throw std::invalid_argument("negative density");
  }
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void DensityGraph::check_vertex(int v) const {
  if (v < 0 || v >= vertex_count()) {
    throw std::invalid_argument("vertex id out of range: " + std::to_string(v));
  }
}

const Rational& DensityGraph::density(int v) const {
  check_vertex(v);
  return densities_[v];
}

void DensityGraph::set_density(int v, Rational value) {
  check_vertex(v);
  if (value < 0) throw std::invalid_argument("negative density");
  densities_[v] = std::move(value);
}

void DensityGraph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  const Edge e = make_edge(u, v);
  const auto pos = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (pos != edges_.end() && *pos == e) {
    throw std::invalid_argument("duplicate edge");
  }
  edges_.insert(pos, e);
  auto& au = adj_[e.first];
  au.insert(std::lower_bound(au.begin(), au.end(), e.second), e.second);
  auto& av = adj_[e.second];
  av.insert(std::lower_bound(av.begin(), av.end(), e.first), e.first);
}

bool DensityGraph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  const Edge e = make_edge(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

const std::vector<int>& DensityGraph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

bool DensityGraph::all_zero() const {
  return std::all_of(densities_.begin(), densities_.end(),
                     [](const Rational& d) { return d == 0; });
}

}  // namespace mtree
