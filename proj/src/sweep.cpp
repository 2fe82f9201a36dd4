#include "mtree/sweep.hpp"

#include <stdexcept>
#include <vector>

#include "mtree/structure.hpp"

namespace mtree {

namespace detail {

SweepResult sweep_unchecked(const DensityGraph& t, int v, const Rational& alpha) {
  SweepResult result;
  result.swept.root = v;
  result.swept.values[v] = alpha;
  result.remainder = t;

  struct Frame {
    int vertex;
    int parent;
  };
  std::vector<Frame> stack{{v, -1}};
  while (!stack.empty()) {
    const auto [u, parent] = stack.back();
    stack.pop_back();
    const Rational carried = result.swept.values.at(u);
    // Reverse push so children are expanded in ascending id order.
    const auto& nbrs = t.neighbors(u);
    for (auto it = nbrs.rbegin(); it != nbrs.rend(); ++it) {
      const int w = *it;
      if (w == parent) continue;
      Rational value = carried;
      if (t.density(w) < t.density(u)) {
        value -= t.density(u) - t.density(w);
        if (value < 0) value = 0;
      }
      if (value == 0) continue;  // excluded; DFS does not continue past
      result.swept.values[w] = value;
      result.swept.edges.insert(make_edge(u, w));
      stack.push_back({w, u});
    }
  }

  for (const auto& [u, value] : result.swept.values) {
    result.remainder.set_density(u, t.density(u) - value);
  }
  return result;
}

}  // namespace detail

SweepResult monotone_sweep(const DensityGraph& t, int v, const Rational& alpha) {
  if (!is_tree(t)) throw std::invalid_argument("monotone_sweep: input is not a tree");
  if (alpha <= 0 || alpha > t.density(v)) {
    throw std::invalid_argument("monotone_sweep: alpha out of (0, f(v)]");
  }
  return detail::sweep_unchecked(t, v, alpha);
}

std::set<int> mode_forced_nodes(const DensityGraph& t) {
  if (!is_acyclic(t)) throw std::invalid_argument("mode_forced_nodes: input has a cycle");
  const int n = t.vertex_count();
  std::vector<char> alive(n, 1);

  auto alive_degree = [&](int u) {
    int deg = 0;
    for (int w : t.neighbors(u)) deg += alive[w];
    return deg;
  };
  auto sole_neighbor = [&](int u) {
    for (int w : t.neighbors(u)) {
      if (alive[w]) return w;
    }
    return -1;
  };
  auto insignificant = [&](int u) {
    if (!alive[u] || alive_degree(u) != 1) return false;
    return t.density(sole_neighbor(u)) >= t.density(u);
  };

  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> candidates;
    for (int u = 0; u < n; ++u) {
      if (insignificant(u)) candidates.push_back(u);
    }
    for (int u : candidates) {
      if (insignificant(u)) {  // recheck: earlier deletions this round may apply
        alive[u] = 0;
        changed = true;
      }
    }
  }

  std::set<int> leaves;
  for (int u = 0; u < n; ++u) {
    if (alive[u] && alive_degree(u) <= 1 && t.density(u) > 0) leaves.insert(u);
  }
  return leaves;
}

Decomposition decompose_tree(const DensityGraph& t) {
  if (!is_acyclic(t)) throw std::invalid_argument("decompose_tree: input has a cycle");
  Decomposition out;
  out.variant = Variant::M;
  DensityGraph remainder = t;
  while (true) {
    const auto forced = mode_forced_nodes(remainder);
    if (forced.empty()) break;
    const int v = *forced.begin();
    auto step = detail::sweep_unchecked(remainder, v, remainder.density(v));
    out.trees.push_back(std::move(step.swept));
    remainder = std::move(step.remainder);
  }
  return out;
}

}  // namespace mtree
