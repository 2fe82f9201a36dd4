#include "mtree/decomposition.hpp"

#include <algorithm>
#include <stdexcept>

namespace mtree {

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::M: return "m";
    case Variant::CM: return "cm";
    case Variant::SM: return "sm";
    case Variant::FM: return "fm";
  }
  throw std::logic_error("bad variant");
}

Variant variant_from_name(const std::string& name) {
  if (name == "m") return Variant::M;
  if (name == "cm") return Variant::CM;
  if (name == "sm") return Variant::SM;
  if (name == "fm") return Variant::FM;
  throw std::invalid_argument("unknown variant: '" + name + "'");
}

namespace {

// BFS orientation of t's edges away from the root. Returns false when
// (vertices, edges) is not a tree containing the root.
bool orient(const MonotoneTree& t, std::map<int, int>& parent) {
  parent.clear();
  if (!t.contains(t.root)) return false;
  if (t.edges.size() != t.values.size() - 1) return false;
  std::map<int, std::vector<int>> adj;
  for (const auto& [u, w] : t.edges) {
    if (!t.contains(u) || !t.contains(w)) return false;
    adj[u].push_back(w);
    adj[w].push_back(u);
  }
  std::set<int> seen{t.root};
  std::vector<int> queue{t.root};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int u = queue[i];
    for (int w : adj[u]) {
      if (seen.insert(w).second) {
        parent[w] = u;
        queue.push_back(w);
      }
    }
  }
  return seen.size() == t.values.size();
}

}  // namespace

std::map<int, int> tree_parents(const MonotoneTree& t) {
  std::map<int, int> parent;
  if (!orient(t, parent)) {
    throw std::invalid_argument("monotone tree is not a tree on its vertex set");
  }
  return parent;
}

ValidationReport validate_decomposition(const DensityGraph& g, const Decomposition& d) {
  ValidationReport report;
  const int n = g.vertex_count();

  for (int i = 0; i < d.size(); ++i) {
    const MonotoneTree& t = d.trees[i];
    if (t.root < 0 || t.root >= n) {
      throw std::invalid_argument("tree root out of range");
    }
    for (const auto& [v, value] : t.values) {
      if (v < 0 || v >= n) throw std::invalid_argument("tree vertex out of range");
      if (value <= 0) report.add("value-nonpositive", {i, v});
    }
    for (const auto& [u, w] : t.edges) {
      if (u < 0 || u >= n || w < 0 || w >= n) {
        throw std::invalid_argument("tree edge out of range");
      }
      if (!g.has_edge(u, w)) report.add("edge-not-in-host", {i, u, w});
    }
    std::map<int, int> parent;
    if (!orient(t, parent)) {
      report.add("tree-structure", {i});
      continue;
    }
    for (const auto& [child, par] : parent) {
      if (t.values.at(child) > t.values.at(par)) {
        report.add("monotone", {i, par, child});
      }
    }
  }

  for (int v = 0; v < n; ++v) {
    Rational sum = 0;
    for (const auto& t : d.trees) sum += t.value_or_zero(v);
    if (sum != g.density(v)) report.add("sum", {v});
  }

  if (d.variant == Variant::CM) {
    for (const auto& [u, w] : g.edges()) {
      if (g.density(u) == 0 || g.density(w) == 0) continue;
      const bool covered = std::any_of(
          d.trees.begin(), d.trees.end(),
          [&](const MonotoneTree& t) { return t.edges.count({u, w}) != 0; });
      if (!covered) report.add("cm-edge", {u, w});
    }
  }

  if (d.variant == Variant::SM) {
    for (int i = 0; i < d.size(); ++i) {
      for (int j = i + 1; j < d.size(); ++j) {
        const MonotoneTree& a = d.trees[i];
        const MonotoneTree& b = d.trees[j];
        std::vector<int> common;
        for (const auto& [v, value] : a.values) {
          if (b.contains(v)) common.push_back(v);
        }
        if (common.empty()) continue;
        std::vector<Edge> shared;
        for (const auto& e : a.edges) {
          if (b.edges.count(e)) shared.push_back(e);
        }
        // Contractible: the common subgraph is a single tree.
        bool ok = shared.size() == common.size() - 1;
        if (ok) {
          std::map<int, std::vector<int>> adj;
          for (const auto& [u, w] : shared) {
            adj[u].push_back(w);
            adj[w].push_back(u);
          }
          std::set<int> seen{common.front()};
          std::vector<int> queue{common.front()};
          for (std::size_t q = 0; q < queue.size(); ++q) {
            for (int w : adj[queue[q]]) {
              if (seen.insert(w).second) queue.push_back(w);
            }
          }
          ok = seen.size() == common.size();
        }
        if (!ok) report.add("sm-intersection", {i, j});
      }
    }
  }

  if (d.variant == Variant::FM) {
    for (int i = 0; i < d.size(); ++i) {
      const MonotoneTree& t = d.trees[i];
      if (t.value_or_zero(t.root) != g.density(t.root)) {
        report.add("fm-root", {i, t.root});
      }
    }
  }

  return report;
}

std::pair<MonotoneTree, MonotoneTree> cut_monotone_tree(const MonotoneTree& t, const Edge& e) {
  if (t.edges.count(e) == 0) throw std::invalid_argument("edge not in tree");
  const auto parent = tree_parents(t);

  int bottom = e.second;
  if (parent.count(e.first) && parent.at(e.first) == e.second) bottom = e.first;

  // Vertices whose root-ward chain passes through `bottom`.
  std::set<int> branch;
  for (const auto& [v, value] : t.values) {
    int walk = v;
    while (true) {
      if (walk == bottom) {
        branch.insert(v);
        break;
      }
      auto it = parent.find(walk);
      if (it == parent.end()) break;
      walk = it->second;
    }
  }

  MonotoneTree rest, cut;
  rest.root = t.root;
  cut.root = bottom;
  for (const auto& [v, value] : t.values) {
    (branch.count(v) ? cut : rest).values.emplace(v, value);
  }
  for (const auto& edge : t.edges) {
    if (edge == e) continue;
    (branch.count(edge.first) ? cut : rest).edges.insert(edge);
  }
  return {std::move(rest), std::move(cut)};
}

}  // namespace mtree
