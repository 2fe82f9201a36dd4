#include "mtree/approx.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mtree/structure.hpp"
#include "mtree/sweep.hpp"

namespace mtree {

namespace {

// Graph analogue of the sweeping operation: builds one monotone subtree.
// Sweeps the full density at m along non-increasing paths. Each vertex
// receives the best value achievable over any such path (the carried value
// only shrinks, so a widest-path best-first expansion finalizes vertices in
// descending value order, exactly as Dijkstra finalizes distances); first-
// found DFS order would strand density behind low saddle points and break
// the relative-maxima bound on the output size.
SweepResult graph_sweep(const DensityGraph& g, int m) {
  SweepResult result;
  result.swept.root = m;
  result.remainder = g;

  std::map<int, Rational> best{{m, g.density(m)}};
  std::map<int, int> parent;
  // (value descending, id ascending): begin() is the next vertex to settle.
  auto cmp = [](const std::pair<Rational, int>& a, const std::pair<Rational, int>& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  };
  std::set<std::pair<Rational, int>, decltype(cmp)> queue(cmp);
  queue.insert({best[m], m});

  while (!queue.empty()) {
    const auto [value, u] = *queue.begin();
    queue.erase(queue.begin());
    result.swept.values[u] = value;
    if (auto it = parent.find(u); it != parent.end()) {
      result.swept.edges.insert(make_edge(it->second, u));
    }
    for (int w : g.neighbors(u)) {
      if (result.swept.contains(w)) continue;
      Rational next = value;
      if (g.density(w) < g.density(u)) next -= g.density(u) - g.density(w);
      if (next <= 0) continue;
      auto it = best.find(w);
      if (it != best.end() && it->second >= next) continue;
      if (it != best.end()) queue.erase({it->second, w});
      best[w] = next;
      parent[w] = u;
      queue.insert({next, w});
    }
  }

  for (const auto& [u, value] : result.swept.values) {
    result.remainder.set_density(u, g.density(u) - value);
  }
  return result;
}

DensityGraph without_edge(const DensityGraph& g, const Edge& drop) {
  std::vector<Rational> densities;
  densities.reserve(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) densities.push_back(g.density(v));
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (e != drop) edges.push_back(e);
  }
  return DensityGraph(std::move(densities), edges);
}

// Graph restricted to one component: same vertex count, zero density and no
// edges outside `keep`.
DensityGraph masked(const DensityGraph& g, const std::vector<char>& keep) {
  std::vector<Rational> densities(g.vertex_count(), Rational(0));
  std::vector<Edge> edges;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (keep[v]) densities[v] = g.density(v);
  }
  for (const auto& [u, w] : g.edges()) {
    if (keep[u] && keep[w]) edges.emplace_back(u, w);
  }
  return DensityGraph(std::move(densities), edges);
}

std::vector<Edge> induced_edges(const DensityGraph& g, const std::set<int>& verts) {
  std::vector<Edge> out;
  for (const auto& [u, w] : g.edges()) {
    if (verts.count(u) && verts.count(w)) out.emplace_back(u, w);
  }
  return out;
}

}  // namespace

Decomposition naive_decompose(const DensityGraph& g) {
  Decomposition out;
  out.variant = Variant::M;
  DensityGraph remainder = g;
  while (!remainder.all_zero()) {
    auto maxima_set = relative_maxima(remainder);
    std::vector<int> maxima(maxima_set.begin(), maxima_set.end());
    std::stable_sort(maxima.begin(), maxima.end(), [&](int a, int b) {
      return remainder.density(a) > remainder.density(b);
    });
    for (int m : maxima) {
      if (remainder.density(m) == 0) continue;
      auto step = graph_sweep(remainder, m);
      out.trees.push_back(std::move(step.swept));
      remainder = std::move(step.remainder);
    }
  }
  return out;
}

Decomposition spanning_tree_decompose(const DensityGraph& g) {
  const int n = g.vertex_count();
  std::vector<char> visited(n, 0);
  std::vector<Edge> tree_edges;
  for (int s = 0; s < n; ++s) {
    if (visited[s]) continue;
    visited[s] = 1;
    std::vector<int> queue{s};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const int u = queue[i];
      for (int w : g.neighbors(u)) {
        if (!visited[w]) {
          visited[w] = 1;
          tree_edges.push_back(make_edge(u, w));
          queue.push_back(w);
        }
      }
    }
  }
  std::vector<Rational> densities;
  densities.reserve(n);
  for (int v = 0; v < n; ++v) densities.push_back(g.density(v));
  return decompose_tree(DensityGraph(std::move(densities), tree_edges));
}

SweepReport split_sweep(const DensityGraph& t, const std::set<int>& t1, const std::set<int>& t2) {
  if (!is_acyclic(t)) throw std::invalid_argument("split_sweep: input has a cycle");

  std::set<int> junction_set;
  for (int v : t1) {
    if (t2.count(v)) junction_set.insert(v);
  }
  if (junction_set.size() != 1) {
    throw std::invalid_argument("split_sweep: subtrees must share exactly one vertex");
  }
  const int junction = *junction_set.begin();

  auto in_union = [&](int v) { return t1.count(v) || t2.count(v); };
  for (int v = 0; v < t.vertex_count(); ++v) {
    if (in_union(v)) continue;
    if (!t.neighbors(v).empty() || t.density(v) != 0) {
      throw std::invalid_argument("split_sweep: vertex outside the split is not inert");
    }
  }
  for (const auto& [u, w] : t.edges()) {
    const bool in1 = t1.count(u) && t1.count(w);
    const bool in2 = t2.count(u) && t2.count(w);
    if (!in1 && !in2) {
      throw std::invalid_argument("split_sweep: edge crosses the split");
    }
  }
  for (const auto* side : {&t1, &t2}) {
    // Each side must induce a connected subtree.
    std::set<int> seen{junction};
    std::vector<int> queue{junction};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (int w : t.neighbors(queue[i])) {
        if (side->count(w) && seen.insert(w).second) queue.push_back(w);
      }
    }
    if (seen.size() != side->size()) {
      throw std::invalid_argument("split_sweep: side is not a connected subtree");
    }
  }

  SweepReport report;
  DensityGraph remainder = t;
  while (true) {
    const auto forced = mode_forced_nodes(remainder);
    std::optional<int> pick;
    for (int u : forced) {
      if (!t2.count(u)) {
        pick = u;
        break;
      }
    }
    if (!pick) break;
    auto step = detail::sweep_unchecked(remainder, *pick, remainder.density(*pick));
    remainder = std::move(step.remainder);
    ++report.sweep_count;
  }
  report.residual_at_junction = remainder.density(junction);
  return report;
}

namespace {

struct LeafCycle {
  Block cycle;
  int attachment = -1;            // c_i: the one vertex leading to other cycles
  std::set<int> cycle_side;      // G_C vertices
  std::set<int> rest_side;       // G_C-bar vertices (contains the attachment)
};

// Finds the leaf cycle containing the smallest vertex id among components
// with at least two cycles. Returns nothing when every component has at most
// one cycle.
std::optional<LeafCycle> find_leaf_cycle(const DensityGraph& g) {
  const auto blocks = biconnected_blocks(g);
  std::vector<const Block*> cycles;
  for (const auto& b : blocks.blocks) {
    if (b.vertices.size() >= 3) cycles.push_back(&b);
  }
  const auto comps = connected_components(g);
  std::vector<int> cycles_per_comp(comps.count, 0);
  for (const auto* c : cycles) ++cycles_per_comp[comps.label[c->vertices.front()]];

  // Reachability from x with the candidate cycle's edges removed.
  auto leads_to_other_cycle = [&](const Block& b, int x) {
    std::set<Edge> banned(b.edges.begin(), b.edges.end());
    std::set<int> other_cycle_verts;
    for (const auto* c : cycles) {
      if (c == &b) continue;
      other_cycle_verts.insert(c->vertices.begin(), c->vertices.end());
    }
    std::set<int> seen{x};
    std::vector<int> queue{x};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const int u = queue[i];
      if (other_cycle_verts.count(u)) return true;
      for (int w : g.neighbors(u)) {
        if (banned.count(make_edge(u, w))) continue;
        if (seen.insert(w).second) queue.push_back(w);
      }
    }
    return false;
  };

  std::optional<LeafCycle> best;
  for (const auto* c : cycles) {
    if (cycles_per_comp[comps.label[c->vertices.front()]] < 2) continue;
    std::vector<int> attachments;
    for (int x : c->vertices) {
      if (leads_to_other_cycle(*c, x)) attachments.push_back(x);
    }
    if (attachments.size() != 1) continue;  // interior cycle
    if (best && best->cycle.vertices.front() <= c->vertices.front()) continue;
    LeafCycle lc;
    lc.cycle = *c;
    lc.attachment = attachments.front();
    best = std::move(lc);
  }
  if (!best) return std::nullopt;

  // Partition the component around the cycle: hanging subtrees attach to a
  // single cycle vertex each; those off the attachment vertex go to the rest
  // side iff they contain another cycle.
  const Block& cyc = best->cycle;
  std::set<int> cycle_verts(cyc.vertices.begin(), cyc.vertices.end());
  best->cycle_side = cycle_verts;
  best->rest_side = {best->attachment};

  std::set<int> other_cycle_verts;
  {
    const auto all_blocks = biconnected_blocks(g);
    for (const auto& b : all_blocks.blocks) {
      if (b.vertices.size() < 3 || b.edges == cyc.edges) continue;
      other_cycle_verts.insert(b.vertices.begin(), b.vertices.end());
    }
  }

  std::vector<char> assigned(g.vertex_count(), 0);
  for (int v : cyc.vertices) assigned[v] = 1;
  for (int start : cyc.vertices) {
    for (int w0 : g.neighbors(start)) {
      if (assigned[w0]) continue;
      // Flood one hanging component.
      std::set<int> hang{w0};
      std::vector<int> queue{w0};
      assigned[w0] = 1;
      bool has_cycle = false;
      for (std::size_t i = 0; i < queue.size(); ++i) {
        const int u = queue[i];
        if (other_cycle_verts.count(u)) has_cycle = true;
        for (int w : g.neighbors(u)) {
          if (cycle_verts.count(w)) continue;
          if (!assigned[w]) {
            assigned[w] = 1;
            hang.insert(w);
            queue.push_back(w);
          }
        }
      }
      if (start == best->attachment && has_cycle) {
        best->rest_side.insert(hang.begin(), hang.end());
      } else {
        best->cycle_side.insert(hang.begin(), hang.end());
      }
    }
  }
  return best;
}

// BFS spanning tree edges of the subgraph induced on `verts`, rooted at
// `root`, neighbors in ascending order.
std::vector<Edge> bfs_spanning_edges(const DensityGraph& g, const std::set<int>& verts, int root) {
  std::set<int> seen{root};
  std::vector<int> queue{root};
  std::vector<Edge> out;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int u = queue[i];
    for (int w : g.neighbors(u)) {
      if (!verts.count(w)) continue;
      if (seen.insert(w).second) {
        out.push_back(make_edge(u, w));
        queue.push_back(w);
      }
    }
  }
  return out;
}

// Base case: at most one cycle per component. For each remaining cycle,
// tries every one of its edges against decompose_tree on the component and
// deletes the best one (ties by edge order); then decomposes the resulting
// spanning forest.
Decomposition decompose_few_cycles(DensityGraph work) {
  while (true) {
    const auto blocks = biconnected_blocks(work);
    const Block* cycle = nullptr;
    for (const auto& b : blocks.blocks) {
      if (b.vertices.size() >= 3 && (!cycle || b.vertices.front() < cycle->vertices.front())) {
        cycle = &b;
      }
    }
    if (!cycle) break;
    const auto comps = connected_components(work);
    const int comp = comps.label[cycle->vertices.front()];
    std::vector<char> keep(work.vertex_count(), 0);
    for (int v = 0; v < work.vertex_count(); ++v) keep[v] = comps.label[v] == comp;
    const DensityGraph component = masked(work, keep);

    std::optional<Edge> best_edge;
    int best_size = -1;
    for (const auto& e : cycle->edges) {
      const int size = decompose_tree(without_edge(component, e)).size();
      if (!best_edge || size < best_size) {
        best_edge = e;
        best_size = size;
      }
    }
    work = without_edge(work, *best_edge);
  }
  return decompose_tree(work);
}

}  // namespace

Decomposition cactus_sm_decompose(const DensityGraph& g) {
  if (!is_cactus(g)) throw std::invalid_argument("cactus_sm_decompose: input is not a cactus");

  DensityGraph work = g;
  // Peel leaf cycles while some component still has two or more cycles.
  while (auto lc = find_leaf_cycle(work)) {
    const auto rest_tree = bfs_spanning_edges(work, lc->rest_side, lc->attachment);

    std::optional<Edge> best_edge;
    SweepReport best_report;
    for (const auto& drop : lc->cycle.edges) {
      std::vector<Rational> densities(work.vertex_count(), Rational(0));
      std::vector<Edge> edges = rest_tree;
      for (int v : lc->cycle_side) densities[v] = work.density(v);
      for (int v : lc->rest_side) densities[v] = work.density(v);
      for (const auto& e : induced_edges(work, lc->cycle_side)) {
        if (e != drop) edges.push_back(e);
      }
      DensityGraph split(std::move(densities), edges);
      const SweepReport report = split_sweep(split, lc->cycle_side, lc->rest_side);
      if (!best_edge || report < best_report) {
        best_edge = drop;
        best_report = report;
      }
    }
    work = without_edge(work, *best_edge);
  }

  Decomposition out = decompose_few_cycles(std::move(work));
  out.variant = Variant::SM;
  return out;
}

}  // namespace mtree
