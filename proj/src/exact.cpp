#include "mtree/exact.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <tuple>

#include "mtree/approx.hpp"
#include "mtree/simplex.hpp"
#include "mtree/structure.hpp"
#include "mtree/sweep.hpp"

namespace mtree {

namespace {

using Mask = std::uint64_t;

// Spanning-tree enumeration by backtracking over the induced edge list with
// a union-find rebuilt per accepted edge (instances are tiny).
void spanning_trees(const std::vector<int>& vertices, const std::vector<Edge>& edges,
                    std::vector<Edge>& picked, std::size_t next, std::vector<int>& parent,
                    const std::function<void(const std::vector<Edge>&)>& emit) {
  if (picked.size() == vertices.size() - 1) {
    emit(picked);
    return;
  }
  if (edges.size() - next < vertices.size() - 1 - picked.size()) return;

  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  // Include edges[next] if it joins two components.
  const auto [u, w] = edges[next];
  const int ru = find(u), rw = find(w);
  if (ru != rw) {
    std::vector<int> saved = parent;
    parent[ru] = rw;
    picked.push_back(edges[next]);
    spanning_trees(vertices, edges, picked, next + 1, parent, emit);
    picked.pop_back();
    parent = std::move(saved);
  }
  spanning_trees(vertices, edges, picked, next + 1, parent, emit);
}

}  // namespace

std::vector<CandidateSupport> enumerate_rooted_subtrees(const DensityGraph& g) {
  const int n = g.vertex_count();
  if (n > 62) throw std::invalid_argument("enumerate_rooted_subtrees: too many vertices");

  Mask positive = 0;
  for (int v = 0; v < n; ++v) {
    if (g.density(v) > 0) positive |= Mask(1) << v;
  }

  std::vector<CandidateSupport> out;
  if (positive == 0) return out;

  for (Mask mask = positive;; mask = (mask - 1) & positive) {
    if (mask != 0) {
      std::vector<int> vertices;
      for (int v = 0; v < n; ++v) {
        if (mask >> v & 1) vertices.push_back(v);
      }
      if (vertices.size() == 1) {
        out.push_back({vertices[0], vertices, {}});
      } else {
        std::vector<Edge> induced;
        for (const auto& [u, w] : g.edges()) {
          if ((mask >> u & 1) && (mask >> w & 1)) induced.emplace_back(u, w);
        }
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        std::vector<Edge> picked;
        spanning_trees(vertices, induced, picked, 0, parent,
                       [&](const std::vector<Edge>& tree) {
                         std::vector<Edge> edges = tree;
                         std::sort(edges.begin(), edges.end());
                         for (int root : vertices) {
                           out.push_back({root, vertices, edges});
                         }
                       });
      }
    }
    if (mask == 0) break;
  }

  std::sort(out.begin(), out.end(), [](const CandidateSupport& a, const CandidateSupport& b) {
    return std::tie(a.vertices, a.edges, a.root) < std::tie(b.vertices, b.edges, b.root);
  });
  return out;
}

namespace {

// Orientation of a support away from its root. Throws when the support is
// not a tree containing the root.
std::map<int, int> support_parents(const CandidateSupport& s) {
  MonotoneTree t;
  t.root = s.root;
  for (int v : s.vertices) t.values[v] = 1;
  t.edges.insert(s.edges.begin(), s.edges.end());
  return tree_parents(t);
}

bool sm_compatible(const CandidateSupport& a, const CandidateSupport& b) {
  std::vector<int> common;
  std::set_intersection(a.vertices.begin(), a.vertices.end(), b.vertices.begin(),
                        b.vertices.end(), std::back_inserter(common));
  if (common.empty()) return true;
  std::vector<Edge> shared;
  std::set_intersection(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(),
                        std::back_inserter(shared));
  if (shared.size() != common.size() - 1) return false;
  std::map<int, std::vector<int>> adj;
  for (const auto& [u, w] : shared) {
    adj[u].push_back(w);
    adj[w].push_back(u);
  }
  std::set<int> seen{common.front()};
  std::vector<int> queue{common.front()};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (int w : adj[queue[i]]) {
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  return seen.size() == common.size();
}

struct VarIndex {
  // var id of (support, vertex); -1 when absent.
  std::vector<std::map<int, int>> of_support;
  int count = 0;

  int operator()(int support, int vertex) const { return of_support[support].at(vertex); }
};

VarIndex index_variables(const std::vector<CandidateSupport>& supports) {
  VarIndex idx;
  idx.of_support.resize(supports.size());
  for (std::size_t i = 0; i < supports.size(); ++i) {
    for (int v : supports[i].vertices) idx.of_support[i][v] = idx.count++;
  }
  return idx;
}

// Runs the LP for a fixed set of strictness pairs (variables required >= t,
// t maximized). With no pairs this is a pure feasibility check.
std::optional<std::vector<Rational>> run_lp(
    const DensityGraph& g, const std::vector<CandidateSupport>& supports,
    const VarIndex& idx, Variant variant,
    const std::vector<int>& strict_vars) {
  const bool strict = !strict_vars.empty();
  LinearProgram lp;
  lp.num_vars = idx.count + (strict ? 1 : 0);
  const int t_var = idx.count;

  auto row = [&](Rel rel, Rational rhs) -> LinearConstraint& {
    lp.constraints.push_back({std::vector<Rational>(lp.num_vars, Rational(0)), rel, std::move(rhs)});
    return lp.constraints.back();
  };

  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> vars;
    for (std::size_t i = 0; i < supports.size(); ++i) {
      auto it = idx.of_support[i].find(v);
      if (it != idx.of_support[i].end()) vars.push_back(it->second);
    }
    if (vars.empty()) {
      if (g.density(v) != 0) return std::nullopt;
      continue;
    }
    auto& c = row(Rel::EQ, g.density(v));
    for (int var : vars) c.coeffs[var] = 1;
  }

  for (std::size_t i = 0; i < supports.size(); ++i) {
    for (const auto& [child, par] : support_parents(supports[i])) {
      auto& c = row(Rel::LE, 0);
      c.coeffs[idx(static_cast<int>(i), child)] = 1;
      c.coeffs[idx(static_cast<int>(i), par)] = -1;
    }
    if (variant == Variant::FM) {
      auto& c = row(Rel::EQ, g.density(supports[i].root));
      c.coeffs[idx(static_cast<int>(i), supports[i].root)] = 1;
    }
  }

  if (strict) {
    for (int var : strict_vars) {
      auto& c = row(Rel::GE, 0);
      c.coeffs[var] = 1;
      c.coeffs[t_var] = -1;
    }
    auto& cap = row(Rel::LE, 1);
    cap.coeffs[t_var] = 1;
    lp.objective.assign(lp.num_vars, Rational(0));
    lp.objective[t_var] = 1;
  }

  const LPSolution sol = solve_lp(lp);
  if (sol.status != LPStatus::kOptimal) return std::nullopt;
  if (strict && sol.objective_value <= 0) return std::nullopt;
  return sol.values;
}

}  // namespace

FeasibilityResult feasible(const DensityGraph& g,
                           const std::vector<CandidateSupport>& supports,
                           Variant variant, bool strict_positive) {
  for (const auto& s : supports) {
    for (const auto& [u, w] : s.edges) {
      if (!g.has_edge(u, w)) throw std::invalid_argument("support edge not in host graph");
    }
    support_parents(s);  // throws if the support is not a rooted tree
  }

  if (variant == Variant::SM) {
    for (std::size_t i = 0; i < supports.size(); ++i) {
      for (std::size_t j = i + 1; j < supports.size(); ++j) {
        if (!sm_compatible(supports[i], supports[j])) return {};
      }
    }
  }

  const VarIndex idx = index_variables(supports);

  auto to_result = [&](const std::vector<Rational>& values) {
    FeasibilityResult out;
    out.feasible = true;
    out.values.resize(supports.size());
    for (std::size_t i = 0; i < supports.size(); ++i) {
      for (int v : supports[i].vertices) {
        out.values[i].push_back(values[idx(static_cast<int>(i), v)]);
      }
    }
    return out;
  };

  std::vector<int> base_strict;
  if (strict_positive) {
    for (std::size_t i = 0; i < supports.size(); ++i) {
      for (int v : supports[i].vertices) base_strict.push_back(idx(static_cast<int>(i), v));
    }
  }

  if (variant != Variant::CM) {
    auto values = run_lp(g, supports, idx, variant, base_strict);
    if (!values) return {};
    return to_result(*values);
  }

  // CM: every positive-positive edge needs a covering support with strictly
  // positive endpoint values. Enumerate the choice of witness support per
  // multiply-covered edge, maximizing a shared slack each time.
  std::vector<std::vector<int>> edge_choices;
  for (const auto& [u, w] : g.edges()) {
    if (g.density(u) == 0 || g.density(w) == 0) continue;
    std::vector<int> covering;
    for (std::size_t i = 0; i < supports.size(); ++i) {
      if (std::binary_search(supports[i].edges.begin(), supports[i].edges.end(),
                             Edge{u, w})) {
        covering.push_back(static_cast<int>(i));
      }
    }
    if (covering.empty()) return {};
    edge_choices.push_back(std::move(covering));
  }

  auto pos_pos_edges = [&]() {
    std::vector<Edge> out;
    for (const auto& [u, w] : g.edges()) {
      if (g.density(u) != 0 && g.density(w) != 0) out.emplace_back(u, w);
    }
    return out;
  }();

  std::set<std::vector<int>> tried;
  std::vector<int> choice(edge_choices.size(), 0);
  FeasibilityResult found;
  std::function<bool(std::size_t)> enumerate = [&](std::size_t e) -> bool {
    if (e == edge_choices.size()) {
      std::set<int> strict_set(base_strict.begin(), base_strict.end());
      for (std::size_t k = 0; k < edge_choices.size(); ++k) {
        const int i = edge_choices[k][choice[k]];
        strict_set.insert(idx(i, pos_pos_edges[k].first));
        strict_set.insert(idx(i, pos_pos_edges[k].second));
      }
      std::vector<int> strict_vars(strict_set.begin(), strict_set.end());
      if (!tried.insert(strict_vars).second) return false;
      auto values = run_lp(g, supports, idx, variant, strict_vars);
      if (!values) return false;
      found = to_result(*values);
      return true;
    }
    for (std::size_t c = 0; c < edge_choices[e].size(); ++c) {
      choice[e] = static_cast<int>(c);
      if (enumerate(e + 1)) return true;
    }
    return false;
  };
  enumerate(0);
  return found;
}

namespace {

Decomposition singleton_decomposition(const DensityGraph& g, Variant variant) {
  Decomposition d;
  d.variant = variant;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.density(v) == 0) continue;
    MonotoneTree t;
    t.root = v;
    t.values[v] = g.density(v);
    d.trees.push_back(std::move(t));
  }
  return d;
}

// A CM decomposition always exists when positive-positive edges do: give
// each such edge its own two-vertex tree with a small equal value at both
// endpoints, then mop up the (strictly positive) leftovers with singletons.
Decomposition cm_seed(const DensityGraph& g) {
  Decomposition d;
  d.variant = Variant::CM;
  const int n = g.vertex_count();
  std::vector<int> pos_degree(n, 0);
  std::vector<Edge> pos_edges;
  for (const auto& [u, w] : g.edges()) {
    if (g.density(u) == 0 || g.density(w) == 0) continue;
    pos_edges.emplace_back(u, w);
    ++pos_degree[u];
    ++pos_degree[w];
  }
  std::vector<Rational> leftover(n);
  for (int v = 0; v < n; ++v) leftover[v] = g.density(v);
  for (const auto& [u, w] : pos_edges) {
    const Rational at_u = g.density(u) / (pos_degree[u] + 1);
    const Rational at_w = g.density(w) / (pos_degree[w] + 1);
    const Rational value = std::min(at_u, at_w);
    MonotoneTree t;
    t.root = u;
    t.values[u] = value;
    t.values[w] = value;
    t.edges.insert(Edge{u, w});
    d.trees.push_back(std::move(t));
    leftover[u] -= value;
    leftover[w] -= value;
  }
  for (int v = 0; v < n; ++v) {
    if (leftover[v] == 0) continue;
    MonotoneTree t;
    t.root = v;
    t.values[v] = leftover[v];
    d.trees.push_back(std::move(t));
  }
  return d;
}

Decomposition seed_decomposition(const DensityGraph& g, Variant variant) {
  switch (variant) {
    case Variant::M:
      return naive_decompose(g);
    case Variant::SM: {
      if (is_acyclic(g)) {
        Decomposition d = decompose_tree(g);
        d.variant = Variant::SM;
        return d;
      }
      if (is_cactus(g)) return cactus_sm_decompose(g);
      return singleton_decomposition(g, Variant::SM);
    }
    case Variant::FM:
      return singleton_decomposition(g, Variant::FM);
    case Variant::CM:
      return cm_seed(g);
  }
  throw std::logic_error("bad variant");
}

MonotoneTree positive_core(const CandidateSupport& support, const std::vector<Rational>& values) {
  MonotoneTree t;
  t.root = support.root;
  for (std::size_t j = 0; j < support.vertices.size(); ++j) {
    if (values[j] > 0) t.values[support.vertices[j]] = values[j];
  }
  for (const auto& e : support.edges) {
    if (t.contains(e.first) && t.contains(e.second)) t.edges.insert(e);
  }
  return t;
}

}  // namespace

Decomposition exact_min(const DensityGraph& g, Variant variant, const OracleOptions& options) {
  if (g.all_zero()) return {.trees = {}, .variant = variant};

  auto candidates = enumerate_rooted_subtrees(g);
  if (static_cast<std::int64_t>(candidates.size()) > options.candidate_budget) {
    throw OracleBudgetError("instance too large: " + std::to_string(candidates.size()) +
                            " candidate supports exceed the budget of " +
                            std::to_string(options.candidate_budget));
  }

  // Any support extends to a spanning tree of its positive component by
  // padding with zero values, which every feasibility constraint tolerates
  // except SM's structural intersection check and the strict-positivity
  // mode. When those are off, searching component-spanning supports alone
  // preserves the minimum and shrinks the search space drastically.
  if (variant != Variant::SM && !options.strict_positive) {
    std::vector<int> comp_parent(g.vertex_count());
    std::iota(comp_parent.begin(), comp_parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
      while (comp_parent[v] != v) v = comp_parent[v] = comp_parent[comp_parent[v]];
      return v;
    };
    for (const auto& [u, v] : g.edges()) {
      if (g.density(u) > 0 && g.density(v) > 0) comp_parent[find(u)] = find(v);
    }
    std::vector<int> comp_size(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (g.density(v) > 0) ++comp_size[find(v)];
    }
    std::erase_if(candidates, [&](const CandidateSupport& c) {
      return static_cast<int>(c.vertices.size()) != comp_size[find(c.root)];
    });
  }
  const int num_candidates = static_cast<int>(candidates.size());

  const int n = g.vertex_count();
  Mask positive = 0;
  for (int v = 0; v < n; ++v) {
    if (g.density(v) > 0) positive |= Mask(1) << v;
  }
  std::vector<Mask> candidate_mask(num_candidates, 0);
  for (int i = 0; i < num_candidates; ++i) {
    for (int v : candidates[i].vertices) candidate_mask[i] |= Mask(1) << v;
  }

  // Vertices denser than all their neighbors combined must root a tree in
  // every decomposition: a lower bound and a pruning rule.
  Mask forced_roots = 0;
  for (int v = 0; v < n; ++v) {
    Rational around = 0;
    for (int w : g.neighbors(v)) around += g.density(w);
    if (g.density(v) > around) forced_roots |= Mask(1) << v;
  }

  const Decomposition seed = seed_decomposition(g, variant);
  {
    const auto check = validate_decomposition(g, seed);
    if (!check.ok) throw std::logic_error("oracle seed decomposition is invalid");
  }

  int lower = std::max(1, std::popcount(forced_roots));
  // Every SM-Tree Set is in particular an M-Tree Set, so the (much cheaper)
  // M minimum bounds the SM minimum from below and skips its refutation work.
  if (variant == Variant::SM && !options.strict_positive && seed.size() > lower) {
    lower = std::max(lower, exact_min(g, Variant::M, options).size());
  }

  // Root-path capacity of each candidate: the value a support can place at v
  // is capped by the smallest density on the path from v to the root.
  std::vector<std::vector<Rational>> path_cap(num_candidates,
                                              std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < num_candidates; ++i) {
    const auto parent = support_parents(candidates[i]);
    // Process vertices so that parents are finished first (walk from root).
    std::vector<int> order{candidates[i].root};
    path_cap[i][candidates[i].root] = g.density(candidates[i].root);
    std::map<int, std::vector<int>> children;
    for (const auto& [c, p] : parent) children[p].push_back(c);
    for (std::size_t q = 0; q < order.size(); ++q) {
      for (int c : children[order[q]]) {
        path_cap[i][c] = std::min(path_cap[i][order[q]], g.density(c));
        order.push_back(c);
      }
    }
  }

  // SM compatibility cache, filled lazily.
  std::map<std::pair<int, int>, bool> sm_cache;
  auto sm_ok = [&](int a, int b) {
    const auto key = std::minmax(a, b);
    auto it = sm_cache.find(key);
    if (it != sm_cache.end()) return it->second;
    const bool ok = sm_compatible(candidates[key.first], candidates[key.second]);
    sm_cache.emplace(key, ok);
    return ok;
  };

  std::int64_t nodes = 0;
  auto charge_node = [&]() {
    if (++nodes > options.node_budget) {
      throw OracleBudgetError("instance too large: oracle search exceeded its node budget");
    }
  };

  std::vector<int> chosen;
  std::vector<char> banned(num_candidates, 0);
  std::optional<Decomposition> witness;

  // Unique-path subset search: while some positive vertex is uncovered,
  // branch over candidates containing the smallest one (banning earlier
  // siblings below each branch); once covered, extras are taken in
  // increasing index order.
  std::function<bool(int, int)> search = [&](int k, int min_extra) -> bool {
    charge_node();
    const Mask covered = [&] {
      Mask m = 0;
      for (int i : chosen) m |= candidate_mask[i];
      return m;
    }();
    const Mask uncovered = positive & ~covered;

    if (static_cast<int>(chosen.size()) == k) {
      if (uncovered != 0) return false;
      // Per-vertex capacity check before the LP.
      for (int v = 0; v < n; ++v) {
        if (g.density(v) == 0) continue;
        Rational capacity = 0;
        for (int i : chosen) capacity += path_cap[i][v];
        if (capacity < g.density(v)) return false;
      }
      std::vector<CandidateSupport> supports;
      for (int i : chosen) supports.push_back(candidates[i]);
      const auto result = feasible(g, supports, variant, options.strict_positive);
      if (!result.feasible) return false;
      Decomposition d;
      d.variant = variant;
      for (std::size_t i = 0; i < supports.size(); ++i) {
        MonotoneTree t = positive_core(supports[i], result.values[i]);
        if (!t.values.empty()) d.trees.push_back(std::move(t));
      }
      if (!validate_decomposition(g, d).ok) {
        throw std::logic_error("oracle witness failed validation");
      }
      witness = std::move(d);
      return true;
    }

    const int slots = k - static_cast<int>(chosen.size());
    // Each forced root still missing needs its own tree.
    {
      std::set<int> roots;
      for (int i : chosen) roots.insert(candidates[i].root);
      int missing = 0;
      for (int v = 0; v < n; ++v) {
        if ((forced_roots >> v & 1) && !roots.count(v)) ++missing;
      }
      if (missing > slots) return false;
    }

    auto compatible = [&](int i) {
      if (banned[i]) return false;
      if (variant == Variant::FM) {
        for (int j : chosen) {
          if (candidates[j].root == candidates[i].root) return false;
        }
      }
      if (variant == Variant::SM) {
        for (int j : chosen) {
          if (!sm_ok(i, j)) return false;
        }
      }
      return true;
    };

    if (uncovered != 0) {
      const int v = std::countr_zero(uncovered);
      std::vector<int> branch_banned;
      bool found = false;
      for (int i = 0; i < num_candidates && !found; ++i) {
        if (!(candidate_mask[i] >> v & 1) || !compatible(i)) continue;
        chosen.push_back(i);
        found = search(k, min_extra);
        chosen.pop_back();
        if (!found) {
          banned[i] = 1;
          branch_banned.push_back(i);
        }
      }
      for (int i : branch_banned) banned[i] = 0;
      return found;
    }

    for (int i = min_extra; i < num_candidates; ++i) {
      if (!compatible(i)) continue;
      chosen.push_back(i);
      if (search(k, i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };

  for (int k = lower; k < seed.size(); ++k) {
    chosen.clear();
    if (search(k, 0)) return std::move(*witness);
  }
  return seed;
}

}  // namespace mtree
