#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>

#include "helpers.hpp"
#include "mtree/approx.hpp"
#include "mtree/exact.hpp"
#include "mtree/reductions.hpp"
#include "mtree/sweep.hpp"

using namespace mtree;
using mtree::testing::graph_of;
using mtree::testing::path_graph;

namespace {

// Independent candidate counter: for every subset of positive vertices and
// every root, count the spanning trees by deletion-contraction over the
// induced subgraph (here: brute force over edge subsets, fine at this size).
int count_rooted_subtrees(const DensityGraph& g) {
  std::vector<int> positive;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.density(v) > 0) positive.push_back(v);
  }
  const int p = static_cast<int>(positive.size());
  int total = 0;
  for (int mask = 1; mask < (1 << p); ++mask) {
    std::set<int> verts;
    for (int i = 0; i < p; ++i) {
      if (mask & (1 << i)) verts.insert(positive[i]);
    }
    std::vector<Edge> induced;
    for (const auto& [u, v] : g.edges()) {
      if (verts.count(u) && verts.count(v)) induced.push_back({u, v});
    }
    const int need = static_cast<int>(verts.size()) - 1;
    const int m = static_cast<int>(induced.size());
    int spanning = 0;
    for (int emask = 0; emask < (1 << m); ++emask) {
      if (std::popcount(static_cast<unsigned>(emask)) != need) continue;
      // Union-find connectivity check.
      std::map<int, int> parent;
      for (int v : verts) parent[v] = v;
      std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
      };
      bool acyclic = true;
      for (int i = 0; i < m && acyclic; ++i) {
        if (!(emask & (1 << i))) continue;
        int a = find(induced[i].first), b = find(induced[i].second);
        if (a == b) acyclic = false;
        parent[a] = b;
      }
      if (!acyclic) continue;
      int roots = 0;
      for (int v : verts) roots += find(v) == find(*verts.begin());
      if (roots == static_cast<int>(verts.size())) ++spanning;
    }
    total += spanning * static_cast<int>(verts.size());  // one candidate per root
  }
  return total;
}

}  // namespace

TEST_CASE("rooted subtree enumeration") {
  CHECK(enumerate_rooted_subtrees(graph_of({5}, {})).size() == 1);
  // Path on two positive vertices: {a}, {b}, and {a,b} with 2 roots.
  CHECK(enumerate_rooted_subtrees(path_graph({1, 1})).size() == 4);
  // Zero-density vertices never appear.
  CHECK(enumerate_rooted_subtrees(path_graph({1, 0})).size() == 1);

  DensityGraph tri = graph_of({1, 1, 1}, {{0, 1}, {1, 2}, {0, 2}});
  const auto candidates = enumerate_rooted_subtrees(tri);
  CHECK(static_cast<int>(candidates.size()) == count_rooted_subtrees(tri));
  for (const auto& c : candidates) {
    CHECK(std::is_sorted(c.vertices.begin(), c.vertices.end()));
    CHECK(c.edges.size() + 1 == c.vertices.size());
  }

  Rng rng(13);
  for (int iter = 0; iter < 10; ++iter) {
    DensityGraph g = gen_random_connected_graph(rng, 5, 2, 3);
    CHECK(static_cast<int>(enumerate_rooted_subtrees(g).size()) == count_rooted_subtrees(g));
  }
}

TEST_CASE("feasibility on the path (3,1,2)") {
  DensityGraph g = path_graph({3, 1, 2});

  SUBCASE("single whole-path support cannot meet the sums") {
    CandidateSupport whole{0, {0, 1, 2}, {{0, 1}, {1, 2}}};
    CHECK_FALSE(feasible(g, {whole}, Variant::M).feasible);
  }
  SUBCASE("two supports carry a witness") {
    CandidateSupport left{0, {0, 1}, {{0, 1}}};
    CandidateSupport right{2, {2}, {}};
    FeasibilityResult r = feasible(g, {left, right}, Variant::M);
    REQUIRE(r.feasible);
    CHECK(r.values[0][0] == 3);
    CHECK(r.values[0][1] == 1);
    CHECK(r.values[1][0] == 2);
  }
  SUBCASE("empty support list fits only the all-zero graph") {
    CHECK(feasible(DensityGraph(2), {}, Variant::M).feasible);
    CHECK_FALSE(feasible(g, {}, Variant::M).feasible);
  }
}

TEST_CASE("exact minimum on spec instances") {
  DensityGraph p = path_graph({3, 1, 2});
  Decomposition dm = exact_min(p, Variant::M);
  CHECK(dm.size() == 2);
  CHECK(validate_decomposition(p, dm).ok);

  DensityGraph tri = graph_of({1, 1, 1}, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(exact_min(tri, Variant::M).size() == 1);

  Decomposition dfm = exact_min(p, Variant::FM);
  CHECK(dfm.size() == 2);
  dfm.variant = Variant::FM;
  CHECK(validate_decomposition(p, dfm).ok);
  std::set<int> roots;
  for (const auto& t : dfm.trees) {
    roots.insert(t.root);
    CHECK(t.value_or_zero(t.root) == p.density(t.root));
  }
  CHECK(roots == std::set<int>{0, 2});

  CHECK(exact_min(DensityGraph(3), Variant::M).size() == 0);
}

TEST_CASE("witnesses validate for every variant") {
  Rng rng(555);
  for (int iter = 0; iter < 8; ++iter) {
    DensityGraph g = gen_random_connected_graph(rng, 5, 1, 3);
    for (Variant variant : {Variant::M, Variant::SM, Variant::CM, Variant::FM}) {
      Decomposition d = exact_min(g, variant);
      d.variant = variant;
      CHECK(validate_decomposition(g, d).ok);
    }
  }
}

TEST_CASE("variant minima are ordered: SM at least M") {
  Rng rng(556);
  for (int iter = 0; iter < 10; ++iter) {
    DensityGraph g = gen_random_connected_graph(rng, 5, 2, 3);
    CHECK(exact_min(g, Variant::SM).size() >= exact_min(g, Variant::M).size());
  }
}

TEST_CASE("zero-allowing relaxation never changes the minimum") {
  Rng rng(557);
  OracleOptions strict;
  strict.strict_positive = true;
  for (int iter = 0; iter < 8; ++iter) {
    DensityGraph g = gen_random_connected_graph(rng, 5, 1, 3);
    for (Variant variant : {Variant::M, Variant::SM, Variant::FM}) {
      CHECK(exact_min(g, variant).size() == exact_min(g, variant, strict).size());
    }
  }
}

TEST_CASE("oracle equals the tree algorithm on random trees") {
  Rng rng(558);
  for (int iter = 0; iter < 15; ++iter) {
    DensityGraph t = gen_random_tree(rng, 7, 4);
    CHECK(exact_min(t, Variant::M).size() == decompose_tree(t).size());
  }
}

TEST_CASE("budget overruns raise a dedicated error") {
  OracleOptions tiny;
  tiny.candidate_budget = 2;
  DensityGraph g = path_graph({3, 1, 2});
  CHECK_THROWS_AS(exact_min(g, Variant::M, tiny), OracleBudgetError);
}
