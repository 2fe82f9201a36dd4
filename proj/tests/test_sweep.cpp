#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "mtree/exact.hpp"
#include "mtree/reductions.hpp"
#include "mtree/structure.hpp"
#include "mtree/sweep.hpp"

using namespace mtree;
using mtree::testing::graph_of;
using mtree::testing::path_graph;

TEST_CASE("monotone sweep on the path (3,1,2)") {
  DensityGraph t = path_graph({3, 1, 2});

  SUBCASE("full value carries to the end") {
    SweepResult r = monotone_sweep(t, 0, 3);
    CHECK(r.swept.root == 0);
    CHECK(r.swept.values == std::map<int, Rational>{{0, 3}, {1, 1}, {2, 1}});
    CHECK(r.swept.edges == std::set<Edge>{{0, 1}, {1, 2}});
    CHECK(r.remainder.density(0) == 0);
    CHECK(r.remainder.density(1) == 0);
    CHECK(r.remainder.density(2) == 1);
  }
  SUBCASE("small value dies at the density drop") {
    SweepResult r = monotone_sweep(t, 0, 1);
    CHECK(r.swept.values == std::map<int, Rational>{{0, 1}});
    CHECK(r.swept.edges.empty());
    CHECK(r.remainder.density(0) == 2);
    CHECK(r.remainder.density(1) == 1);
    CHECK(r.remainder.density(2) == 2);
  }
}

TEST_CASE("monotone sweep identity on a single vertex") {
  DensityGraph t = graph_of({5}, {});
  SweepResult r = monotone_sweep(t, 0, 5);
  CHECK(r.swept.values == std::map<int, Rational>{{0, 5}});
  CHECK(r.remainder.all_zero());
}

TEST_CASE("monotone sweep input errors") {
  DensityGraph t = path_graph({3, 1, 2});
  CHECK_THROWS_AS(monotone_sweep(t, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(monotone_sweep(t, 0, 4), std::invalid_argument);
  DensityGraph tri = graph_of({1, 1, 1}, {{0, 1}, {1, 2}, {0, 2}});
  CHECK_THROWS_AS(monotone_sweep(tri, 0, 1), std::invalid_argument);
  DensityGraph forest = graph_of({1, 1, 1}, {{0, 1}});
  CHECK_THROWS_AS(monotone_sweep(forest, 0, 1), std::invalid_argument);
}

TEST_CASE("sweep values rise with the density and fall by the gap") {
  // Valley then rise: f = (2, 1, 3). Sweeping 2 from vertex 0 drops to 1 at
  // the valley and stays 1 on the rise (values never exceed the carry).
  DensityGraph t = path_graph({2, 1, 3});
  SweepResult r = monotone_sweep(t, 0, 2);
  CHECK(r.swept.values == std::map<int, Rational>{{0, 2}, {1, 1}, {2, 1}});
  CHECK(r.remainder.density(2) == 2);
}

TEST_CASE("mode-forced nodes") {
  CHECK(mode_forced_nodes(path_graph({3, 1, 2})) == std::set<int>{0, 2});
  CHECK(mode_forced_nodes(path_graph({3, 2, 1})) == std::set<int>{0});
  // Monotone star: all leaves insignificant, center survives alone.
  DensityGraph star = graph_of({1, 2, 1, 1}, {{0, 1}, {1, 2}, {1, 3}});
  CHECK(mode_forced_nodes(star) == std::set<int>{1});
  CHECK(mode_forced_nodes(path_graph({0, 0, 0})) == std::set<int>{});
  // Equal plateau: candidates are fixed per round but rechecked in order, so
  // both ends of (2,2,2) prune and the middle survives.
  CHECK(mode_forced_nodes(path_graph({2, 2, 2})) == std::set<int>{1});
  CHECK_THROWS_AS(mode_forced_nodes(graph_of({1, 1, 1}, {{0, 1}, {1, 2}, {0, 2}})),
                  std::invalid_argument);
}

TEST_CASE("decompose_tree on spec paths") {
  Decomposition d1 = decompose_tree(path_graph({3, 1, 2}));
  CHECK(d1.size() == 2);
  CHECK(validate_decomposition(path_graph({3, 1, 2}), d1).ok);

  Decomposition d2 = decompose_tree(path_graph({3, 2, 1}));
  CHECK(d2.size() == 1);

  CHECK(decompose_tree(path_graph({0, 0})).size() == 0);
}

TEST_CASE("decompose_tree sweeps start at mode-forced vertices") {
  // A caterpillar in the style of the paper's single-sweep figure: one sweep
  // from a mode-forced node, remainder stays non-negative.
  DensityGraph t = graph_of({5, 3, 4, 1, 2}, {{0, 1}, {1, 2}, {1, 3}, {2, 4}});
  const auto forced = mode_forced_nodes(t);
  Decomposition d = decompose_tree(t);
  REQUIRE(d.size() >= 1);
  CHECK(forced.count(d.trees[0].root) == 1);
  SweepResult first = monotone_sweep(t, d.trees[0].root, t.density(d.trees[0].root));
  for (int v = 0; v < t.vertex_count(); ++v) CHECK(first.remainder.density(v) >= 0);
  CHECK(validate_decomposition(t, d).ok);
  d.variant = Variant::SM;
  CHECK(validate_decomposition(t, d).ok);
}

TEST_CASE("sweep conservation on random trees") {
  Rng rng(424242);
  for (int iter = 0; iter < 60; ++iter) {
    DensityGraph t = gen_random_tree(rng, 7, 5);
    for (int v = 0; v < t.vertex_count(); ++v) {
      if (t.density(v) <= 0) continue;
      SweepResult r = monotone_sweep(t, v, t.density(v));
      for (int u = 0; u < t.vertex_count(); ++u) {
        CHECK(r.swept.value_or_zero(u) + r.remainder.density(u) == t.density(u));
        CHECK(r.remainder.density(u) >= 0);
      }
    }
  }
}

TEST_CASE("larger sweeps never leave a harder remainder") {
  // On random trees, for 0 < a < b <= f(v), the minimum decomposition size of
  // the b-remainder is at most that of the a-remainder.
  Rng rng(99);
  int checked = 0;
  while (checked < 40) {
    DensityGraph t = gen_random_tree(rng, 6, 5);
    const int v = std::uniform_int_distribution<int>(0, t.vertex_count() - 1)(rng);
    if (t.density(v) < 2) continue;
    const Rational b = t.density(v);
    const Rational a = b / 2;
    const auto small = monotone_sweep(t, v, a).remainder;
    const auto large = monotone_sweep(t, v, b).remainder;
    CHECK(decompose_tree(large).size() <= decompose_tree(small).size());
    ++checked;
  }
}

TEST_CASE("decompose_tree matches the exact oracle on small trees") {
  Rng rng(7);
  for (int iter = 0; iter < 25; ++iter) {
    DensityGraph t = gen_random_tree(rng, 6, 4);
    CHECK(decompose_tree(t).size() == exact_min(t, Variant::M).size());
  }
}
