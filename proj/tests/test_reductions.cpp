#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "helpers.hpp"
#include "mtree/exact.hpp"
#include "mtree/reductions.hpp"
#include "mtree/structure.hpp"
#include "mtree/sweep.hpp"

using namespace mtree;
using mtree::testing::graph_of;

namespace {

// {e1,e2}, {e2,e3}: the two-set instance used throughout the spec examples.
SetCoverInstance two_sets() {
  SetCoverInstance sc;
  sc.universe_size = 3;
  sc.sets = {{0, 1}, {1, 2}};
  return sc;
}

SetCoverInstance star_instance() {
  SetCoverInstance sc;
  sc.universe_size = 3;
  sc.sets = {{0, 1, 2}};
  return sc;
}

}  // namespace

TEST_CASE("SC-1 detection") {
  CHECK(satisfies_sc1(two_sets()));
  SetCoverInstance bad;
  bad.universe_size = 3;
  bad.sets = {{0, 1, 2}, {0, 1}};
  CHECK_FALSE(satisfies_sc1(bad));
  CHECK_THROWS_AS(sc1_to_density_graph(bad), std::invalid_argument);
}

TEST_CASE("set cover gadget graph") {
  Sc1IdMap ids;
  DensityGraph g = sc1_to_density_graph(two_sets(), &ids);
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 4);
  CHECK(g.density(ids.set_node[0]) == 2);
  CHECK(g.density(ids.set_node[1]) == 2);
  for (int b : ids.element_node) CHECK(g.density(b) == 1);
  CHECK(g.has_edge(0, 2));  // S_0 - e_0
  CHECK(g.has_edge(0, 3));
  CHECK(g.has_edge(1, 3));
  CHECK(g.has_edge(1, 4));
  // Both the brute-force cover and the oracle agree on 2.
  CHECK(brute_force_set_cover(two_sets()) == 2);
  CHECK(exact_min(g, Variant::M).size() == 2);
}

TEST_CASE("larger gadgets keep the two-row bipartite shape") {
  Rng rng(41);
  SetCoverInstance sc = gen_random_sc1(rng, 4, 7);
  DensityGraph g = sc1_to_density_graph(sc);
  CHECK(g.vertex_count() <= 4 + 7);
  std::size_t total = 0;
  for (const auto& s : sc.sets) total += s.size();
  CHECK(g.edge_count() <= static_cast<int>(total));
  // Bipartite: every edge joins a set node (id < 4) and an element node.
  for (const auto& [u, v] : g.edges()) {
    CHECK(u < 4);
    CHECK(v >= 4);
  }
}

TEST_CASE("star instance reduces to a star graph with minimum one") {
  DensityGraph g = sc1_to_density_graph(star_instance());
  CHECK(exact_min(g, Variant::M).size() == 1);
  CHECK(brute_force_set_cover(star_instance()) == 1);
}

TEST_CASE("cover to decomposition and back") {
  const SetCoverInstance sc = two_sets();
  DensityGraph g = sc1_to_density_graph(sc);

  SUBCASE("both sets as cover give a valid size-2 M decomposition") {
    Decomposition d = mtree_set_from_cover(sc, {0, 1}, g);
    CHECK(d.size() == 2);
    CHECK(validate_decomposition(g, d).ok);
    const auto cover = cover_from_mtree_set(sc, g, d);
    CHECK(cover.size() == 2);
  }
  SUBCASE("complete flag yields a CM decomposition covering all edges") {
    Decomposition d = mtree_set_from_cover(sc, {0, 1}, g, /*complete=*/true);
    CHECK(d.size() == 2);
    CHECK(d.variant == Variant::CM);
    CHECK(validate_decomposition(g, d).ok);
  }
  SUBCASE("oracle witness recovers a cover of matching size") {
    Decomposition d = exact_min(g, Variant::M);
    const auto cover = cover_from_mtree_set(sc, g, d);
    CHECK(static_cast<int>(cover.size()) <= d.size());
  }
  SUBCASE("invalid covers are rejected") {
    CHECK_THROWS_AS(mtree_set_from_cover(sc, {0}, g), std::invalid_argument);
    CHECK_THROWS_AS(mtree_set_from_cover(sc, {0, 0, 1}, g), std::invalid_argument);
  }
}

TEST_CASE("single covering set on the star instance is FM-valid") {
  DensityGraph g = sc1_to_density_graph(star_instance());
  Decomposition d = mtree_set_from_cover(star_instance(), {0}, g);
  CHECK(d.size() == 1);
  CHECK(validate_decomposition(g, d).ok);
  d.variant = Variant::FM;
  CHECK(validate_decomposition(g, d).ok);
}

TEST_CASE("vertex cover gadget") {
  SUBCASE("triangle instance") {
    VertexCoverInstance vc{3, {{0, 1}, {1, 2}, {0, 2}}};
    CHECK(satisfies_common_neighbor_restriction(vc));
    DensityGraph g = vc_to_density_graph(vc);
    for (int v = 0; v < 3; ++v) CHECK(g.density(v) == 2);
    for (int b = 3; b < 6; ++b) CHECK(g.density(b) == 1);
    CHECK(brute_force_vertex_cover(vc) == 2);
    CHECK(exact_min(g, Variant::SM).size() == 2);
  }
  SUBCASE("single edge becomes a unit path") {
    VertexCoverInstance vc{2, {{0, 1}}};
    DensityGraph g = vc_to_density_graph(vc);
    CHECK(g.vertex_count() == 3);
    for (int v = 0; v < 3; ++v) CHECK(g.density(v) == 1);
    CHECK(exact_min(g, Variant::SM).size() == 1);
    CHECK(brute_force_vertex_cover(vc) == 1);
  }
  SUBCASE("empty edge set needs no trees") {
    VertexCoverInstance vc{2, {}};
    DensityGraph g = vc_to_density_graph(vc);
    CHECK(exact_min(g, Variant::SM).size() == 0);
  }
  SUBCASE("restriction violations are rejected") {
    // A 4-cycle: opposite vertices share two common neighbors.
    VertexCoverInstance vc{4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}};
    CHECK_FALSE(satisfies_common_neighbor_restriction(vc));
    CHECK_THROWS_AS(vc_to_density_graph(vc), std::invalid_argument);
  }
}

TEST_CASE("brute-force solvers reject oversized or uncoverable instances") {
  SetCoverInstance sc;
  sc.universe_size = 2;
  sc.sets = {{0}};
  CHECK_THROWS_AS(brute_force_set_cover(sc), std::invalid_argument);
}

TEST_CASE("planted instances") {
  SUBCASE("one planted tree is itself a monotone tree") {
    PlantedInstance p = gen_planted(3, 6, 1, HostShape::kTree);
    CHECK(validate_decomposition(p.graph, p.decomposition).ok);
    CHECK(decompose_tree(p.graph).size() == 1);
  }
  SUBCASE("two planted trees bound the optimum by two") {
    PlantedInstance p = gen_planted(4, 5, 2, HostShape::kTree);
    CHECK(validate_decomposition(p.graph, p.decomposition).ok);
    const int k = exact_min(p.graph, Variant::M).size();
    CHECK(k >= (p.graph.all_zero() ? 0 : 1));
    CHECK(k <= 2);
  }
  SUBCASE("fixed seeds reproduce instances exactly") {
    PlantedInstance a = gen_planted(99, 7, 3, HostShape::kCactus);
    PlantedInstance b = gen_planted(99, 7, 3, HostShape::kCactus);
    CHECK(a.graph == b.graph);
    CHECK(a.decomposition == b.decomposition);
  }
}

TEST_CASE("random generators honor their structural contracts") {
  Rng rng(2024);
  for (int iter = 0; iter < 20; ++iter) {
    CHECK(is_tree(gen_random_tree(rng, 6, 5)));
    DensityGraph cactus = gen_random_cactus(rng, 8, 3, 5);
    CHECK(is_cactus(cactus));
    CHECK(connected_components(cactus).count == 1);
    CHECK(satisfies_sc1(gen_random_sc1(rng, 4, 6)));
    CHECK(satisfies_common_neighbor_restriction(gen_random_restricted_vc(rng, 6)));
  }
}

TEST_CASE("reduction equality on random SC-1 and VC instances") {
  Rng rng(60);
  for (int iter = 0; iter < 10; ++iter) {
    SetCoverInstance sc = gen_random_sc1(rng, 3, 5);
    DensityGraph g = sc1_to_density_graph(sc);
    CHECK(exact_min(g, Variant::M).size() == brute_force_set_cover(sc));
  }
  for (int iter = 0; iter < 6; ++iter) {
    VertexCoverInstance vc = gen_random_restricted_vc(rng, 5);
    DensityGraph g = vc_to_density_graph(vc);
    CHECK(exact_min(g, Variant::SM).size() == brute_force_vertex_cover(vc));
  }
}
