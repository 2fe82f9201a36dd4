#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "mtree/io.hpp"
#include "mtree/reductions.hpp"
#include "mtree/sweep.hpp"

using namespace mtree;
using mtree::testing::graph_of;
using mtree::testing::path_graph;

TEST_CASE("graph files round-trip byte for byte") {
  GraphFile gf;
  gf.graph = graph_of({3, 1, 2}, {{0, 1}, {1, 2}});
  gf.graph.set_density(1, Rational(1) / 2);
  gf.meta["generator"] = "tree";
  gf.meta["seed"] = "7";
  const std::string text = serialize_graph(gf);
  GraphFile back = parse_graph(text);
  CHECK(back == gf);
  CHECK(serialize_graph(back) == text);
}

TEST_CASE("graph parsing accepts comments and rejects malformed documents") {
  CHECK(parse_graph("# comment\nv 0 2\n").graph.density(0) == 2);
  CHECK(parse_graph("").graph.vertex_count() == 0);
  CHECK_THROWS_AS(parse_graph("v 0 1\nv 0 2\n"), ParseError);      // duplicate id
  CHECK_THROWS_AS(parse_graph("v 1 2\n"), ParseError);             // not contiguous
  CHECK_THROWS_AS(parse_graph("v 0 -1\n"), ParseError);            // negative density
  CHECK_THROWS_AS(parse_graph("v 0 1.5\n"), ParseError);           // not a rational
  CHECK_THROWS_AS(parse_graph("v 0 1\ne 0 0\n"), ParseError);      // self-loop
  CHECK_THROWS_AS(parse_graph("v 0 1\ne 0 5\n"), ParseError);      // bad endpoint
  CHECK_THROWS_AS(parse_graph("vertex 0 1\n"), ParseError);        // unknown directive
}

TEST_CASE("decomposition files round-trip") {
  DensityGraph g = path_graph({3, 1, 2});
  Decomposition d = decompose_tree(g);
  const std::string text = serialize_decomposition(d);
  Decomposition back = parse_decomposition(text);
  CHECK(back == d);
  CHECK(serialize_decomposition(back) == text);
  CHECK(validate_decomposition(g, back).ok);
}

TEST_CASE("decomposition parsing enforces the format invariants") {
  CHECK_THROWS_AS(parse_decomposition("tree 0\nn 0 1\n"), ParseError);  // no variant
  CHECK_THROWS_AS(parse_decomposition("variant m\nn 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_decomposition("variant m\ntree 0\nn 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_decomposition("variant m\ntree 0\nn 1 1\n"), ParseError);  // no root value
  CHECK_THROWS_AS(parse_decomposition("variant m\ntree 0\nn 0 1\nte 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_decomposition("variant q\n"), ParseError);
  Decomposition d = parse_decomposition("variant sm\ntree 1\nn 0 1/2\nn 1 2\nte 0 1\n");
  CHECK(d.variant == Variant::SM);
  CHECK(d.trees[0].values[0] == Rational(1) / 2);
}

TEST_CASE("rationals serialize in lowest terms") {
  GraphFile gf;
  gf.graph = DensityGraph(1);
  gf.graph.set_density(0, Rational(4) / 6);
  CHECK(serialize_graph(gf) == "v 0 2/3\n");
}

TEST_CASE("DOT export") {
  SUBCASE("plain graph lists every vertex and edge") {
    DensityGraph g = path_graph({3, 1, 2});
    const std::string dot = to_dot(g);
    CHECK(dot.find("graph G {") == 0);
    CHECK(dot.find("0 [label=\"0:3\"]") != std::string::npos);
    CHECK(dot.find("1 -- 2") != std::string::npos);
  }
  SUBCASE("decomposition adds color classes and bold tree edges") {
    // Two separated bumps decompose into two disjoint trees, one color each.
    DensityGraph g = path_graph({2, 0, 2});
    Decomposition d = decompose_tree(g);
    REQUIRE(d.size() == 2);
    const std::string dot = to_dot(g, &d);
    CHECK(dot.find("color=red") != std::string::npos);
    CHECK(dot.find("color=blue") != std::string::npos);
    CHECK(dot.find("color=gray") != std::string::npos);  // non-tree host edges
  }
  SUBCASE("empty graph is still a valid document") {
    CHECK(to_dot(DensityGraph(0)).find("graph G {") == 0);
  }
}

TEST_CASE("parse and serialize survive generator output") {
  Rng rng(1234);
  for (int iter = 0; iter < 10; ++iter) {
    GraphFile gf;
    gf.graph = gen_random_cactus(rng, 9, 3, 5);
    const std::string text = serialize_graph(gf);
    CHECK(parse_graph(text) == gf);
  }
}
