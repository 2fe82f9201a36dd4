#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mtree/decomposition.hpp"
#include "mtree/graph.hpp"

namespace mtree {

// Set cover instance; with the SC-1 restriction any two sets share at most
// one element.
struct SetCoverInstance {
  int universe_size = 0;
  std::vector<std::set<int>> sets;
};

bool satisfies_sc1(const SetCoverInstance& sc);

struct VertexCoverInstance {
  int vertices = 0;
  std::vector<Edge> edges;
};

// Restriction used by the SM-hardness gadget: any two vertices have at most
// one common neighbor.
bool satisfies_common_neighbor_restriction(const VertexCoverInstance& vc);

// Vertex ids of the bipartite gadget graph: sets first, then elements.
struct Sc1IdMap {
  std::vector<int> set_node;      // a_{S_i}
  std::vector<int> element_node;  // b_{e_j}
};

// Bipartite gadget: one node per set with density |S_i|, one node per
// element with density 1, incidence edges. The minimum M-Tree Set of the
// result has the same size as the minimum set cover. Throws on SC-1
// violations or uncovered elements.
DensityGraph sc1_to_density_graph(const SetCoverInstance& sc, Sc1IdMap* ids = nullptr);

// Builds one monotone tree per cover set, exactly as the equivalence proof
// prescribes (multiply-covered elements go to their smallest-index cover
// set). With `complete`, multiply-covered elements split their unit value
// 1/n across the n covering sets so the result is also a CM-Tree Set.
// Throws if `cover` is not a valid cover of sc.
Decomposition mtree_set_from_cover(const SetCoverInstance& sc, const std::vector<int>& cover,
                                   const DensityGraph& g, bool complete = false);

// Extracts a set cover of size <= |d.trees| from a valid M decomposition of
// the gadget graph: set-node roots pick their sets; element-node roots pick
// the smallest-index containing set when still uncovered.
std::vector<int> cover_from_mtree_set(const SetCoverInstance& sc, const DensityGraph& g,
                                      const Decomposition& d);

struct VcIdMap {
  std::vector<int> vertex_node;  // a_v
  std::vector<int> edge_node;    // b_e
};

// Bipartite gadget for the SM variant: vertex nodes with density deg(v),
// edge nodes with density 1. Minimum SM-Tree Set size equals the minimum
// vertex cover size. Throws when the common-neighbor restriction fails.
DensityGraph vc_to_density_graph(const VertexCoverInstance& vc, VcIdMap* ids = nullptr);

// Exact optima by subset enumeration in increasing size; throws
// std::invalid_argument past the budget (instances of more than ~20 sets or
// vertices are rejected rather than answered slowly or wrongly).
int brute_force_set_cover(const SetCoverInstance& sc);
int brute_force_vertex_cover(const VertexCoverInstance& vc);

enum class HostShape { kTree, kCactus, kGeneral };

HostShape host_shape_from_name(const std::string& name);
std::string host_shape_name(HostShape shape);

struct PlantedInstance {
  DensityGraph graph;
  Decomposition decomposition;  // the k planted monotone trees; validates
};

// All generators are deterministic per seed (mt19937_64).
using Rng = std::mt19937_64;

DensityGraph gen_random_tree(Rng& rng, int n, int max_density);
DensityGraph gen_random_connected_graph(Rng& rng, int n, int extra_edges, int max_density);
DensityGraph gen_random_cactus(Rng& rng, int n, int max_cycles, int max_density);
SetCoverInstance gen_random_sc1(Rng& rng, int num_sets, int universe_size);
VertexCoverInstance gen_random_restricted_vc(Rng& rng, int n);

// Sum of k random monotone trees over a random host of the given shape; the
// planted decomposition always validates and bounds the optimum by k.
PlantedInstance gen_planted(std::uint64_t seed, int n, int k, HostShape shape);

}  // namespace mtree
