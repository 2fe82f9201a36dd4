#pragma once

#include <set>
#include <vector>

#include "mtree/graph.hpp"

namespace mtree {

// Per-vertex component labels (0-based, assigned in ascending order of the
// smallest vertex id in each component) plus the component count.
struct ComponentLabels {
  std::vector<int> label;
  int count = 0;
};

ComponentLabels connected_components(const DensityGraph& g);

// Cycle rank: |E| - |V| + #components.
int genus(const DensityGraph& g);

bool is_acyclic(const DensityGraph& g);
// Connected and acyclic.
bool is_tree(const DensityGraph& g);

// One representative (smallest id) per plateau maximum. A plateau is a
// connected component of equal-density vertices; it is a maximum iff no
// adjacent vertex has strictly larger density. Zero-density plateaus are
// never maxima.
std::set<int> relative_maxima(const DensityGraph& g);

// A biconnected component. Bridges appear as blocks with a single edge;
// in a cactus every other block is a simple cycle.
struct Block {
  std::vector<int> vertices;  // ascending
  std::vector<Edge> edges;    // ascending canonical
};

struct BlockDecomposition {
  std::vector<Block> blocks;
  std::set<int> articulation_points;
};

BlockDecomposition biconnected_blocks(const DensityGraph& g);

// True iff no edge lies on more than one simple cycle, i.e. every
// biconnected block is a single edge or a simple cycle.
bool is_cactus(const DensityGraph& g);

}  // namespace mtree
