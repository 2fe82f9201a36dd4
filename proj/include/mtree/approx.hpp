#pragma once

#include <set>

#include "mtree/decomposition.hpp"
#include "mtree/graph.hpp"

namespace mtree {

// Result of split_sweep: how many sweeps were needed before only mode-forced
// nodes on the kept side remain, and the density left at the junction.
struct SweepReport {
  int sweep_count = 0;
  Rational residual_at_junction = 0;

  // Lexicographic: sweep count first, then exact residual comparison.
  friend bool operator<(const SweepReport& a, const SweepReport& b) {
    if (a.sweep_count != b.sweep_count) return a.sweep_count < b.sweep_count;
    return a.residual_at_junction < b.residual_at_junction;
  }
  friend bool operator==(const SweepReport& a, const SweepReport& b) {
    return a.sweep_count == b.sweep_count &&
           a.residual_at_junction == b.residual_at_junction;
  }
};

// Baseline decomposition: sweep the full remaining density from each relative
// maximum (original maxima in descending density then ascending id) along
// non-increasing paths, giving every vertex the best value any such path can
// carry to it; iterates on the remainder until it is zero. Output size is
// at most the number of relative maxima of the input.
Decomposition naive_decompose(const DensityGraph& g);

// Drops genus(g) edges via a deterministic BFS spanning forest (roots at the
// smallest unvisited id, neighbors in ascending order) and decomposes the
// surviving density forest exactly. Size <= minimum + 2 * genus(g).
Decomposition spanning_tree_decompose(const DensityGraph& g);

// t must be a tree split into two subtrees t1, t2 (given as vertex sets)
// sharing exactly one vertex, the junction. Vertices of t outside t1 ∪ t2
// must be isolated and zero-density. Repeatedly sweeps the full remaining
// density from the smallest-id mode-forced node off t2 until every
// mode-forced node lies on t2; reports the sweep count and the remaining
// density at the junction. Throws std::invalid_argument on an invalid split.
SweepReport split_sweep(const DensityGraph& t, const std::set<int>& t1, const std::set<int>& t2);

// 3-approximation for minimum SM-Tree Sets of density cacti: repeatedly
// locates a leaf cycle, scores each of its spanning trees with split_sweep,
// deletes the cycle edge with the lexicographically smallest (sweep count,
// junction residual) report, and finishes by trying every edge of the last
// remaining cycle. Equals the best decompose_tree result over all density
// spanning trees of g. Throws std::invalid_argument if g is not a cactus.
Decomposition cactus_sm_decompose(const DensityGraph& g);

}  // namespace mtree
