#pragma once

#include <set>

#include "mtree/decomposition.hpp"
#include "mtree/graph.hpp"

namespace mtree {

// Output of one monotone sweep: the extracted monotone tree plus the
// remainder over the same vertex set. For every vertex,
// swept value + remainder density == input density, exactly, and the
// remainder is non-negative.
struct SweepResult {
  MonotoneTree swept;
  DensityGraph remainder;
};

// Extracts one monotone subtree from the density tree t, starting at v with
// value alpha (0 < alpha <= f(v)). DFS visits children in ascending id
// order; along each traversed edge (u -> w) the carried value stays equal
// when f(w) >= f(u) and otherwise drops by the density gap, clamped at 0.
// Vertices whose value reaches 0 are excluded and not traversed past.
// Throws std::invalid_argument when t is not a tree or alpha is out of range.
SweepResult monotone_sweep(const DensityGraph& t, int v, const Rational& alpha);

// Iteratively deletes every leaf whose unique neighbor has density >= its
// own (candidates processed in ascending id within each round), then returns
// the leaves of what survives; a surviving isolated vertex counts as a leaf.
// Zero-density survivors are dropped, so an all-zero tree yields the empty
// set. Accepts forests; components are independent.
std::set<int> mode_forced_nodes(const DensityGraph& t);

// Minimum M-Tree Set of a density tree (equally a minimum SM-Tree Set):
// repeatedly sweeps the full remaining density from the smallest-id
// mode-forced vertex of the remainder until nothing remains. Accepts
// forests; components are handled independently.
Decomposition decompose_tree(const DensityGraph& t);

namespace detail {
// Sweep without the tree-shape check; the positive part of a remainder may
// be disconnected. Only v's component is touched.
SweepResult sweep_unchecked(const DensityGraph& t, int v, const Rational& alpha);
}  // namespace detail

}  // namespace mtree
