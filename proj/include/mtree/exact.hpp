#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mtree/decomposition.hpp"
#include "mtree/graph.hpp"

namespace mtree {

// One element of the oracle's search space: a rooted subtree of the host
// graph spanning only positive-density vertices.
struct CandidateSupport {
  int root = 0;
  std::vector<int> vertices;  // ascending
  std::vector<Edge> edges;    // ascending canonical; spans `vertices`
};

// Every (root, subtree) pair over positive-density vertices, in canonical
// order: sorted vertex set, then edge set, then root. Intended for small
// instances; exact_min enforces the budget.
std::vector<CandidateSupport> enumerate_rooted_subtrees(const DensityGraph& g);

struct FeasibilityResult {
  bool feasible = false;
  // values[i][j] is the value of supports[i].vertices[j] in the witness.
  std::vector<std::vector<Rational>> values;
};

// Decides, exactly over rationals, whether values exist on the supports that
// form a valid decomposition of g under `variant` (monotone away from each
// root, non-negative, per-vertex sums equal to the density; FM pins root
// values; SM is checked structurally on the supports; CM requires every
// positive-positive edge covered with strictly positive endpoint values).
// With strict_positive, every support value must be strictly positive
// (decided by maximizing a common slack).
FeasibilityResult feasible(const DensityGraph& g,
                           const std::vector<CandidateSupport>& supports,
                           Variant variant, bool strict_positive = false);

class OracleBudgetError : public std::runtime_error {
 public:
  explicit OracleBudgetError(const std::string& what) : std::runtime_error(what) {}
};

struct OracleOptions {
  // Hard cap on enumerated candidate supports; the MTREE_ORACLE_BUDGET
  // environment variable overrides this at the CLI.
  std::int64_t candidate_budget = 50000;
  // Hard cap on search nodes across all cardinality levels.
  std::int64_t node_budget = 20000000;
  bool strict_positive = false;
};

// Minimum-cardinality decomposition of g under `variant`, found by subset
// search over candidate supports in increasing cardinality with exact
// feasibility checks. Throws OracleBudgetError (never a wrong answer) when
// the instance exceeds the budget.
Decomposition exact_min(const DensityGraph& g, Variant variant,
                        const OracleOptions& options = {});

}  // namespace mtree
