#pragma once

#include <vector>

#include "mtree/rational.hpp"

namespace mtree {

enum class Rel { LE, GE, EQ };

struct LinearConstraint {
  std::vector<Rational> coeffs;  // dense, length num_vars
  Rel rel = Rel::LE;
  Rational rhs = 0;
};

// maximize objective . x  subject to the constraints and x >= 0.
struct LinearProgram {
  int num_vars = 0;
  std::vector<LinearConstraint> constraints;
  std::vector<Rational> objective;  // empty means pure feasibility
};

enum class LPStatus { kOptimal, kInfeasible, kUnbounded };

struct LPSolution {
  LPStatus status = LPStatus::kInfeasible;
  Rational objective_value = 0;
  std::vector<Rational> values;  // length num_vars when not infeasible
};

// Two-phase primal simplex over exact rationals with Bland's rule.
// Every pivot is exact; there are no tolerances anywhere.
LPSolution solve_lp(const LinearProgram& lp);

}  // namespace mtree
