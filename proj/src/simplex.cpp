#include "mtree/simplex.hpp"

#include <stdexcept>

namespace mtree {

namespace {

// Dense tableau: rows[i] has total_cols entries, last one the rhs.
// basis[i] is the variable basic in row i. The objective row carries
// reduced costs for a maximization problem; a pivot step keeps it in sync.
struct Tableau {
  int total_cols = 0;  // variables + 1 (rhs)
  std::vector<std::vector<Rational>> rows;
  std::vector<int> basis;
  std::vector<Rational> obj;  // length total_cols; obj.back() = -current value

  void pivot(int row, int col) {
    auto& pr = rows[row];
    const Rational inv = 1 / pr[col];
    for (auto& x : pr) x *= inv;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == row || rows[i][col] == 0) continue;
      const Rational factor = rows[i][col];
      for (int j = 0; j < total_cols; ++j) rows[i][j] -= factor * pr[j];
    }
    if (obj[col] != 0) {
      const Rational factor = obj[col];
      for (int j = 0; j < total_cols; ++j) obj[j] -= factor * pr[j];
    }
    basis[row] = col;
  }

  // Bland's rule: smallest improving column; leaving row by ratio test with
  // smallest basic variable breaking ties. Returns false on optimality,
  // throws std::domain_error (caught by caller) never; unbounded reported
  // via the out-parameter.
  bool step(bool& unbounded) {
    const int num_vars = total_cols - 1;
    int col = -1;
    for (int j = 0; j < num_vars; ++j) {
      if (obj[j] > 0) {
        col = j;
        break;
      }
    }
    if (col == -1) return false;
    int row = -1;
    Rational best_ratio = 0;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (rows[i][col] <= 0) continue;
      const Rational ratio = rows[i].back() / rows[i][col];
      if (row == -1 || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[row])) {
        row = i;
        best_ratio = ratio;
      }
    }
    if (row == -1) {
      unbounded = true;
      return false;
    }
    pivot(row, col);
    return true;
  }
};

}  // namespace

LPSolution solve_lp(const LinearProgram& lp) {
  const int n = lp.num_vars;
  const int m = static_cast<int>(lp.constraints.size());
  for (const auto& c : lp.constraints) {
    if (static_cast<int>(c.coeffs.size()) != n) {
      throw std::invalid_argument("constraint width mismatch");
    }
  }

  // Layout: [structural n][slack/surplus, one per LE/GE row][artificials][rhs].
  int num_slacks = 0;
  for (const auto& c : lp.constraints) {
    if (c.rel != Rel::EQ) ++num_slacks;
  }

  // After sign-normalizing each row to rhs >= 0, a LE row's slack can serve
  // as the initial basic variable; everything else needs an artificial.
  struct RowPlan {
    std::vector<Rational> coeffs;
    Rational rhs;
    int slack_col = -1;      // with sign
    Rational slack_sign = 0;
    bool slack_basic = false;
  };
  std::vector<RowPlan> plans;
  plans.reserve(m);
  int next_slack = n;
  for (const auto& c : lp.constraints) {
    RowPlan p;
    p.coeffs = c.coeffs;
    p.rhs = c.rhs;
    Rel rel = c.rel;
    if (p.rhs < 0) {
      for (auto& x : p.coeffs) x = -x;
      p.rhs = -p.rhs;
      if (rel == Rel::LE) rel = Rel::GE;
      else if (rel == Rel::GE) rel = Rel::LE;
    }
    if (rel != Rel::EQ) {
      p.slack_col = next_slack++;
      p.slack_sign = rel == Rel::LE ? 1 : -1;
      p.slack_basic = rel == Rel::LE;
    }
    plans.push_back(std::move(p));
  }

  int num_artificials = 0;
  for (const auto& p : plans) {
    if (!p.slack_basic) ++num_artificials;
  }
  const int art_base = n + num_slacks;
  const int width = n + num_slacks + num_artificials;

  Tableau t;
  t.total_cols = width + 1;
  t.rows.assign(m, std::vector<Rational>(t.total_cols, Rational(0)));
  t.basis.assign(m, -1);
  int next_art = art_base;
  for (int i = 0; i < m; ++i) {
    auto& row = t.rows[i];
    const auto& p = plans[i];
    for (int j = 0; j < n; ++j) row[j] = p.coeffs[j];
    if (p.slack_col != -1) row[p.slack_col] = p.slack_sign;
    row.back() = p.rhs;
    if (p.slack_basic) {
      t.basis[i] = p.slack_col;
    } else {
      const int a = next_art++;
      row[a] = 1;
      t.basis[i] = a;
    }
  }

  // Phase 1: maximize -(sum of artificials). Reduced costs start as the sum
  // of artificial rows (artificial columns cancel to zero there).
  if (num_artificials > 0) {
    t.obj.assign(t.total_cols, Rational(0));
    for (int i = 0; i < m; ++i) {
      if (t.basis[i] >= art_base) {
        for (int j = 0; j < t.total_cols; ++j) t.obj[j] += t.rows[i][j];
        t.obj[t.basis[i]] -= 1;
      }
    }
    bool unbounded = false;
    while (t.step(unbounded)) {
    }
    if (t.obj.back() > 0) return {LPStatus::kInfeasible, 0, {}};
    // Drive any zero-level artificial out of the basis; a row with no other
    // nonzero entry is redundant and can stay (its rhs is zero).
    for (int i = 0; i < m; ++i) {
      if (t.basis[i] < art_base) continue;
      for (int j = 0; j < art_base; ++j) {
        if (t.rows[i][j] != 0) {
          t.pivot(i, j);
          break;
        }
      }
    }
    // Freeze artificial columns out of further pivoting.
    for (auto& row : t.rows) {
      for (int j = art_base; j < width; ++j) row[j] = 0;
    }
  }

  // Phase 2 objective: reduced costs c_j - c_B . (B^-1 A)_j from scratch.
  t.obj.assign(t.total_cols, Rational(0));
  auto cost_of = [&](int var) -> Rational {
    if (var < static_cast<int>(lp.objective.size())) return lp.objective[var];
    return 0;
  };
  for (int j = 0; j < width; ++j) t.obj[j] = cost_of(j);
  for (int j = art_base; j < width; ++j) t.obj[j] = 0;
  for (int i = 0; i < m; ++i) {
    const Rational cb = cost_of(t.basis[i]);
    if (cb == 0) continue;
    for (int j = 0; j < t.total_cols; ++j) t.obj[j] -= cb * t.rows[i][j];
  }

  bool unbounded = false;
  while (t.step(unbounded)) {
  }
  if (unbounded) return {LPStatus::kUnbounded, 0, {}};

  LPSolution sol;
  sol.status = LPStatus::kOptimal;
  sol.values.assign(n, Rational(0));
  for (int i = 0; i < m; ++i) {
    if (t.basis[i] < n) sol.values[t.basis[i]] = t.rows[i].back();
  }
  sol.objective_value = -t.obj.back();
  return sol;
}

}  // namespace mtree
