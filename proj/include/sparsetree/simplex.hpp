#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "sparsetree/rational.hpp"

namespace sparsetree {

enum class RowSense { less_equal, greater_equal, equal };

struct LpRow {
  std::vector<std::pair<std::size_t, Rational>> coefficients;
  RowSense sense = RowSense::less_equal;
  Rational rhs;
};

/// maximize objective . x  subject to rows, x >= 0.
struct LinearProgram {
  std::size_t variable_count = 0;
  std::vector<Rational> objective;
  std::vector<LpRow> rows;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::optimal;
  Rational objective;
  std::vector<Rational> values;  // one per variable, including appended columns
  std::vector<Rational> duals;   // one per row; >= 0 on <= rows at a maximum
};

const char* to_string(LpStatus status);

/// Dense two-phase tableau simplex over exact rationals with Bland's rule.
///
/// Columns may be appended after a solve (column generation): the current
/// basis stays feasible and `solve()` resumes from it.
class SimplexSolver {
 public:
  explicit SimplexSolver(const LinearProgram& lp);

  LpSolution solve();

  /// Appends a variable with the given objective coefficient and row entries;
  /// returns its variable index.
  std::size_t add_column(const Rational& cost, const std::vector<std::pair<std::size_t, Rational>>& entries);

  std::size_t pivots() const { return pivots_; }

 private:
  enum class Phase { fresh, second, done_infeasible };

  bool iterate(bool allow_artificial);  // false when unbounded
  void pivot(std::size_t row, std::size_t col);
  void load_objective(const std::vector<Rational>& costs);
  LpSolution extract(LpStatus status) const;

  std::size_t rows_ = 0;
  std::vector<std::vector<Rational>> tableau_;
  std::vector<Rational> rhs_;
  std::vector<Rational> reduced_;  // c_B B^-1 A_j - c_j
  Rational value_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> identity_col_;  // initial unit column of each row
  std::vector<bool> flipped_;
  std::vector<bool> artificial_;
  std::vector<Rational> cost_;          // phase-two costs per column
  std::vector<std::size_t> variable_of_;  // column -> variable index, or npos
  std::vector<std::size_t> column_of_;    // variable index -> column
  std::vector<Rational> current_cost_;
  Phase phase_ = Phase::fresh;
  std::size_t pivots_ = 0;
};

LpSolution solve_lp(const LinearProgram& lp);

}  // namespace sparsetree
