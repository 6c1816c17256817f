#include "sparsetree/simplex.hpp"

#include "sparsetree/error.hpp"

namespace sparsetree {

namespace {
constexpr std::size_t npos = static_cast<std::size_t>(-1);
}

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::infeasible: return "infeasible";
    case LpStatus::unbounded: return "unbounded";
  }
  return "unknown";
}

SimplexSolver::SimplexSolver(const LinearProgram& lp) : rows_(lp.rows.size()) {
  if (lp.objective.size() != lp.variable_count) {
    throw Error(ErrorKind::InvalidArgument, "objective length differs from variable count");
  }
  // Column layout: structural variables, then per row a slack (<=), a
  // surplus and an artificial (>=), or an artificial (=).
  std::size_t cols = lp.variable_count;
  std::vector<std::size_t> aux(rows_);
  flipped_.assign(rows_, false);
  std::vector<RowSense> sense(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    sense[i] = lp.rows[i].sense;
    if (lp.rows[i].rhs.sign() < 0) {
      flipped_[i] = true;
      if (sense[i] == RowSense::less_equal) sense[i] = RowSense::greater_equal;
      else if (sense[i] == RowSense::greater_equal) sense[i] = RowSense::less_equal;
    }
    aux[i] = cols;
    cols += sense[i] == RowSense::greater_equal ? 2 : 1;
  }

  tableau_.assign(rows_, std::vector<Rational>(cols));
  rhs_.assign(rows_, Rational(0));
  cost_.assign(cols, Rational(0));
  artificial_.assign(cols, false);
  variable_of_.assign(cols, npos);
  basis_.assign(rows_, 0);
  identity_col_.assign(rows_, 0);
  for (std::size_t j = 0; j < lp.variable_count; ++j) {
    cost_[j] = lp.objective[j];
    variable_of_[j] = j;
    column_of_.push_back(j);
  }
  for (std::size_t i = 0; i < rows_; ++i) {
    const Rational sign = flipped_[i] ? Rational(-1) : Rational(1);
    for (const auto& [j, a] : lp.rows[i].coefficients) {
      if (j >= lp.variable_count) throw Error(ErrorKind::InvalidArgument, "row coefficient references unknown variable");
      tableau_[i][j] += sign * a;
    }
    rhs_[i] = sign * lp.rows[i].rhs;
    switch (sense[i]) {
      case RowSense::less_equal:
        tableau_[i][aux[i]] = 1;
        identity_col_[i] = aux[i];
        break;
      case RowSense::greater_equal:
        tableau_[i][aux[i]] = -1;
        tableau_[i][aux[i] + 1] = 1;
        artificial_[aux[i] + 1] = true;
        identity_col_[i] = aux[i] + 1;
        break;
      case RowSense::equal:
        tableau_[i][aux[i]] = 1;
        artificial_[aux[i]] = true;
        identity_col_[i] = aux[i];
        break;
    }
    basis_[i] = identity_col_[i];
  }
}

void SimplexSolver::load_objective(const std::vector<Rational>& costs) {
  current_cost_ = costs;
  const std::size_t cols = costs.size();
  reduced_.assign(cols, Rational(0));
  value_ = 0;
  for (std::size_t j = 0; j < cols; ++j) reduced_[j] = -costs[j];
  for (std::size_t i = 0; i < rows_; ++i) {
    const Rational& cb = costs[basis_[i]];
    if (cb.sign() == 0) continue;
    for (std::size_t j = 0; j < cols; ++j) {
      if (tableau_[i][j].sign() != 0) reduced_[j] += cb * tableau_[i][j];
    }
    value_ += cb * rhs_[i];
  }
}

void SimplexSolver::pivot(std::size_t row, std::size_t col) {
  ++pivots_;
  auto& prow = tableau_[row];
  const Rational inv = Rational(1) / prow[col];
  std::vector<std::size_t> nonzero;
  for (std::size_t j = 0; j < prow.size(); ++j) {
    if (prow[j].sign() != 0) {
      prow[j] *= inv;
      nonzero.push_back(j);
    }
  }
  rhs_[row] *= inv;
  auto eliminate = [&](std::vector<Rational>& target, Rational& target_rhs) {
    const Rational factor = target[col];
    if (factor.sign() == 0) return;
    for (std::size_t j : nonzero) target[j] -= factor * prow[j];
    target_rhs -= factor * rhs_[row];
  };
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i != row) eliminate(tableau_[i], rhs_[i]);
  }
  eliminate(reduced_, value_);
  basis_[row] = col;
}

bool SimplexSolver::iterate(bool allow_artificial) {
  const std::size_t cols = reduced_.size();
  while (true) {
    // Bland: lowest-index improving column, then lowest-index leaving basic variable.
    std::size_t enter = npos;
    for (std::size_t j = 0; j < cols; ++j) {
      if (reduced_[j].sign() < 0 && (allow_artificial || !artificial_[j])) {
        enter = j;
        break;
      }
    }
    if (enter == npos) return true;
    std::size_t leave = npos;
    Rational best;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (tableau_[i][enter].sign() <= 0) continue;
      const Rational ratio = rhs_[i] / tableau_[i][enter];
      if (leave == npos || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == npos) return false;
    pivot(leave, enter);
  }
}

LpSolution SimplexSolver::solve() {
  if (phase_ == Phase::done_infeasible) return extract(LpStatus::infeasible);
  if (phase_ == Phase::fresh) {
    bool any_artificial = false;
    std::vector<Rational> phase_one(artificial_.size(), Rational(0));
    for (std::size_t j = 0; j < artificial_.size(); ++j) {
      if (artificial_[j]) {
        phase_one[j] = -1;
        any_artificial = true;
      }
    }
    if (any_artificial) {
      load_objective(phase_one);
      iterate(false);
      if (value_.sign() < 0) {
        phase_ = Phase::done_infeasible;
        return extract(LpStatus::infeasible);
      }
      // Drive zero-level artificials out where a real column can replace them.
      for (std::size_t i = 0; i < rows_; ++i) {
        if (!artificial_[basis_[i]]) continue;
        for (std::size_t j = 0; j < tableau_[i].size(); ++j) {
          if (!artificial_[j] && tableau_[i][j].sign() != 0) {
            pivot(i, j);
            break;
          }
        }
      }
    }
    load_objective(cost_);
    phase_ = Phase::second;
  }
  if (!iterate(false)) return extract(LpStatus::unbounded);
  return extract(LpStatus::optimal);
}

std::size_t SimplexSolver::add_column(const Rational& cost, const std::vector<std::pair<std::size_t, Rational>>& entries) {
  std::vector<Rational> a(rows_);
  for (const auto& [i, v] : entries) {
    if (i >= rows_) throw Error(ErrorKind::InvalidArgument, "column entry references unknown row");
    a[i] += flipped_[i] ? -v : v;
  }
  // Current tableau column is B^-1 a, where B^-1 sits under the initial unit columns.
  std::vector<Rational> column(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < rows_; ++k) {
      if (a[k].sign() == 0) continue;
      const Rational& binv = tableau_[i][identity_col_[k]];
      if (binv.sign() != 0) column[i] += binv * a[k];
    }
  }
  const std::size_t col = cost_.size();
  for (std::size_t i = 0; i < rows_; ++i) tableau_[i].push_back(column[i]);
  cost_.push_back(cost);
  artificial_.push_back(false);
  const std::size_t variable = column_of_.size();
  variable_of_.push_back(variable);
  column_of_.push_back(col);
  if (phase_ == Phase::second) {
    current_cost_.push_back(cost);
    Rational r = -cost;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (column[i].sign() != 0) r += current_cost_[basis_[i]] * column[i];
    }
    reduced_.push_back(r);
  }
  return variable;
}

LpSolution SimplexSolver::extract(LpStatus status) const {
  LpSolution out;
  out.status = status;
  if (status != LpStatus::optimal) return out;
  out.objective = value_;
  out.values.assign(column_of_.size(), Rational(0));
  for (std::size_t i = 0; i < rows_; ++i) {
    const std::size_t v = variable_of_[basis_[i]];
    if (v != npos) out.values[v] = rhs_[i];
  }
  out.duals.assign(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i) {
    const Rational& y = reduced_[identity_col_[i]];
    out.duals[i] = flipped_[i] ? -y : y;
  }
  return out;
}

LpSolution solve_lp(const LinearProgram& lp) { return SimplexSolver(lp).solve(); }

}  // namespace sparsetree
