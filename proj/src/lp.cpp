#include "dprig/lp.hpp"

#include <cstddef>
#include <utility>

#include "dprig/errors.hpp"

namespace dprig {

LinearProgram LinearProgram::minimize(std::size_t num_variables,
                                      std::vector<Rational> objective) {
  LinearProgram lp;
  lp.num_variables = num_variables;
  lp.objective = std::move(objective);
  lp.nonnegative.assign(num_variables, true);
  return lp;
}

void LinearProgram::add_constraint(std::vector<Rational> coefficients,
                                   Relation relation, Rational rhs) {
  LinearConstraint c;
  c.coefficients = std::move(coefficients);
  c.relation = relation;
  c.rhs = std::move(rhs);
  constraints.push_back(std::move(c));
}

bool lp_witness_satisfies(const LinearProgram& lp,
                          const std::vector<Rational>& witness,
                          const Rational& value) {
  if (witness.size() != lp.num_variables) {
    return false;
  }
  for (std::size_t i = 0; i < lp.num_variables; ++i) {
    if (lp.nonnegative[i] && witness[i] < 0) {
      return false;
    }
  }
  for (const auto& c : lp.constraints) {
    Rational lhs = 0;
    for (std::size_t i = 0; i < lp.num_variables; ++i) {
      lhs += c.coefficients[i] * witness[i];
    }
    const bool ok = (c.relation == Relation::less_equal && lhs <= c.rhs) ||
                    (c.relation == Relation::equal && lhs == c.rhs) ||
                    (c.relation == Relation::greater_equal && lhs >= c.rhs);
    if (!ok) {
      return false;
    }
  }
  Rational objective = 0;
  for (std::size_t i = 0; i < lp.num_variables; ++i) {
    objective += lp.objective[i] * witness[i];
  }
  return objective == value;
}

namespace {

void validate(const LinearProgram& lp) {
  if (lp.objective.size() != lp.num_variables) {
    throw InvalidArgumentError("objective size does not match variable count");
  }
  if (lp.nonnegative.size() != lp.num_variables) {
    throw InvalidArgumentError(
        "nonnegativity flags do not match variable count");
  }
  for (const auto& c : lp.constraints) {
    if (c.coefficients.size() != lp.num_variables) {
      throw InvalidArgumentError(
          "constraint size does not match variable count");
    }
  }
}

// Dense simplex tableau. Rows 0..m-1 are constraints in basis-canonical
// form; row m holds the reduced costs of the phase currently being solved,
// with the negated objective value in its rhs cell.
struct Tableau {
  std::vector<std::vector<Rational>> rows;  // m rows of width n_cols + 1
  std::vector<Rational> cost;               // width n_cols + 1
  std::vector<std::size_t> basis;           // basic column per row

  std::size_t n_cols = 0;

  void pivot(std::size_t pivot_row, std::size_t pivot_col) {
    auto& pr = rows[pivot_row];
    const Rational inv = pr[pivot_col];
    for (auto& cell : pr) {
      cell /= inv;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row || rows[r][pivot_col] == 0) {
        continue;
      }
      const Rational factor = rows[r][pivot_col];
      for (std::size_t j = 0; j <= n_cols; ++j) {
        rows[r][j] -= factor * pr[j];
      }
    }
    if (cost[pivot_col] != 0) {
      const Rational factor = cost[pivot_col];
      for (std::size_t j = 0; j <= n_cols; ++j) {
        cost[j] -= factor * pr[j];
      }
    }
    basis[pivot_row] = pivot_col;
  }

  // Bland's rule: enter the lowest-index improving column; among the
  // minimum-ratio rows leave the one whose basic variable has the lowest
  // index. Guarantees termination on degenerate tableaus.
  // Returns optimal / unbounded.
  bool run(const std::vector<bool>& allowed) {
    for (;;) {
      std::size_t entering = n_cols;
      for (std::size_t j = 0; j < n_cols; ++j) {
        if (allowed[j] && cost[j] < 0) {
          entering = j;
          break;
        }
      }
      if (entering == n_cols) {
        return true;  // optimal
      }
      std::size_t leaving = rows.size();
      Rational best_ratio;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r][entering] <= 0) {
          continue;
        }
        const Rational ratio = rows[r][n_cols] / rows[r][entering];
        if (leaving == rows.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis[r] < basis[leaving])) {
          leaving = r;
          best_ratio = ratio;
        }
      }
      if (leaving == rows.size()) {
        return false;  // unbounded in the entering direction
      }
      pivot(leaving, entering);
    }
  }
};

}  // namespace

LpResult lp_minimize(const LinearProgram& lp) {
  validate(lp);

  // Structural columns: nonnegative variables map to one column, free
  // variables split into a positive and a negative part.
  struct StructuralColumn {
    std::size_t variable;
    int sign;
  };
  std::vector<StructuralColumn> structural;
  for (std::size_t i = 0; i < lp.num_variables; ++i) {
    structural.push_back({i, +1});
    if (!lp.nonnegative[i]) {
      structural.push_back({i, -1});
    }
  }

  const std::size_t m = lp.constraints.size();
  std::size_t n_slack = 0;
  std::size_t n_artificial = 0;
  // Normalized rows: coefficients over structural columns, rhs >= 0.
  std::vector<std::vector<Rational>> coef(m);
  std::vector<Rational> rhs(m);
  std::vector<Relation> rel(m);
  for (std::size_t r = 0; r < m; ++r) {
    const auto& c = lp.constraints[r];
    Rational sign = 1;
    rel[r] = c.relation;
    if (c.rhs < 0) {
      sign = -1;
      if (c.relation == Relation::less_equal) {
        rel[r] = Relation::greater_equal;
      } else if (c.relation == Relation::greater_equal) {
        rel[r] = Relation::less_equal;
      }
    }
    rhs[r] = sign * c.rhs;
    coef[r].resize(structural.size());
    for (std::size_t j = 0; j < structural.size(); ++j) {
      coef[r][j] =
          sign * structural[j].sign * c.coefficients[structural[j].variable];
    }
    if (rel[r] != Relation::equal) {
      ++n_slack;
    }
    if (rel[r] != Relation::less_equal) {
      ++n_artificial;
    }
  }

  Tableau t;
  t.n_cols = structural.size() + n_slack + n_artificial;
  t.rows.assign(m, std::vector<Rational>(t.n_cols + 1));
  t.basis.assign(m, 0);
  const std::size_t slack_base = structural.size();
  const std::size_t artificial_base = slack_base + n_slack;
  std::size_t next_slack = 0;
  std::size_t next_artificial = 0;
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j < structural.size(); ++j) {
      t.rows[r][j] = coef[r][j];
    }
    t.rows[r][t.n_cols] = rhs[r];
    if (rel[r] == Relation::less_equal) {
      const std::size_t col = slack_base + next_slack++;
      t.rows[r][col] = 1;
      t.basis[r] = col;
    } else if (rel[r] == Relation::greater_equal) {
      t.rows[r][slack_base + next_slack++] = -1;  // surplus
      const std::size_t col = artificial_base + next_artificial++;
      t.rows[r][col] = 1;
      t.basis[r] = col;
    } else {
      const std::size_t col = artificial_base + next_artificial++;
      t.rows[r][col] = 1;
      t.basis[r] = col;
    }
  }

  std::vector<bool> allowed(t.n_cols, true);

  // Phase 1: minimize the sum of artificial variables.
  if (n_artificial > 0) {
    t.cost.assign(t.n_cols + 1, Rational(0));
    for (std::size_t j = 0; j < n_artificial; ++j) {
      t.cost[artificial_base + j] = 1;
    }
    for (std::size_t r = 0; r < m; ++r) {
      if (t.basis[r] >= artificial_base) {
        for (std::size_t j = 0; j <= t.n_cols; ++j) {
          t.cost[j] -= t.rows[r][j];
        }
      }
    }
    t.run(allowed);  // bounded below by zero, never unbounded
    if (-t.cost[t.n_cols] != 0) {
      return {LpStatus::infeasible, Rational(0), {}};
    }
    // Drive leftover artificials (all at value zero) out of the basis;
    // rows with no structural or slack support are redundant and dropped.
    for (std::size_t r = 0; r < t.rows.size();) {
      if (t.basis[r] < artificial_base) {
        ++r;
        continue;
      }
      std::size_t col = artificial_base;
      for (std::size_t j = 0; j < artificial_base; ++j) {
        if (t.rows[r][j] != 0) {
          col = j;
          break;
        }
      }
      if (col < artificial_base) {
        t.pivot(r, col);
        ++r;
      } else {
        t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(r));
        t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(r));
      }
    }
    for (std::size_t j = 0; j < n_artificial; ++j) {
      allowed[artificial_base + j] = false;
    }
  }

  // Phase 2: the real objective, priced out against the current basis.
  t.cost.assign(t.n_cols + 1, Rational(0));
  for (std::size_t j = 0; j < structural.size(); ++j) {
    t.cost[j] = structural[j].sign * lp.objective[structural[j].variable];
  }
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const Rational basic_cost = t.cost[t.basis[r]];
    if (basic_cost != 0) {
      for (std::size_t j = 0; j <= t.n_cols; ++j) {
        t.cost[j] -= basic_cost * t.rows[r][j];
      }
    }
  }
  if (!t.run(allowed)) {
    return {LpStatus::unbounded, Rational(0), {}};
  }

  LpResult result;
  result.status = LpStatus::optimal;
  result.value = -t.cost[t.n_cols];
  result.witness.assign(lp.num_variables, Rational(0));
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (t.basis[r] < structural.size()) {
      const auto& col = structural[t.basis[r]];
      result.witness[col.variable] += col.sign * t.rows[r][t.n_cols];
    }
  }
  if (!lp_witness_satisfies(lp, result.witness, result.value)) {
    // The tableau algebra guarantees this; treat failure as a logic error.
    throw ArithmeticError("simplex produced a witness that fails recheck");
  }
  return result;
}

}  // namespace dprig
