#pragma once

#include <cstddef>
#include <vector>

#include "dprig/rational.hpp"

namespace dprig {

// Exact linear programming over the rationals. The programs this project
// solves are tiny (at most ~10 variables), so the kernel favors clarity
// and guaranteed termination over speed: dense tableau, two phases,
// Bland's anti-cycling rule.

enum class Relation { less_equal, equal, greater_equal };

struct LinearConstraint {
  std::vector<Rational> coefficients;  // one per variable
  Relation relation = Relation::less_equal;
  Rational rhs;
};

struct LinearProgram {
  std::size_t num_variables = 0;
  std::vector<Rational> objective;        // minimized
  std::vector<LinearConstraint> constraints;
  std::vector<bool> nonnegative;          // per-variable x >= 0 flag

  /// Convenience: program with all variables nonnegative.
  static LinearProgram minimize(std::size_t num_variables,
                                std::vector<Rational> objective);

  void add_constraint(std::vector<Rational> coefficients, Relation relation,
                      Rational rhs);
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rational value;                  // objective at the witness (optimal only)
  std::vector<Rational> witness;   // one entry per original variable
};

/// Checks a claimed solution against every constraint, the sign
/// restrictions, and the claimed objective value, all in exact arithmetic.
bool lp_witness_satisfies(const LinearProgram& lp,
                          const std::vector<Rational>& witness,
                          const Rational& value);

/// Solves min c.x subject to the constraints. Throws InvalidArgumentError
/// on shape mismatches. An optimal result has already been re-verified
/// against the input program before it is returned.
LpResult lp_minimize(const LinearProgram& lp);

}  // namespace dprig
