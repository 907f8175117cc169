#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dprig/rational.hpp"

namespace dprig {

// Dense exact linear algebra for the tiny systems this project meets
// (lattice Gram forms, LP bases, facet normals): nothing here is sized
// beyond roughly 15x15.
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// Solves A*x = b by Gauss-Jordan elimination with exact pivots.
/// Returns std::nullopt when the system is singular or inconsistent
/// (callers that need to distinguish the two don't exist here).
/// Throws InvalidArgumentError on shape mismatch.
std::optional<RationalVector> solve_linear_system(const RationalMatrix& a,
                                                  const RationalVector& b);

/// Determinant by fraction-free-ish Gaussian elimination (exact rationals,
/// so ordinary elimination is already exact).
Rational determinant(const RationalMatrix& a);

/// Signature (positive, negative, zero inertia) of a symmetric matrix via
/// congruence diagonalization. Throws InvalidArgumentError when the matrix
/// is not symmetric.
struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};
Signature symmetric_signature(RationalMatrix a);

}  // namespace dprig
