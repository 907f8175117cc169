#include "dprig/linalg.hpp"

#include <cstddef>

namespace dprig {

namespace {

void check_square(const RationalMatrix& a) {
  for (const auto& row : a) {
    if (row.size() != a.size()) {
      throw InvalidArgumentError("matrix is not square");
    }
  }
}

}  // namespace

std::optional<RationalVector> solve_linear_system(const RationalMatrix& a,
                                                  const RationalVector& b) {
  const std::size_t n = a.size();
  check_square(a);
  if (b.size() != n) {
    throw InvalidArgumentError("right-hand side size does not match matrix");
  }
  // Augmented Gauss-Jordan with partial pivoting by first nonzero entry.
  RationalMatrix m(n, RationalVector(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = a[i][j];
    }
    m[i][n] = b[i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) {
      ++pivot;
    }
    if (pivot == n) {
      return std::nullopt;  // singular
    }
    std::swap(m[col], m[pivot]);
    const Rational inv = m[col][col];
    for (std::size_t j = col; j <= n; ++j) {
      m[col][j] /= inv;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) {
        continue;
      }
      const Rational factor = m[row][col];
      for (std::size_t j = col; j <= n; ++j) {
        m[row][j] -= factor * m[col][j];
      }
    }
  }
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = m[i][n];
  }
  return x;
}

Rational determinant(const RationalMatrix& a) {
  const std::size_t n = a.size();
  check_square(a);
  RationalMatrix m = a;
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) {
      ++pivot;
    }
    if (pivot == n) {
      return Rational(0);
    }
    if (pivot != col) {
      std::swap(m[col], m[pivot]);
      det = -det;
    }
    det *= m[col][col];
    const Rational inv = m[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) {
        continue;
      }
      const Rational factor = m[row][col] / inv;
      for (std::size_t j = col; j < n; ++j) {
        m[row][j] -= factor * m[col][j];
      }
    }
  }
  return det;
}

Signature symmetric_signature(RationalMatrix a) {
  const std::size_t n = a.size();
  check_square(a);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (a[i][j] != a[j][i]) {
        throw InvalidArgumentError("matrix is not symmetric");
      }
    }
  }
  Signature sig;
  // Symmetric Gaussian congruence: at each step find a nonzero diagonal
  // entry (creating one from an off-diagonal entry when necessary) and
  // clear its row/column.
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t j = k + 1;
      while (j < n && a[k][j] == 0) {
        ++j;
      }
      if (j == n) {
        ++sig.zero;
        continue;
      }
      // Row/column j folded into k makes the (k,k) entry
      // a[j][j] +/- 2*a[k][j]; at least one sign is nonzero.
      const Rational sign = (a[j][j] + 2 * a[k][j] != 0) ? Rational(1) : Rational(-1);
      for (std::size_t c = 0; c < n; ++c) {
        a[k][c] += sign * a[j][c];
      }
      for (std::size_t r = 0; r < n; ++r) {
        a[r][k] += sign * a[r][j];
      }
    }
    const Rational d = a[k][k];
    if (d > 0) {
      ++sig.positive;
    } else {
      ++sig.negative;
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a[r][k] == 0) {
        continue;
      }
      const Rational factor = a[r][k] / d;
      for (std::size_t c = 0; c < n; ++c) {
        a[r][c] -= factor * a[k][c];
      }
      for (std::size_t c = 0; c < n; ++c) {
        a[c][r] -= factor * a[c][k];
      }
    }
  }
  return sig;
}

}  // namespace dprig
