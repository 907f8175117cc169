#include "dprig/picard.hpp"

#include <cstdlib>
#include <numeric>

#include "dprig/errors.hpp"

namespace dprig {

std::string to_string(LatticeVariant variant) {
  return variant == LatticeVariant::blowup ? "blowup" : "quadric";
}

DelPezzoLattice::DelPezzoLattice(int degree, LatticeVariant variant)
    : degree_(degree), variant_(variant) {
  if (degree < 1 || degree > 9) {
    throw InvalidArgumentError("del Pezzo degree must lie in [1,9]");
  }
  if (variant == LatticeVariant::quadric && degree != 8) {
    throw InvalidArgumentError("the quadric lattice exists only in degree 8");
  }
}

int DelPezzoLattice::rank() const {
  return variant_ == LatticeVariant::quadric ? 2 : 10 - degree_;
}

std::int64_t DelPezzoLattice::gram(int i, int j) const {
  if (i < 0 || j < 0 || i >= rank() || j >= rank()) {
    throw InvalidArgumentError("gram index out of range");
  }
  if (variant_ == LatticeVariant::quadric) {
    return i == j ? 0 : 1;
  }
  if (i != j) {
    return 0;
  }
  return i == 0 ? 1 : -1;
}

RationalMatrix DelPezzoLattice::gram_matrix() const {
  const int n = rank();
  RationalMatrix g(n, RationalVector(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      g[i][j] = gram(i, j);
    }
  }
  return g;
}

DivisorClass DelPezzoLattice::canonical_class() const {
  std::vector<std::int64_t> k;
  if (variant_ == LatticeVariant::quadric) {
    k = {-2, -2};
  } else {
    k.assign(rank(), 1);
    k[0] = -3;
  }
  return {*this, std::move(k)};
}

DivisorClass DelPezzoLattice::fundamental_class() const {
  const int r = fano_index();
  DivisorClass k = canonical_class();
  std::vector<std::int64_t> h(k.coefficients.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    h[i] = -k.coefficients[i] / r;
  }
  return {*this, std::move(h)};
}

int DelPezzoLattice::fano_index() const {
  if (variant_ == LatticeVariant::quadric) {
    return 2;
  }
  return degree_ == 9 ? 3 : 1;
}

DivisorClass DelPezzoLattice::make_class(
    std::vector<std::int64_t> coefficients) const {
  if (coefficients.size() != static_cast<std::size_t>(rank())) {
    throw InvalidArgumentError("coefficient vector does not match rank");
  }
  return {*this, std::move(coefficients)};
}

std::int64_t intersect(const DivisorClass& a, const DivisorClass& b) {
  if (!(a.lattice == b.lattice)) {
    throw InvalidArgumentError("intersection of classes on different lattices");
  }
  const int n = a.lattice.rank();
  if (a.coefficients.size() != static_cast<std::size_t>(n) ||
      b.coefficients.size() != static_cast<std::size_t>(n)) {
    throw InvalidArgumentError("divisor class of wrong length");
  }
  if (a.lattice.variant() == LatticeVariant::quadric) {
    return a.coefficients[0] * b.coefficients[1] +
           a.coefficients[1] * b.coefficients[0];
  }
  std::int64_t total = a.coefficients[0] * b.coefficients[0];
  for (int i = 1; i < n; ++i) {
    total -= a.coefficients[i] * b.coefficients[i];
  }
  return total;
}

Rational arithmetic_genus(const DivisorClass& c) {
  const std::int64_t self = intersect(c, c);
  const std::int64_t with_k = intersect(c, c.lattice.canonical_class());
  return Rational(1) + make_rational(self + with_k, 2);
}

FanoIndexData fano_index_of(int degree, LatticeVariant variant) {
  const DelPezzoLattice lattice(degree, variant);
  return {lattice.fano_index(), lattice.fundamental_class()};
}

}  // namespace dprig
