#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dprig/linalg.hpp"
#include "dprig/rational.hpp"

namespace dprig {

// Picard lattices of del Pezzo surfaces in a fixed blow-up basis
// E0, E1, ..., E_{9-d} with intersection form diag(1, -1, ..., -1), plus
// the rank-2 quadric-surface lattice with form [[0,1],[1,0]]. A lattice is
// a cheap immutable value; divisor classes carry theirs with them so
// mixed-lattice arithmetic can be rejected.

enum class LatticeVariant { blowup, quadric };

std::string to_string(LatticeVariant variant);

struct DivisorClass;

class DelPezzoLattice {
 public:
  /// degree in [1,9]; the quadric variant exists only in degree 8.
  /// Throws InvalidArgumentError otherwise.
  explicit DelPezzoLattice(int degree,
                           LatticeVariant variant = LatticeVariant::blowup);

  int degree() const { return degree_; }
  LatticeVariant variant() const { return variant_; }
  int rank() const;

  /// Entry of the intersection form in the fixed basis.
  std::int64_t gram(int i, int j) const;
  RationalMatrix gram_matrix() const;

  /// Canonical class K (so K.K == degree).
  DivisorClass canonical_class() const;
  /// Fundamental class H: primitive and ample with -K == fano_index * H.
  DivisorClass fundamental_class() const;
  /// Fano index: 3 for degree 9, 2 for the degree-8 quadric, 1 otherwise.
  int fano_index() const;

  /// Wraps a coefficient vector; throws on wrong length.
  DivisorClass make_class(std::vector<std::int64_t> coefficients) const;

  friend bool operator==(const DelPezzoLattice& a,
                         const DelPezzoLattice& b) = default;

 private:
  int degree_;
  LatticeVariant variant_;
};

struct DivisorClass {
  DelPezzoLattice lattice;
  std::vector<std::int64_t> coefficients;

  friend bool operator==(const DivisorClass& a, const DivisorClass& b) = default;
};

/// Intersection number of two classes on a shared lattice.
/// Throws InvalidArgumentError on lattice mismatch.
std::int64_t intersect(const DivisorClass& a, const DivisorClass& b);

/// Arithmetic genus 1 + (C.C + C.K)/2, exact.
Rational arithmetic_genus(const DivisorClass& c);

struct FanoIndexData {
  int index = 1;
  DivisorClass fundamental;
};

/// Index r and fundamental class H with -K == r*H, H primitive.
FanoIndexData fano_index_of(int degree, LatticeVariant variant);

}  // namespace dprig
