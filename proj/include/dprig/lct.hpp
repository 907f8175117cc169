#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dprig/anticanonical.hpp"
#include "dprig/picard.hpp"
#include "dprig/rational.hpp"

namespace dprig {

// Log-canonical thresholds: the local catalog for curve singularities on
// surfaces, Newton-polyhedron thresholds for chart-local equations, the
// additive combination rule for sums of polynomials in disjoint variables,
// per-degree global bounds, and the arithmetic rigidity certificate.

enum class SingularityKind {
  smooth,
  node,
  cusp,
  tacnode,
  ordinary_triple_point,
};

std::string to_string(SingularityKind kind);

/// Catalog value: smooth 1, node 1, cusp 5/6, tacnode 3/4, ordinary
/// triple point 2/3.
Rational lct_local(SingularityKind kind);

/// The local model behind a degenerate-realization label: a tangency is a
/// tacnode, three concurrent components an ordinary triple point, a normal
/// crossing a node. Throws InvalidArgumentError for `other`.
SingularityKind singularity_kind_for(SingularityLabel label);

struct WeightSystem {
  std::vector<Rational> weights;  // each in (0, 1]
};

/// min(1, sum of weights) for a quasi-homogeneous singularity whose
/// defining polynomial has weighted degree 1.
Rational lct_weighted_homogeneous(const WeightSystem& system);

struct NewtonPolyhedron {
  std::size_t dimension = 0;
  std::vector<std::vector<std::int64_t>> support;
};

/// min(1, 1/s*), where s* is the least s with s*(1,...,1) inside the
/// Newton polyhedron (convex hull of the support plus the positive
/// orthant). s* is found by exact linear programming; the input is assumed
/// Newton-nondegenerate. A support containing the origin yields 1. Throws
/// InvalidArgumentError on an empty support (zero polynomial).
Rational lct_newton(const NewtonPolyhedron& polyhedron);

/// min(1, c_g + c_h): the threshold of g(x) + h(y) in disjoint variable
/// sets, given the thresholds of the parts. Arguments must lie in (0, 1].
Rational kuwata_combine(const Rational& c_g, const Rational& c_h);

/// Largest uniform multiple: every member of |-K| stays lc against this
/// coefficient. 5/6, 3/4, 2/3, 2/3 for degrees 1-4; 1/2 for degrees 5, 6
/// and the quadric; 1/3 for degrees 7, 9 and the degree-8 blowup.
Rational global_lct_bound(int degree,
                          LatticeVariant variant = LatticeVariant::blowup);

/// Exact strict inequality tau_x + tau_y > 1. Arguments must lie in (0, 1].
bool total_lct_condition(const Rational& tau_x, const Rational& tau_y);

// Bookkeeping for the codimension-1 comparison of two fibrations linked by
// a birational map: discrepancies a, n of the two special fibers over the
// opposite model, and the multiplicities l, e of those fibers in the
// relevant pullbacks. Reduced irreducible fibers force b = m = 1, and the
// pullback identities force a + n = l = e.
struct RigidityLedger {
  Rational a;
  Rational n;
  Rational l;
  Rational e;
  int b = 1;
  int m = 1;
  Rational tau_x;
  Rational tau_y;

  /// Re-checks every ledger identity and inequality exactly.
  bool verify() const;
};

struct RigidityCertificate {
  bool rigid = false;
  std::optional<RigidityLedger> witness;
};

/// Decides by exact LP whether a ledger with a + n = l = e > 0,
/// a >= tau_x * e and n >= tau_y * l exists. No ledger (an infeasible
/// system) certifies that the map is an isomorphism in codimension 1;
/// otherwise the optimal ledger is returned as the witness.
RigidityCertificate rigidity_certificate(const Rational& tau_x,
                                         const Rational& tau_y);

}  // namespace dprig
