#include "dprig/lct.hpp"

#include "dprig/errors.hpp"
#include "dprig/lp.hpp"

namespace dprig {

std::string to_string(SingularityKind kind) {
  switch (kind) {
    case SingularityKind::smooth:
      return "smooth";
    case SingularityKind::node:
      return "node";
    case SingularityKind::cusp:
      return "cusp";
    case SingularityKind::tacnode:
      return "tacnode";
    case SingularityKind::ordinary_triple_point:
      return "ordinary_triple_point";
  }
  throw InvalidArgumentError("unknown singularity kind");
}

Rational lct_local(SingularityKind kind) {
  switch (kind) {
    case SingularityKind::smooth:
    case SingularityKind::node:
      return 1;
    case SingularityKind::cusp:
      return make_rational(5, 6);
    case SingularityKind::tacnode:
      return make_rational(3, 4);
    case SingularityKind::ordinary_triple_point:
      return make_rational(2, 3);
  }
  throw InvalidArgumentError("unknown singularity kind");
}

SingularityKind singularity_kind_for(SingularityLabel label) {
  switch (label) {
    case SingularityLabel::normal_crossing:
      return SingularityKind::node;
    case SingularityLabel::concurrent_three:
      return SingularityKind::ordinary_triple_point;
    case SingularityLabel::tangential_pair:
      return SingularityKind::tacnode;
    case SingularityLabel::cusp:
      return SingularityKind::cusp;
    case SingularityLabel::other:
      break;
  }
  throw InvalidArgumentError("no local model for this label");
}

Rational lct_weighted_homogeneous(const WeightSystem& system) {
  if (system.weights.empty()) {
    throw InvalidArgumentError("weight system needs at least one weight");
  }
  Rational total = 0;
  for (const Rational& w : system.weights) {
    if (w <= 0 || w > 1) {
      throw InvalidArgumentError("weights must lie in (0, 1]");
    }
    total += w;
  }
  return clamp_to_one(total);
}

Rational lct_newton(const NewtonPolyhedron& polyhedron) {
  const std::size_t n = polyhedron.dimension;
  if (n == 0) {
    throw InvalidArgumentError("Newton polyhedron needs a positive dimension");
  }
  if (polyhedron.support.empty()) {
    throw InvalidArgumentError("the zero polynomial has no threshold");
  }
  for (const auto& vertex : polyhedron.support) {
    if (vertex.size() != n) {
      throw InvalidArgumentError("support vector of the wrong length");
    }
    for (const std::int64_t entry : vertex) {
      if (entry < 0) {
        throw InvalidArgumentError("support exponents must be nonnegative");
      }
    }
  }

  // Membership program for the diagonal point: s*(1,...,1) must be a
  // convex combination of support vertices plus a nonnegative shift.
  // Variables: s, one lambda per vertex, one mu per coordinate.
  const std::size_t k = polyhedron.support.size();
  std::vector<Rational> objective(1 + k + n, Rational(0));
  objective[0] = 1;
  LinearProgram lp = LinearProgram::minimize(1 + k + n, std::move(objective));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> row(1 + k + n, Rational(0));
    row[0] = 1;
    for (std::size_t v = 0; v < k; ++v) {
      row[1 + v] = -Rational(polyhedron.support[v][i]);
    }
    row[1 + k + i] = -1;
    lp.add_constraint(row, Relation::equal, 0);
  }
  std::vector<Rational> convex(1 + k + n, Rational(0));
  for (std::size_t v = 0; v < k; ++v) {
    convex[1 + v] = 1;
  }
  lp.add_constraint(convex, Relation::equal, 1);

  const LpResult result = lp_minimize(lp);
  if (result.status != LpStatus::optimal) {
    throw ArithmeticError("diagonal membership program must have an optimum");
  }
  if (result.value == 0) {
    return 1;  // origin in the support: unit at the chosen point
  }
  return clamp_to_one(1 / result.value);
}

Rational kuwata_combine(const Rational& c_g, const Rational& c_h) {
  if (c_g <= 0 || c_g > 1 || c_h <= 0 || c_h > 1) {
    throw InvalidArgumentError("thresholds must lie in (0, 1]");
  }
  return clamp_to_one(c_g + c_h);
}

Rational global_lct_bound(int degree, LatticeVariant variant) {
  const DelPezzoLattice lattice(degree, variant);  // validates the pair
  if (variant == LatticeVariant::quadric) {
    return make_rational(1, 2);
  }
  switch (degree) {
    case 1:
      return make_rational(5, 6);
    case 2:
      return make_rational(3, 4);
    case 3:
    case 4:
      return make_rational(2, 3);
    case 5:
    case 6:
      return make_rational(1, 2);
    default:
      return make_rational(1, 3);  // degrees 7, 9 and the blown-up 8
  }
}

namespace {

void check_threshold(const Rational& tau) {
  if (tau <= 0 || tau > 1) {
    throw InvalidArgumentError("total thresholds must lie in (0, 1]");
  }
}

}  // namespace

bool total_lct_condition(const Rational& tau_x, const Rational& tau_y) {
  check_threshold(tau_x);
  check_threshold(tau_y);
  return tau_x + tau_y > 1;
}

bool RigidityLedger::verify() const {
  if (b != 1 || m != 1) {
    return false;
  }
  if (tau_x <= 0 || tau_x > 1 || tau_y <= 0 || tau_y > 1) {
    return false;
  }
  if (l <= 0 || a < 0 || n < 0) {
    return false;
  }
  if (a + n != l || l != e) {
    return false;
  }
  // Discrepancy inequalities of the two special fibers against the
  // opposite log pair, spelled a(.) >= -1.
  return a - 1 - tau_x * e >= -1 && n - 1 - tau_y * l >= -1;
}

RigidityCertificate rigidity_certificate(const Rational& tau_x,
                                         const Rational& tau_y) {
  check_threshold(tau_x);
  check_threshold(tau_y);

  // The ledger constraints are homogeneous in (a, n, l, e), so scale
  // l = e = 1 and decide feasibility of { a + n = 1, a >= tau_x,
  // n >= tau_y, a, n >= 0 } with an exact LP, minimizing a.
  LinearProgram lp = LinearProgram::minimize(2, {Rational(1), Rational(0)});
  lp.add_constraint({Rational(1), Rational(1)}, Relation::equal, 1);
  lp.add_constraint({Rational(1), Rational(0)}, Relation::greater_equal,
                    tau_x);
  lp.add_constraint({Rational(0), Rational(1)}, Relation::greater_equal,
                    tau_y);
  const LpResult result = lp_minimize(lp);

  RigidityCertificate certificate;
  if (result.status == LpStatus::infeasible) {
    certificate.rigid = true;
    return certificate;
  }
  if (result.status != LpStatus::optimal) {
    throw ArithmeticError("bounded ledger program cannot be unbounded");
  }
  RigidityLedger ledger;
  ledger.a = result.witness[0];
  ledger.n = result.witness[1];
  ledger.l = 1;
  ledger.e = 1;
  ledger.tau_x = tau_x;
  ledger.tau_y = tau_y;
  if (!ledger.verify()) {
    throw ArithmeticError("ledger witness failed its own audit");
  }
  certificate.rigid = false;
  certificate.witness = ledger;
  return certificate;
}

}  // namespace dprig
