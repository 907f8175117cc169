#include "dprig/curves.hpp"

#include <algorithm>
#include <cstdlib>

#include "dprig/errors.hpp"

namespace dprig {

bool BoundCertificate::verified() const {
  for (const auto& step : steps) {
    if (!step.holds) {
      return false;
    }
  }
  return !steps.empty();
}

namespace {

void check_h_degree(int h_degree) {
  if (h_degree < 1 || h_degree > 3) {
    throw InvalidArgumentError("curve enumeration supports H-degrees 1..3");
  }
}

std::string rat_str(const Rational& r) { return to_string(r); }

// Adds the three exact checks showing the upward parabola q(z) is positive
// for |z| > bound: positivity at both fenceposts plus the vertex lying
// between them.
void certify_quadratic(BoundCertificate& cert, const Rational& a2,
                       const Rational& a1, const Rational& a0,
                       std::int64_t bound, const std::string& var) {
  auto value_at = [&](const Rational& z) { return a2 * z * z + a1 * z + a0; };
  const Rational fence = Rational(bound + 1);
  const Rational vertex = -a1 / (2 * a2);
  cert.steps.push_back({"leading coefficient " + rat_str(a2) + " > 0", true,
                        a2 > 0});
  cert.steps.push_back({"q(" + rat_str(fence) + ") = " +
                            rat_str(value_at(fence)) + " > 0",
                        true, value_at(fence) > 0});
  cert.steps.push_back({"q(" + rat_str(-fence) + ") = " +
                            rat_str(value_at(-fence)) + " > 0",
                        true, value_at(-fence) > 0});
  cert.steps.push_back({"vertex " + rat_str(vertex) + " lies in [-" +
                            rat_str(fence) + ", " + rat_str(fence) + "]",
                        true, vertex >= -fence && vertex <= fence});
  cert.steps.push_back(
      {"hence every integer " + var + " with q(" + var + ") <= 0 satisfies |" +
           var + "| <= " + std::to_string(bound),
       false, true});
}

CoefficientBound bound_for_blowup(const DelPezzoLattice& lattice,
                                  int h_degree) {
  const int d = lattice.degree();
  const int n = 9 - d;  // exceptional coordinates
  CoefficientBound out;
  auto& cert = out.certificate;

  if (n == 0) {
    // Rank one: C = a*E0 and C.H = a, so a = h exactly.
    out.bound = h_degree;
    cert.steps.push_back(
        {"rank-1 lattice: C.H = a forces |a| = " + std::to_string(h_degree),
         false, true});
    cert.steps.push_back({"bound " + std::to_string(out.bound) +
                              " >= " + std::to_string(h_degree),
                          true, out.bound >= h_degree});
    return out;
  }

  // For C = (a, b_1..b_n): sum b = h - 3a and sum b^2 = a^2 - h + 2.
  // Cauchy-Schwarz gives (h - 3a)^2 <= n * (a^2 - h + 2), i.e.
  // Q(a) = d*a^2 - 6h*a + (h^2 + n*h - 2n) <= 0.
  const Rational A2 = d;
  const Rational A1 = -6 * h_degree;
  const Rational A0 = h_degree * h_degree + n * h_degree - 2 * n;
  cert.steps.push_back(
      {"Cauchy-Schwarz: (sum b)^2 <= n * sum b^2 for n = " + std::to_string(n),
       false, true});
  cert.steps.push_back(
      {"so Q(a) = " + rat_str(A2) + "*a^2 + " + rat_str(A1) + "*a + " +
           rat_str(A0) + " <= 0 at any solution",
       false, true});

  // Largest |a| with Q(a) <= 0, found by scanning out from zero; the
  // certificate then proves nothing lies beyond it.
  auto q_at = [&](std::int64_t a) {
    const Rational z(a);
    return A2 * z * z + A1 * z + A0;
  };
  std::int64_t a_bound = 0;
  const std::int64_t scan_limit = 6 * h_degree / d + h_degree + n + 3;
  for (std::int64_t a = -scan_limit; a <= scan_limit; ++a) {
    if (q_at(a) <= 0 && std::abs(a) > a_bound) {
      a_bound = std::abs(a);
    }
  }
  certify_quadratic(cert, A2, A1, A0, a_bound, "a");

  // Each |b_i| is bounded by sqrt of the square budget at the extreme a.
  const Integer q_max = Integer(a_bound) * a_bound - h_degree + 2;
  std::int64_t b_bound = 0;
  if (q_max > 0) {
    b_bound = static_cast<std::int64_t>(integer_sqrt_floor(q_max));
  }
  cert.steps.push_back(
      {"square budget sum b^2 = a^2 - " + std::to_string(h_degree - 2) +
           " <= " + q_max.str() + " over the certified a-range",
       false, true});
  cert.steps.push_back(
      {"(" + std::to_string(b_bound + 1) + ")^2 > " + q_max.str() +
           ", so |b_i| <= " + std::to_string(b_bound),
       true, Integer(b_bound + 1) * (b_bound + 1) > q_max});

  out.bound = std::max(a_bound, b_bound);
  return out;
}

CoefficientBound bound_for_quadric(int h_degree) {
  // u + v = h and u*v = h - 1, so each coordinate is a root of
  // R(z) = z^2 - h*z + (h - 1).
  CoefficientBound out;
  auto& cert = out.certificate;
  const Rational A2 = 1;
  const Rational A1 = -h_degree;
  const Rational A0 = h_degree - 1;
  cert.steps.push_back(
      {"coordinates solve z^2 - " + std::to_string(h_degree) + "*z + " +
           std::to_string(h_degree - 1) + " = 0",
       false, true});
  std::int64_t bound = std::max<std::int64_t>(1, h_degree - 1);
  certify_quadratic(cert, A2, A1, A0, bound, "z");
  out.bound = bound;
  return out;
}

// Re-verifies the defining conditions independently of whichever search
// produced the coefficients, then appends the class.
void append_checked(const DelPezzoLattice& lattice, int h_degree,
                    std::vector<std::int64_t> coefficients,
                    std::vector<CurveClass>& out) {
  const DivisorClass h = lattice.fundamental_class();
  const std::int64_t want_self =
      static_cast<std::int64_t>(h_degree) * lattice.fano_index() - 2;
  DivisorClass cls = lattice.make_class(std::move(coefficients));
  if (intersect(cls, h) != h_degree) {
    throw ArithmeticError("enumerated class fails the degree condition");
  }
  if (intersect(cls, cls) != want_self || arithmetic_genus(cls) != 0) {
    throw ArithmeticError("enumerated class fails adjunction recheck");
  }
  out.push_back({std::move(cls), h_degree, want_self, 0});
}

// Expands one solution multiset into all coordinate arrangements and
// appends the resulting classes.
void emit_arrangements(const DelPezzoLattice& lattice, int h_degree,
                       std::int64_t a, std::vector<std::int64_t> multiset,
                       std::vector<CurveClass>& out) {
  std::sort(multiset.begin(), multiset.end());
  do {
    std::vector<std::int64_t> coeffs;
    coeffs.reserve(multiset.size() + 1);
    coeffs.push_back(a);
    coeffs.insert(coeffs.end(), multiset.begin(), multiset.end());
    append_checked(lattice, h_degree, std::move(coeffs), out);
  } while (std::next_permutation(multiset.begin(), multiset.end()));
}

// Depth-first search over non-increasing b-multisets with the linear sum
// and square sum pinned exactly.
void multiset_search(std::int64_t remaining_slots, std::int64_t sum,
                     std::int64_t squares, std::int64_t upper,
                     std::int64_t box, std::vector<std::int64_t>& prefix,
                     const DelPezzoLattice& lattice, int h_degree,
                     std::int64_t a, std::vector<CurveClass>& out) {
  if (remaining_slots == 0) {
    if (sum == 0 && squares == 0) {
      emit_arrangements(lattice, h_degree, a, prefix, out);
    }
    return;
  }
  if (squares < 0) {
    return;
  }
  // Cauchy-Schwarz on the tail.
  if (sum * sum > remaining_slots * squares) {
    return;
  }
  std::int64_t hi = std::min(upper, box);
  while (hi >= 0 && hi * hi > squares) {
    --hi;
  }
  if (hi < 0 && hi * hi > squares) {
    return;  // every remaining candidate already overshoots the budget
  }
  for (std::int64_t c = hi; c >= -box && c * c <= squares; --c) {
    prefix.push_back(c);
    multiset_search(remaining_slots - 1, sum - c, squares - c * c, c, box,
                    prefix, lattice, h_degree, a, out);
    prefix.pop_back();
  }
}

}  // namespace

CoefficientBound coefficient_bound(const DelPezzoLattice& lattice,
                                   int h_degree) {
  check_h_degree(h_degree);
  if (lattice.variant() == LatticeVariant::quadric) {
    return bound_for_quadric(h_degree);
  }
  return bound_for_blowup(lattice, h_degree);
}

std::vector<CurveClass> enumerate_curves_within(const DelPezzoLattice& lattice,
                                                int h_degree,
                                                std::int64_t box) {
  check_h_degree(h_degree);
  if (box < 0) {
    throw InvalidArgumentError("negative search box");
  }
  std::vector<CurveClass> out;
  if (lattice.variant() == LatticeVariant::quadric) {
    // u + v = h, 2uv = 2h - 2.
    for (std::int64_t u = -box; u <= box; ++u) {
      const std::int64_t v = h_degree - u;
      if (std::abs(v) > box || 2 * u * v != 2 * h_degree - 2) {
        continue;
      }
      append_checked(lattice, h_degree, {u, v}, out);
    }
  } else if (lattice.degree() == 9) {
    const std::int64_t a = h_degree;  // C.H = a
    if (a <= box && a * a == 3 * h_degree - 2) {
      append_checked(lattice, h_degree, {a}, out);
    }
  } else {
    const std::int64_t n = 9 - lattice.degree();
    for (std::int64_t a = -box; a <= box; ++a) {
      const std::int64_t sum = h_degree - 3 * a;
      const std::int64_t squares = a * a - h_degree + 2;
      std::vector<std::int64_t> prefix;
      multiset_search(n, sum, squares, box, box, prefix, lattice, h_degree, a,
                      out);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const CurveClass& x, const CurveClass& y) {
              return x.divisor.coefficients < y.divisor.coefficients;
            });
  return out;
}

std::vector<CurveClass> enumerate_curves(const DelPezzoLattice& lattice,
                                         int h_degree) {
  const CoefficientBound bound = coefficient_bound(lattice, h_degree);
  if (!bound.certificate.verified()) {
    throw ArithmeticError("coefficient bound certificate failed");
  }
  return enumerate_curves_within(lattice, h_degree, bound.bound);
}

}  // namespace dprig
