#include "dprig/fibrations.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "dprig/errors.hpp"
#include "dprig/linalg.hpp"

#ifndef DPRIG_DEFAULT_FIXTURE_DIR
#define DPRIG_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace dprig {

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  // b > 0 always here
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

std::string trimmed(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return std::string();
  const auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

}  // namespace

std::vector<std::string> WeightedAmbient::all_names() const {
  std::vector<std::string> names = variables;
  names.push_back(base);
  return names;
}

WeightedAmbient standard_p3() {
  return WeightedAmbient{{"x", "y", "z", "w"}, {1, 1, 1, 1}, "t"};
}

Polynomial parse_in_ambient(
    const std::string& text, const WeightedAmbient& ambient,
    const std::map<std::string, std::int64_t>& parameters) {
  return parse_polynomial(text, ambient.all_names(), parameters);
}

HypersurfaceModel::HypersurfaceModel(WeightedAmbient ambient,
                                     Polynomial equation)
    : ambient_(std::move(ambient)), equation_(std::move(equation)) {
  if (ambient_.variables.empty()) {
    throw InvalidArgumentError("ambient needs at least one coordinate");
  }
  if (ambient_.weights.size() != ambient_.variables.size()) {
    throw InvalidArgumentError("one weight per ambient coordinate expected");
  }
  for (std::int64_t w : ambient_.weights) {
    if (w <= 0) throw InvalidArgumentError("ambient weights must be positive");
  }
  if (equation_.variables() != ambient_.all_names()) {
    throw InvalidArgumentError("equation uses a different variable list");
  }
  if (equation_.is_zero()) {
    throw InvalidArgumentError("model equation is identically zero");
  }
  if (!equation_.is_weighted_homogeneous(ambient_.weights,
                                         &weighted_degree_)) {
    throw InvalidArgumentError(
        "model equation is not weighted-homogeneous: " +
        equation_.to_string());
  }
}

MonomialMap::MonomialMap(std::vector<MapImage> images)
    : images_(std::move(images)) {
  if (images_.empty()) throw InvalidArgumentError("empty monomial map");
  std::vector<bool> used(images_.size(), false);
  for (const MapImage& image : images_) {
    if (image.variable >= images_.size()) {
      throw InvalidArgumentError("map image variable out of range");
    }
    if (used[image.variable]) {
      throw InvalidArgumentError("map images do not form a permutation");
    }
    used[image.variable] = true;
    if (image.t_exponent < 0) {
      throw InvalidArgumentError("map image has a negative base power");
    }
  }
}

MonomialMap MonomialMap::inverse(
    const std::vector<std::int64_t>& weights) const {
  if (weights.size() != images_.size()) {
    throw InvalidArgumentError("one weight per map coordinate expected");
  }
  for (std::int64_t w : weights) {
    if (w <= 0) throw InvalidArgumentError("weights must be positive");
  }
  // Raw inverse: coordinate images_[j].variable reads back t^{-a_j} * x_j,
  // then the projective rescale by t^lambda clears the negative powers.
  std::vector<MapImage> inverse_images(images_.size());
  std::vector<std::int64_t> raw(images_.size(), 0);
  for (std::size_t j = 0; j < images_.size(); ++j) {
    inverse_images[images_[j].variable] = MapImage{j, 0};
    raw[images_[j].variable] = -images_[j].t_exponent;
  }
  std::int64_t lambda = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    lambda = std::max(lambda, ceil_div(-raw[i], weights[i]));
  }
  for (std::size_t i = 0; i < raw.size(); ++i) {
    inverse_images[i].t_exponent = raw[i] + lambda * weights[i];
  }
  return MonomialMap(std::move(inverse_images));
}

std::string MonomialMap::to_string(const WeightedAmbient& ambient) const {
  if (ambient.variables.size() != images_.size()) {
    throw InvalidArgumentError("map and ambient sizes differ");
  }
  std::string out;
  for (std::size_t j = 0; j < images_.size(); ++j) {
    if (j > 0) out += ", ";
    if (images_[j].t_exponent > 0) {
      out += ambient.base;
      if (images_[j].t_exponent != 1) {
        out += "^" + std::to_string(images_[j].t_exponent);
      }
      out += "*";
    }
    out += ambient.variables[images_[j].variable];
  }
  return out;
}

MonomialMap parse_monomial_map(
    const std::string& text, const WeightedAmbient& ambient,
    const std::map<std::string, std::int64_t>& parameters) {
  std::vector<MapImage> images;
  std::size_t start = 0;
  const std::size_t base_slot = ambient.variables.size();
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    const std::string piece = trimmed(text.substr(start, comma - start));
    if (piece.empty()) {
      throw InvalidArgumentError("empty coordinate image in map");
    }
    const Polynomial entry = parse_in_ambient(piece, ambient, parameters);
    if (entry.terms().size() != 1) {
      throw InvalidArgumentError("map image is not a monomial: " + piece);
    }
    const auto& [exponents, coefficient] = *entry.terms().begin();
    if (coefficient != 1) {
      throw InvalidArgumentError("map image is not monic: " + piece);
    }
    MapImage image;
    image.t_exponent = exponents[base_slot];
    bool found = false;
    for (std::size_t i = 0; i < base_slot; ++i) {
      if (exponents[i] == 0) continue;
      if (exponents[i] != 1 || found) {
        throw InvalidArgumentError(
            "map image must be linear in one coordinate: " + piece);
      }
      image.variable = i;
      found = true;
    }
    if (!found) {
      throw InvalidArgumentError("map image has no coordinate: " + piece);
    }
    images.push_back(image);
    start = comma + 1;
    if (comma == text.size()) break;
  }
  if (images.size() != ambient.variables.size()) {
    throw InvalidArgumentError("map must assign every ambient coordinate");
  }
  return MonomialMap(std::move(images));
}

DivisorOnModel::DivisorOnModel(const HypersurfaceModel& model,
                               Polynomial equation)
    : equation_(std::move(equation)) {
  if (equation_.variables() != model.ambient().all_names()) {
    throw InvalidArgumentError("divisor uses a different variable list");
  }
  if (equation_.is_zero()) {
    throw InvalidArgumentError("divisor equation is identically zero");
  }
  if (!equation_.is_weighted_homogeneous(model.ambient().weights)) {
    throw InvalidArgumentError("divisor equation is not weighted-homogeneous");
  }
  if (equation_.present_slots().empty()) {
    throw InvalidArgumentError("divisor equation involves no coordinate");
  }
}

namespace {

// Terms of p after the substitution x_j -> t^{a_j} * x_{sigma(j)}; base
// exponents may come out negative when the images carry negative powers.
std::vector<std::pair<Polynomial::Exponents, Integer>> substituted_terms(
    const Polynomial& p, const std::vector<MapImage>& images,
    const std::vector<std::int64_t>& extra_base) {
  std::vector<std::pair<Polynomial::Exponents, Integer>> terms;
  const std::size_t base = p.base_slot();
  for (const auto& [exponents, coefficient] : p.terms()) {
    Polynomial::Exponents image(exponents.size(), 0);
    image[base] = exponents[base];
    for (std::size_t j = 0; j < images.size(); ++j) {
      image[images[j].variable] += exponents[j];
      image[base] += exponents[j] * extra_base[j];
    }
    terms.emplace_back(std::move(image), coefficient);
  }
  return terms;
}

// Exact substitution for a regular map (non-negative base powers); no
// normalization, so an overall t^k factor survives for apply_map to read.
Polynomial monomial_substitute(const Polynomial& p,
                               const std::vector<MapImage>& images,
                               const std::vector<std::int64_t>& extra_base) {
  Polynomial result(p.variables());
  for (const auto& [exponents, coefficient] :
       substituted_terms(p, images, extra_base)) {
    result.add_term(exponents, coefficient);
  }
  return result;
}

std::vector<std::int64_t> base_exponents(const MonomialMap& map) {
  std::vector<std::int64_t> exps;
  exps.reserve(map.size());
  for (const MapImage& image : map.images()) exps.push_back(image.t_exponent);
  return exps;
}

void require_same_shape(const WeightedAmbient& a, const WeightedAmbient& b) {
  if (a.variables != b.variables || a.weights != b.weights ||
      a.base != b.base) {
    throw InvalidArgumentError("models live in different ambients");
  }
}

}  // namespace

MapCheck apply_map(const HypersurfaceModel& source, const MonomialMap& map,
                   const HypersurfaceModel& target) {
  require_same_shape(source.ambient(), target.ambient());
  if (map.size() != source.ambient().variables.size()) {
    throw InvalidArgumentError("map size does not match the ambient");
  }
  const Polynomial mapped =
      monomial_substitute(target.equation(), map.images(), base_exponents(map));

  MapCheck check;
  if (mapped.is_zero()) {
    check.discrepancy = "substituted equation is identically zero";
    return check;
  }
  const std::int64_t k =
      mapped.min_base_exponent() - source.equation().min_base_exponent();
  if (k < 0) {
    check.discrepancy = "substituted equation has a lower base power than "
                        "the source equation";
    return check;
  }
  const Polynomial expected = source.equation().base_shifted(k);
  if (mapped == expected) {
    check.valid = true;
    check.t_power = k;
    return check;
  }
  check.discrepancy = (mapped - expected).to_string();
  return check;
}

DivisorOnModel transform_divisor(const DivisorOnModel& divisor,
                                 const MonomialMap& map,
                                 const HypersurfaceModel& target) {
  if (map.size() != target.ambient().variables.size()) {
    throw InvalidArgumentError("map size does not match the ambient");
  }
  // Push-forward: substitute the raw inverse (negative base powers allowed;
  // the laurent constructor strips the overall base power).
  std::vector<MapImage> inverse_images(map.size());
  std::vector<std::int64_t> inverse_base(map.size(), 0);
  for (std::size_t j = 0; j < map.size(); ++j) {
    inverse_images[map.images()[j].variable] = MapImage{j, 0};
    inverse_base[map.images()[j].variable] = -map.images()[j].t_exponent;
  }
  const Polynomial image = Polynomial::from_laurent_terms(
      divisor.equation().variables(),
      substituted_terms(divisor.equation(), inverse_images, inverse_base));
  return DivisorOnModel(target, image.normalized());
}

// ---------------------------------------------------------------------------
// Special-fiber configuration analysis

namespace {

// Univariate polynomials over the rationals, coefficients ascending.
using UniPoly = std::vector<Rational>;

std::int64_t uni_degree(const UniPoly& p) {
  for (std::size_t i = p.size(); i > 0; --i) {
    if (p[i - 1] != 0) return static_cast<std::int64_t>(i) - 1;
  }
  return -1;
}

UniPoly uni_trim(UniPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

UniPoly uni_derivative(const UniPoly& p) {
  UniPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) {
    d.push_back(p[i] * Rational(static_cast<std::int64_t>(i)));
  }
  return uni_trim(d);
}

UniPoly uni_remainder(UniPoly a, const UniPoly& b) {
  a = uni_trim(a);
  const std::int64_t db = uni_degree(b);
  while (uni_degree(a) >= db && db >= 0) {
    const std::int64_t da = uni_degree(a);
    const Rational factor = a[da] / b[db];
    for (std::int64_t i = 0; i <= db; ++i) {
      a[da - db + i] -= factor * b[i];
    }
    a[da] = 0;
    a = uni_trim(a);
  }
  return a;
}

std::int64_t uni_gcd_degree(UniPoly a, UniPoly b) {
  a = uni_trim(a);
  b = uni_trim(b);
  while (!b.empty()) {
    UniPoly r = uni_remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return uni_degree(a);
}

// Sylvester-matrix resultant; exact over the rationals.
Rational uni_resultant(const UniPoly& f, const UniPoly& g) {
  const std::int64_t df = uni_degree(f);
  const std::int64_t dg = uni_degree(g);
  if (df < 0 || dg < 0) return Rational(0);
  if (df == 0) {
    Rational r(1);
    for (std::int64_t i = 0; i < dg; ++i) r *= f[0];
    return r;
  }
  if (dg == 0) {
    Rational r(1);
    for (std::int64_t i = 0; i < df; ++i) r *= g[0];
    return r;
  }
  const std::size_t n = static_cast<std::size_t>(df + dg);
  RationalMatrix sylvester(n, RationalVector(n, Rational(0)));
  for (std::int64_t row = 0; row < dg; ++row) {
    for (std::int64_t i = 0; i <= df; ++i) {
      sylvester[row][row + i] = f[df - i];
    }
  }
  for (std::int64_t row = 0; row < df; ++row) {
    for (std::int64_t i = 0; i <= dg; ++i) {
      sylvester[dg + row][row + i] = g[dg - i];
    }
  }
  return determinant(sylvester);
}

// Discriminant of a univariate polynomial of degree k >= 1.
Rational uni_discriminant(const UniPoly& f) {
  const std::int64_t k = uni_degree(f);
  if (k <= 0) return Rational(1);
  if (k == 1) return Rational(1);
  const Rational res = uni_resultant(f, uni_derivative(f));
  const int sign = (k * (k - 1) / 2) % 2 == 0 ? 1 : -1;
  return Rational(sign) * res / f[k];
}

const char* kNumberWords[] = {"zero", "one",   "two",   "three", "four",
                              "five", "six",   "seven", "eight", "nine"};

std::string count_word(std::int64_t count) {
  if (count >= 0 && count <= 9) return kNumberWords[count];
  return std::to_string(count);
}

std::optional<SingularityKind> kind_from_threshold(const Rational& value) {
  if (value == Rational(1)) return SingularityKind::node;
  if (value == Rational(5, 6)) return SingularityKind::cusp;
  if (value == Rational(3, 4)) return SingularityKind::tacnode;
  if (value == Rational(2, 3)) return SingularityKind::ordinary_triple_point;
  return std::nullopt;
}

// Newton-polyhedron threshold of a germ at the origin, all variables of the
// polynomial's support participating (the base variable included).
Rational germ_threshold(const Polynomial& germ,
                        const std::vector<std::size_t>& slots) {
  NewtonPolyhedron polyhedron;
  polyhedron.dimension = slots.size();
  for (const auto& [exponents, coefficient] : germ.terms()) {
    (void)coefficient;
    std::vector<std::int64_t> row;
    row.reserve(slots.size());
    for (std::size_t slot : slots) row.push_back(exponents[slot]);
    polyhedron.support.push_back(std::move(row));
  }
  return lct_newton(polyhedron);
}

// Finds the coordinate the equation is unit-linear in: p = c*v + g with
// c = +-1 and g free of v.  Returns the slot and the replacement -c*g.
std::pair<std::size_t, Polynomial> solve_unit_linear(const Polynomial& p) {
  for (std::size_t v = 0; v + 1 < p.slot_count(); ++v) {
    if (p.degree_in(v) == 0) continue;
    bool unit_linear = true;
    Integer coefficient(0);
    Polynomial rest(p.variables());
    for (const auto& [exponents, coeff] : p.terms()) {
      if (exponents[v] == 0) {
        rest.add_term(exponents, coeff);
        continue;
      }
      Polynomial::Exponents bare(p.slot_count(), 0);
      bare[v] = 1;
      if (exponents != bare) {
        unit_linear = false;
        break;
      }
      coefficient = coeff;
    }
    if (!unit_linear || (coefficient != 1 && coefficient != -1)) continue;
    // p = c*v + g  =>  v = -c*g
    return {v, rest.multiplied_by(-coefficient)};
  }
  throw ModelError("equation is not unit-linear in any coordinate: " +
                   p.to_string());
}

FiberConfiguration analyze_section(const Polynomial& curve,
                                   const WeightedAmbient& ambient,
                                   std::size_t solved_slot) {
  FiberConfiguration configuration{curve,
                                   "",
                                   std::nullopt,
                                   "",
                                   curve,
                                   Rational(1),
                                   std::nullopt};
  const std::vector<std::size_t> present = curve.present_slots();
  for (std::size_t slot : present) {
    if (ambient.weights[slot] != 1) {
      throw ModelError(
          "configuration analysis needs unit weights on the section plane");
    }
  }

  if (present.size() <= 2) {
    // Binary form: a cone of lines through the coordinate point of the
    // missing plane variable.  Count distinct linear factors over the
    // algebraic closure via a squarefree-part degree, and report the
    // discriminant.
    const std::size_t u = present.empty() ? 0 : present[0];
    const std::size_t v = present.size() == 2 ? present[1] : u;
    const std::int64_t k = curve.degree_in(u) + (present.size() == 2
                                                     ? curve.degree_in(v)
                                                     : 0);
    std::int64_t degree = 0;
    std::int64_t min_u = k;
    std::int64_t min_v = k;
    for (const auto& [exponents, coefficient] : curve.terms()) {
      (void)coefficient;
      degree = std::max(degree, exponents[u] + (present.size() == 2
                                                    ? exponents[v]
                                                    : 0));
    }
    UniPoly form(static_cast<std::size_t>(degree) + 1, Rational(0));
    for (const auto& [exponents, coefficient] : curve.terms()) {
      form[exponents[u]] = Rational(coefficient);
      min_u = std::min(min_u, exponents[u]);
      min_v = std::min(min_v, degree - exponents[u]);
    }

    // distinct factors: the u and v powers, plus the distinct roots of the
    // middle part
    UniPoly middle(form.begin() + min_u,
                   form.end() - (min_v > 0 ? min_v : 0));
    middle = uni_trim(middle);
    const std::int64_t middle_degree = uni_degree(middle);
    std::int64_t distinct = (min_u > 0 ? 1 : 0) + (min_v > 0 ? 1 : 0);
    if (middle_degree >= 1) {
      distinct += middle_degree -
                  uni_gcd_degree(middle, uni_derivative(middle));
    }

    // discriminant of the full binary form; shear u -> u, v -> v + c*u by a
    // determinant-one move until the top coefficient is nonzero
    Rational disc(0);
    if (degree >= 1) {
      UniPoly sheared = form;
      if (present.size() == 2) {
        for (std::int64_t c = 0; uni_degree(sheared) < degree; ++c) {
          Polynomial shift(curve.variables());
          Polynomial::Exponents ev(curve.slot_count(), 0);
          ev[v] = 1;
          shift.add_term(ev, Integer(1));
          Polynomial::Exponents eu(curve.slot_count(), 0);
          eu[u] = 1;
          shift.add_term(eu, Integer(c));
          const Polynomial moved = curve.substituted(v, shift);
          sheared.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
          for (const auto& [exponents, coefficient] : moved.terms()) {
            sheared[exponents[u]] += Rational(coefficient);
          }
        }
      }
      disc = uni_discriminant(sheared);
    }

    BinaryFormReport report;
    report.first_variable = curve.variables()[u];
    report.second_variable =
        present.size() == 2 ? curve.variables()[v] : std::string();
    report.degree = degree;
    report.discriminant = disc;
    report.distinct_factors = static_cast<int>(distinct);
    configuration.binary = report;

    // chart: the plane coordinate missing from the form
    for (std::size_t slot = 0; slot + 1 < curve.slot_count(); ++slot) {
      if (slot == solved_slot) continue;
      if (std::find(present.begin(), present.end(), slot) == present.end()) {
        configuration.chart_variable = curve.variables()[slot];
        break;
      }
    }
    configuration.local_equation = curve;
    configuration.local_threshold =
        present.empty() ? Rational(1) : germ_threshold(curve, present);
    configuration.kind = kind_from_threshold(configuration.local_threshold);

    if (distinct == degree && degree >= 2) {
      configuration.label = count_word(distinct) + " concurrent lines";
    } else if (degree == 1) {
      configuration.label = "a single line";
    } else if (distinct == 1) {
      configuration.label =
          "one line with multiplicity " + std::to_string(degree);
    } else {
      configuration.label = "concurrent lines with a repeated component";
    }
    return configuration;
  }

  // General plane section: find the singular coordinate point, read the
  // singularity off the local lc threshold.
  std::vector<std::size_t> singular;
  for (std::size_t v : present) {
    bool on_curve = true;
    for (const auto& [exponents, coefficient] : curve.terms()) {
      (void)coefficient;
      bool pure = exponents[v] > 0;
      for (std::size_t i = 0; pure && i < curve.slot_count(); ++i) {
        if (i != v && exponents[i] != 0) pure = false;
      }
      if (pure) {
        on_curve = false;
        break;
      }
    }
    if (!on_curve) continue;
    std::vector<Rational> point(curve.slot_count(), Rational(0));
    point[v] = Rational(1);
    bool is_singular = true;
    for (std::size_t i = 0; i + 1 < curve.slot_count(); ++i) {
      if (curve.partial_derivative(i).evaluated(point) != 0) {
        is_singular = false;
        break;
      }
    }
    if (is_singular) singular.push_back(v);
  }
  if (singular.size() != 1) {
    throw ModelError("expected exactly one singular coordinate point on the "
                     "fiber section, found " +
                     std::to_string(singular.size()));
  }

  const std::size_t chart = singular.front();
  const Polynomial local = curve.evaluated_at(chart, Integer(1));
  configuration.chart_variable = curve.variables()[chart];
  configuration.local_equation = local;
  configuration.local_threshold = germ_threshold(local, local.present_slots());
  configuration.kind = kind_from_threshold(configuration.local_threshold);

  std::int64_t section_degree = 0;
  for (const auto& [exponents, coefficient] : curve.terms()) {
    (void)coefficient;
    std::int64_t total = 0;
    for (std::size_t i = 0; i + 1 < curve.slot_count(); ++i) {
      total += exponents[i];
    }
    section_degree = std::max(section_degree, total);
  }

  if (configuration.kind == SingularityKind::cusp) {
    configuration.label = "cuspidal rational curve";
  } else if (configuration.kind == SingularityKind::tacnode) {
    configuration.label =
        section_degree == 3
            ? "a line and a conic intersecting tangentially"
            : "two components intersecting tangentially";
  } else if (configuration.kind == SingularityKind::ordinary_triple_point) {
    configuration.label = "three concurrent lines";
  } else if (configuration.kind == SingularityKind::node) {
    configuration.label = "nodal configuration";
  } else {
    configuration.label =
        "singular configuration with local threshold " +
        to_string(configuration.local_threshold);
  }
  return configuration;
}

}  // namespace

FiberRestriction restrict_special_fiber(
    const HypersurfaceModel& model,
    const std::optional<DivisorOnModel>& divisor) {
  const Polynomial fiber = model.equation().base_set_to_zero();
  if (fiber.is_zero()) {
    throw ModelError("special fiber is identically zero: degenerate model");
  }
  FiberRestriction restriction{fiber, std::nullopt};
  if (!divisor.has_value()) return restriction;

  const Polynomial cut = divisor->equation().base_set_to_zero();
  if (cut.is_zero()) {
    throw ModelError("divisor is supported on the special fiber");
  }
  const auto [slot, replacement] = solve_unit_linear(cut);
  const Polynomial curve = fiber.substituted(slot, replacement);
  if (curve.is_zero()) {
    throw ModelError("divisor contains the special fiber");
  }
  restriction.configuration = analyze_section(curve, model.ambient(), slot);
  return restriction;
}

Polynomial local_model(const HypersurfaceModel& model,
                       const DivisorOnModel& divisor,
                       const std::string& chart_variable) {
  const std::size_t chart = model.equation().slot_of(chart_variable);
  if (chart == model.equation().base_slot()) {
    throw InvalidArgumentError("cannot take a chart at the base variable");
  }
  const Polynomial chart_equation =
      model.equation().evaluated_at(chart, Integer(1));
  const Polynomial chart_divisor =
      divisor.equation().evaluated_at(chart, Integer(1));

  // the chart origin must lie on the divisor
  const Polynomial::Exponents origin(chart_divisor.slot_count(), 0);
  if (chart_divisor.terms().count(origin) > 0) {
    throw ModelError("chart point does not lie on the divisor");
  }
  const auto [slot, replacement] = solve_unit_linear(chart_divisor);
  return chart_equation.substituted(slot, replacement);
}

Rational local_threshold(const Polynomial& local_equation) {
  if (local_equation.is_zero()) {
    throw InvalidArgumentError("local equation is identically zero");
  }
  const Polynomial::Exponents origin(local_equation.slot_count(), 0);
  if (local_equation.terms().count(origin) > 0) {
    throw ModelError("local equation does not vanish at the origin");
  }

  // active slots, the base variable included
  std::vector<std::size_t> active = local_equation.present_slots();
  if (local_equation.degree_in(local_equation.base_slot()) > 0) {
    active.push_back(local_equation.base_slot());
  }

  // variable-disjointness blocks: slots are connected when one term uses
  // both; Kuwata's rule combines the blockwise thresholds
  std::vector<std::size_t> component(local_equation.slot_count(),
                                     local_equation.slot_count());
  std::size_t component_count = 0;
  for (std::size_t seed : active) {
    if (component[seed] != local_equation.slot_count()) continue;
    std::vector<std::size_t> frontier = {seed};
    component[seed] = component_count;
    while (!frontier.empty()) {
      const std::size_t current = frontier.back();
      frontier.pop_back();
      for (const auto& [exponents, coefficient] : local_equation.terms()) {
        (void)coefficient;
        if (exponents[current] == 0) continue;
        for (std::size_t other : active) {
          if (exponents[other] == 0) continue;
          if (component[other] == local_equation.slot_count()) {
            component[other] = component_count;
            frontier.push_back(other);
          }
        }
      }
    }
    ++component_count;
  }

  std::optional<Rational> combined;
  for (std::size_t block = 0; block < component_count; ++block) {
    std::vector<std::size_t> slots;
    for (std::size_t slot : active) {
      if (component[slot] == block) slots.push_back(slot);
    }
    NewtonPolyhedron polyhedron;
    polyhedron.dimension = slots.size();
    for (const auto& [exponents, coefficient] : local_equation.terms()) {
      (void)coefficient;
      bool mine = false;
      for (std::size_t slot : slots) {
        if (exponents[slot] > 0) mine = true;
      }
      if (!mine) continue;
      std::vector<std::int64_t> row;
      row.reserve(slots.size());
      for (std::size_t slot : slots) row.push_back(exponents[slot]);
      polyhedron.support.push_back(std::move(row));
    }
    const Rational block_value = lct_newton(polyhedron);
    combined = combined.has_value() ? kuwata_combine(*combined, block_value)
                                    : block_value;
  }
  return *combined;
}

// ---------------------------------------------------------------------------
// Fixtures

std::string fixture_directory() {
  if (const char* override_dir = std::getenv("DP_RIGIDITY_FIXTURES")) {
    if (override_dir[0] != '\0') return override_dir;
  }
  return DPRIG_DEFAULT_FIXTURE_DIR;
}

ExampleFixture parse_fixture(const std::string& text) {
  ExampleFixture fixture;
  std::vector<std::string> variables;
  std::vector<std::int64_t> weights;
  std::istringstream stream(text);
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(stream, line)) {
    ++line_number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trimmed(line);
    if (line.empty()) continue;
    const auto equals = line.find('=');
    if (equals == std::string::npos) {
      throw InvalidArgumentError("fixture line " +
                                 std::to_string(line_number) +
                                 " is not key = value");
    }
    const std::string key = trimmed(line.substr(0, equals));
    const std::string value = trimmed(line.substr(equals + 1));
    if (key == "name") {
      fixture.name = value;
    } else if (key == "variables") {
      std::istringstream words(value);
      std::string word;
      while (words >> word) variables.push_back(word);
    } else if (key == "weights") {
      std::istringstream words(value);
      std::int64_t weight = 0;
      while (words >> weight) weights.push_back(weight);
    } else if (key == "base") {
      fixture.ambient.base = value;
    } else if (key == "parameter") {
      fixture.parameter = value;
    } else if (key == "source") {
      fixture.source_text = value;
    } else if (key == "target") {
      fixture.target_text = value;
    } else if (key == "map") {
      fixture.map_text = value;
    } else if (key == "divisor") {
      fixture.divisor_text = value;
    } else if (key == "chart") {
      fixture.chart = value;
    } else if (key == "expected_t_power") {
      fixture.expected_t_power = value;
    } else if (key == "expected_threshold") {
      fixture.expected_threshold = value;
    } else if (key == "expected_configuration") {
      fixture.expected_configuration = value;
    } else {
      throw InvalidArgumentError("unknown fixture key '" + key + "'");
    }
  }
  fixture.ambient.variables = std::move(variables);
  fixture.ambient.weights = std::move(weights);
  if (fixture.name.empty() || fixture.ambient.variables.empty() ||
      fixture.source_text.empty() || fixture.target_text.empty() ||
      fixture.map_text.empty() || fixture.expected_t_power.empty()) {
    throw InvalidArgumentError("fixture is missing a required key");
  }
  return fixture;
}

ExampleFixture load_fixture(const std::string& name) {
  const std::string path = fixture_directory() + "/" + name + ".fixture";
  std::ifstream file(path);
  if (!file) {
    throw InvalidArgumentError("cannot open fixture file " + path);
  }
  std::ostringstream content;
  content << file.rdbuf();
  ExampleFixture fixture = parse_fixture(content.str());
  if (fixture.name != name) {
    throw InvalidArgumentError("fixture file " + path + " declares name '" +
                               fixture.name + "'");
  }
  return fixture;
}

const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names = {
      "corti_kollar_deg3", "cE6_deg3", "line_conic_deg3",
      "grinenko_deg2",     "grinenko_deg1",
  };
  return names;
}

namespace {

Rational evaluate_ratio(const std::string& text,
                        const std::map<std::string, std::int64_t>& bound) {
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == '/' && depth == 0) {
      const std::int64_t numerator =
          evaluate_parameter_expression(text.substr(0, i), bound);
      const std::int64_t denominator =
          evaluate_parameter_expression(text.substr(i + 1), bound);
      return make_rational(Integer(numerator), Integer(denominator));
    }
  }
  return Rational(evaluate_parameter_expression(text, bound));
}

}  // namespace

ExampleReport verify_example(
    const std::string& name,
    const std::map<std::string, std::int64_t>& parameters) {
  const ExampleFixture fixture = load_fixture(name);

  std::map<std::string, std::int64_t> bound;
  for (const auto& [key, value] : parameters) {
    if (key != fixture.parameter) {
      throw InvalidArgumentError("example '" + name +
                                 "' takes no parameter '" + key + "'");
    }
    (void)value;
  }
  if (!fixture.parameter.empty()) {
    const auto it = parameters.find(fixture.parameter);
    if (it == parameters.end()) {
      throw InvalidArgumentError("example '" + name +
                                 "' needs the parameter '" +
                                 fixture.parameter + "'");
    }
    if (it->second < 1 || it->second > 1000000) {
      throw InvalidArgumentError("parameter '" + fixture.parameter +
                                 "' must lie in [1, 10^6]");
    }
    bound[fixture.parameter] = it->second;
  }

  const HypersurfaceModel source(
      fixture.ambient,
      parse_in_ambient(fixture.source_text, fixture.ambient, bound));
  const HypersurfaceModel target(
      fixture.ambient,
      parse_in_ambient(fixture.target_text, fixture.ambient, bound));
  const MonomialMap map =
      parse_monomial_map(fixture.map_text, fixture.ambient, bound);

  ExampleReport report;
  report.name = name;
  report.parameters = bound;

  const MapCheck check = apply_map(source, map, target);
  report.map_valid = check.valid;
  report.t_power = check.t_power;
  if (!check.valid) {
    throw ArithmeticError("map check failed for '" + name +
                          "': " + check.discrepancy);
  }
  const std::int64_t expected_power =
      evaluate_parameter_expression(fixture.expected_t_power, bound);
  if (check.t_power != expected_power) {
    throw ArithmeticError(
        "map base power " + std::to_string(check.t_power) +
        " disagrees with the recorded closed form " +
        std::to_string(expected_power));
  }

  if (fixture.divisor_text.empty()) return report;

  const DivisorOnModel divisor(
      source, parse_in_ambient(fixture.divisor_text, fixture.ambient, bound));
  const DivisorOnModel transformed = transform_divisor(divisor, map, target);
  report.transformed_divisor = transformed.equation().to_string();

  const FiberRestriction restriction =
      restrict_special_fiber(target, transformed);
  report.fiber_configuration = restriction.configuration->label;
  if (!fixture.expected_configuration.empty() &&
      restriction.configuration->label != fixture.expected_configuration) {
    throw ArithmeticError("fiber configuration '" +
                          restriction.configuration->label +
                          "' disagrees with the recorded '" +
                          fixture.expected_configuration + "'");
  }

  if (fixture.chart.empty()) {
    throw InvalidArgumentError("fixture '" + name +
                               "' has a divisor but no chart");
  }
  const Polynomial local = local_model(target, transformed, fixture.chart);
  const Rational threshold = local_threshold(local);
  report.local_lct = threshold;
  report.is_lc = threshold >= 1;

  if (!fixture.expected_threshold.empty()) {
    const Rational expected = evaluate_ratio(fixture.expected_threshold, bound);
    if (threshold != expected) {
      throw ArithmeticError("local threshold " + to_string(threshold) +
                            " disagrees with the recorded closed form " +
                            to_string(expected));
    }
  }
  return report;
}

}  // namespace dprig
