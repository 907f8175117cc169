#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dprig/lct.hpp"
#include "dprig/polynomial.hpp"
#include "dprig/rational.hpp"

namespace dprig {

/// Weighted projective coordinates plus the base parameter of the family.
/// The base variable is appended as the last polynomial slot.
struct WeightedAmbient {
  std::vector<std::string> variables;
  std::vector<std::int64_t> weights;
  std::string base = "t";

  /// variables + base, the slot list every polynomial here is built over.
  std::vector<std::string> all_names() const;
};

WeightedAmbient standard_p3();  ///< P^3 with unit weights, base "t"

/// Parses with the ambient's slot list (base variable last).
Polynomial parse_in_ambient(
    const std::string& text, const WeightedAmbient& ambient,
    const std::map<std::string, std::int64_t>& parameters = {});

/// A hypersurface in a weighted projective space over the base ring:
/// the equation must be weighted-homogeneous in the coordinate variables
/// (the base parameter carries no weight) and not identically zero.
class HypersurfaceModel {
 public:
  HypersurfaceModel(WeightedAmbient ambient, Polynomial equation);

  const WeightedAmbient& ambient() const { return ambient_; }
  const Polynomial& equation() const { return equation_; }
  std::int64_t weighted_degree() const { return weighted_degree_; }

 private:
  WeightedAmbient ambient_;
  Polynomial equation_;
  std::int64_t weighted_degree_ = 0;
};

/// One coordinate substitution of a monomial map: the coordinate it reads
/// from and the power of the base parameter in front.
struct MapImage {
  std::size_t variable = 0;
  std::int64_t t_exponent = 0;

  bool operator==(const MapImage& other) const {
    return variable == other.variable && t_exponent == other.t_exponent;
  }
};

/// Coordinate change x_i -> t^{a_i} * x_{sigma(i)}.  The variable picks must
/// form a permutation and the exponents must be non-negative, which makes
/// the map regular on the family and invertible over the generic fiber.
class MonomialMap {
 public:
  explicit MonomialMap(std::vector<MapImage> images);

  const std::vector<MapImage>& images() const { return images_; }
  std::size_t size() const { return images_.size(); }

  /// Inverse map, normalized by the projective base-rescaling that makes
  /// every exponent non-negative and minimal (coordinate i rescales by
  /// t^{lambda * weight_i}).
  MonomialMap inverse(const std::vector<std::int64_t>& weights) const;

  /// Rendering such as "t^4*x, t^3*y, t^6*z, w" over the given names.
  std::string to_string(const WeightedAmbient& ambient) const;

  bool operator==(const MonomialMap& other) const {
    return images_ == other.images_;
  }

 private:
  std::vector<MapImage> images_;
};

/// Parses a comma-separated list of monomial coordinate images, e.g.
/// "t^(2*n)*x, t^(2*n)*y, t^(3*n)*z, w".
MonomialMap parse_monomial_map(
    const std::string& text, const WeightedAmbient& ambient,
    const std::map<std::string, std::int64_t>& parameters = {});

/// Effective divisor cut on a model by one weighted-homogeneous equation.
class DivisorOnModel {
 public:
  explicit DivisorOnModel(const HypersurfaceModel& model, Polynomial equation);

  const Polynomial& equation() const { return equation_; }

 private:
  Polynomial equation_;
};

/// Outcome of pushing a family through a coordinate change: the map is a
/// fibered birational equivalence when substituting it into the target
/// equation returns exactly t^k times the source equation.
struct MapCheck {
  bool valid = false;
  std::int64_t t_power = 0;
  std::string discrepancy;  ///< difference polynomial when not valid
};

MapCheck apply_map(const HypersurfaceModel& source, const MonomialMap& map,
                   const HypersurfaceModel& target);

/// Image of a divisor under the coordinate change, normalized: overall base
/// powers removed, coefficients divided by their content, leading sign
/// positive.  The result is re-validated against the target model.
DivisorOnModel transform_divisor(const DivisorOnModel& divisor,
                                 const MonomialMap& map,
                                 const HypersurfaceModel& target);

/// What a divisor cuts on the special fiber when the cut is a binary form:
/// the form's discriminant and its number of distinct linear factors over
/// the algebraic closure.
struct BinaryFormReport {
  std::string first_variable;
  std::string second_variable;
  std::int64_t degree = 0;
  Rational discriminant;
  int distinct_factors = 0;
};

/// Configuration of the curve the divisor cuts on the special fiber.
struct FiberConfiguration {
  Polynomial curve;            ///< plane-section equation at t = 0
  std::string label;           ///< e.g. "three concurrent lines"
  std::optional<SingularityKind> kind;  ///< catalog match, when there is one
  std::string chart_variable;  ///< coordinate chart of the singular point
  Polynomial local_equation;   ///< curve in that chart
  Rational local_threshold;    ///< lc threshold of the curve germ there
  std::optional<BinaryFormReport> binary;
};

struct FiberRestriction {
  Polynomial fiber;  ///< model equation at t = 0
  std::optional<FiberConfiguration> configuration;
};

/// Sets t = 0 in the model (degenerate-model error when that kills the
/// equation) and, when a divisor is supplied, restricts it to the special
/// fiber and labels the resulting curve configuration.
FiberRestriction restrict_special_fiber(
    const HypersurfaceModel& model,
    const std::optional<DivisorOnModel>& divisor = std::nullopt);

/// Local equation of the pair at a coordinate point: passes to the chart
/// where `chart_variable` is 1, solves the divisor for its unit-linear
/// variable, and substitutes into the model equation.  The chart origin
/// must lie on the divisor.
Polynomial local_model(const HypersurfaceModel& model,
                       const DivisorOnModel& divisor,
                       const std::string& chart_variable);

/// lc threshold of a local equation at the origin: splits the Newton
/// support into variable-disjoint blocks (the base parameter counts as a
/// variable), runs the Newton-polyhedron threshold on each block, and
/// combines blocks by the disjoint-variable addition rule.
Rational local_threshold(const Polynomial& local_equation);

/// One bundled verification fixture, as read from a fixture file.
struct ExampleFixture {
  std::string name;
  WeightedAmbient ambient;
  std::string parameter;  ///< "n", "m", or empty when the example is rigid
  std::string source_text;
  std::string target_text;
  std::string map_text;
  std::string divisor_text;                ///< empty when no divisor pipeline
  std::string chart;                       ///< chart for the local model
  std::string expected_t_power;            ///< parameter expression
  std::string expected_threshold;          ///< "(a)/(b)" parameter ratio
  std::string expected_configuration;      ///< fiber configuration label
};

/// Directory the fixtures are loaded from: the DP_RIGIDITY_FIXTURES
/// environment variable when set, the built-in default otherwise.
std::string fixture_directory();

/// Parses one fixture file (key = value lines, '#' comments).
ExampleFixture parse_fixture(const std::string& text);

/// Loads "<fixture_directory()>/<name>.fixture".
ExampleFixture load_fixture(const std::string& name);

/// The five built-in example names, in presentation order.
const std::vector<std::string>& example_names();

/// Full verification report for one example at bound parameters.
struct ExampleReport {
  std::string name;
  std::map<std::string, std::int64_t> parameters;
  bool map_valid = false;
  std::int64_t t_power = 0;
  std::optional<std::string> transformed_divisor;
  std::optional<std::string> fiber_configuration;
  std::optional<Rational> local_lct;
  std::optional<bool> is_lc;
};

/// Runs the whole pipeline for one named example: map check, divisor
/// push-forward, special-fiber configuration, local model, threshold.
/// Every stage is compared against the closed forms recorded in the
/// fixture; a mismatch throws ArithmeticError.
ExampleReport verify_example(
    const std::string& name,
    const std::map<std::string, std::int64_t>& parameters = {});

}  // namespace dprig
