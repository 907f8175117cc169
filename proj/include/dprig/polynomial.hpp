#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dprig/rational.hpp"

namespace dprig {

/// Total order on exponent vectors used for storage and printing:
/// (1) total degree in the non-base variables, descending,
/// (2) exponent of the base variable (the deformation parameter, always the
///     last slot), ascending,
/// (3) remaining exponents lexicographically, descending, earlier variables
///     more significant.
/// With this order "z - t^3*w" and "w - t^6*z" print exactly like that: the
/// t-free part of a divisor comes first even when a later coordinate carries
/// it.
struct TermOrder {
  std::size_t base_slot = 0;

  bool operator()(const std::vector<std::int64_t>& a,
                  const std::vector<std::int64_t>& b) const;
};

/// Sparse multivariate polynomial with exact integer coefficients.
///
/// The variable list is fixed at construction and the base (deformation)
/// variable is by convention the last entry.  Exponents are non-negative;
/// the one operation that transiently needs Laurent exponents in the base
/// variable (divisor push-forward) goes through from_laurent_terms, which
/// shifts the base exponent back into range before the object exists.
class Polynomial {
 public:
  using Exponents = std::vector<std::int64_t>;
  using TermMap = std::map<Exponents, Integer, TermOrder>;

  /// Zero polynomial over the given variables (base variable last).
  explicit Polynomial(std::vector<std::string> variables);

  static Polynomial monomial(std::vector<std::string> variables,
                             Exponents exponents, Integer coefficient);

  /// Builds a polynomial from terms whose base exponent may be negative:
  /// the whole sum is multiplied by the power of the base variable that
  /// makes the smallest base exponent zero.  Negative exponents on any
  /// other variable throw InvalidArgumentError.
  static Polynomial from_laurent_terms(
      std::vector<std::string> variables,
      const std::vector<std::pair<Exponents, Integer>>& terms);

  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t slot_count() const { return variables_.size(); }
  std::size_t base_slot() const { return variables_.size() - 1; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Index of a variable name; throws InvalidArgumentError if unknown.
  std::size_t slot_of(const std::string& name) const;

  /// Adds coefficient * x^exponents, merging and dropping zeros.
  void add_term(const Exponents& exponents, const Integer& coefficient);

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial multiplied_by(const Integer& scalar) const;
  Polynomial power(std::int64_t exponent) const;

  bool operator==(const Polynomial& other) const;
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

  /// Replaces the variable in `slot` by `image` (same variable list).
  Polynomial substituted(std::size_t slot, const Polynomial& image) const;

  /// Sets the variable in `slot` to the constant `value`.
  Polynomial evaluated_at(std::size_t slot, const Integer& value) const;

  Polynomial partial_derivative(std::size_t slot) const;

  /// Exact evaluation at a rational point (one coordinate per slot).
  Rational evaluated(const std::vector<Rational>& point) const;

  /// The polynomial with the base variable set to zero.
  Polynomial base_set_to_zero() const;

  /// Multiplies by base^delta; delta may be negative when every term can
  /// absorb it, otherwise InvalidArgumentError.
  Polynomial base_shifted(std::int64_t delta) const;

  std::int64_t min_base_exponent() const;  ///< 0 for the zero polynomial
  std::int64_t degree_in(std::size_t slot) const;

  /// Variables (excluding the base) that appear with positive exponent.
  std::vector<std::size_t> present_slots() const;

  /// Positive gcd of all coefficients; 1 for the zero polynomial.
  Integer content() const;

  /// Divides out the content and flips the sign so the leading term
  /// (first in canonical order) has positive coefficient.
  Polynomial normalized() const;

  /// Checks weighted homogeneity over the non-base variables; on success
  /// returns the common weighted degree through `degree` when non-null.
  bool is_weighted_homogeneous(const std::vector<std::int64_t>& weights,
                               std::int64_t* degree = nullptr) const;

  /// Canonical rendering: terms in storage order, explicit '*' and '^',
  /// the base power printed first inside a term ("t^6*w^3").
  std::string to_string() const;

 private:
  std::vector<std::string> variables_;
  TermMap terms_;
};

/// Evaluates an integer-linear parameter expression such as "6*n-4" or
/// "(4*n+1)" with every name bound in `parameters`.  Unbound names and
/// malformed input throw ParseError with the offending position.
std::int64_t evaluate_parameter_expression(
    const std::string& text,
    const std::map<std::string, std::int64_t>& parameters);

/// Parses the polynomial grammar: single-letter variables, integer
/// coefficients, optional '*' between factors, '^' powers whose exponent is
/// either an integer or a parenthesized integer-linear parameter expression
/// ("t^(6*n)").  Whitespace is insignificant.  Parameters must be bound in
/// `parameters`; exponents must come out non-negative.
Polynomial parse_polynomial(
    const std::string& text, std::vector<std::string> variables,
    const std::map<std::string, std::int64_t>& parameters = {});

}  // namespace dprig
