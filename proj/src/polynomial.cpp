#include "dprig/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include <boost/multiprecision/cpp_int.hpp>

#include "dprig/errors.hpp"

namespace dprig {

namespace {

std::int64_t checked_total_degree(const std::vector<std::int64_t>& exponents,
                                  std::size_t base_slot) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (i != base_slot) total += exponents[i];
  }
  return total;
}

}  // namespace

bool TermOrder::operator()(const std::vector<std::int64_t>& a,
                           const std::vector<std::int64_t>& b) const {
  const std::int64_t deg_a = checked_total_degree(a, base_slot);
  const std::int64_t deg_b = checked_total_degree(b, base_slot);
  if (deg_a != deg_b) return deg_a > deg_b;
  if (a[base_slot] != b[base_slot]) return a[base_slot] < b[base_slot];
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i == base_slot) continue;
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

Polynomial::Polynomial(std::vector<std::string> variables)
    : variables_(std::move(variables)),
      terms_(TermOrder{variables_.empty() ? 0 : variables_.size() - 1}) {
  if (variables_.empty()) {
    throw InvalidArgumentError("polynomial needs at least the base variable");
  }
  for (const auto& name : variables_) {
    if (name.empty()) throw InvalidArgumentError("empty variable name");
    if (std::count(variables_.begin(), variables_.end(), name) != 1) {
      throw InvalidArgumentError("duplicate variable name '" + name + "'");
    }
  }
}

Polynomial Polynomial::monomial(std::vector<std::string> variables,
                                Exponents exponents, Integer coefficient) {
  Polynomial result(std::move(variables));
  result.add_term(exponents, coefficient);
  return result;
}

Polynomial Polynomial::from_laurent_terms(
    std::vector<std::string> variables,
    const std::vector<std::pair<Exponents, Integer>>& terms) {
  Polynomial result(std::move(variables));
  const std::size_t base = result.base_slot();
  std::int64_t min_base = 0;
  bool seen = false;
  for (const auto& [exponents, coefficient] : terms) {
    if (coefficient == 0) continue;
    if (exponents.size() != result.slot_count()) {
      throw InvalidArgumentError("laurent term has wrong exponent count");
    }
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      if (i != base && exponents[i] < 0) {
        throw InvalidArgumentError(
            "negative exponent on a non-base variable");
      }
    }
    if (!seen || exponents[base] < min_base) min_base = exponents[base];
    seen = true;
  }
  const std::int64_t shift = seen && min_base != 0 ? -min_base : 0;
  for (const auto& [exponents, coefficient] : terms) {
    if (coefficient == 0) continue;
    Exponents shifted = exponents;
    shifted[base] += shift;
    result.add_term(shifted, coefficient);
  }
  return result;
}

std::size_t Polynomial::slot_of(const std::string& name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i] == name) return i;
  }
  throw InvalidArgumentError("unknown variable '" + name + "'");
}

void Polynomial::add_term(const Exponents& exponents,
                          const Integer& coefficient) {
  if (exponents.size() != variables_.size()) {
    throw InvalidArgumentError("exponent vector has wrong length");
  }
  for (std::int64_t e : exponents) {
    if (e < 0) throw InvalidArgumentError("negative exponent");
  }
  if (coefficient == 0) return;
  auto it = terms_.find(exponents);
  if (it == terms_.end()) {
    terms_.emplace(exponents, coefficient);
    return;
  }
  it->second += coefficient;
  if (it->second == 0) terms_.erase(it);
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  if (variables_ != other.variables_) {
    throw InvalidArgumentError("polynomials over different variables");
  }
  Polynomial result = *this;
  for (const auto& [exponents, coefficient] : other.terms_) {
    result.add_term(exponents, coefficient);
  }
  return result;
}

Polynomial Polynomial::operator-() const {
  Polynomial result(variables_);
  for (const auto& [exponents, coefficient] : terms_) {
    result.terms_.emplace(exponents, -coefficient);
  }
  return result;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  return *this + (-other);
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (variables_ != other.variables_) {
    throw InvalidArgumentError("polynomials over different variables");
  }
  Polynomial result(variables_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      Exponents sum(ea.size());
      for (std::size_t i = 0; i < ea.size(); ++i) sum[i] = ea[i] + eb[i];
      result.add_term(sum, ca * cb);
    }
  }
  return result;
}

Polynomial Polynomial::multiplied_by(const Integer& scalar) const {
  Polynomial result(variables_);
  if (scalar == 0) return result;
  for (const auto& [exponents, coefficient] : terms_) {
    result.terms_.emplace(exponents, coefficient * scalar);
  }
  return result;
}

Polynomial Polynomial::power(std::int64_t exponent) const {
  if (exponent < 0) throw InvalidArgumentError("negative polynomial power");
  Polynomial result =
      monomial(variables_, Exponents(variables_.size(), 0), Integer(1));
  for (std::int64_t i = 0; i < exponent; ++i) result = result * *this;
  return result;
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (variables_ != other.variables_) return false;
  if (terms_.size() != other.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = other.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt) {
    if (it->first != jt->first || it->second != jt->second) return false;
  }
  return true;
}

Polynomial Polynomial::substituted(std::size_t slot,
                                   const Polynomial& image) const {
  if (slot >= variables_.size()) {
    throw InvalidArgumentError("substitution slot out of range");
  }
  if (image.variables_ != variables_) {
    throw InvalidArgumentError("substitution image over different variables");
  }
  Polynomial result(variables_);
  for (const auto& [exponents, coefficient] : terms_) {
    Exponents rest = exponents;
    const std::int64_t e = rest[slot];
    rest[slot] = 0;
    Polynomial piece = monomial(variables_, rest, coefficient);
    if (e > 0) piece = piece * image.power(e);
    result = result + piece;
  }
  return result;
}

Polynomial Polynomial::evaluated_at(std::size_t slot,
                                    const Integer& value) const {
  if (slot >= variables_.size()) {
    throw InvalidArgumentError("evaluation slot out of range");
  }
  Polynomial result(variables_);
  for (const auto& [exponents, coefficient] : terms_) {
    Integer scaled = coefficient;
    for (std::int64_t i = 0; i < exponents[slot]; ++i) scaled *= value;
    Exponents rest = exponents;
    rest[slot] = 0;
    result.add_term(rest, scaled);
  }
  return result;
}

Polynomial Polynomial::partial_derivative(std::size_t slot) const {
  if (slot >= variables_.size()) {
    throw InvalidArgumentError("derivative slot out of range");
  }
  Polynomial result(variables_);
  for (const auto& [exponents, coefficient] : terms_) {
    if (exponents[slot] == 0) continue;
    Exponents lowered = exponents;
    --lowered[slot];
    result.add_term(lowered, coefficient * Integer(exponents[slot]));
  }
  return result;
}

Rational Polynomial::evaluated(const std::vector<Rational>& point) const {
  if (point.size() != variables_.size()) {
    throw InvalidArgumentError("evaluation point has wrong length");
  }
  Rational total(0);
  for (const auto& [exponents, coefficient] : terms_) {
    Rational term(coefficient);
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      for (std::int64_t k = 0; k < exponents[i]; ++k) term *= point[i];
    }
    total += term;
  }
  return total;
}

Polynomial Polynomial::base_set_to_zero() const {
  Polynomial result(variables_);
  for (const auto& [exponents, coefficient] : terms_) {
    if (exponents[base_slot()] == 0) result.terms_.emplace(exponents, coefficient);
  }
  return result;
}

Polynomial Polynomial::base_shifted(std::int64_t delta) const {
  Polynomial result(variables_);
  for (const auto& [exponents, coefficient] : terms_) {
    Exponents shifted = exponents;
    shifted[base_slot()] += delta;
    if (shifted[base_slot()] < 0) {
      throw InvalidArgumentError("base shift would create a negative power");
    }
    result.terms_.emplace(shifted, coefficient);
  }
  return result;
}

std::int64_t Polynomial::min_base_exponent() const {
  std::int64_t best = 0;
  bool seen = false;
  for (const auto& [exponents, coefficient] : terms_) {
    (void)coefficient;
    if (!seen || exponents[base_slot()] < best) best = exponents[base_slot()];
    seen = true;
  }
  return seen ? best : 0;
}

std::int64_t Polynomial::degree_in(std::size_t slot) const {
  if (slot >= variables_.size()) {
    throw InvalidArgumentError("degree slot out of range");
  }
  std::int64_t best = 0;
  for (const auto& [exponents, coefficient] : terms_) {
    (void)coefficient;
    best = std::max(best, exponents[slot]);
  }
  return best;
}

std::vector<std::size_t> Polynomial::present_slots() const {
  std::vector<std::size_t> present;
  for (std::size_t i = 0; i + 1 < variables_.size(); ++i) {
    if (degree_in(i) > 0) present.push_back(i);
  }
  return present;
}

Integer Polynomial::content() const {
  Integer g(0);
  for (const auto& [exponents, coefficient] : terms_) {
    (void)exponents;
    g = boost::multiprecision::gcd(g, coefficient);
  }
  if (g < 0) g = -g;
  return g == 0 ? Integer(1) : g;
}

Polynomial Polynomial::normalized() const {
  if (terms_.empty()) return *this;
  Integer divisor = content();
  if (terms_.begin()->second < 0) divisor = -divisor;
  Polynomial result(variables_);
  for (const auto& [exponents, coefficient] : terms_) {
    result.terms_.emplace(exponents, coefficient / divisor);
  }
  return result;
}

bool Polynomial::is_weighted_homogeneous(
    const std::vector<std::int64_t>& weights, std::int64_t* degree) const {
  if (weights.size() != variables_.size() - 1) {
    throw InvalidArgumentError("one weight per non-base variable expected");
  }
  for (std::int64_t w : weights) {
    if (w <= 0) throw InvalidArgumentError("weights must be positive");
  }
  bool seen = false;
  std::int64_t common = 0;
  for (const auto& [exponents, coefficient] : terms_) {
    (void)coefficient;
    std::int64_t d = 0;
    for (std::size_t i = 0; i + 1 < variables_.size(); ++i) {
      d += exponents[i] * weights[i];
    }
    if (seen && d != common) return false;
    common = d;
    seen = true;
  }
  if (degree != nullptr) *degree = seen ? common : 0;
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [exponents, coefficient] : terms_) {
    const bool negative = coefficient < 0;
    Integer magnitude = negative ? Integer(-coefficient) : coefficient;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::vector<std::string> factors;
    const std::size_t base = base_slot();
    auto emit = [&](std::size_t slot) {
      if (exponents[slot] == 0) return;
      std::string factor = variables_[slot];
      if (exponents[slot] != 1) {
        factor += "^" + std::to_string(exponents[slot]);
      }
      factors.push_back(std::move(factor));
    };
    emit(base);  // the base power leads inside a term: "t^6*w^3"
    for (std::size_t i = 0; i < variables_.size(); ++i) {
      if (i != base) emit(i);
    }
    if (magnitude != 1 || factors.empty()) {
      factors.insert(factors.begin(), magnitude.str());
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i > 0) out += "*";
      out += factors[i];
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

// Hand-rolled recursive descent; the grammar is small enough that a scanner
// generator would be heavier than the whole module.
class Parser {
 public:
  Parser(const std::string& text,
         const std::map<std::string, std::int64_t>& parameters)
      : text_(text), parameters_(parameters) {}

  // poly := [sign] term (sign term)*  |  "0"
  Polynomial parse_sum(std::vector<std::string> variables) {
    Polynomial result(std::move(variables));
    skip_spaces();
    if (done()) throw ParseError("empty polynomial", pos_);
    bool negative = take_sign();
    while (true) {
      parse_term(result, negative);
      skip_spaces();
      if (done()) break;
      const char c = text_[pos_];
      if (c != '+' && c != '-') {
        throw ParseError(std::string("expected '+' or '-', found '") + c +
                             "'",
                         pos_);
      }
      negative = c == '-';
      ++pos_;
    }
    return result;
  }

  // Integer-linear expression used both for "^(...)" exponents and for
  // stand-alone formula strings; returns the evaluated value.
  std::int64_t parse_linear() {
    skip_spaces();
    bool negative = take_sign();
    std::int64_t total = 0;
    while (true) {
      total += (negative ? -1 : 1) * parse_linear_term();
      skip_spaces();
      if (done() || (text_[pos_] != '+' && text_[pos_] != '-')) break;
      negative = text_[pos_] == '-';
      ++pos_;
    }
    return total;
  }

  void expect_end() {
    skip_spaces();
    if (!done()) {
      throw ParseError(std::string("unexpected trailing input '") +
                           text_[pos_] + "'",
                       pos_);
    }
  }

  bool done() const { return pos_ >= text_.size(); }
  std::size_t position() const { return pos_; }

 private:
  void skip_spaces() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool take_sign() {
    skip_spaces();
    if (!done() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      const bool negative = text_[pos_] == '-';
      ++pos_;
      skip_spaces();
      return negative;
    }
    return false;
  }

  bool at_digit() {
    return !done() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  bool at_letter() {
    return !done() && std::isalpha(static_cast<unsigned char>(text_[pos_]));
  }

  Integer parse_integer() {
    if (!at_digit()) throw ParseError("expected an integer", pos_);
    Integer value(0);
    while (at_digit()) {
      value = value * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return value;
  }

  std::int64_t parse_linear_term() {
    skip_spaces();
    if (at_digit()) {
      const Integer magnitude = parse_integer();
      if (magnitude > Integer(INT64_MAX)) {
        throw ParseError("parameter expression constant too large", pos_);
      }
      std::int64_t value = static_cast<std::int64_t>(magnitude);
      skip_spaces();
      if (!done() && text_[pos_] == '*') {
        ++pos_;
        skip_spaces();
        value *= parse_parameter();
      }
      return value;
    }
    if (at_letter()) return parse_parameter();
    throw ParseError("expected an integer or a parameter name", pos_);
  }

  std::int64_t parse_parameter() {
    if (!at_letter()) throw ParseError("expected a parameter name", pos_);
    const std::size_t start = pos_;
    const std::string name(1, text_[pos_]);
    ++pos_;
    auto it = parameters_.find(name);
    if (it == parameters_.end()) {
      throw ParseError("unbound parameter '" + name + "'", start);
    }
    return it->second;
  }

  // exponent := integer | '(' linear ')'
  std::int64_t parse_exponent() {
    skip_spaces();
    if (!done() && text_[pos_] == '(') {
      const std::size_t open = pos_;
      ++pos_;
      const std::int64_t value = parse_linear();
      skip_spaces();
      if (done() || text_[pos_] != ')') {
        throw ParseError("unbalanced '(' in exponent", open);
      }
      ++pos_;
      if (value < 0) {
        throw ParseError("negative exponent " + std::to_string(value), open);
      }
      return value;
    }
    if (at_digit()) {
      const std::size_t start = pos_;
      const Integer value = parse_integer();
      if (value > Integer(INT64_MAX)) {
        throw ParseError("exponent too large", start);
      }
      return static_cast<std::int64_t>(value);
    }
    throw ParseError("expected an exponent", pos_);
  }

  // term := factor (['*'] factor)*
  void parse_term(Polynomial& sink, bool negative) {
    Integer coefficient(1);
    Polynomial::Exponents exponents(sink.slot_count(), 0);
    bool any = false;
    while (true) {
      skip_spaces();
      if (at_digit()) {
        coefficient *= parse_integer();
        any = true;
      } else if (at_letter()) {
        const std::size_t start = pos_;
        const std::string name(1, text_[pos_]);
        ++pos_;
        std::size_t slot = 0;
        try {
          slot = sink.slot_of(name);
        } catch (const InvalidArgumentError&) {
          throw ParseError("unknown variable '" + name + "'", start);
        }
        std::int64_t e = 1;
        skip_spaces();
        if (!done() && text_[pos_] == '^') {
          ++pos_;
          e = parse_exponent();
        }
        exponents[slot] += e;
        any = true;
      } else {
        throw ParseError("expected a factor", pos_);
      }
      skip_spaces();
      if (!done() && text_[pos_] == '*') {
        ++pos_;
        continue;
      }
      // implicit product: another digit or letter follows directly
      if (at_digit() || at_letter()) continue;
      break;
    }
    if (!any) throw ParseError("empty term", pos_);
    sink.add_term(exponents, negative ? Integer(-coefficient) : coefficient);
  }

  const std::string& text_;
  const std::map<std::string, std::int64_t>& parameters_;
  std::size_t pos_ = 0;
};

}  // namespace

std::int64_t evaluate_parameter_expression(
    const std::string& text,
    const std::map<std::string, std::int64_t>& parameters) {
  // Peel matched redundant parentheses so "(4*n+1)" reads like "4*n+1".
  std::string body = text;
  auto trim = [](std::string s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string::npos) return std::string();
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
  };
  body = trim(body);
  while (body.size() >= 2 && body.front() == '(' && body.back() == ')') {
    int depth = 0;
    bool wraps = true;
    for (std::size_t i = 0; i + 1 < body.size(); ++i) {
      if (body[i] == '(') ++depth;
      if (body[i] == ')') --depth;
      if (depth == 0) {
        wraps = false;
        break;
      }
    }
    if (!wraps) break;
    body = trim(body.substr(1, body.size() - 2));
  }
  Parser parser(body, parameters);
  const std::int64_t value = parser.parse_linear();
  parser.expect_end();
  return value;
}

Polynomial parse_polynomial(
    const std::string& text, std::vector<std::string> variables,
    const std::map<std::string, std::int64_t>& parameters) {
  Parser parser(text, parameters);
  Polynomial result = parser.parse_sum(std::move(variables));
  parser.expect_end();
  return result;
}

}  // namespace dprig
