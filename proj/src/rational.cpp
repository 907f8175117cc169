#include "dprig/rational.hpp"

#include <cstddef>
#include <utility>

namespace dprig {

Rational make_rational(Integer num, Integer den) {
  if (den == 0) {
    throw ArithmeticError("rational with zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  // cpp_rational reduces to lowest terms on construction.
  return Rational(std::move(num), std::move(den));
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) {
    throw ParseError("empty rational", 0);
  }
  const std::size_t slash = text.find('/');
  const std::string num_part = text.substr(0, slash);
  auto check_integer = [&](const std::string& part, std::size_t offset) {
    if (part.empty()) {
      throw ParseError("missing integer in rational", offset);
    }
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) {
      throw ParseError("missing digits in rational", offset + i);
    }
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') {
        throw ParseError("unexpected character in rational", offset + i);
      }
    }
  };
  check_integer(num_part, 0);
  if (slash == std::string::npos) {
    return Rational(Integer(num_part));
  }
  const std::string den_part = text.substr(slash + 1);
  check_integer(den_part, slash + 1);
  return make_rational(Integer(num_part), Integer(den_part));
}

std::string to_string(const Rational& value) {
  if (denominator(value) == 1) {
    return numerator(value).str();
  }
  return numerator(value).str() + "/" + denominator(value).str();
}

Rational rational_min(const Rational& a, const Rational& b) {
  return a < b ? a : b;
}

Rational clamp_to_one(const Rational& value) {
  return value > 1 ? Rational(1) : value;
}

Integer integer_sqrt_floor(const Integer& value) {
  if (value < 0) {
    throw InvalidArgumentError("integer_sqrt_floor of negative value");
  }
  if (value == 0) {
    return 0;
  }
  // Newton iteration on integers; converges in a handful of steps for the
  // small quantities the bound certificates produce.
  Integer x = value;
  Integer y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + value / x) / 2;
  }
  return x;
}

}  // namespace dprig
