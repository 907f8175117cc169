#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "dprig/errors.hpp"

namespace dprig {

// Universal exact scalar. Every threshold, weight, and LP entry in the
// library is one of these; no floating point anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Builds num/den in reduced form with positive denominator.
/// Throws ArithmeticError when den == 0.
Rational make_rational(Integer num, Integer den);

/// Parses "p/q" or "p" (optional leading '-'). Throws ParseError on syntax
/// errors and ArithmeticError on a zero denominator.
Rational parse_rational(const std::string& text);

/// Canonical rendering: "p/q" when the reduced denominator exceeds 1,
/// otherwise just "p".
std::string to_string(const Rational& value);

Rational rational_min(const Rational& a, const Rational& b);

/// min(1, value): log canonical thresholds never exceed 1.
Rational clamp_to_one(const Rational& value);

/// Floor of the nonnegative square root; used by enumeration bound
/// certificates. Throws InvalidArgumentError for negative input.
Integer integer_sqrt_floor(const Integer& value);

}  // namespace dprig
