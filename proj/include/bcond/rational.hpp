#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace bcond {

// Exact arbitrary-precision rational. Mass tables and conditioning results are
// computed without rounding; formatting is the only place digits are dropped.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts "13/40", "0.325", ".5", "1". Negative values are rejected by the
// mass-table layer, not here.
Rational parse_rational(std::string_view text);

// Lowest terms; integers without a denominator ("1", not "1/1").
std::string format_rational(const Rational& r);

// Fixed-point decimal with banker's (half-even) rounding.
std::string format_decimal(const Rational& r, int places);

} // namespace bcond
