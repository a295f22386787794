#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ordtop {

// Arbitrary-precision rational number. All metric arithmetic in this
// library is exact; no floating point is used anywhere.
using Rational = boost::multiprecision::cpp_rational;

// Parses "a/b" or a plain integer literal (optional leading '-').
// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

// Renders as "a/b" in lowest terms, or "a" when the denominator is 1.
std::string format_rational(const Rational& value);

}  // namespace ordtop
