#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace hilbfock {

// Exact coefficient field Q. cpp_rational keeps every value in lowest terms
// with positive denominator; small values use inline storage.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p", "-p" or "p/q" (either part may be negative). No whitespace,
// no '+' sign, no floats. Throws ValidationError on anything else.
Rational parse_rational(const std::string& text);

// Lowest-terms rendering: "7", "-3/2". Never scientific notation.
std::string rational_str(const Rational& value);

bool is_integer(const Rational& value);

// Throws ConsistencyError when the value is not an integer.
Int integer_value(const Rational& value);

}  // namespace hilbfock
