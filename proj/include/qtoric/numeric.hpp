#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace qtoric {

// Arbitrary-precision integers and rationals. Resolution chains multiply
// Bezout coefficients, so fixed-width arithmetic is not an option.
using Int = boost::multiprecision::cpp_int;

// Always stored in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

// Floor division, b != 0. cpp_int's operator/ truncates toward zero.
Int floor_div(const Int& a, const Int& b);

// r - floor(r), in [0, 1).
Rational frac(const Rational& r);

bool is_integer(const Rational& r);

// Decimal rendering; rationals as lowest-terms "p/q", integers as plain "n".
std::string to_string(const Int& v);
std::string to_string(const Rational& r);

}  // namespace qtoric
