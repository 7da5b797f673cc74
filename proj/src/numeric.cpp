#include "qtoric/numeric.hpp"

namespace qtoric {

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) {
    --q;
  }
  return q;
}

Rational frac(const Rational& r) {
  return r - Rational(floor_div(numerator(r), denominator(r)));
}

bool is_integer(const Rational& r) { return denominator(r) == 1; }

std::string to_string(const Int& v) { return v.str(); }

std::string to_string(const Rational& r) {
  if (is_integer(r)) {
    return numerator(r).str();
  }
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace qtoric
