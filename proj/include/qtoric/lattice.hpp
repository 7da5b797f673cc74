#pragma once

#include "qtoric/errors.hpp"
#include "qtoric/numeric.hpp"

#include <string>

namespace qtoric {

// A characteristic vector in the rank-2 lattice N.
struct LatticeVector {
  Int x;
  Int y;

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
};

LatticeVector operator+(const LatticeVector& u, const LatticeVector& v);
LatticeVector operator-(const LatticeVector& u, const LatticeVector& v);
LatticeVector operator-(const LatticeVector& u);
LatticeVector operator*(const Int& t, const LatticeVector& u);

// u.x*v.y - u.y*v.x
Int det2(const LatticeVector& u, const LatticeVector& v);

// gcd(|x|, |y|) == 1; the zero vector is not primitive.
bool is_primitive(const LatticeVector& v);

// The canonical v with det2(u, v) == 1: among all solutions (they differ by
// integer multiples of u), the smallest under lexicographic (|x|, |y|, x, y).
// Throws NotPrimitiveError when u is not primitive.
LatticeVector unimodular_complement(const LatticeVector& u);

std::string to_string(const LatticeVector& v);  // "(x,y)"

}  // namespace qtoric
