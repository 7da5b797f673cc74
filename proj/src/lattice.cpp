#include "qtoric/lattice.hpp"

#include <array>
#include <tuple>
#include <utility>

namespace qtoric {

LatticeVector operator+(const LatticeVector& u, const LatticeVector& v) {
  return {u.x + v.x, u.y + v.y};
}

LatticeVector operator-(const LatticeVector& u, const LatticeVector& v) {
  return {u.x - v.x, u.y - v.y};
}

LatticeVector operator-(const LatticeVector& u) { return {-u.x, -u.y}; }

LatticeVector operator*(const Int& t, const LatticeVector& u) { return {t * u.x, t * u.y}; }

Int det2(const LatticeVector& u, const LatticeVector& v) { return u.x * v.y - u.y * v.x; }

bool is_primitive(const LatticeVector& v) { return gcd(v.x, v.y) == 1; }

namespace {

// s*a + t*b == g == gcd(|a|,|b|) >= 0
std::array<Int, 3> extended_gcd(Int a, Int b) {
  Int old_r = std::move(a), r = std::move(b);
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    const Int q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
    old_t -= q * t;
    std::swap(old_t, t);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

std::tuple<Int, Int, Int, Int> complement_order_key(const LatticeVector& v) {
  return {abs(v.x), abs(v.y), v.x, v.y};
}

}  // namespace

LatticeVector unimodular_complement(const LatticeVector& u) {
  if (!is_primitive(u)) {
    throw NotPrimitiveError("unimodular_complement: " + to_string(u) + " is not primitive");
  }
  // Particular solution of det2(u, v) == u.x*v.y - u.y*v.x == 1.
  const auto [g, s, t] = extended_gcd(u.x, u.y);
  const LatticeVector v0{-t, s};
  // The full solution set is v0 + r*u. The |x| component (|y| when u.x == 0)
  // strictly grows away from its real minimizer, so the lexicographic minimum
  // under (|x|, |y|, x, y) lies at one of the two nearest integers r.
  const Int r0 = (u.x != 0) ? floor_div(-v0.x, u.x) : floor_div(-v0.y, u.y);
  LatticeVector best;
  bool have = false;
  for (const Int& r : {r0, Int(r0 + 1)}) {
    const LatticeVector cand = v0 + r * u;
    if (!have || complement_order_key(cand) < complement_order_key(best)) {
      best = cand;
      have = true;
    }
  }
  return best;
}

std::string to_string(const LatticeVector& v) {
  return "(" + to_string(v.x) + "," + to_string(v.y) + ")";
}

}  // namespace qtoric
