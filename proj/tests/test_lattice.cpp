#include "qtoric/lattice.hpp"

#include "testutil.hpp"

#include <doctest.h>

#include <random>

using namespace qtoric;
using namespace qtoric::testutil;

TEST_SUITE("lattice") {

TEST_CASE("det2 on known pairs") {
  CHECK(det2({1, 0}, {0, 1}) == 1);
  CHECK(det2({0, 1}, {-1, 2}) == 1);
  CHECK(det2({1, 0}, {-1, 2}) == 2);
  CHECK(det2({-1, 2}, {-2, 3}) == 1);
}

TEST_CASE("primitivity") {
  CHECK(is_primitive({-2, 3}));
  CHECK_FALSE(is_primitive({2, 4}));
  CHECK_FALSE(is_primitive({0, 0}));
  CHECK(is_primitive({0, -1}));
  CHECK(is_primitive({1, 0}));
  CHECK_FALSE(is_primitive({-6, -9}));
}

TEST_CASE("unimodular complement: canonical values") {
  CHECK(unimodular_complement({1, 0}) == LatticeVector{0, 1});
  CHECK(unimodular_complement({0, 1}) == LatticeVector{-1, 0});
  CHECK(unimodular_complement({-1, 2}) == LatticeVector{0, -1});
  CHECK(unimodular_complement({2, 3}) == LatticeVector{-1, -1});
  CHECK(unimodular_complement({-2, 3}) == LatticeVector{-1, 1});
  CHECK(det2({-1, 2}, unimodular_complement({-1, 2})) == 1);
}

TEST_CASE("unimodular complement: rejects non-primitive input") {
  CHECK_THROWS_AS(unimodular_complement({2, 4}), NotPrimitiveError);
  CHECK_THROWS_AS(unimodular_complement({0, 0}), NotPrimitiveError);
}

TEST_CASE("det2 antisymmetry and shift invariance") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 500; ++it) {
    const LatticeVector u{random_in(rng, -50, 50), random_in(rng, -50, 50)};
    const LatticeVector v{random_in(rng, -50, 50), random_in(rng, -50, 50)};
    CHECK(det2(u, v) == -det2(v, u));
    const Int t = random_in(rng, -20, 20);
    CHECK(det2(u, v + t * u) == det2(u, v));
  }
}

TEST_CASE("unimodular complement: Bezout identity and minimality") {
  std::mt19937_64 rng(12);
  for (int it = 0; it < 300; ++it) {
    const LatticeVector u = random_primitive(rng, 40);
    const LatticeVector w = unimodular_complement(u);
    CHECK(det2(u, w) == 1);
    // Every other solution is w + r*u; the canonical choice must win the
    // (|x|, |y|, x, y) comparison over a wide window.
    auto key = [](const LatticeVector& v) {
      return std::tuple<Int, Int, Int, Int>(abs(v.x), abs(v.y), v.x, v.y);
    };
    for (long r = -100; r <= 100; ++r) {
      if (r == 0) {
        continue;
      }
      CHECK(key(w) < key(w + Int(r) * u));
    }
  }
}

TEST_CASE("rational helpers") {
  CHECK(frac(Rational(-7, 3)) == Rational(2, 3));
  CHECK(frac(Rational(5, 3)) == Rational(2, 3));
  CHECK(frac(Rational(2)) == 0);
  CHECK(floor_div(Int(-7), Int(2)) == -4);
  CHECK(floor_div(Int(7), Int(2)) == 3);
  CHECK(floor_div(Int(-6), Int(2)) == -3);
  CHECK(floor_div(Int(6), Int(-4)) == -2);
  CHECK(to_string(Rational(-1, 3)) == "-1/3");
  CHECK(to_string(Rational(8, 2)) == "4");
  CHECK(to_string(LatticeVector{-2, 3}) == "(-2,3)");
}

}  // TEST_SUITE
