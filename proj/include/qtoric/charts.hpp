#pragma once

#include "qtoric/errors.hpp"
#include "qtoric/numeric.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qtoric::charts {

// Floating-point verification harness for the explicit coordinate charts
// around a deleted edge and for the blowdown map written in those charts.
// Everything here is double precision; the exact-arithmetic modules never
// depend on it.

// Normalized local model: lambda1 = (1,0) along the edge p1 = 0,
// lambda2 = (0,1) along p2 + s*p1 - t = 0, lambda3 = (-k,m) along p2 = 0,
// with 0 < k <= m and s, t positive.
struct LocalModelParams {
  int k = 1;
  int m = 2;
  double s = 1.0;
  double t = 1.0;
  double eps1 = 0.1;  // profile is exactly x^{1/m} below eps1
  double eps2 = 0.5;  // profile is exactly 1 above eps2
};

// A point of the orbit space with angular coordinates, q_i in [0,1) turns.
// For the image chart (Chart::w) the fields p1, p2 are read as the image
// radial coordinates r1, r2.
struct OrbitPoint {
  double p1 = 0;
  double p2 = 0;
  double q1 = 0;
  double q2 = 0;
};

enum class Chart { v1, v2, w, v1_primed, v2_primed };

const char* to_string(Chart chart);

struct ChartValue {
  std::complex<double> z1;
  std::complex<double> z2;
  Chart chart = Chart::v1;
};

// The non-decreasing radial profile of the blowdown: x^{1/m} for x < eps1,
// 1 for x > eps2, and a smoothstep-in-the-exponent blend between. Identity
// verification samples only x < eps1, where the profile is a pure root.
double radial_profile(const LocalModelParams& params, double x);

// p2 + s*p1 - t
double p_hat(const LocalModelParams& params, const OrbitPoint& pt);

// (r1, r2, q1, q2) = (profile(p_hat)^k * p1, profile(p_hat) * p2, q1, q2).
// Exactly the identity where p_hat > eps2; maps p_hat == 0 to r1 = r2 = 0.
OrbitPoint blowdown_orbit_map(const LocalModelParams& params, const OrbitPoint& pt);

// Complex chart coordinates of pt. The primed charts divide by p2 (v1_primed)
// or p1 (v2_primed) and by p_hat; DomainError when those vanish, or when a
// radial quantity under a square root is negative.
ChartValue chart_eval(const LocalModelParams& params, const OrbitPoint& pt, Chart chart);

struct IdentityResidual {
  std::string name;
  double residual;
};

struct ResidualReport {
  std::vector<IdentityResidual> identities;

  double max_residual() const;
  bool pass(double tolerance) const { return max_residual() < tolerance; }
};

// Residuals |lhs - rhs| of the chart-level blowdown identities at one point:
// the map expressed in each unprimed and primed chart against direct
// evaluation at the image, the primed-chart transition, and the pullbacks of
// the invariant monomials z1(w)^i z2(w)^j for the supplied exponent pairs
// (which must satisfy m | i*k + j).
//
// Preconditions: 0 < p_hat < eps1 (so the radial profile is an exact root),
// p1, p2, p_hat at least 1e-6 away from vanishing, and q1, q2 in
// (0.05, 0.45). Fractional powers of chart values are taken along the branch
// determined by the point's angular lift; this coincides with the principal
// branch whenever the base's argument lies in the principal sheet, which the
// q-window guarantees for every first-vertex chart value.
ResidualReport verify_blowdown_identities(const LocalModelParams& params, const OrbitPoint& pt,
                                          const std::vector<std::pair<int, int>>& monomials);

// Same with the default monomials {(0,m), (m,0), (1,m-k)}.
ResidualReport verify_blowdown_identities(const LocalModelParams& params, const OrbitPoint& pt);

// Residual of the chart transition between adjacent vertices with edge
// vectors lambda1 = (1,0), lambda2 = (a,b), lambda3 = (c,d); needs b != 0 and
// a*d - b*c != 0. The middle edge is p2 + s*p1 - t = 0. Interior points only
// (p1, p2, p_hat positive with the same margins and q-window as above).
ResidualReport verify_general_transition(int a, int b, int c, int d, const OrbitPoint& pt,
                                         double s = 1.0, double t = 1.0);

// (k+1)/m - 1, exactly; zero iff the blowdown with these parameters is
// crepant. Requires 0 < k <= m.
Rational discrepancy_exponent(int k, int m);

// Deterministic sample of n points admissible for verify_blowdown_identities
// (and for the transition checks). The seed fully determines the set,
// independent of platform.
std::vector<OrbitPoint> sample_points(const LocalModelParams& params, std::size_t n,
                                      std::uint64_t seed);

}  // namespace qtoric::charts
