#include "qtoric/charts.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace qtoric::charts {

namespace {

constexpr double kTau = 6.283185307179586476925286766559;
constexpr double kVanishMargin = 1e-6;

// Magnitude-and-phase form, phase in full turns and not reduced mod 1.
// Fractional powers scale the carried phase, i.e. they follow the branch
// determined by the point's angular lift. Whenever the carried phase lies in
// (-1/2, 1/2] turns this is exactly the principal branch.
struct Phasor {
  double mag = 0;
  double turns = 0;

  std::complex<double> value() const { return std::polar(mag, kTau * turns); }
  Phasor pow(double e) const { return {std::pow(mag, e), turns * e}; }
  Phasor scaled(double r) const { return {mag * r, turns}; }

  friend Phasor operator*(const Phasor& a, const Phasor& b) {
    return {a.mag * b.mag, a.turns + b.turns};
  }
};

struct ChartPhasors {
  Phasor z1;
  Phasor z2;
};

void check_params(const LocalModelParams& params) {
  if (params.k < 1 || params.m < params.k) {
    throw DomainError("charts: need 0 < k <= m");
  }
  if (!(params.s > 0) || !(params.t > 0)) {
    throw DomainError("charts: edge coefficients s, t must be positive");
  }
  if (!(0 < params.eps1 && params.eps1 < params.eps2 && params.eps2 < 1)) {
    throw DomainError("charts: need 0 < eps1 < eps2 < 1");
  }
}

ChartPhasors eval_phasors(const LocalModelParams& params, const OrbitPoint& pt, Chart chart) {
  const double k = params.k;
  const double m = params.m;
  const double ph = p_hat(params, pt);
  switch (chart) {
    case Chart::v1:
      if (pt.p1 < 0 || ph < 0) {
        throw DomainError("chart v1: needs p1 >= 0 and p_hat >= 0");
      }
      return {{std::sqrt(pt.p1), pt.q1}, {std::sqrt(ph), pt.q2}};
    case Chart::v2:
      if (pt.p2 < 0 || ph < 0) {
        throw DomainError("chart v2: needs p2 >= 0 and p_hat >= 0");
      }
      return {{std::sqrt(ph), (m * pt.q1 + k * pt.q2) / k}, {std::sqrt(pt.p2), -pt.q1 / k}};
    case Chart::w:
      // Fields read as the image coordinates (r1, r2).
      if (pt.p1 < 0 || pt.p2 < 0) {
        throw DomainError("chart w: needs r1 >= 0 and r2 >= 0");
      }
      return {{std::sqrt(pt.p1), (m * pt.q1 + k * pt.q2) / m}, {std::sqrt(pt.p2), pt.q2 / m}};
    case Chart::v1_primed: {
      if (pt.p2 <= 0) {
        throw DomainError("chart v1': needs p2 > 0");
      }
      if (ph <= 0) {
        throw DomainError("chart v1': needs p_hat > 0");
      }
      const ChartPhasors base = eval_phasors(params, pt, Chart::v1);
      const double d = radial_profile(params, ph);
      return {base.z1.scaled(std::sqrt(1.0 / std::pow(pt.p2, k))),
              base.z2.scaled(std::sqrt(std::pow(d, m) * std::pow(pt.p2, m) / ph))};
    }
    case Chart::v2_primed: {
      if (pt.p1 <= 0) {
        throw DomainError("chart v2': needs p1 > 0");
      }
      if (ph <= 0) {
        throw DomainError("chart v2': needs p_hat > 0");
      }
      const ChartPhasors base = eval_phasors(params, pt, Chart::v2);
      const double d = radial_profile(params, ph);
      return {base.z1.scaled(std::sqrt(std::pow(d, m) * std::pow(pt.p1, m / k) / ph)),
              base.z2.scaled(std::sqrt(std::pow(pt.p1, -1.0 / k)))};
    }
  }
  throw DomainError("chart_eval: unknown chart");
}

double residual(const Phasor& lhs, const Phasor& rhs) {
  return std::abs(lhs.value() - rhs.value());
}

void require_window(double q1, double q2) {
  if (!(q1 > 0.05 && q1 < 0.45 && q2 > 0.05 && q2 < 0.45)) {
    throw DomainError("verification point: q coordinates must lie in (0.05, 0.45)");
  }
}

void require_interior(double p1, double p2, double ph) {
  if (p1 < kVanishMargin || p2 < kVanishMargin || ph < kVanishMargin) {
    throw DomainError("verification point: within 1e-6 of a vanishing locus");
  }
}

}  // namespace

const char* to_string(Chart chart) {
  switch (chart) {
    case Chart::v1: return "v1";
    case Chart::v2: return "v2";
    case Chart::w: return "w";
    case Chart::v1_primed: return "v1_primed";
    case Chart::v2_primed: return "v2_primed";
  }
  return "unknown";
}

double radial_profile(const LocalModelParams& params, double x) {
  check_params(params);
  if (x < 0) {
    throw DomainError("radial_profile: negative argument");
  }
  if (x < params.eps1) {
    return std::pow(x, 1.0 / params.m);
  }
  if (x > params.eps2) {
    return 1.0;
  }
  // Quintic smoothstep in the exponent: 1/m at eps1 down to 0 at eps2.
  const double u = (x - params.eps1) / (params.eps2 - params.eps1);
  const double s = u * u * u * (10.0 + u * (-15.0 + 6.0 * u));
  return std::pow(x, (1.0 - s) / params.m);
}

double p_hat(const LocalModelParams& params, const OrbitPoint& pt) {
  return pt.p2 + params.s * pt.p1 - params.t;
}

OrbitPoint blowdown_orbit_map(const LocalModelParams& params, const OrbitPoint& pt) {
  check_params(params);
  if (pt.p1 < 0 || pt.p2 < 0) {
    throw DomainError("blowdown_orbit_map: needs p1, p2 >= 0");
  }
  const double d = radial_profile(params, p_hat(params, pt));
  double scale1 = 1.0;
  for (int i = 0; i < params.k; ++i) {
    scale1 *= d;
  }
  return {scale1 * pt.p1, d * pt.p2, pt.q1, pt.q2};
}

ChartValue chart_eval(const LocalModelParams& params, const OrbitPoint& pt, Chart chart) {
  check_params(params);
  const ChartPhasors z = eval_phasors(params, pt, chart);
  return {z.z1.value(), z.z2.value(), chart};
}

double ResidualReport::max_residual() const {
  double worst = 0;
  for (const IdentityResidual& r : identities) {
    worst = std::max(worst, r.residual);
  }
  return worst;
}

ResidualReport verify_blowdown_identities(const LocalModelParams& params, const OrbitPoint& pt,
                                          const std::vector<std::pair<int, int>>& monomials) {
  check_params(params);
  const double ph = p_hat(params, pt);
  if (!(ph > 0 && ph < params.eps1)) {
    throw DomainError("verification point: needs 0 < p_hat < eps1");
  }
  require_interior(pt.p1, pt.p2, ph);
  require_window(pt.q1, pt.q2);

  const double k = params.k;
  const double m = params.m;
  const double d = radial_profile(params, ph);
  const ChartPhasors v1 = eval_phasors(params, pt, Chart::v1);
  const ChartPhasors v2 = eval_phasors(params, pt, Chart::v2);
  const ChartPhasors v1p = eval_phasors(params, pt, Chart::v1_primed);
  const ChartPhasors v2p = eval_phasors(params, pt, Chart::v2_primed);
  const ChartPhasors w = eval_phasors(params, blowdown_orbit_map(params, pt), Chart::w);

  ResidualReport report;
  auto add = [&report](std::string name, double r) {
    report.identities.push_back({std::move(name), r});
  };

  // The map through the unprimed charts at both ends of the deleted edge.
  add("blowdown_map.v1.z1",
      residual(w.z1, (v1.z1 * v1.z2.pow(k / m))
                         .scaled(std::sqrt(std::pow(d, k) / std::pow(ph, k / m)))));
  add("blowdown_map.v1.z2",
      residual(w.z2, v1.z2.pow(1 / m).scaled(std::sqrt(d * pt.p2 / std::pow(ph, 1 / m)))));
  add("blowdown_map.v2.z1",
      residual(w.z1, v2.z1.pow(k / m)
                         .scaled(std::sqrt(std::pow(d, k) * pt.p1 / std::pow(ph, k / m)))));
  add("blowdown_map.v2.z2",
      residual(w.z2, (v2.z1.pow(1 / m) * v2.z2).scaled(std::sqrt(d / std::pow(ph, 1 / m)))));

  // The same map through the primed charts, where it is monomial.
  add("blowdown_map.v1_primed.z1", residual(w.z1, v1p.z1 * v1p.z2.pow(k / m)));
  add("blowdown_map.v1_primed.z2", residual(w.z2, v1p.z2.pow(1 / m)));
  add("blowdown_map.v2_primed.z1", residual(w.z1, v2p.z1.pow(k / m)));
  add("blowdown_map.v2_primed.z2", residual(w.z2, v2p.z1.pow(1 / m) * v2p.z2));

  // Transition between the two primed charts.
  add("primed_transition.z1", residual(v2p.z1, v1p.z1.pow(m / k) * v1p.z2));
  add("primed_transition.z2", residual(v2p.z2, v1p.z1.pow(-1 / k)));

  // Pullbacks of invariant monomials z1(w)^i z2(w)^j; the pulled-back
  // exponents are integers exactly when m | i*k + j.
  for (const auto& [i, j] : monomials) {
    if (i < 0 || j < 0) {
      throw DomainError("invariant monomial exponents must be nonnegative");
    }
    if ((i * params.k + j) % params.m != 0) {
      throw DomainError("invariant monomial (" + std::to_string(i) + "," + std::to_string(j) +
                        ") needs m | i*k + j");
    }
    const int e = (i * params.k + j) / params.m;
    add("invariant_pullback(" + std::to_string(i) + "," + std::to_string(j) + ")",
        residual(w.z1.pow(i) * w.z2.pow(j), v1p.z1.pow(i) * v1p.z2.pow(e)));
  }
  return report;
}

ResidualReport verify_blowdown_identities(const LocalModelParams& params, const OrbitPoint& pt) {
  return verify_blowdown_identities(params, pt,
                                    {{0, params.m}, {params.m, 0}, {1, params.m - params.k}});
}

ResidualReport verify_general_transition(int a, int b, int c, int d, const OrbitPoint& pt,
                                         double s, double t) {
  if (b == 0) {
    throw DomainError("transition: lambda1 and lambda2 must be independent (b != 0)");
  }
  const double delta = double(a) * d - double(b) * c;
  if (delta == 0) {
    throw DomainError("transition: lambda2 and lambda3 must be independent (a*d - b*c != 0)");
  }
  if (!(s > 0) || !(t > 0)) {
    throw DomainError("transition: edge coefficients s, t must be positive");
  }
  const double ph = pt.p2 + s * pt.p1 - t;
  require_interior(pt.p1, pt.p2, ph);
  require_window(pt.q1, pt.q2);

  const Phasor z1v1{std::sqrt(pt.p1), pt.q1 - (double(a) / b) * pt.q2};
  const Phasor z2v1{std::sqrt(ph), pt.q2 / b};
  const Phasor z1v2{std::sqrt(ph), (d * pt.q1 - c * pt.q2) / delta};
  const Phasor z2v2{std::sqrt(pt.p2), (-b * pt.q1 + a * pt.q2) / delta};

  ResidualReport report;
  report.identities.push_back(
      {"transition.z1",
       residual(z1v2, (z1v1.pow(d / delta) * z2v1).scaled(std::pow(pt.p1, -d / (2 * delta))))});
  report.identities.push_back(
      {"transition.z2",
       residual(z2v2, z1v1.pow(-b / delta)
                          .scaled(std::sqrt(pt.p2) * std::pow(pt.p1, b / (2 * delta))))});
  return report;
}

Rational discrepancy_exponent(int k, int m) {
  if (k < 1 || m < k) {
    throw DomainError("discrepancy_exponent: need 0 < k <= m");
  }
  return Rational(k + 1, m) - 1;
}

std::vector<OrbitPoint> sample_points(const LocalModelParams& params, std::size_t n,
                                      std::uint64_t seed) {
  check_params(params);
  const double ph_lo = 1e-3;
  const double ph_hi = 0.9 * params.eps1;
  if (ph_hi <= ph_lo) {
    throw DomainError("sample_points: eps1 too small to sample below");
  }
  std::mt19937_64 rng(seed);
  // Explicit u64 -> [0,1) mapping; std::uniform_real_distribution is not
  // pinned down by the standard.
  auto unit = [&rng] { return double(rng() >> 11) * 0x1.0p-53; };
  std::vector<OrbitPoint> points;
  points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    OrbitPoint pt;
    const double ph = ph_lo + (ph_hi - ph_lo) * unit();
    pt.p1 = (0.05 + 0.85 * unit()) * (params.t / params.s);  // s*p1 in [0.05t, 0.9t]
    pt.p2 = ph + params.t - params.s * pt.p1;                // >= ph + 0.1t
    pt.q1 = 0.06 + 0.38 * unit();
    pt.q2 = 0.06 + 0.38 * unit();
    if (pt.p1 < kVanishMargin || pt.p2 < kVanishMargin) {
      throw DomainError("sample_points: s, t leave no room away from the axes");
    }
    points.push_back(pt);
  }
  return points;
}

}  // namespace qtoric::charts
