#include "isosqueeze/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "isosqueeze/errors.hpp"
#include "isosqueeze/specfun.hpp"

namespace isosq::stats {

namespace {

constexpr double kA3DenominatorFloor = 1e-14;

double falling(double k, int j) {
  double p = 1.0;
  for (int i = 0; i < j; ++i) p *= (k - i);
  return p;
}

template <class Weight>
double expect(const FockVector& v, Weight w) {
  double s = 0.0;
  const auto a = v.amps();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double p = std::norm(a[i]);
    if (p != 0.0) s += w(static_cast<double>(i)) * p;
  }
  return s;
}

void check_order(int j) {
  if (j < 1 || j > 4) throw std::invalid_argument("moment order must be in 1..4");
}

}  // namespace

std::vector<LevelProbability> photon_distribution(const FockVector& v) {
  std::vector<LevelProbability> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back({kBaseLevel + static_cast<int>(i), std::norm(v.amps()[i])});
  }
  return out;
}

K0Moments k0_moments(const FockVector& v) {
  return {expect(v, [](double k) { return k; }), expect(v, [](double k) { return k * k; })};
}

double mandel_Q(const FockVector& v) {
  const auto [mean, mean_sq] = k0_moments(v);
  if (mean <= 0.0) throw UndefinedMoment("mandel_Q: <K0> = 0");
  return mean_sq / mean - mean - 1.0;
}

double g2_zero(const FockVector& v) {
  const auto [mean, mean_sq] = k0_moments(v);
  if (mean <= 0.0) throw UndefinedMoment("g2_zero: <K0> = 0");
  return (mean_sq - mean) / (mean * mean);
}

double factorial_moment(const FockVector& v, int j) {
  check_order(j);
  return expect(v, [j](double k) { return falling(k, j); });
}

double power_moment(const FockVector& v, int j) {
  check_order(j);
  return expect(v, [j](double k) { return std::pow(k, j); });
}

A3Parts a3_parts(const FockVector& v) {
  std::array<double, 5> m{1.0};
  std::array<double, 5> mu{1.0};
  for (int j = 1; j <= 4; ++j) {
    m[j] = factorial_moment(v, j);
    mu[j] = power_moment(v, j);
  }
  const std::array<double, 9> mm{m[0], m[1], m[2], m[1], m[2], m[3], m[2], m[3], m[4]};
  const std::array<double, 9> mum{mu[0], mu[1], mu[2], mu[1], mu[2], mu[3], mu[2], mu[3], mu[4]};
  A3Parts parts{specfun::det3(mm), specfun::det3(mum), 0.0};

  // mu^(3) is a Hankel matrix of moments of a probability measure, hence PSD.
  const double scale = std::max(1.0, mu[2] * mu[4]);
  if (parts.det_mu < -1e-10 * scale) throw std::logic_error("a3: power-moment determinant negative");

  const double den = parts.det_mu - parts.det_m;
  if (std::abs(den) < kA3DenominatorFloor) throw UndefinedA3("a3: det mu - det m vanishes");
  parts.value = parts.det_m / den;
  return parts;
}

double a3_parameter(const FockVector& v) { return a3_parts(v).value; }

MomentTable moment_table(const FockVector& v) {
  MomentTable t;
  const auto km = k0_moments(v);
  t.mean_K0 = km.mean;
  t.mean_K0_sq = km.mean_sq;
  for (int j = 1; j <= 4; ++j) {
    t.m[j - 1] = factorial_moment(v, j);
    t.mu[j - 1] = power_moment(v, j);
  }
  if (km.mean > 0.0) {
    t.Q = km.mean_sq / km.mean - km.mean - 1.0;
    t.g2 = (km.mean_sq - km.mean) / (km.mean * km.mean);
  }
  try {
    t.A3 = a3_parameter(v);
  } catch (const UndefinedA3&) {
  }
  return t;
}

}  // namespace isosq::stats
