#pragma once

#include <array>
#include <optional>
#include <vector>

#include "isosqueeze/fock.hpp"

namespace isosq::stats {

struct LevelProbability {
  int level;
  double probability;
};

/// |amplitude|^2 for every stored level.
std::vector<LevelProbability> photon_distribution(const FockVector& v);

/// <K0> and <K0^2>, K0 = K+K- having eigenvalue level - 3.
struct K0Moments {
  double mean;
  double mean_sq;
};
K0Moments k0_moments(const FockVector& v);

/// Throw UndefinedMoment when <K0> = 0.
double mandel_Q(const FockVector& v);
double g2_zero(const FockVector& v);

/// Normally ordered moment <K+^j K-^j> = sum k(k-1)...(k-j+1) P(k), j = 1..4.
double factorial_moment(const FockVector& v, int j);

/// <(K+K-)^j> = <K0^j>, j = 1..4.
double power_moment(const FockVector& v, int j);

struct A3Parts {
  double det_m;
  double det_mu;
  double value;
};

/// Determinant ratio det m / (det mu - det m) over the 3x3 Hankel matrices of
/// factorial moments m_j and power moments mu_j. Throws UndefinedA3 when the
/// denominator is below 1e-14 in magnitude.
A3Parts a3_parts(const FockVector& v);
double a3_parameter(const FockVector& v);

struct MomentTable {
  double mean_K0 = 0.0;
  double mean_K0_sq = 0.0;
  std::array<double, 4> m{};
  std::array<double, 4> mu{};
  std::optional<double> Q;
  std::optional<double> g2;
  std::optional<double> A3;
};

/// All moments of one state. Undefined quantities are left empty instead of
/// throwing so that parameter sweeps can pass through degenerate points.
MomentTable moment_table(const FockVector& v);

}  // namespace isosq::stats
