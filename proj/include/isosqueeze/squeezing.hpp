#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "isosqueeze/fock.hpp"
#include "isosqueeze/states.hpp"

namespace isosq::squeezing {

enum class Ladder { plus, minus };

/// <v| W |v> for an operator word W of at most four K+/K- factors, applied
/// right to left. The state is padded so raising never hits the truncation.
cplx expectation_K_word(const FockVector& v, std::span<const Ladder> word);
cplx expectation_K_word(const FockVector& v, std::initializer_list<Ladder> word);

struct QuadratureIdentities {
  double I1;
  double I2;
};

/// Normal-quadrature squeezing identities; I1 < 0 (I2 < 0) marks squeezing in
/// x (p). I1 + 1 = 2 Var(x), I2 + 1 = 2 Var(p).
QuadratureIdentities quadrature_identities(const FockVector& v);

struct AmplitudeSquaredIdentities {
  double I3;
  double I4;
};

/// Amplitude-squared (Hillery) squeezing identities for X ~ K+^2 + K-^2 and
/// P ~ i(K+^2 - K-^2).
AmplitudeSquaredIdentities amplitude_squared_identities(const FockVector& v);

struct QuadratureVariances {
  double var_x;
  double var_p;
};

/// Var(x), Var(p) for x = (K+ + K-)/sqrt2, p = i(K+ - K-)/sqrt2, from the
/// norms of x|v> and p|v> rather than from K-word expectations.
QuadratureVariances quadrature_variances(const FockVector& v);

struct QuadReport {
  double r = 0.0;
  double theta = 0.0;
  double I1 = 0.0;
  double I2 = 0.0;
  double I3 = 0.0;
  double I4 = 0.0;
  bool uncertainty_ok = true;
};

QuadReport quad_report(const states::SqueezeParams& p);

inline constexpr int kDefaultThetaSteps = 128;
inline constexpr int kDefaultRSteps = 64;

/// Evaluates quad_report on every (r, theta) cell, r-major.
std::vector<QuadReport> sweep(states::Kind kind, std::span<const double> r_values,
                              std::span<const double> theta_values, int n_max);

}  // namespace isosq::squeezing
