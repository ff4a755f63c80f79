#pragma once

#include <vector>

#include "isosqueeze/fock.hpp"

namespace isosq::states {

/// Which squeezing construction: the non-unitary rescaled-ladder operator
/// (nonlinear squeezed states) or the unitary Heisenberg-pair operator.
enum class Kind { nonlinear, squeezed };

/// Default half-index truncation; top populated level is 2 * n_max + 3.
inline constexpr int kDefaultNMax = 70;

/// Stored zero levels above the top populated level, so that words of up to
/// four raising operators are applied without truncation loss.
inline constexpr int kHeadroom = 4;

/// Number of trailing series terms summed into the tail diagnostic.
inline constexpr int kTailTerms = 5;

/// Squeezed-vacuum moduli above this get their truncation raised until the
/// tail diagnostic falls below kAutoTailTarget.
inline constexpr double kAutoRaiseModulus = 0.7;
inline constexpr double kAutoTailTarget = 1e-16;

struct SqueezeParams {
  Kind kind = Kind::nonlinear;
  double r = 0.0;      ///< modulus of beta (nonlinear) or xi (squeezed)
  double theta = 0.0;  ///< phase in radians
  int n_max = kDefaultNMax;

  [[nodiscard]] cplx parameter() const { return std::polar(r, theta); }
};

/// Throws std::invalid_argument / RadiusViolation on invalid parameters.
void validate(const SqueezeParams& p);

/// Amplitudes ordered from level 3 upward; levels 3 + odd carry exact zeros.
/// The result is normalised and tail_bound holds tail_mass(p).
FockVector build_nonlinear_squeezed(const SqueezeParams& p);
FockVector build_squeezed(const SqueezeParams& p);
FockVector build_state(const SqueezeParams& p);

/// Truncation actually used by build_state (raised for large |xi|).
int effective_n_max(const SqueezeParams& p);

/// N_beta by compensated log-space summation of the normalisation series.
double nonlinear_norm_constant(double r, int n_max);

/// N_xi from the truncated series and from the closed form (1 - |xi|^2)^(1/4).
double squeezed_norm_constant_series(double modulus, int n_max);
double squeezed_norm_constant_closed(double modulus);

/// Probability in the last kTailTerms retained series terms.
double tail_mass(const SqueezeParams& p);

enum class Verdict { divergent, convergent };

struct DualSeriesReport {
  std::vector<double> x_seq;  ///< x_1 .. x_N
  double limit_estimate = 0.0;
  bool monotone_decreasing = false;
  Verdict verdict = Verdict::convergent;
};

/// x_n = 2n / ((2n-1)(2n+1)(2n+2)^2(2n+3)), the inverse term ratio of the
/// dual-state normalisation series. A vanishing limit means zero radius of
/// convergence, so the dual states cannot be normalised.
double dual_ratio_term(int n);
DualSeriesReport dual_series_diagnosis(int n_terms);

nlohmann::json to_json(const DualSeriesReport& report);

}  // namespace isosq::states
