#include "isosqueeze/states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "isosqueeze/errors.hpp"
#include "isosqueeze/specfun.hpp"

namespace isosq::states {

using specfun::log_factorial;

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr int kMaxAutoNMax = 4000;

// log |c_n|^2 up to the normalisation constant.
double nonlinear_log_weight(int n, double r) {
  if (n == 0) return -log_factorial(2) - log_factorial(3);
  if (r == 0.0) return kNegInf;
  return 2.0 * n * std::log(r) - 2.0 * n * std::log(2.0) - 2.0 * log_factorial(n) + log_factorial(2 * n) -
         log_factorial(2 * n + 2) - log_factorial(2 * n + 3);
}

double squeezed_log_weight(int n, double modulus) {
  if (n == 0) return 0.0;
  if (modulus == 0.0) return kNegInf;
  return 2.0 * n * std::log(modulus) - 2.0 * n * std::log(2.0) - 2.0 * log_factorial(n) + log_factorial(2 * n);
}

struct LogSum {
  double log_total;
  std::vector<double> log_weights;
};

// log sum exp with the running maximum factored out and Kahan compensation.
LogSum log_sum(std::vector<double> w) {
  const double top = *std::max_element(w.begin(), w.end());
  double sum = 0.0;
  double carry = 0.0;
  for (double x : w) {
    const double y = (x == kNegInf ? 0.0 : std::exp(x - top)) - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  return {top + std::log(sum), std::move(w)};
}

LogSum weights(Kind kind, double r, int n_max) {
  std::vector<double> w(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    w[static_cast<std::size_t>(n)] = kind == Kind::nonlinear ? nonlinear_log_weight(n, r) : squeezed_log_weight(n, r);
  }
  return log_sum(std::move(w));
}

double tail_from(const LogSum& s) {
  double tail = 0.0;
  const auto n = s.log_weights.size();
  for (std::size_t i = n > kTailTerms ? n - kTailTerms : 0; i < n; ++i) {
    if (s.log_weights[i] != kNegInf) tail += std::exp(s.log_weights[i] - s.log_total);
  }
  return tail;
}

FockVector assemble(const SqueezeParams& p, int n_max) {
  const auto s = weights(p.kind, p.r, n_max);
  const std::size_t dim = 2 * static_cast<std::size_t>(n_max) + 1 + kHeadroom;
  std::vector<cplx> amps(dim);
  for (int n = 0; n <= n_max; ++n) {
    const double lw = s.log_weights[static_cast<std::size_t>(n)];
    if (lw == kNegInf) continue;
    const double mag = std::exp(0.5 * (lw - s.log_total));
    amps[2 * static_cast<std::size_t>(n)] = std::polar(mag, n * p.theta);
  }
  return FockVector(std::move(amps), tail_from(s));
}

}  // namespace

void validate(const SqueezeParams& p) {
  if (!std::isfinite(p.r) || !std::isfinite(p.theta)) throw std::invalid_argument("squeeze parameters must be finite");
  if (p.r < 0.0) throw std::invalid_argument("squeeze modulus must be non-negative");
  if (p.n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  if (p.kind == Kind::squeezed && p.r >= 1.0) {
    throw RadiusViolation("squeezed-vacuum modulus must be below 1 (normalisation series radius)");
  }
}

int effective_n_max(const SqueezeParams& p) {
  validate(p);
  if (p.kind != Kind::squeezed || p.r <= kAutoRaiseModulus) return p.n_max;
  int n = p.n_max;
  while (n < kMaxAutoNMax && tail_from(weights(p.kind, p.r, n)) >= kAutoTailTarget) {
    n = std::min(kMaxAutoNMax, n + std::max(8, n / 4));
  }
  return n;
}

FockVector build_nonlinear_squeezed(const SqueezeParams& p) {
  if (p.kind != Kind::nonlinear) throw std::invalid_argument("build_nonlinear_squeezed: wrong kind");
  validate(p);
  return assemble(p, p.n_max);
}

FockVector build_squeezed(const SqueezeParams& p) {
  if (p.kind != Kind::squeezed) throw std::invalid_argument("build_squeezed: wrong kind");
  return assemble(p, effective_n_max(p));
}

FockVector build_state(const SqueezeParams& p) {
  return p.kind == Kind::nonlinear ? build_nonlinear_squeezed(p) : build_squeezed(p);
}

double nonlinear_norm_constant(double r, int n_max) {
  return std::exp(-0.5 * weights(Kind::nonlinear, r, n_max).log_total);
}

double squeezed_norm_constant_series(double modulus, int n_max) {
  if (modulus >= 1.0) throw RadiusViolation("squeezed_norm_constant_series: modulus >= 1");
  return std::exp(-0.5 * weights(Kind::squeezed, modulus, n_max).log_total);
}

double squeezed_norm_constant_closed(double modulus) {
  if (modulus >= 1.0) throw RadiusViolation("squeezed_norm_constant_closed: modulus >= 1");
  return std::pow(1.0 - modulus * modulus, 0.25);
}

double tail_mass(const SqueezeParams& p) {
  return tail_from(weights(p.kind, p.r, effective_n_max(p)));
}

double dual_ratio_term(int n) {
  const double m = 2.0 * n;
  return m / ((m - 1.0) * (m + 1.0) * (m + 2.0) * (m + 2.0) * (m + 3.0));
}

DualSeriesReport dual_series_diagnosis(int n_terms) {
  if (n_terms < 2) throw std::invalid_argument("dual_series_diagnosis: need at least 2 terms");
  DualSeriesReport out;
  out.x_seq.reserve(static_cast<std::size_t>(n_terms));
  for (int n = 1; n <= n_terms; ++n) out.x_seq.push_back(dual_ratio_term(n));
  out.monotone_decreasing = std::is_sorted(out.x_seq.rbegin(), out.x_seq.rend()) &&
                            std::adjacent_find(out.x_seq.begin(), out.x_seq.end()) == out.x_seq.end();
  // Monotone decreasing and positive: the last term bounds the limit from above.
  out.limit_estimate = out.x_seq.back();
  out.verdict = out.monotone_decreasing && out.limit_estimate < 1e-6 ? Verdict::divergent : Verdict::convergent;
  return out;
}

nlohmann::json to_json(const DualSeriesReport& report) {
  return {{"n_terms", report.x_seq.size()},
          {"x_seq", report.x_seq},
          {"limit_estimate", report.limit_estimate},
          {"monotone_decreasing", report.monotone_decreasing},
          {"verdict", report.verdict == Verdict::divergent ? "divergent" : "convergent"}};
}

}  // namespace isosq::states
