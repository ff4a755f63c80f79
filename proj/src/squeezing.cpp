#include "isosqueeze/squeezing.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "isosqueeze/algebra.hpp"

namespace isosq::squeezing {

namespace {

constexpr double kImagTolerance = 1e-10;

FockVector padded(const FockVector& v, std::size_t extra) {
  std::vector<cplx> a(v.amps().begin(), v.amps().end());
  a.resize(a.size() + extra);
  return FockVector(std::move(a), v.tail_bound());
}

double real_part(cplx z, const char* what) {
  if (std::abs(z.imag()) > kImagTolerance * std::max(1.0, std::abs(z.real()))) {
    throw std::logic_error(std::string(what) + ": imaginary residue above tolerance");
  }
  return z.real();
}

using enum Ladder;

}  // namespace

cplx expectation_K_word(const FockVector& v, std::span<const Ladder> word) {
  if (word.size() > 4) throw std::invalid_argument("expectation_K_word: word longer than 4");
  auto w = padded(v, word.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    w = algebra::apply(*it == plus ? algebra::K_plus : algebra::K_minus, w);
  }
  return inner_product(v, w);
}

cplx expectation_K_word(const FockVector& v, std::initializer_list<Ladder> word) {
  return expectation_K_word(v, std::span<const Ladder>(word.begin(), word.size()));
}

QuadratureIdentities quadrature_identities(const FockVector& v) {
  const cplx km = expectation_K_word(v, {minus});
  const cplx kp = expectation_K_word(v, {plus});
  const cplx km2 = expectation_K_word(v, {minus, minus});
  const cplx kp2 = expectation_K_word(v, {plus, plus});
  const cplx n = expectation_K_word(v, {plus, minus});
  const cplx common = -2.0 * km * kp + 2.0 * n;
  const cplx swing = km2 + kp2 - km * km - kp * kp;
  return {real_part(swing + common, "I1"), real_part(-swing + common, "I2")};
}

AmplitudeSquaredIdentities amplitude_squared_identities(const FockVector& v) {
  const cplx km4 = expectation_K_word(v, {minus, minus, minus, minus});
  const cplx kp4 = expectation_K_word(v, {plus, plus, plus, plus});
  const cplx km2 = expectation_K_word(v, {minus, minus});
  const cplx kp2 = expectation_K_word(v, {plus, plus});
  const cplx normal = expectation_K_word(v, {plus, plus, minus, minus});
  const cplx anti = expectation_K_word(v, {minus, minus, plus, plus});
  const cplx n = expectation_K_word(v, {plus, minus});
  const cplx swing = km4 + kp4 - km2 * km2 - kp2 * kp2;
  const cplx common = -2.0 * km2 * kp2 + normal + anti;
  return {real_part(0.25 * (swing + common) - n - 0.5, "I3"), real_part(0.25 * (-swing + common) - n - 0.5, "I4")};
}

QuadratureVariances quadrature_variances(const FockVector& v) {
  const auto w = padded(v, 1);
  const auto up = algebra::apply(algebra::K_plus, w);
  const auto down = algebra::apply(algebra::K_minus, w);
  const double s = 1.0 / std::sqrt(2.0);
  std::vector<cplx> xa(w.size()), pa(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    xa[i] = s * (up.amps()[i] + down.amps()[i]);
    pa[i] = cplx(0.0, s) * (up.amps()[i] - down.amps()[i]);
  }
  const FockVector xv(std::move(xa)), pv(std::move(pa));
  const double mean_x = inner_product(w, xv).real();
  const double mean_p = inner_product(w, pv).real();
  const double x2 = inner_product(xv, xv).real();
  const double p2 = inner_product(pv, pv).real();
  return {x2 - mean_x * mean_x, p2 - mean_p * mean_p};
}

QuadReport quad_report(const states::SqueezeParams& p) {
  const auto v = states::build_state(p);
  const auto q = quadrature_identities(v);
  const auto a = amplitude_squared_identities(v);
  QuadReport out{p.r, p.theta, q.I1, q.I2, a.I3, a.I4, true};
  out.uncertainty_ok = (q.I1 + 1.0) * (q.I2 + 1.0) >= 1.0 - 1e-9;
  return out;
}

std::vector<QuadReport> sweep(states::Kind kind, std::span<const double> r_values,
                              std::span<const double> theta_values, int n_max) {
  std::vector<QuadReport> out;
  out.reserve(r_values.size() * theta_values.size());
  for (double r : r_values) {
    for (double th : theta_values) out.push_back(quad_report({kind, r, th, n_max}));
  }
  return out;
}

}  // namespace isosq::squeezing
