#include "isosqueeze/dist.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "isosqueeze/errors.hpp"
#include "isosqueeze/specfun.hpp"

namespace isosq::dist {

using specfun::log_factorial;

namespace {

constexpr double kPi = std::numbers::pi;

// Support of a state in K-indices (level - 3) and the amplitudes there.
struct Support {
  std::vector<int> index;
  std::vector<cplx> amp;  // dense over 0..max index
  int top = -1;
};

// Relative amplitude below which a level is dropped from the double sums.
// Kernel growth for s <= 0.5 is at most ~3^(k/2) at k <= 143, far below 1e80.
constexpr double kNegligibleAmplitude = 1e-80;

Support support_of(const FockVector& v) {
  Support s;
  s.amp.assign(v.amps().begin(), v.amps().end());
  double largest = 0.0;
  for (const auto& a : s.amp) largest = std::max(largest, std::abs(a));
  for (std::size_t i = 0; i < s.amp.size(); ++i) {
    if (std::abs(s.amp[i]) < kNegligibleAmplitude * largest) s.amp[i] = cplx{};
    if (s.amp[i] != cplx{}) {
      s.index.push_back(static_cast<int>(i));
      s.top = static_cast<int>(i);
    }
  }
  s.amp.resize(static_cast<std::size_t>(s.top + 1));
  return s;
}

bool diagonal_occupied(const Support& s, int d) {
  for (int k : s.index) {
    if (k - d >= 0 && s.amp[static_cast<std::size_t>(k - d)] != cplx{}) return true;
  }
  return false;
}

// |w|^d sqrt(j! / (j+d)!) in log form; -inf when w = 0 and d > 0.
double log_ladder_weight(double log_abs_w, int j, int d) {
  if (d == 0) return 0.0;
  return d * log_abs_w + 0.5 * (log_factorial(j) - log_factorial(j + d));
}

}  // namespace

cplx quadrature_wavefunction(const FockVector& v, double x, double phi) {
  const auto a = v.amps();
  const int top = static_cast<int>(a.size()) - 1;
  const auto h = specfun::normalized_hermite_sequence(std::max(top, 0), x);
  cplx sum{};
  for (int k = 0; k <= top; ++k) {
    if (a[static_cast<std::size_t>(k)] == cplx{}) continue;
    sum += a[static_cast<std::size_t>(k)] * h[static_cast<std::size_t>(k)] * std::polar(1.0, -k * phi);
  }
  return sum * std::exp(-0.5 * x * x) / std::pow(kPi, 0.25);
}

double quadrature_probability(const FockVector& v, double x, double phi) {
  return std::norm(quadrature_wavefunction(v, x, phi));
}

DistGrid quadrature_grid(const FockVector& v, const std::vector<double>& xs, const std::vector<double>& phis) {
  DistGrid g{xs, phis, std::nullopt, {}};
  g.values.reserve(xs.size() * phis.size());
  for (double x : xs) {
    for (double phi : phis) g.values.push_back(quadrature_probability(v, x, phi));
  }
  return g;
}

namespace {

// a_n(x) = (r/4)^n H_{2n}(x) / (n! sqrt((2n+2)! (2n+3)!)), evaluated through the
// normalised Hermite functions to stay finite at large n.
std::vector<double> closed_form_coefficients(double r, int n_max, double x) {
  const auto h = specfun::normalized_hermite_sequence(2 * n_max, x);
  std::vector<double> a(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    const double hn = h[2 * static_cast<std::size_t>(n)];
    if (n > 0 && r == 0.0) break;
    const double log_scale = (n > 0 ? n * std::log(r / 2.0) : 0.0) + 0.5 * log_factorial(2 * n) - log_factorial(n) -
                             0.5 * (log_factorial(2 * n + 2) + log_factorial(2 * n + 3));
    a[static_cast<std::size_t>(n)] = hn * std::exp(log_scale);
  }
  return a;
}

double closed_form_sum(const std::vector<double>& a, double psi) {
  double diag = 0.0;
  double off = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) {
    if (a[n] == 0.0) continue;
    diag += a[n] * a[n];
    for (std::size_t m = n + 1; m < a.size(); ++m) {
      if (a[m] == 0.0) continue;
      off += a[n] * a[m] * std::cos((static_cast<double>(m) - static_cast<double>(n)) * psi);
    }
  }
  return diag + 2.0 * off;
}

void require_nonlinear(const states::SqueezeParams& p) {
  if (p.kind != states::Kind::nonlinear) {
    throw std::invalid_argument("closed-form quadrature distribution needs a nonlinear squeezed state");
  }
  states::validate(p);
}

}  // namespace

double quadrature_probability_closed(const states::SqueezeParams& p, double x, double phi) {
  require_nonlinear(p);
  const double norm = states::nonlinear_norm_constant(p.r, p.n_max);
  const auto a = closed_form_coefficients(p.r, p.n_max, x);
  return norm * norm * std::exp(-x * x) / std::sqrt(kPi) * closed_form_sum(a, 2.0 * phi - p.theta);
}

DistGrid quadrature_distribution_closed(const states::SqueezeParams& p, const std::vector<double>& xs,
                                        const std::vector<double>& phis) {
  require_nonlinear(p);
  const double norm = states::nonlinear_norm_constant(p.r, p.n_max);
  DistGrid g{xs, phis, std::nullopt, {}};
  g.values.reserve(xs.size() * phis.size());
  for (double x : xs) {
    const auto a = closed_form_coefficients(p.r, p.n_max, x);
    const double pre = norm * norm * std::exp(-x * x) / std::sqrt(kPi);
    for (double phi : phis) g.values.push_back(pre * closed_form_sum(a, 2.0 * phi - p.theta));
  }
  return g;
}

cplx displacement_matrix_element(int row_level, int col_level, cplx lambda) {
  if (row_level < kBaseLevel || col_level < kBaseLevel) {
    throw std::invalid_argument("displacement_matrix_element: level below 3");
  }
  const int k = row_level - kBaseLevel;
  const int l = col_level - kBaseLevel;
  const double x = std::norm(lambda);
  const int lo = std::min(k, l);
  const int d = std::abs(k - l);
  // Lower-triangular branch carries lambda^d, upper carries (-conj lambda)^d,
  // which makes D(lambda)^dagger = D(-lambda) hold elementwise.
  const cplx w = k >= l ? lambda : -std::conj(lambda);
  if (d > 0 && lambda == cplx{}) return {};
  const double log_mag = (d > 0 ? log_ladder_weight(std::log(std::abs(w)), lo, d) : 0.0) - 0.5 * x;
  const double phase = d > 0 ? d * std::arg(w) : 0.0;
  return std::polar(std::exp(log_mag), phase) * specfun::assoc_laguerre(lo, d, x);
}

cplx displacement_element(int m, int n, cplx lambda) {
  if (m < 0 || n < 0) throw std::invalid_argument("displacement_element: negative half-index");
  return displacement_matrix_element(2 * m + kBaseLevel, 2 * n + kBaseLevel, lambda);
}

cplx characteristic_function(const FockVector& v, cplx lambda, double s) {
  const auto sup = support_of(v);
  if (sup.top < 0) throw ZeroVector("characteristic_function: empty state");
  const double x = std::norm(lambda);
  const double log_abs = lambda == cplx{} ? 0.0 : std::log(std::abs(lambda));
  const double arg_low = std::arg(lambda);
  const double arg_up = std::arg(-std::conj(lambda));
  cplx total{};
  for (int d = 0; d <= sup.top; ++d) {
    if (d > 0 && lambda == cplx{}) break;
    if (!diagonal_occupied(sup, d)) continue;
    const auto lag = specfun::assoc_laguerre_sequence(sup.top - d, d, x);
    for (int j = 0; j + d <= sup.top; ++j) {
      const cplx lo = sup.amp[static_cast<std::size_t>(j)];
      const cplx hi = sup.amp[static_cast<std::size_t>(j + d)];
      if (lo == cplx{} || hi == cplx{}) continue;
      const double mag = std::exp(log_ladder_weight(log_abs, j, d) - 0.5 * x) * lag[static_cast<std::size_t>(j)];
      // <j+d|D|j> weighted by conj(c_{j+d}) c_j, and <j|D|j+d> by conj(c_j) c_{j+d}.
      total += std::conj(hi) * lo * std::polar(mag, d * arg_low);
      if (d > 0) total += std::conj(lo) * hi * std::polar(mag, d * arg_up);
    }
  }
  return total * std::exp(0.5 * s * x);
}

double quasi_probability(const FockVector& v, cplx z, double s) {
  if (!(s < 1.0)) throw SParameterOutOfRange("quasi_probability: s must be below 1");
  const auto sup = support_of(v);
  if (sup.top < 0) throw ZeroVector("quasi_probability: empty state");

  const double z2 = std::norm(z);
  const double y = (s + 1.0) / (s - 1.0);
  const double w = 4.0 * z2 / ((1.0 - s) * (1.0 - s));
  // Coefficient of |k><l| (k >= l) in rho is c_k conj(c_l); its s-ordered
  // kernel is proportional to sqrt(l!/k!) (2 conj(z)/(1-s))^(k-l) y^l L_l^(k-l).
  const cplx ladder = 2.0 * std::conj(z) / (1.0 - s);
  const double log_abs = z2 > 0.0 ? std::log(std::abs(ladder)) : 0.0;
  const double arg = std::arg(ladder);

  double total = 0.0;
  std::vector<double> scaled(static_cast<std::size_t>(sup.top) + 1);
  for (int d = 0; d <= sup.top; ++d) {
    if (d > 0 && z2 == 0.0) break;
    if (!diagonal_occupied(sup, d)) continue;
    // M_j = y^j L_j^d(x) with x y = -w, by the Laguerre recurrence rescaled by y.
    const int len = sup.top - d;
    scaled[0] = 1.0;
    if (len >= 1) scaled[1] = (1.0 + d) * y + w;
    for (int j = 1; j < len; ++j) {
      scaled[static_cast<std::size_t>(j) + 1] =
          (((2.0 * j + 1.0 + d) * y + w) * scaled[static_cast<std::size_t>(j)] -
           (j + d) * y * y * scaled[static_cast<std::size_t>(j) - 1]) /
          (j + 1.0);
    }
    double diag_sum = 0.0;
    for (int j = 0; j <= len; ++j) {
      const cplx lo = sup.amp[static_cast<std::size_t>(j)];
      const cplx hi = sup.amp[static_cast<std::size_t>(j + d)];
      if (lo == cplx{} || hi == cplx{}) continue;
      const cplx rho = hi * std::conj(lo);
      const cplx kernel =
          std::polar(std::exp(log_ladder_weight(log_abs, j, d)), d * arg) * scaled[static_cast<std::size_t>(j)];
      // The |l><k| partner contributes the complex conjugate.
      diag_sum += d == 0 ? (rho * kernel).real() : 2.0 * (rho * kernel).real();
    }
    total += diag_sum;
  }
  return 2.0 / (kPi * (1.0 - s)) * std::exp(-2.0 * z2 / (1.0 - s)) * total;
}

DistGrid quasi_probability_grid(const FockVector& v, const std::vector<double>& xs, const std::vector<double>& ps,
                                double s) {
  if (!(s < 1.0)) throw SParameterOutOfRange("quasi_probability_grid: s must be below 1");
  DistGrid g{xs, ps, s, {}};
  g.values.reserve(xs.size() * ps.size());
  for (double x : xs) {
    for (double p : ps) g.values.push_back(quasi_probability(v, cplx(x, p), s));
  }
  return g;
}

}  // namespace isosq::dist
