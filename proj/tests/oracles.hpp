#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the library code paths it is used to check.

#include <cmath>
#include <complex>
#include <numbers>
#include <utility>
#include <vector>

namespace isosq::oracle {

/// ln n! as a plain running sum of logs.
inline double log_factorial_sum(int n) {
  long double s = 0.0L;
  for (int k = 2; k <= n; ++k) s += std::log(static_cast<long double>(k));
  return static_cast<double>(s);
}

/// H_n(x) = n! sum_m (-1)^m (2x)^(n-2m) / (m! (n-2m)!).
inline double hermite_series(int n, double x) {
  long double s = 0.0L;
  for (int m = 0; 2 * m <= n; ++m) {
    long double t = std::pow(2.0L * x, n - 2 * m);
    t *= std::tgamma(static_cast<long double>(n) + 1) /
         (std::tgamma(static_cast<long double>(m) + 1) * std::tgamma(static_cast<long double>(n - 2 * m) + 1));
    s += (m % 2 ? -t : t);
  }
  return static_cast<double>(s);
}

/// L_n^k(x) = sum_j (-1)^j C(n+k, n-j) x^j / j!.
inline double laguerre_series(int n, int k, double x) {
  long double s = 0.0L;
  for (int j = 0; j <= n; ++j) {
    const long double binom = std::tgamma(static_cast<long double>(n + k) + 1) /
                              (std::tgamma(static_cast<long double>(n - j) + 1) *
                               std::tgamma(static_cast<long double>(k + j) + 1));
    const long double t = binom * std::pow(static_cast<long double>(x), j) / std::tgamma(static_cast<long double>(j) + 1);
    s += (j % 2 ? -t : t);
  }
  return static_cast<double>(s);
}

/// Gauss-Legendre nodes and weights on [a, b] by Newton iteration on P_n.
inline std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n, double a, double b) {
  std::vector<double> x(static_cast<std::size_t>(n)), w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    x[static_cast<std::size_t>(i)] = 0.5 * (b - a) * z + 0.5 * (b + a);
    w[static_cast<std::size_t>(i)] = (b - a) / ((1.0 - z * z) * dp * dp);
  }
  return {x, w};
}

/// 2-D Fourier transform F(z) = pi^-2 \int C(lambda) exp(conj(lambda) z - lambda conj(z)) d^2 lambda
/// on a polar grid: Gauss-Legendre in |lambda| on [0, radius], trapezoid in
/// the angle. The characteristic function is tabulated once.
class PolarFourier {
 public:
  template <class Char>
  PolarFourier(Char characteristic, double radius, int radial_nodes, int angular_nodes) {
    const auto [rho, wr] = gauss_legendre(radial_nodes, 0.0, radius);
    const double dalpha = 2.0 * std::numbers::pi / angular_nodes;
    for (int i = 0; i < radial_nodes; ++i) {
      for (int j = 0; j < angular_nodes; ++j) {
        const auto lambda = std::polar(rho[static_cast<std::size_t>(i)], j * dalpha);
        nodes_.push_back(lambda);
        values_.push_back(characteristic(lambda) * (wr[static_cast<std::size_t>(i)] * rho[static_cast<std::size_t>(i)] * dalpha));
      }
    }
  }

  [[nodiscard]] std::complex<double> operator()(std::complex<double> z) const {
    std::complex<double> s{};
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      s += values_[i] * std::exp(std::conj(nodes_[i]) * z - nodes_[i] * std::conj(z));
    }
    return s / (std::numbers::pi * std::numbers::pi);
  }

 private:
  std::vector<std::complex<double>> nodes_;
  std::vector<std::complex<double>> values_;
};

/// Radius beyond which exp((s-1) R^2 / 2) (1 + R^2)^k_max is below tol.
inline double fourier_radius(double s, int k_max, double tol = 1e-15) {
  double r = 1.0;
  while ((s - 1.0) * r * r / 2.0 + k_max * std::log1p(r * r) > std::log(tol)) r += 0.25;
  return r;
}

}  // namespace isosq::oracle
