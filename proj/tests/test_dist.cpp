#include <doctest.h>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>
#include <cmath>
#include <numbers>

#include "isosqueeze/dist.hpp"
#include "isosqueeze/errors.hpp"
#include "isosqueeze/grid.hpp"
#include "isosqueeze/states.hpp"
#include "oracles.hpp"

using namespace isosq;
using namespace isosq::dist;
using states::Kind;

namespace {

constexpr double kPi = std::numbers::pi;

// exp(lambda K+ - conj(lambda) K-) on levels 3 .. 3 + dim - 1.
Eigen::MatrixXcd displacement_expm(cplx lambda, int dim) {
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(dim, dim);
  for (int k = 0; k + 1 < dim; ++k) {
    const double c = std::sqrt(k + 1.0);
    g(k + 1, k) += lambda * c;
    g(k, k + 1) -= std::conj(lambda) * c;
  }
  return g.exp();
}

double trapezoid(const std::vector<double>& x, const std::vector<double>& y) {
  double s = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) s += 0.5 * (x[i] - x[i - 1]) * (y[i] + y[i - 1]);
  return s;
}

}  // namespace

TEST_CASE("effective vacuum quadrature profile") {
  const auto vac = FockVector::basis(3, 4);
  for (double x : {-2.0, -0.3, 0.0, 1.1}) {
    for (double phi : {0.0, 1.0, 4.0}) {
      CHECK(quadrature_probability(vac, x, phi) == doctest::Approx(std::exp(-x * x) / std::sqrt(kPi)).epsilon(1e-14));
    }
  }
}

TEST_CASE("quadrature distribution integrates to one") {
  const auto xs = linspace(-8.0, 8.0, 1601);
  for (const states::SqueezeParams p : {states::SqueezeParams{Kind::nonlinear, 10.0, 0.5, 70},
                                        states::SqueezeParams{Kind::squeezed, 0.5, 0.2, 70}}) {
    const auto v = states::build_state(p);
    for (double phi : phase_grid(8)) {
      std::vector<double> ys;
      for (double x : xs) ys.push_back(quadrature_probability(v, x, phi));
      CHECK(std::abs(trapezoid(xs, ys) - 1.0) < 1e-6);
    }
  }
}

TEST_CASE("closed-form quadrature distribution") {
  const states::SqueezeParams zero{Kind::nonlinear, 0.0, 0.0, 70};
  for (double x : {-1.0, 0.0, 2.0}) {
    CHECK(quadrature_probability_closed(zero, x, 0.7) == doctest::Approx(std::exp(-x * x) / std::sqrt(kPi)).epsilon(1e-14));
  }
  const states::SqueezeParams p{Kind::nonlinear, 10.0, 0.5, 70};
  const auto v = states::build_state(p);
  CHECK(std::abs(quadrature_probability_closed(p, 0.0, kPi / 2) - quadrature_probability(v, 0.0, kPi / 2)) < 1e-8);
  for (double x : linspace(-5.0, 5.0, 21)) {
    for (double phi : phase_grid(16)) {
      CHECK(std::abs(quadrature_probability_closed(p, x, phi) - quadrature_probability(v, x, phi)) < 1e-8);
    }
    const double h = p.theta / 2;
    CHECK(std::abs(quadrature_probability_closed(p, x, h) - quadrature_probability_closed(p, -x, h)) < 1e-10);
  }
  CHECK_THROWS(quadrature_probability_closed({Kind::squeezed, 0.3, 0.0, 70}, 0.0, 0.0));
}

TEST_CASE("quadrature distribution is pi-periodic in phi for even support") {
  const auto v = states::build_state({Kind::nonlinear, 10.0, 0.5, 70});
  for (double x : linspace(-4.0, 4.0, 17)) {
    for (double phi : phase_grid(12)) {
      const double a = quadrature_probability(v, x, phi);
      CHECK(a >= 0.0);
      CHECK(std::abs(a - quadrature_probability(v, x, phi + kPi)) < 1e-10);
      CHECK(std::abs(a - quadrature_probability(v, x, phi + 2 * kPi)) < 1e-10);
    }
  }
}

TEST_CASE("displacement elements") {
  CHECK(displacement_element(0, 0, 0.0) == cplx(1.0, 0.0));
  CHECK(displacement_element(0, 0, 1.0).real() == doctest::Approx(std::exp(-0.5)).epsilon(1e-14));
  CHECK(displacement_element(0, 0, 1.0).real() == doctest::Approx(0.606531).epsilon(1e-6));
}

TEST_CASE("displacement elements match a 120-level matrix exponential") {
  const int dim = 120;
  for (cplx lambda : {cplx(0.7, 0.2), cplx(-1.3, 0.8), cplx(0.0, 2.1)}) {
    const auto d = displacement_expm(lambda, dim);
    for (int row = 0; row < 40; ++row) {
      for (int col = 0; col < 40; ++col) {
        const cplx got = displacement_matrix_element(row + 3, col + 3, lambda);
        CHECK(std::abs(got - d(row, col)) < 1e-10);
      }
    }
  }
  // Unitarity of the column |2n+3>, n = 1, summed over every level.
  const cplx lambda(0.7, 0.2);
  double s = 0.0;
  for (int row = 3; row < 3 + dim; ++row) s += std::norm(displacement_matrix_element(row, 5, lambda));
  CHECK(std::abs(s - 1.0) < 1e-8);
}

TEST_CASE("characteristic function basics") {
  const auto v = states::build_state({Kind::nonlinear, 4.0, 0.3, 20});
  for (double s : {-1.0, 0.0, 0.5}) {
    CHECK(std::abs(characteristic_function(v, 0.0, s) - 1.0) < 1e-12);
    for (cplx lambda : {cplx(0.4, -0.2), cplx(1.5, 0.9)}) {
      CHECK(std::abs(characteristic_function(v, lambda, s) - std::conj(characteristic_function(v, -lambda, s))) < 1e-12);
    }
  }
}

TEST_CASE("squeezed vacuum characteristic function is Gaussian") {
  for (double theta : {0.0, 1.2}) {
    const double xi = 0.3;
    const auto v = states::build_state({Kind::squeezed, xi, theta, 70});
    const double rs = std::atanh(xi);
    const double n = std::sinh(rs) * std::sinh(rs);
    const cplx m = std::polar(std::sinh(rs) * std::cosh(rs), theta);
    for (cplx lambda : {cplx(0.5, 0.0), cplx(0.2, 0.6), cplx(-1.1, 0.4)}) {
      for (double s : {0.0, -0.5}) {
        const cplx expect = std::exp(-0.5 * std::norm(lambda) * (2 * n + 1) + std::real(std::conj(lambda) * std::conj(lambda) * m) +
                                     0.5 * s * std::norm(lambda));
        CHECK(std::abs(characteristic_function(v, lambda, s) - expect) < 1e-6);
      }
    }
  }
}

TEST_CASE("vacuum quasi-probabilities") {
  const auto vac = FockVector::basis(3, 4);
  CHECK(std::abs(quasi_probability(vac, 0.0, 0.0) - 2.0 / kPi) < 1e-10);
  CHECK(std::abs(quasi_probability(vac, 0.0, -1.0) - 1.0 / kPi) < 1e-10);
  for (cplx z : {cplx(0.3, 0.4), cplx(-1.0, 0.2)}) {
    CHECK(quasi_probability(vac, z, 0.0) == doctest::Approx(2.0 / kPi * std::exp(-2.0 * std::norm(z))).epsilon(1e-12));
  }
  CHECK_THROWS_AS(quasi_probability(vac, 0.0, 1.0), SParameterOutOfRange);
  CHECK_THROWS_AS(quasi_probability(vac, 0.0, 1.5), SParameterOutOfRange);
}

TEST_CASE("quasi-probability agrees with a direct Fourier transform of the characteristic function") {
  const auto v = states::build_state({Kind::nonlinear, 3.0, 0.8, 6});
  const int k_max = 2 * 6;
  for (double s : {-1.0, 0.0, 0.5}) {
    const oracle::PolarFourier fourier([&](cplx l) { return characteristic_function(v, l, s); },
                                       oracle::fourier_radius(s, k_max), 256, 256);
    for (cplx z : {cplx(0.0, 0.0), cplx(0.7, -0.4), cplx(-1.2, 1.5)}) {
      const cplx f = fourier(z);
      CHECK(std::abs(f.imag()) < 1e-6);
      CHECK(std::abs(quasi_probability(v, z, s) - f.real()) < 1e-4);
    }
  }
}

TEST_CASE("Husimi function is non-negative and the Wigner function of a nonlinear state dips below zero") {
  const auto v = states::build_state({Kind::nonlinear, std::abs(cplx(2, 2)), std::arg(cplx(2, 2)), 70});
  const auto xs = linspace(-4.0, 4.0, 41);
  const auto husimi = quasi_probability_grid(v, xs, xs, -1.0);
  double lo = 1.0;
  for (double f : husimi.values) lo = std::min(lo, f);
  CHECK(lo >= -1e-9);
  const auto g = quasi_probability_grid(v, xs, xs, 0.5);
  REQUIRE(g.s.has_value());
  double neg = 0.0;
  for (double f : g.values) neg = std::min(neg, f);
  CHECK(neg < -1e-4);
}

TEST_CASE("Wigner function of a squeezed vacuum integrates to one") {
  const auto v = states::build_state({Kind::squeezed, 0.5, 0.4, 70});
  const auto xs = linspace(-4.0, 4.0, 81);
  const auto g = quasi_probability_grid(v, xs, xs, 0.0);
  double s = 0.0;
  for (double f : g.values) s += f;
  s *= (xs[1] - xs[0]) * (xs[1] - xs[0]);
  CHECK(s > 0.99);
  CHECK(s < 1.01);
}
