#include <doctest.h>

#include <cmath>

#include "isosqueeze/errors.hpp"
#include "isosqueeze/specfun.hpp"
#include "isosqueeze/states.hpp"

using namespace isosq;
using namespace isosq::states;

TEST_CASE("zero parameters give the effective vacuum exactly") {
  for (Kind k : {Kind::nonlinear, Kind::squeezed}) {
    const auto v = build_state({k, 0.0, 0.4, 70});
    CHECK(v.amp(3) == cplx(1.0, 0.0));
    for (int level = 4; level <= v.top_level(); ++level) CHECK(v.amp(level) == cplx{});
  }
  CHECK(nonlinear_norm_constant(0.0, 70) == doctest::Approx(std::sqrt(12.0)).epsilon(1e-15));
  CHECK(squeezed_norm_constant_series(0.0, 70) == 1.0);
}

TEST_CASE("storage layout: top populated level plus head-room") {
  const auto v = build_state({Kind::nonlinear, 20.0, 0.0, 70});
  CHECK(v.top_level() == 2 * 70 + 3 + kHeadroom);
  for (int level = 144; level <= v.top_level(); ++level) CHECK(v.amp(level) == cplx{});
}

TEST_CASE("even support on every constructed state") {
  for (const SqueezeParams p : {SqueezeParams{Kind::nonlinear, 20.0, 0.3, 70}, SqueezeParams{Kind::nonlinear, 3.0, 2.0, 30},
                                SqueezeParams{Kind::squeezed, 0.4, 0.0, 70}, SqueezeParams{Kind::squeezed, 0.9, 1.1, 70}}) {
    const auto v = build_state(p);
    CHECK(std::abs(v.norm() - 1.0) < 1e-12);
    for (int level = 4; level <= v.top_level(); level += 2) CHECK(v.amp(level) == cplx{});
  }
}

TEST_CASE("squeezed normalisation constant") {
  CHECK(squeezed_norm_constant_closed(0.4) == doctest::Approx(std::pow(0.84, 0.25)).epsilon(1e-15));
  CHECK(std::abs(squeezed_norm_constant_series(0.4, 70) - squeezed_norm_constant_closed(0.4)) < 1e-10);
  CHECK(std::abs(squeezed_norm_constant_series(0.9, 300) - squeezed_norm_constant_closed(0.9)) < 1e-8);
}

TEST_CASE("squeezed radius is enforced") {
  CHECK_THROWS_AS(build_state({Kind::squeezed, 1.0, 0.0, 70}), RadiusViolation);
  CHECK_THROWS_AS(build_state({Kind::squeezed, 1.5, 0.0, 70}), RadiusViolation);
  CHECK_THROWS(build_state({Kind::nonlinear, -1.0, 0.0, 70}));
  CHECK_THROWS(build_state({Kind::nonlinear, 1.0, 0.0, 0}));
}

TEST_CASE("large |xi| raises the truncation") {
  const SqueezeParams p{Kind::squeezed, 0.9, 0.0, 70};
  CHECK(effective_n_max(p) > 70);
  CHECK(tail_mass({Kind::squeezed, 0.9, 0.0, effective_n_max(p)}) < kAutoTailTarget);
  CHECK(effective_n_max({Kind::squeezed, 0.5, 0.0, 70}) == 70);
}

TEST_CASE("Case I amplitudes satisfy the term-ratio recurrence") {
  const double r = 7.5, theta = 0.0;
  const auto v = build_state({Kind::nonlinear, r, theta, 70});
  for (int n = 0; n < 60; ++n) {
    const double p0 = std::norm(v.amp(2 * n + 3));
    const double p1 = std::norm(v.amp(2 * n + 5));
    if (p0 < 1e-280 || p1 < 1e-280) break;
    const double expect = r * r / (4.0 * (n + 1.0) * (n + 1.0)) * ((2.0 * n + 2.0) * (2.0 * n + 1.0)) /
                          ((2.0 * n + 4.0) * (2.0 * n + 3.0) * (2.0 * n + 5.0)) / (2.0 * n + 4.0);
    CHECK(p1 / p0 == doctest::Approx(expect).epsilon(1e-10));
  }
}

TEST_CASE("Case I amplitudes from a ratio-form product agree with the builder") {
  const double r = 20.0, theta = 0.7;
  const auto v = build_state({Kind::nonlinear, r, theta, 70});
  // Unnormalised c_n / c_0 accumulated as products of term ratios.
  std::vector<cplx> c{cplx(1.0, 0.0)};
  const cplx beta = std::polar(r, theta);
  for (int n = 0; n < 70; ++n) {
    const double ratio = std::sqrt((2.0 * n + 2.0) * (2.0 * n + 1.0) /
                                   ((2.0 * n + 4.0) * (2.0 * n + 3.0) * (2.0 * n + 5.0) * (2.0 * n + 4.0))) /
                         (2.0 * (n + 1.0));
    c.push_back(c.back() * beta * ratio);
  }
  double s = 0.0;
  for (auto x : c) s += std::norm(x);
  for (int n = 0; n <= 70; ++n) {
    const cplx expect = c[static_cast<std::size_t>(n)] / std::sqrt(s);
    CHECK(std::abs(v.amp(2 * n + 3) - expect) <= 1e-10 * std::max(std::abs(expect), 1e-300) + 1e-300);
  }
}

TEST_CASE("Case III equals the squeezed vacuum shifted by three levels") {
  for (double xi : {0.1, 0.4, 0.8}) {
    const double theta = 0.9;
    const auto v = build_state({Kind::squeezed, xi, theta, 70});
    const double rs = std::atanh(xi);
    // <2n|S(r_s)|0> = (-1)^n sqrt((2n)!) / (2^n n!) (e^{i theta} tanh r_s)^n / sqrt(cosh r_s)
    // up to a global phase; the sign (-1)^n is absorbed into theta -> theta + pi.
    for (int n = 0; n <= 40; ++n) {
      const double mag = std::exp(0.5 * specfun::log_factorial(2 * n) - n * std::log(2.0) - specfun::log_factorial(n)) *
                         std::pow(std::tanh(rs), n) / std::sqrt(std::cosh(rs));
      const cplx expect = mag * std::polar(1.0, n * theta);
      CHECK(std::abs(v.amp(2 * n + 3) - expect) < 1e-10);
    }
  }
}

TEST_CASE("dual series diagnosis") {
  CHECK(dual_ratio_term(1) == doctest::Approx(1.0 / 120.0).epsilon(1e-15));
  CHECK(dual_ratio_term(10) == doctest::Approx(20.0 / (19.0 * 21.0 * 484.0 * 23.0)).epsilon(1e-15));
  CHECK(dual_ratio_term(10) == doctest::Approx(4.503e-6).epsilon(1e-3));
  const auto rep = dual_series_diagnosis(50);
  CHECK(rep.x_seq.size() == 50);
  CHECK(rep.monotone_decreasing);
  CHECK(rep.limit_estimate < 1e-6);
  CHECK(rep.verdict == Verdict::divergent);
  CHECK(to_json(rep).at("verdict") == "divergent");
}
