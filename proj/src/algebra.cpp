#include "isosqueeze/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace isosq::algebra {

double deform_f(int n) {
  const double p = static_cast<double>(n - 1) * static_cast<double>(n - 3);
  return p > 0.0 ? std::sqrt(p) : 0.0;
}

double n_minus_n_plus(int n) {
  const double f = deform_f(n + 1);
  return (n + 1.0) * f * f;
}

double scale_F(int n, int delta) {
  // n_minus_n_plus vanishes only at n = 2 (and n = -1), below the retained levels.
  return (n + delta) / n_minus_n_plus(n);
}

double scale_G(int n) { return std::sqrt(scale_F(n)); }

namespace {

double coeff_N_minus(int n) { return std::sqrt(static_cast<double>(n)) * deform_f(n); }
double coeff_N_plus(int n) { return std::sqrt(n + 1.0) * deform_f(n + 1); }
double coeff_N0(int n) { return n; }
double coeff_a(int n) { return n <= kBaseLevel ? 0.0 : std::sqrt(static_cast<double>(n)); }
double coeff_a_dagger(int n) { return std::sqrt(n + 1.0); }
double coeff_K_minus(int n) { return std::sqrt(static_cast<double>(n - kBaseLevel)); }
double coeff_K_plus(int n) { return std::sqrt(n - 2.0); }
double coeff_K0(int n) { return n - kBaseLevel; }
double coeff_calN_plus(int n) { return scale_F(n) * coeff_N_plus(n); }
double coeff_calN_minus(int n) { return scale_F(n - 1) * coeff_N_minus(n); }

}  // namespace

const BasisAction N_minus{-1, coeff_N_minus, "N-"};
const BasisAction N_plus{+1, coeff_N_plus, "N+"};
const BasisAction N0{0, coeff_N0, "N0"};
const BasisAction a{-1, coeff_a, "a"};
const BasisAction a_dagger{+1, coeff_a_dagger, "a+"};
const BasisAction K_minus{-1, coeff_K_minus, "K-"};
const BasisAction K_plus{+1, coeff_K_plus, "K+"};
const BasisAction K0{0, coeff_K0, "K0"};
const BasisAction calN_plus{+1, coeff_calN_plus, "N+F"};
const BasisAction calN_minus{-1, coeff_calN_minus, "FN-"};

FockVector apply(const BasisAction& op, const FockVector& v) {
  const auto in = v.amps();
  std::vector<cplx> out(in.size());
  double lost = 0.0;
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (in[i] == cplx{}) continue;
    const int level = kBaseLevel + static_cast<int>(i);
    const int target = level + op.shift;
    const cplx value = op.coeff(level) * in[i];
    if (target < kBaseLevel) continue;  // annihilated below |3>; coefficients vanish there
    const auto j = static_cast<std::size_t>(target - kBaseLevel);
    if (j >= out.size()) {
      lost += std::norm(value);
      continue;
    }
    out[j] += value;
  }
  return FockVector(std::move(out), v.tail_bound() + lost);
}

namespace {

using Op = std::function<FockVector(const FockVector&)>;

Op act(const BasisAction& b) {
  return [&b](const FockVector& v) { return apply(b, v); };
}

Op product(Op lhs, Op rhs) {
  return [lhs = std::move(lhs), rhs = std::move(rhs)](const FockVector& v) { return lhs(rhs(v)); };
}

FockVector combine(const FockVector& x, cplx cx, const FockVector& y, cplx cy) {
  std::vector<cplx> out(std::max(x.size(), y.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = cx * (i < x.size() ? x.amps()[i] : cplx{}) + cy * (i < y.size() ? y.amps()[i] : cplx{});
  }
  return FockVector(std::move(out));
}

double max_abs_diff(const FockVector& x, const FockVector& y) {
  const auto d = combine(x, 1.0, y, -1.0);
  double m = 0.0;
  for (const auto& a : d.amps()) m = std::max(m, std::abs(a));
  return m;
}

Op commutator(const Op& A, const Op& B) {
  return [A, B](const FockVector& v) { return combine(A(B(v)), 1.0, B(A(v)), -1.0); };
}

Op scaled(const Op& A, double c) {
  return [A, c](const FockVector& v) { return combine(A(v), c, v, 0.0); };
}

Op identity() {
  return [](const FockVector& v) { return v; };
}

Op diagonal(double (*g)(int)) {
  return [g](const FockVector& v) {
    std::vector<cplx> out(v.amps().begin(), v.amps().end());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] *= g(kBaseLevel + static_cast<int>(i));
    return FockVector(std::move(out));
  };
}

double rhs_13(int n) { return 5.0 * n - 3.0 * n * static_cast<double>(n); }

}  // namespace

double CommutatorReport::max_deviation() const {
  double m = 0.0;
  for (const auto& r : relations) m = std::max(m, r.max_deviation);
  return m;
}

CommutatorReport verify_commutators(int n_low, int n_high) {
  if (n_low < kBaseLevel) throw std::invalid_argument("verify_commutators: n_low below |3>");
  if (n_high < n_low + 2) throw std::invalid_argument("verify_commutators: need n_high >= n_low + 2");

  // Two levels of head-room so no two-step word leaks past the stored top.
  const auto dim = static_cast<std::size_t>(n_high - kBaseLevel + 3);

  const Op Nm = act(N_minus), Np = act(N_plus), N0op = act(N0);
  const Op Km = act(K_minus), Kp = act(K_plus), K0op = product(Kp, Km);
  const Op cNp = act(calN_plus), cNm = act(calN_minus);
  const Op H1 = product(cNp, Nm);  // N+F N-
  const Op H2 = product(Np, cNm);  // N+ F N-

  struct Relation {
    const char* name;
    Op lhs;
    Op rhs;
  };
  const std::vector<Relation> relations = {
      {"[N+,N-] = 5N0 - 3N0^2", commutator(Np, Nm), diagonal(rhs_13)},
      {"[N0,N+] = N+", commutator(N0op, Np), Np},
      {"[N0,N-] = -N-", commutator(N0op, Nm), scaled(Nm, -1.0)},
      {"[N-,N+F] = I", commutator(Nm, cNp), identity()},
      {"[N+F N-,N-] = -N-", commutator(H1, Nm), scaled(Nm, -1.0)},
      {"[N+F N-,N+F] = N+F", commutator(H1, cNp), cNp},
      {"[FN-,N+] = I", commutator(cNm, Np), identity()},
      {"[N+FN-,FN-] = -FN-", commutator(H2, cNm), scaled(cNm, -1.0)},
      {"[N+FN-,N+] = N+", commutator(H2, Np), Np},
      {"[K-,K+] = I", commutator(Km, Kp), identity()},
      {"[K0,K-] = -K-", commutator(K0op, Km), scaled(Km, -1.0)},
      {"[K0,K+] = K+", commutator(K0op, Kp), Kp},
  };

  CommutatorReport report;
  report.n_low = n_low;
  report.n_high = n_high;
  for (const auto& rel : relations) {
    RelationCheck check{rel.name, 0.0, n_low};
    for (int n = n_low; n <= n_high; ++n) {
      const auto e = FockVector::basis(n, dim);
      const double d = max_abs_diff(rel.lhs(e), rel.rhs(e));
      if (d > check.max_deviation) {
        check.max_deviation = d;
        check.worst_level = n;
      }
    }
    report.relations.push_back(check);
  }
  for (int n = n_low; n <= n_high; ++n) {
    report.casimir_max_abs = std::max(report.casimir_max_abs, std::abs(casimir_eigenvalue(n)));
    report.casimir_forms_max_diff =
        std::max(report.casimir_forms_max_diff, std::abs(casimir_eigenvalue(n) - casimir_eigenvalue_alt(n)));
  }
  report.delta_from_vacuum = delta_from_vacuum_commutator();
  return report;
}

double delta_from_vacuum_commutator() {
  // <3|[N-, N+ F]|3> is affine in delta: evaluate at two values, solve for 1.
  // The N+F N- term drops out since N-|3> = 0.
  const auto eval = [](int delta) {
    return coeff_N_minus(kBaseLevel + 1) * coeff_N_plus(kBaseLevel) * scale_F(kBaseLevel, delta) -
           coeff_N_minus(kBaseLevel) * coeff_N_plus(kBaseLevel - 1);
  };
  const double v0 = eval(0);
  const double v1 = eval(1);
  return (1.0 - v0) / (v1 - v0);
}

double casimir_h(int n) {
  const double x = n;
  return 2.5 * x * (x + 1.0) - x * (x + 1.0) * (x + 0.5);
}

double casimir_eigenvalue(int n) {
  const double f = deform_f(n + 1);
  return (n + 1.0) * f * f + casimir_h(n);
}

double casimir_eigenvalue_alt(int n) {
  const double f = deform_f(n);
  return n * f * f + casimir_h(n - 1);
}

double deformed_energy(int n) {
  const double x = n;
  return 0.5 * x * (1.0 - 5.0 * x + 2.0 * x * x);
}

double vibration_frequency(int n, Branch branch) {
  const double x = n;
  return branch == Branch::plus ? 3.0 * x * x - 2.0 * x - 1.0 : 3.0 * x * x - 4.0 * x + 2.0;
}

nlohmann::json to_json(const CommutatorReport& report) {
  nlohmann::json rel = nlohmann::json::array();
  for (const auto& r : report.relations) {
    rel.push_back({{"relation", r.relation}, {"max_deviation", r.max_deviation}, {"worst_level", r.worst_level}});
  }
  return {{"n_low", report.n_low},
          {"n_high", report.n_high},
          {"relations", rel},
          {"max_deviation", report.max_deviation()},
          {"casimir_max_abs", report.casimir_max_abs},
          {"casimir_forms_max_diff", report.casimir_forms_max_diff},
          {"delta_from_vacuum", report.delta_from_vacuum}};
}

}  // namespace isosq::algebra
