#pragma once

#include <string>
#include <vector>

#include "isosqueeze/fock.hpp"

namespace isosq::algebra {

/// Deformation function f(n) = sqrt((n-1)(n-3)); zero at n = 1 and n = 3.
double deform_f(int n);

/// The shift constant in F = (N0 + delta) / (N- N+).
inline constexpr int kDelta = -2;

/// Eigenvalue of N- N+ on |n>, i.e. (n+1) f(n+1)^2.
double n_minus_n_plus(int n);

/// F(C, N0) on |n>: (n + delta) / (N- N+). Equals 1/(n(n+1)) for n >= 3.
double scale_F(int n, int delta = kDelta);

/// G = sqrt(F).
double scale_G(int n);

/// A ladder operator acting on basis states as |n> -> coeff(n) |n + shift>.
struct BasisAction {
  int shift;
  double (*coeff)(int level);
  const char* name;
};

extern const BasisAction N_minus;
extern const BasisAction N_plus;
extern const BasisAction N0;
extern const BasisAction a;
extern const BasisAction a_dagger;
extern const BasisAction K_minus;
extern const BasisAction K_plus;
extern const BasisAction K0;
/// N+ F, the rescaled raising operator that closes the first Heisenberg pair.
extern const BasisAction calN_plus;
/// F N-, the rescaled lowering operator of the second (dual) pair.
extern const BasisAction calN_minus;

/// Applies `op` to every stored level. Amplitude pushed above the top stored
/// level is dropped and its probability added to the tail bound.
FockVector apply(const BasisAction& op, const FockVector& v);

inline FockVector apply_N_minus(const FockVector& v) { return apply(N_minus, v); }
inline FockVector apply_N_plus(const FockVector& v) { return apply(N_plus, v); }
inline FockVector apply_a(const FockVector& v) { return apply(a, v); }
inline FockVector apply_a_dagger(const FockVector& v) { return apply(a_dagger, v); }
inline FockVector apply_K_minus(const FockVector& v) { return apply(K_minus, v); }
inline FockVector apply_K_plus(const FockVector& v) { return apply(K_plus, v); }
inline FockVector apply_K0(const FockVector& v) { return apply(K0, v); }

struct RelationCheck {
  std::string relation;
  double max_deviation = 0.0;
  int worst_level = 0;
};

struct CommutatorReport {
  int n_low = kBaseLevel;
  int n_high = 0;
  std::vector<RelationCheck> relations;
  double casimir_max_abs = 0.0;
  double casimir_forms_max_diff = 0.0;
  double delta_from_vacuum = 0.0;
  [[nodiscard]] double max_deviation() const;
};

/// Evaluates both sides of every commutation relation of the deformed algebra
/// and of the three rescaled Heisenberg algebras on |n_low> .. |n_high>, by
/// applying the operators to basis vectors.
CommutatorReport verify_commutators(int n_low, int n_high);

/// Solves [N-, N+ F]|3> = |3> for the shift constant in F.
double delta_from_vacuum_commutator();

/// h(N0) in the Casimir C = N- N+ + h(N0).
double casimir_h(int n);

/// <n|C|n> = (n+1) f(n+1)^2 + h(n).
double casimir_eigenvalue(int n);

/// The second form N+ N- + h(N0 - 1).
double casimir_eigenvalue_alt(int n);

/// Deformed energy n(1 - 5n + 2n^2)/2, the eigenvalue of (N+N- + N-N+)/2.
double deformed_energy(int n);

enum class Branch { plus, minus };

/// omega_+(n) = 3n^2 - 2n - 1, omega_-(n) = 3n^2 - 4n + 2.
double vibration_frequency(int n, Branch branch);

nlohmann::json to_json(const CommutatorReport& report);

}  // namespace isosq::algebra
