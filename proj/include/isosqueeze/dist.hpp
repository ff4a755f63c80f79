#pragma once

#include <optional>
#include <vector>

#include "isosqueeze/fock.hpp"
#include "isosqueeze/states.hpp"

namespace isosq::dist {

/// Sampled distribution; values are row-major with axis1 outermost.
struct DistGrid {
  std::vector<double> axis1;
  std::vector<double> axis2;
  std::optional<double> s;
  std::vector<double> values;

  [[nodiscard]] double at(std::size_t i, std::size_t j) const { return values[i * axis2.size() + j]; }
};

/// <x, phi | v> for the eigenstates of x(phi) = (e^{-i phi} K- + e^{i phi} K+)/sqrt2,
/// <x,phi|v> = e^{-x^2/2} pi^{-1/4} sum_k c_{k+3} H_k(x) e^{-i k phi} / sqrt(2^k k!).
cplx quadrature_wavefunction(const FockVector& v, double x, double phi);

/// |<x,phi|v>|^2.
double quadrature_probability(const FockVector& v, double x, double phi);

/// P(x, phi) over a grid, through the wavefunction.
DistGrid quadrature_grid(const FockVector& v, const std::vector<double>& xs, const std::vector<double>& phis);

/// P(x, phi) of a nonlinear squeezed state from the explicit double series in
/// cos((m - n)(2 phi - theta)). Requires p.kind == nonlinear.
double quadrature_probability_closed(const states::SqueezeParams& p, double x, double phi);
DistGrid quadrature_distribution_closed(const states::SqueezeParams& p, const std::vector<double>& xs,
                                        const std::vector<double>& phis);

/// <row|D(lambda)|col> for absolute levels row, col >= 3 and
/// D(lambda) = exp(lambda K+ - conj(lambda) K-).
cplx displacement_matrix_element(int row_level, int col_level, cplx lambda);

/// <2m+3|D(lambda)|2n+3>.
cplx displacement_element(int m, int n, cplx lambda);

/// C(lambda, s) = Tr[rho D(lambda)] exp(s |lambda|^2 / 2) for rho = |v><v|.
cplx characteristic_function(const FockVector& v, cplx lambda, double s);

/// s-ordered quasi-probability F(z, s), s < 1, from the closed-form double
/// series in associated Laguerre polynomials. Throws SParameterOutOfRange
/// for s >= 1.
double quasi_probability(const FockVector& v, cplx z, double s);

/// F(x + i p, s) over a grid (axis1 = x, axis2 = p).
DistGrid quasi_probability_grid(const FockVector& v, const std::vector<double>& xs, const std::vector<double>& ps,
                                double s);

}  // namespace isosq::dist
