#pragma once

#include <span>
#include <vector>

namespace isosq::specfun {

/// Natural log of n!. Exact cumulative log-sum for n below the cached table
/// size, lgamma beyond it.
double log_factorial(int n);

/// Physicists' Hermite polynomial H_n(x) by upward recurrence.
double hermite(int n, double x);

/// Hermite functions normalised as H_k(x) / sqrt(2^k k!) for k = 0..n.
/// The normalised recurrence stays finite where H_k itself would overflow.
std::vector<double> normalized_hermite_sequence(int n, double x);

/// Associated Laguerre polynomial L_n^k(x), upward recurrence in n.
double assoc_laguerre(int n, int k, double x);

/// L_0^k(x) .. L_n^k(x) in one pass.
std::vector<double> assoc_laguerre_sequence(int n, int k, double x);

/// Determinant of a row-major 3x3 matrix by cofactor expansion.
double det3(std::span<const double, 9> m);

}  // namespace isosq::specfun
