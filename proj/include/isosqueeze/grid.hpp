#pragma once

#include <numbers>
#include <stdexcept>
#include <vector>

namespace isosq {

/// n points from lo to hi inclusive.
inline std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 1) throw std::invalid_argument("linspace: need at least one point");
  std::vector<double> out(static_cast<std::size_t>(n));
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  const double step = (hi - lo) / (n - 1);
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = lo + step * i;
  out.back() = hi;
  return out;
}

/// n points on [0, 2 pi), endpoint excluded.
inline std::vector<double> phase_grid(int n) {
  if (n < 1) throw std::invalid_argument("phase_grid: need at least one point");
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = 2.0 * std::numbers::pi * i / n;
  return out;
}

/// n points on (0, r_max]: r_max * i / n for i = 1..n.
inline std::vector<double> radial_grid(double r_max, int n) {
  if (n < 1) throw std::invalid_argument("radial_grid: need at least one point");
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) out[static_cast<std::size_t>(i - 1)] = r_max * i / n;
  return out;
}

}  // namespace isosq
