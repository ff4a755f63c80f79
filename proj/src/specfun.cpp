#include "isosqueeze/specfun.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace isosq::specfun {

namespace {

constexpr int kTableSize = 4096;

// Compensated running sum of log(k); built once, read-only afterwards.
const std::array<double, kTableSize>& log_factorial_table() {
  static const auto table = [] {
    std::array<double, kTableSize> t{};
    double sum = 0.0;
    double carry = 0.0;
    t[0] = 0.0;
    for (int k = 1; k < kTableSize; ++k) {
      const double y = std::log(static_cast<double>(k)) - carry;
      const double s = sum + y;
      carry = (s - sum) - y;
      sum = s;
      t[k] = sum;
    }
    return t;
  }();
  return table;
}

}  // namespace

double log_factorial(int n) {
  if (n < 0) throw std::domain_error("log_factorial: negative argument");
  if (n < kTableSize) return log_factorial_table()[static_cast<std::size_t>(n)];
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double hermite(int n, double x) {
  if (n < 0) throw std::domain_error("hermite: negative degree");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<double> normalized_hermite_sequence(int n, double x) {
  if (n < 0) throw std::domain_error("normalized_hermite_sequence: negative degree");
  std::vector<double> h(static_cast<std::size_t>(n) + 1);
  h[0] = 1.0;
  if (n == 0) return h;
  h[1] = std::sqrt(2.0) * x;
  for (int k = 1; k < n; ++k) {
    h[k + 1] = std::sqrt(2.0 / (k + 1)) * x * h[k] - std::sqrt(static_cast<double>(k) / (k + 1)) * h[k - 1];
  }
  return h;
}

std::vector<double> assoc_laguerre_sequence(int n, int k, double x) {
  if (n < 0 || k < 0) throw std::domain_error("assoc_laguerre: negative degree or order");
  std::vector<double> l(static_cast<std::size_t>(n) + 1);
  l[0] = 1.0;
  if (n == 0) return l;
  l[1] = 1.0 + k - x;
  for (int j = 1; j < n; ++j) {
    l[j + 1] = ((2.0 * j + 1.0 + k - x) * l[j] - (j + k) * l[j - 1]) / (j + 1.0);
  }
  return l;
}

namespace {

// L_n^k(0) = C(n+k, n). Exact in integers while the product fits, so the
// result is the correctly rounded double.
double laguerre_at_zero(int n, int k) {
  const int lo = std::min(n, k);
  std::uint64_t c = 1;
  for (int i = 1; i <= lo; ++i) {
    const auto m = static_cast<std::uint64_t>(n + k - lo + i);
    if (c > std::numeric_limits<std::uint64_t>::max() / m) {
      return std::exp(log_factorial(n + k) - log_factorial(n) - log_factorial(k));
    }
    c = c * m / static_cast<std::uint64_t>(i);
  }
  return static_cast<double>(c);
}

}  // namespace

double assoc_laguerre(int n, int k, double x) {
  if (n < 0 || k < 0) throw std::domain_error("assoc_laguerre: negative degree or order");
  if (n == 0) return 1.0;
  if (x == 0.0) return laguerre_at_zero(n, k);
  double prev = 1.0;
  double cur = 1.0 + k - x;
  for (int j = 1; j < n; ++j) {
    const double next = ((2.0 * j + 1.0 + k - x) * cur - (j + k) * prev) / (j + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double det3(std::span<const double, 9> m) {
  return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
         m[2] * (m[3] * m[7] - m[4] * m[6]);
}

}  // namespace isosq::specfun
