#pragma once

#include <complex>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

namespace isosq {

using cplx = std::complex<double>;

/// Lowest retained level. Level 0 is an isolated invariant subspace and is
/// never represented.
inline constexpr int kBaseLevel = 3;

/// Pure state over |3>, |4>, ... truncated at a finite top level.
///
/// amps()[i] is the amplitude of level kBaseLevel + i. tail_bound() carries an
/// upper estimate of probability lost to the truncation.
class FockVector {
 public:
  FockVector() = default;
  explicit FockVector(std::vector<cplx> amps, double tail_bound = 0.0);

  /// |level> with the given number of stored levels.
  static FockVector basis(int level, std::size_t dim);

  [[nodiscard]] int base_index() const { return kBaseLevel; }
  [[nodiscard]] std::span<const cplx> amps() const { return amps_; }
  [[nodiscard]] std::size_t size() const { return amps_.size(); }
  [[nodiscard]] int top_level() const { return kBaseLevel + static_cast<int>(amps_.size()) - 1; }
  [[nodiscard]] double tail_bound() const { return tail_bound_; }

  /// Amplitude of an absolute level; zero outside the stored range.
  [[nodiscard]] cplx amp(int level) const;

  [[nodiscard]] double norm() const;

  [[nodiscard]] FockVector with_tail_bound(double tail) const;

 private:
  std::vector<cplx> amps_;
  double tail_bound_ = 0.0;
};

/// Unit-norm copy; throws ZeroVector when every amplitude vanishes.
FockVector normalize(const FockVector& v);

/// <u|v>, the shorter vector padded with zeros.
cplx inner_product(const FockVector& u, const FockVector& v);

/// Sum of |amp|^2 over the last `count` stored levels.
double trailing_mass(const FockVector& v, std::size_t count);

nlohmann::json to_json(const FockVector& v);
FockVector fock_from_json(const nlohmann::json& j);

}  // namespace isosq
