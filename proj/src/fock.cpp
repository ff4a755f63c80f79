#include "isosqueeze/fock.hpp"

#include <cmath>
#include <stdexcept>

#include "isosqueeze/errors.hpp"

namespace isosq {

FockVector::FockVector(std::vector<cplx> amps, double tail_bound)
    : amps_(std::move(amps)), tail_bound_(tail_bound) {
  if (tail_bound_ < 0.0) throw std::invalid_argument("FockVector: negative tail bound");
}

FockVector FockVector::basis(int level, std::size_t dim) {
  if (level < kBaseLevel || static_cast<std::size_t>(level - kBaseLevel) >= dim) {
    throw std::out_of_range("FockVector::basis: level outside stored range");
  }
  std::vector<cplx> a(dim);
  a[static_cast<std::size_t>(level - kBaseLevel)] = 1.0;
  return FockVector(std::move(a));
}

cplx FockVector::amp(int level) const {
  const int i = level - kBaseLevel;
  if (i < 0 || i >= static_cast<int>(amps_.size())) return {};
  return amps_[static_cast<std::size_t>(i)];
}

double FockVector::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

FockVector FockVector::with_tail_bound(double tail) const {
  return FockVector(amps_, tail);
}

FockVector normalize(const FockVector& v) {
  const double n = v.norm();
  if (n == 0.0) throw ZeroVector("normalize: all amplitudes are zero");
  std::vector<cplx> a(v.amps().begin(), v.amps().end());
  for (auto& x : a) x /= n;
  return FockVector(std::move(a), v.tail_bound());
}

cplx inner_product(const FockVector& u, const FockVector& v) {
  const auto n = std::min(u.size(), v.size());
  cplx s{};
  for (std::size_t i = 0; i < n; ++i) s += std::conj(u.amps()[i]) * v.amps()[i];
  return s;
}

double trailing_mass(const FockVector& v, std::size_t count) {
  const auto a = v.amps();
  const std::size_t start = a.size() > count ? a.size() - count : 0;
  double s = 0.0;
  for (std::size_t i = start; i < a.size(); ++i) s += std::norm(a[i]);
  return s;
}

nlohmann::json to_json(const FockVector& v) {
  nlohmann::json amps = nlohmann::json::array();
  for (const auto& a : v.amps()) amps.push_back({a.real(), a.imag()});
  return {{"base_index", v.base_index()}, {"amps", amps}, {"tail_bound", v.tail_bound()}};
}

FockVector fock_from_json(const nlohmann::json& j) {
  if (j.at("base_index").get<int>() != kBaseLevel) {
    throw std::invalid_argument("fock_from_json: base_index must be 3");
  }
  std::vector<cplx> a;
  for (const auto& p : j.at("amps")) a.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
  return FockVector(std::move(a), j.at("tail_bound").get<double>());
}

}  // namespace isosq
