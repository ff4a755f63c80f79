#pragma once

#include <stdexcept>
#include <string>

namespace isosq {

/// Normalising a state with no nonzero amplitude.
class ZeroVector : public std::domain_error {
 public:
  explicit ZeroVector(const std::string& what) : std::domain_error(what) {}
};

/// Squeezed-vacuum parameter outside the unit disc, where the normalisation
/// series diverges.
class RadiusViolation : public std::domain_error {
 public:
  explicit RadiusViolation(const std::string& what) : std::domain_error(what) {}
};

/// Mandel Q or g2 requested for a state with zero mean excitation.
class UndefinedMoment : public std::domain_error {
 public:
  explicit UndefinedMoment(const std::string& what) : std::domain_error(what) {}
};

/// A3 denominator vanishes.
class UndefinedA3 : public std::domain_error {
 public:
  explicit UndefinedA3(const std::string& what) : std::domain_error(what) {}
};

/// Quasi-probability ordering parameter s >= 1.
class SParameterOutOfRange : public std::domain_error {
 public:
  explicit SParameterOutOfRange(const std::string& what) : std::domain_error(what) {}
};

}  // namespace isosq
