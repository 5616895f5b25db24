#pragma once

#include <optional>
#include <ostream>

#include "zetasphere/types.hpp"

namespace zetasphere {

/// A point of the Riemann sphere C ∪ {∞}.
class ExtendedPoint {
 public:
  ExtendedPoint() : value_(Complex{}) {}
  ExtendedPoint(Complex z) : value_(z) {}  // NOLINT(google-explicit-constructor)
  ExtendedPoint(double x) : value_(Complex{x, 0.0}) {}  // NOLINT(google-explicit-constructor)

  static ExtendedPoint infinity() { return ExtendedPoint(std::nullopt); }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }

  /// The finite value. Throws DomainError at ∞.
  Complex value() const;

  friend bool operator==(const ExtendedPoint& a, const ExtendedPoint& b) { return a.value_ == b.value_; }

  /// ∞ is near only ∞; finite points compare with |a - b| <= tol.
  friend bool near(const ExtendedPoint& a, const ExtendedPoint& b, double tol);

  /// Total order: finite points by (re, im), then ∞.
  friend bool operator<(const ExtendedPoint& a, const ExtendedPoint& b);

 private:
  explicit ExtendedPoint(std::nullopt_t) : value_(std::nullopt) {}

  std::optional<Complex> value_;
};

std::ostream& operator<<(std::ostream& os, const ExtendedPoint& p);

}  // namespace zetasphere
