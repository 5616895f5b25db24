#pragma once

#include <complex>
#include <cstdint>

namespace zetasphere {

/// Finite complex number s = x + iy.
using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

/// Throws DomainError unless both components are finite.
Complex require_finite(Complex s, const char* what);

/// Tolerance and term budget for series evaluations.
struct EvalOptions {
  double tolerance = 1e-15;
  std::int64_t max_terms = 100000;

  /// Throws DomainError when tolerance is outside [1e-15, 1e-2] or
  /// max_terms is outside [1, 1e7].
  void validate() const;
};

/// sin(πx) and cos(πx) with exact argument reduction.
double sin_pi(double x);
double cos_pi(double x);

/// sin(πs) for complex s, accurate near the integers.
Complex sin_pi(Complex s);
Complex cos_pi(Complex s);

/// e^z − 1 without cancellation for small |z|.
Complex expm1(Complex z);

}  // namespace zetasphere
