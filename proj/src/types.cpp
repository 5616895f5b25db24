#include "zetasphere/types.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "zetasphere/errors.hpp"

namespace zetasphere {

Complex require_finite(Complex s, const char* what) {
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
    throw DomainError(std::string(what) + ": argument is not finite");
  }
  return s;
}

void EvalOptions::validate() const {
  if (!(tolerance >= 1e-15 && tolerance <= 1e-2)) {
    throw DomainError("EvalOptions: tolerance must lie in [1e-15, 1e-2]");
  }
  if (max_terms < 1 || max_terms > 10'000'000) {
    throw DomainError("EvalOptions: max_terms must lie in [1, 1e7]");
  }
}

double sin_pi(double x) {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  double r = std::remainder(x, 2.0);  // exact, in [-1, 1]
  if (r > 0.5) {
    r = 1.0 - r;
  } else if (r < -0.5) {
    r = -1.0 - r;
  }
  return std::sin(kPi * r);
}

double cos_pi(double x) {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  const double r = std::fabs(std::remainder(x, 2.0));  // [0, 1]
  if (r <= 0.25) return std::cos(kPi * r);
  if (r <= 0.75) return std::sin(kPi * (0.5 - r));
  return -std::cos(kPi * (1.0 - r));
}

Complex sin_pi(Complex s) {
  const double py = kPi * s.imag();
  return {sin_pi(s.real()) * std::cosh(py), cos_pi(s.real()) * std::sinh(py)};
}

Complex cos_pi(Complex s) {
  const double py = kPi * s.imag();
  return {cos_pi(s.real()) * std::cosh(py), -sin_pi(s.real()) * std::sinh(py)};
}

Complex expm1(Complex z) {
  const double x = z.real();
  const double y = z.imag();
  const double half_sin = std::sin(0.5 * y);
  // e^x cos y - 1 = expm1(x) cos y - 2 sin²(y/2)
  const double re = std::expm1(x) * std::cos(y) - 2.0 * half_sin * half_sin;
  const double im = std::exp(x) * std::sin(y);
  return {re, im};
}

}  // namespace zetasphere
