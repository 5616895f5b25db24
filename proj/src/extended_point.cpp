#include "zetasphere/extended_point.hpp"

#include <cmath>

#include "zetasphere/errors.hpp"

namespace zetasphere {

Complex ExtendedPoint::value() const {
  if (!value_) throw DomainError("ExtendedPoint: the point at infinity has no finite value");
  return *value_;
}

bool near(const ExtendedPoint& a, const ExtendedPoint& b, double tol) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() && b.is_infinite();
  return std::abs(*a.value_ - *b.value_) <= tol;
}

bool operator<(const ExtendedPoint& a, const ExtendedPoint& b) {
  if (a.is_infinite()) return false;
  if (b.is_infinite()) return true;
  const Complex x = *a.value_;
  const Complex y = *b.value_;
  if (x.real() != y.real()) return x.real() < y.real();
  return x.imag() < y.imag();
}

std::ostream& operator<<(std::ostream& os, const ExtendedPoint& p) {
  if (p.is_infinite()) return os << "inf";
  const Complex z = p.value();
  return os << z.real() << (std::signbit(z.imag()) ? "-" : "+") << std::fabs(z.imag()) << "i";
}

}  // namespace zetasphere
