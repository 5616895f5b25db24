#include "zetasphere/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

#include "zetasphere/errors.hpp"

namespace zetasphere::sphere {
namespace {

void require_ordinates(std::span<const double> ordinates) {
  if (ordinates.size() < 2) throw InsufficientOrdinates("need at least two zero ordinates");
  if (!(ordinates.front() > 0.0)) throw InsufficientOrdinates("zero ordinates must be positive");
  for (std::size_t i = 1; i < ordinates.size(); ++i) {
    if (!(ordinates[i] > ordinates[i - 1])) {
      throw InsufficientOrdinates("zero ordinates must be strictly increasing");
    }
  }
}

double retract_ordinate(double y, std::span<const double> z) {
  if (y < 0.0) return -retract_ordinate(-y, z);
  if (y <= z.front()) return y;
  const auto last = z.size() - 1;
  std::size_t k = static_cast<std::size_t>(std::upper_bound(z.begin(), z.end(), y) - z.begin()) - 1;
  k = std::min(k, last);
  const double gap = (k < last) ? z[k + 1] - z[k] : z[last] - z[last - 1];
  return z.front() + static_cast<double>(k) + (y - z[k]) / gap;
}

double fraction(double y) {
  const double f = y - std::floor(y);
  return f >= 1.0 ? 0.0 : f;
}

}  // namespace

double SpherePoint::constraint_residual() const {
  return std::fabs(std::norm(z0) - 1.0 + (w0 - 1.0) * (w0 - 1.0));
}

bool approx_equal(const CoverPoint& a, const CoverPoint& b, double tol) {
  const double d = std::fabs(a.phase - b.phase);
  return std::fabs(a.x0 - b.x0) <= tol && std::min(d, 1.0 - d) <= tol;
}

ExtendedPoint stereo_project(const SpherePoint& p) {
  require_finite(p.z0, "stereo_project");
  if (!std::isfinite(p.w0) || p.constraint_residual() > kConstraintTolerance) {
    throw InvalidSpherePoint("stereo_project: point is not on the sphere");
  }
  // On the sphere |z0|² = w0(2 - w0), which avoids cancellation near the north pole.
  const double denom = (p.w0 > 1.0) ? std::norm(p.z0) / p.w0 : 2.0 - p.w0;
  if (denom == 0.0) return ExtendedPoint::infinity();
  return ExtendedPoint(2.0 * p.z0 / denom);
}

SpherePoint stereo_lift(const ExtendedPoint& z) {
  if (z.is_infinite()) return {Complex(0.0, 0.0), 2.0};
  const Complex v = require_finite(z.value(), "stereo_lift");
  const double r = std::abs(v);
  if (r == 0.0) return {Complex(0.0, 0.0), 0.0};
  if (r <= 1.0) {
    const double d = r * r + 4.0;
    return {4.0 * v / d, 2.0 * r * r / d};
  }
  return {4.0 / (std::conj(v) + 4.0 / v), 2.0 / (1.0 + 4.0 / (r * r))};
}

double chordal_distance(const ExtendedPoint& a, const ExtendedPoint& b) {
  const SpherePoint p = stereo_lift(a);
  const SpherePoint q = stereo_lift(b);
  return std::sqrt(std::norm(p.z0 - q.z0) + (p.w0 - q.w0) * (p.w0 - q.w0));
}

CoverPoint covering_a(Complex z) {
  require_finite(z, "covering_a");
  return {z.real(), fraction(z.imag())};
}

Complex sector_retraction(Complex z, std::span<const double> ordinates) {
  require_ordinates(ordinates);
  require_finite(z, "sector_retraction");
  return {z.real(), retract_ordinate(z.imag(), ordinates)};
}

CoverPoint covering_b(Complex z, std::span<const double> ordinates) {
  return covering_a(sector_retraction(z, ordinates));
}

PlanarMap identity_map() {
  return {[](Complex z) { return z; }, [](Complex, double) { return false; }};
}

PlanarMap sector_map(std::vector<double> ordinates) {
  require_ordinates(ordinates);
  auto shared = std::make_shared<const std::vector<double>>(std::move(ordinates));
  PlanarMap map;
  map.eval = [shared](Complex z) { return sector_retraction(z, *shared); };
  map.near_seam = [shared](Complex z, double h) {
    const double y = std::fabs(z.imag());
    return std::any_of(shared->begin(), shared->end(), [&](double zk) { return std::fabs(y - zk) <= h; });
  };
  return map;
}

std::pair<double, double> cr_residual(const PlanarMap& map, Complex z, double h) {
  if (!(h >= 1e-8 && h <= 1e-3)) throw DomainError("cr_residual: h must lie in [1e-8, 1e-3]");
  require_finite(z, "cr_residual");
  if (map.near_seam && map.near_seam(z, h)) {
    throw BoundaryPoint("cr_residual: point lies within h of a seam");
  }
  const Complex dx = (map.eval(z + Complex(h, 0.0)) - map.eval(z - Complex(h, 0.0))) / (2.0 * h);
  const Complex dy = (map.eval(z + Complex(0.0, h)) - map.eval(z - Complex(0.0, h))) / (2.0 * h);
  return {std::fabs(dx.real() - dy.imag()), std::fabs(dy.real() + dx.imag())};
}

std::vector<double> accumulation_gaps(std::span<const double> ordinates) {
  for (std::size_t i = 1; i < ordinates.size(); ++i) {
    if (!(ordinates[i] > ordinates[i - 1])) {
      throw DomainError("accumulation_gaps: ordinates must be strictly increasing");
    }
  }
  std::vector<double> out;
  out.reserve(ordinates.size());
  for (double t : ordinates) {
    out.push_back(chordal_distance(ExtendedPoint(Complex(0.5, t)), ExtendedPoint::infinity()));
  }
  return out;
}

}  // namespace zetasphere::sphere
