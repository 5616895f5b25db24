#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "zetasphere/extended_point.hpp"
#include "zetasphere/types.hpp"

namespace zetasphere::sphere {

/// Point of the unit sphere centred at height 1: |z0|² + (w0 - 1)² = 1.
/// South pole (0, 0) is 0, north pole (0, 2) is ∞.
struct SpherePoint {
  Complex z0;
  double w0 = 0.0;

  double constraint_residual() const;
};

/// Point on the cover: base abscissa and angle fraction on Γ_{x0}.
struct CoverPoint {
  double x0 = 0.0;
  double phase = 0.0;  // in [0, 1)

  friend bool operator==(const CoverPoint&, const CoverPoint&) = default;
};

/// |x0 - x0'| and the circular phase distance both within tol.
bool approx_equal(const CoverPoint& a, const CoverPoint& b, double tol);

inline constexpr double kConstraintTolerance = 1e-10;

/// 2z0/(2 - w0); the north pole maps to ∞. InvalidSpherePoint when the
/// constraint residual exceeds kConstraintTolerance.
ExtendedPoint stereo_project(const SpherePoint& p);

/// Inverse of stereo_project.
SpherePoint stereo_lift(const ExtendedPoint& z);

/// Euclidean distance in R³ between the lifts of two extended points.
double chordal_distance(const ExtendedPoint& a, const ExtendedPoint& b);

/// (x, e^{2πiy}) represented as (x, y mod 1).
CoverPoint covering_a(Complex z);

/// Piecewise-affine map of the ordinate sending the k-th zero ordinate to
/// z_0 + k. Identity on [0, z_0], odd in y, last gap reused past the end.
/// InsufficientOrdinates unless ordinates has >= 2 strictly increasing
/// positive entries.
Complex sector_retraction(Complex z, std::span<const double> ordinates);

/// covering_a ∘ sector_retraction.
CoverPoint covering_b(Complex z, std::span<const double> ordinates);

/// A planar map u + iv with an optional predicate marking its seams.
struct PlanarMap {
  std::function<Complex(Complex)> eval;
  std::function<bool(Complex, double)> near_seam;  // (z, h) -> true if a seam is within h
};

PlanarMap identity_map();
PlanarMap sector_map(std::vector<double> ordinates);

/// (|∂x u - ∂y v|, |∂y u + ∂x v|) by central differences with step h in
/// [1e-8, 1e-3]. BoundaryPoint when z is within h of a seam.
std::pair<double, double> cr_residual(const PlanarMap& map, Complex z, double h);

/// Chordal distance from the lift of 1/2 + i·z_k to the north pole, per
/// ordinate. DomainError unless ordinates are strictly increasing.
std::vector<double> accumulation_gaps(std::span<const double> ordinates);

}  // namespace zetasphere::sphere
