#pragma once

#include <utility>
#include <vector>

#include "zetasphere/types.hpp"

namespace zetasphere::zeros {

/// A critical-line zero 1/2 + i·ordinate.
struct ZeroRecord {
  double ordinate = 0.0;
  std::pair<double, double> bracket{0.0, 0.0};
  double residual = 0.0;   // |ζ̃(1/2 + i·ordinate)|
  double criterion = 0.0;  // criterion_ratio at the zero
};

struct Rectangle {
  double x_min = 0.0;
  double x_max = 0.0;
  double y_min = 0.0;
  double y_max = 0.0;

  /// Throws DomainError unless x_min < x_max and 0 < y_min < y_max.
  void validate() const;
};

/// Bracket width at which refinement stops.
inline constexpr double kBracketWidth = 1e-9;

/// Radius used for the criterion field of refined zeros.
inline constexpr double kCriterionRadius = 1e-4;

/// Re ζ̃(1/2 + it). Throws RealnessViolation if |Im| > 1e-10(1 + |Re|).
double z_real(double t);

/// Re ζ̃(1/2 + it)·e^{π|t|/4}, the same sign as z_real without underflow.
double z_scaled(double t);

/// Bisection/secant hybrid on a sign change of Z. Throws NoSignChange.
ZeroRecord refine_zero(std::pair<double, double> bracket);

/// Sign-change scan of Z on the grid t0 + k·step, refined and deduplicated.
/// 0 <= t0 < t1 <= 1000, step in [0.01, 1]. `workers` > 1 partitions the
/// grid; the merge is deterministic and identical to a single-worker scan.
std::vector<ZeroRecord> scan_zeros(double t0, double t1, double step, int workers = 1);

struct WindingResult {
  int count = 0;
  double phase_winding = 0.0;  // total unwrapped phase change / 2π
  double quadrature = 0.0;     // trapezoid value of (1/2πi)∮ ζ̃'/ζ̃, real part
  std::size_t nodes = 0;
};

/// Argument-principle zero count of ζ̃ inside `rect`.
WindingResult winding(const Rectangle& rect);

int count_zeros_rectangle(const Rectangle& rect);

}  // namespace zetasphere::zeros
