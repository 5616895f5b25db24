#pragma once

#include <utility>

#include "zetasphere/mero.hpp"
#include "zetasphere/report.hpp"
#include "zetasphere/types.hpp"

namespace zetasphere::flow {

inline constexpr double kDefaultStripMargin = 0.1;

struct FlowParams {
  double a = kDefaultStripMargin;  // strip Ξ0 = [a, 1 - a], 0 < a < 1/2
  double t = 0.0;                  // homotopy time in [0, 1]

  void validate() const;
};

/// Collapses [a, 1-a] toward Re s = 1/2; identity outside; y unchanged.
Complex flow_map(const FlowParams& p, Complex z);

/// (1/2 - x, 0) inside [a, 1-a], (0, 0) outside.
std::pair<double, double> flow_velocity(const FlowParams& p, Complex z);

/// Pushes every finite support point through flow_map, merging coincident images.
mero::Divisor transport_divisor(const FlowParams& p, const mero::Divisor& d);

struct ContinuityReport {
  double raw_jump_left = 0.0;   // |φ(a-ε) - φ(a+ε)|, ε = 1e-6
  double jump_left = 0.0;       // one-sided limits at x = a
  double raw_jump_right = 0.0;  // at x = 1 - a
  double jump_right = 0.0;
  double seam_jump = 0.0;       // at x = 1/2
  double expected = 0.0;        // t(1/2 - a)
  VerificationItems items;
};

/// Measures the jumps the flow induces at the strip boundary.
ContinuityReport continuity_probe(const FlowParams& p);

}  // namespace zetasphere::flow
