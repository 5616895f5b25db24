#include "zetasphere/flow.hpp"

#include <cmath>

#include "zetasphere/errors.hpp"

namespace zetasphere::flow {
namespace {

constexpr double kProbeStep = 1e-6;

bool in_strip(const FlowParams& p, double x) { return x >= p.a && x <= 1.0 - p.a; }

double image_x(const FlowParams& p, double x) { return flow_map(p, Complex(x, 0.0)).real(); }

// Limit of the image as x approaches x0 from the given side, by linear
// extrapolation from offsets ε and 2ε.
double one_sided(const FlowParams& p, double x0, double side) {
  const double near = image_x(p, x0 + side * kProbeStep);
  const double far = image_x(p, x0 + side * 2.0 * kProbeStep);
  return 2.0 * near - far;
}

}  // namespace

void FlowParams::validate() const {
  if (!(a > 0.0 && a < 0.5)) throw DomainError("flow: strip margin a must satisfy 0 < a < 1/2");
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("flow: time t must lie in [0, 1]");
}

Complex flow_map(const FlowParams& p, Complex z) {
  p.validate();
  require_finite(z, "flow_map");
  const double x = z.real();
  if (!in_strip(p, x)) return z;
  return {std::lerp(x, 0.5, p.t), z.imag()};
}

std::pair<double, double> flow_velocity(const FlowParams& p, Complex z) {
  p.validate();
  require_finite(z, "flow_velocity");
  if (!in_strip(p, z.real())) return {0.0, 0.0};
  return {0.5 - z.real(), 0.0};
}

mero::Divisor transport_divisor(const FlowParams& p, const mero::Divisor& d) {
  p.validate();
  mero::Divisor out;
  for (const auto& [q, n] : d.entries()) {
    out.add(q.is_infinite() ? q : ExtendedPoint(flow_map(p, q.value())), n);
  }
  return out;
}

ContinuityReport continuity_probe(const FlowParams& p) {
  p.validate();
  ContinuityReport r;
  const double a = p.a;
  const double b = 1.0 - p.a;
  r.raw_jump_left = std::fabs(image_x(p, a - kProbeStep) - image_x(p, a + kProbeStep));
  r.raw_jump_right = std::fabs(image_x(p, b + kProbeStep) - image_x(p, b - kProbeStep));
  r.jump_left = std::fabs(one_sided(p, a, -1.0) - one_sided(p, a, 1.0));
  r.jump_right = std::fabs(one_sided(p, b, 1.0) - one_sided(p, b, -1.0));
  r.seam_jump = std::fabs(one_sided(p, 0.5, -1.0) - one_sided(p, 0.5, 1.0));
  r.expected = p.t * (0.5 - a);

  r.items.push_back(check("flow jump at x=a", r.expected, r.jump_left, 1e-9));
  r.items.push_back(check("flow jump at x=1-a", r.expected, r.jump_right, 1e-9));
  r.items.push_back(check("flow seam jump at x=1/2", 0.0, r.seam_jump, 1e-9));
  r.items.push_back(claim("flow boundary fixed", 0.0, r.jump_left, 1e-9,
                                "the strip boundary is said to stay fixed, but x=a moves by t(1/2-a)"));
  return r;
}

}  // namespace zetasphere::flow
