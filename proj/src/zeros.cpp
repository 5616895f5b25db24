#include "zetasphere/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <exception>
#include <thread>

#include "zetasphere/errors.hpp"
#include "zetasphere/modulus.hpp"
#include "zetasphere/zeta.hpp"

namespace zetasphere::zeros {
namespace {

constexpr double kMaxOrdinate = 1000.0;
constexpr double kMinSegment = 1e-7;
constexpr double kDerivativeStep = 1e-6;

double checked_real(Complex value, double bound, double t) {
  if (std::fabs(value.imag()) > bound * (1.0 + std::fabs(value.real()))) {
    throw RealnessViolation("completed zeta not real on the critical line at t = " + std::to_string(t));
  }
  return value.real();
}

struct Sample {
  double t;
  double z;
};

// Illinois-modified regula falsi, with bisection whenever the secant
// step fails to shrink the bracket by half.
double illinois(Sample lo, Sample hi) {
  int side = 0;
  while (hi.t - lo.t > kBracketWidth) {
    const double width = hi.t - lo.t;
    double t = (lo.t * hi.z - hi.t * lo.z) / (hi.z - lo.z);
    if (!(t > lo.t && t < hi.t)) t = 0.5 * (lo.t + hi.t);
    const double z = z_scaled(t);
    if (z == 0.0) return t;
    if ((z < 0.0) == (lo.z < 0.0)) {
      lo = {t, z};
      if (side == -1) hi.z *= 0.5;
      side = -1;
    } else {
      hi = {t, z};
      if (side == 1) lo.z *= 0.5;
      side = 1;
    }
    if (hi.t - lo.t > 0.5 * width) {
      const double mid = 0.5 * (lo.t + hi.t);
      const double zm = z_scaled(mid);
      if (zm == 0.0) return mid;
      if ((zm < 0.0) == (lo.z < 0.0)) {
        lo = {mid, zm};
      } else {
        hi = {mid, zm};
      }
      side = 0;
    }
  }
  return 0.5 * (lo.t + hi.t);
}

ZeroRecord make_record(double t, std::pair<double, double> bracket) {
  ZeroRecord rec;
  rec.ordinate = t;
  rec.bracket = bracket;
  rec.residual = std::abs(zeta::completed_zeta(Complex(0.5, t)));
  rec.criterion = modulus::criterion_ratio(Complex(0.5, t), kCriterionRadius);
  return rec;
}

Complex boundary_point(const Rectangle& r, double u) {
  // u in [0, 4): bottom, right, top, left, counterclockwise.
  const int edge = std::min(3, static_cast<int>(u));
  const double f = u - edge;
  switch (edge) {
    case 0:
      return {r.x_min + f * (r.x_max - r.x_min), r.y_min};
    case 1:
      return {r.x_max, r.y_min + f * (r.y_max - r.y_min)};
    case 2:
      return {r.x_max - f * (r.x_max - r.x_min), r.y_max};
    default:
      return {r.x_min, r.y_max - f * (r.y_max - r.y_min)};
  }
}

double wrap(double a) { return std::remainder(a, 2.0 * kPi); }

}  // namespace

void Rectangle::validate() const {
  if (!(x_min < x_max) || !(y_min > 0.0) || !(y_min < y_max)) {
    throw DomainError("rectangle requires x_min < x_max and 0 < y_min < y_max");
  }
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !std::isfinite(y_max)) {
    throw DomainError("rectangle bounds must be finite");
  }
}

double z_real(double t) {
  if (!std::isfinite(t)) throw DomainError("z_real: t must be finite");
  return checked_real(zeta::completed_zeta(Complex(0.5, t)), 1e-10, t);
}

double z_scaled(double t) {
  if (!std::isfinite(t)) throw DomainError("z_scaled: t must be finite");
  return checked_real(zeta::completed_zeta_scaled(Complex(0.5, t)), 1e-8, t);
}

ZeroRecord refine_zero(std::pair<double, double> bracket) {
  auto [a, b] = bracket;
  if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("refine_zero: bracket must be finite");
  if (a > b) std::swap(a, b);
  const double za = z_scaled(a);
  const double zb = z_scaled(b);
  if (za == 0.0) return make_record(a, {a, a});
  if (zb == 0.0) return make_record(b, {b, b});
  if ((za < 0.0) == (zb < 0.0)) {
    throw NoSignChange("refine_zero: Z has the same sign at " + std::to_string(a) + " and " +
                       std::to_string(b));
  }
  return make_record(illinois({a, za}, {b, zb}), {a, b});
}

std::vector<ZeroRecord> scan_zeros(double t0, double t1, double step, int workers) {
  if (!(t0 >= -kMaxOrdinate && t0 < t1 && t1 <= kMaxOrdinate)) {
    throw DomainError("scan_zeros: requires -1000 <= t0 < t1 <= 1000");
  }
  if (!(step >= 0.01 && step <= 1.0)) throw DomainError("scan_zeros: step must lie in [0.01, 1]");
  if (workers < 1) throw DomainError("scan_zeros: workers must be positive");

  std::vector<double> grid;
  for (std::size_t k = 0;; ++k) {
    const double t = t0 + static_cast<double>(k) * step;
    if (t >= t1 - 1e-12) break;
    grid.push_back(t);
  }
  grid.push_back(t1);

  std::vector<double> values(grid.size());
  const std::size_t n_workers = std::min<std::size_t>(static_cast<std::size_t>(workers), grid.size());
  auto fill = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) values[i] = z_scaled(grid[i]);
  };
  if (n_workers <= 1) {
    fill(0, grid.size());
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(n_workers);
    const std::size_t chunk = (grid.size() + n_workers - 1) / n_workers;
    for (std::size_t w = 0; w < n_workers; ++w) {
      const std::size_t begin = std::min(grid.size(), w * chunk);
      const std::size_t end = std::min(grid.size(), begin + chunk);
      pool.emplace_back([&, w, begin, end] {
        try {
          fill(begin, end);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  std::vector<ZeroRecord> records;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (values[i] == 0.0) {
      records.push_back(make_record(grid[i], {grid[i], grid[i]}));
      continue;
    }
    if (i + 1 < grid.size() && values[i + 1] != 0.0 && (values[i] < 0.0) != (values[i + 1] < 0.0)) {
      records.push_back(make_record(illinois({grid[i], values[i]}, {grid[i + 1], values[i + 1]}),
                                    {grid[i], grid[i + 1]}));
    }
  }
  std::sort(records.begin(), records.end(),
            [](const ZeroRecord& l, const ZeroRecord& r) { return l.ordinate < r.ordinate; });
  records.erase(std::unique(records.begin(), records.end(),
                            [](const ZeroRecord& l, const ZeroRecord& r) {
                              return std::fabs(l.ordinate - r.ordinate) <= kBracketWidth;
                            }),
                records.end());
  return records;
}

WindingResult winding(const Rectangle& rect) {
  rect.validate();
  auto value = [&](double u) { return zeta::completed_zeta_scaled(boundary_point(rect, u)); };
  auto phase = [](Complex v) {
    if (v == 0.0) throw PhaseJumpError("winding: boundary passes through a zero");
    return std::arg(v);
  };

  // Parameter nodes on [0, 4], initially ~0.25 apart along each edge.
  std::vector<double> nodes;
  const double widths[4] = {rect.x_max - rect.x_min, rect.y_max - rect.y_min, rect.x_max - rect.x_min,
                            rect.y_max - rect.y_min};
  for (int e = 0; e < 4; ++e) {
    const int pieces = std::max(8, static_cast<int>(std::ceil(widths[e] / 0.25)));
    for (int j = 0; j < pieces; ++j) nodes.push_back(e + static_cast<double>(j) / pieces);
  }
  nodes.push_back(4.0);

  WindingResult out;
  double total = 0.0;
  std::vector<double> accepted;
  accepted.push_back(0.0);
  Complex prev_value = value(0.0);
  double prev_phase = phase(prev_value);
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    // Adaptive halving from the last accepted node toward nodes[i].
    std::vector<double> stack{nodes[i]};
    while (!stack.empty()) {
      const double u = stack.back();
      const Complex v = (u >= 4.0) ? value(0.0) : value(u);
      const double ph = phase(v);
      const double step = wrap(ph - prev_phase);
      const double u_prev = accepted.back();
      const int edge = std::min(3, static_cast<int>(u_prev));
      const double seg = (u - u_prev) * widths[edge];
      if (std::fabs(step) >= 0.25 * kPi && seg > kMinSegment) {
        stack.push_back(0.5 * (u_prev + u));
        continue;
      }
      if (std::fabs(step) > 0.5 * kPi) {
        throw PhaseJumpError("winding: phase step stays above pi/2 near u = " + std::to_string(u));
      }
      total += step;
      prev_phase = ph;
      prev_value = v;
      accepted.push_back(u);
      stack.pop_back();
    }
  }

  // Trapezoid of ζ̃'/ζ̃ ds on the accepted nodes. The derivative is taken
  // along the real axis, where the e^{π|y|/4} scaling is constant.
  auto log_derivative = [&](double u) {
    const Complex s = boundary_point(rect, std::min(u, 4.0 - 1e-15));
    const Complex up = zeta::completed_zeta_scaled(s + kDerivativeStep);
    const Complex down = zeta::completed_zeta_scaled(s - kDerivativeStep);
    return (up - down) / (2.0 * kDerivativeStep * zeta::completed_zeta_scaled(s));
  };
  Complex integral = 0.0;
  Complex prev_ld = log_derivative(accepted.front());
  Complex prev_s = boundary_point(rect, 0.0);
  for (std::size_t i = 1; i < accepted.size(); ++i) {
    const double u = accepted[i];
    const Complex s = (u >= 4.0) ? boundary_point(rect, 0.0) : boundary_point(rect, u);
    const Complex ld = log_derivative(u >= 4.0 ? 0.0 : u);
    integral += 0.5 * (ld + prev_ld) * (s - prev_s);
    prev_ld = ld;
    prev_s = s;
  }

  out.phase_winding = total / (2.0 * kPi);
  out.count = static_cast<int>(std::lround(out.phase_winding));
  out.quadrature = (integral / Complex(0.0, 2.0 * kPi)).real();
  out.nodes = accepted.size();
  return out;
}

int count_zeros_rectangle(const Rectangle& rect) { return winding(rect).count; }

}  // namespace zetasphere::zeros
