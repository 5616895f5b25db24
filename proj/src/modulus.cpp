#include "zetasphere/modulus.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <string>

#include "zetasphere/errors.hpp"
#include "zetasphere/specfun.hpp"
#include "zetasphere/zeta.hpp"

namespace zetasphere::modulus {
namespace {

const double kLogTwoPi = std::log(2.0 * kPi);

void require_strip(Complex s, const char* what) {
  require_finite(s, what);
  if (!(s.real() > 0.0 && s.real() < 1.0)) {
    throw DomainError(std::string(what) + ": requires 0 < Re(s) < 1");
  }
}

void require_step(double h) {
  if (!(h >= 1e-8 && h <= 1e-4)) throw DomainError("step h must lie in [1e-8, 1e-4]");
}

}  // namespace

Complex f_factor(Complex s) { return zeta::functional_factor(s); }

double modulus_bracket(Complex s) {
  const double sx = sin_pi(0.5 * s.real());
  const double shy = std::sinh(0.5 * kPi * s.imag());
  return 4.0 * (shy * shy + sx * sx);
}

ModulusBreakdown f_abs_closed(Complex s) {
  require_strip(s, "f_abs_closed");
  const double x = s.real();
  const double root = std::sqrt(modulus_bracket(s));
  ModulusBreakdown out;
  out.two_pow = std::exp2(x);
  out.pi_pow = std::pow(kPi, x - 1.0);
  out.sin_abs = 0.5 * root;
  out.gamma_abs = std::abs(specfun::gamma(1.0 - s));
  out.product = std::exp((x - 1.0) * kLogTwoPi) * root * out.gamma_abs;
  return out;
}

double gamma_abs_dx(Complex s) {
  require_finite(s, "gamma_abs_dx");
  const Complex w = 1.0 - s;
  return -0.5 * std::abs(specfun::gamma(w)) * specfun::psi_pair(w);
}

double f_abs_dx(Complex s, double h) {
  require_strip(s, "f_abs_dx");
  require_step(h);
  const double x = s.real();
  const double b = modulus_bracket(s);
  const double scale = std::exp((x - 1.0) * kLogTwoPi);
  const double sc = sin_pi(0.5 * x) * cos_pi(0.5 * x);
  const double g = std::abs(specfun::gamma(1.0 - s));
  const double first = g * scale * (kLogTwoPi * std::pow(b, 1.5) + 2.0 * kPi * sc) / std::sqrt(b);
  return first + scale * std::sqrt(b) * gamma_abs_dx(s);
}

double f_abs_dx_chain_rule(Complex s) {
  require_strip(s, "f_abs_dx_chain_rule");
  const double x = s.real();
  const double b = modulus_bracket(s);
  const double scale = std::exp((x - 1.0) * kLogTwoPi);
  const double sc = sin_pi(0.5 * x) * cos_pi(0.5 * x);
  const double g = std::abs(specfun::gamma(1.0 - s));
  const double first = g * scale * (kLogTwoPi * b + 2.0 * kPi * sc) / std::sqrt(b);
  return first + scale * std::sqrt(b) * gamma_abs_dx(s);
}

double f_abs_dx_numeric(Complex s, double h) {
  require_step(h);
  const double up = f_abs_closed(s + h).product;
  const double down = f_abs_closed(s - h).product;
  return (up - down) / (2.0 * h);
}

double criterion_ratio(Complex s0, double radius) {
  require_strip(s0, "criterion_ratio");
  if (!(radius > 0.0 && radius <= 0.1)) throw DomainError("criterion_ratio: radius must lie in (0, 0.1]");
  constexpr int kSamples = 8;
  double sum = 0.0;
  for (int j = 0; j < kSamples; ++j) {
    const Complex s = s0 + std::polar(radius, 2.0 * kPi * j / kSamples);
    sum += std::abs(zeta::zeta_eval(s)) / std::abs(zeta::zeta_eval(1.0 - s));
  }
  return sum / kSamples;
}

VerificationItems asymptotic_suite() {
  VerificationItems items;
  const std::array<double, 3> eps{1e-2, 1e-3, 1e-4};
  std::array<double, 3> gaps{};
  const Complex dir = std::polar(1.0, 0.25 * kPi);
  for (std::size_t i = 0; i < eps.size(); ++i) {
    const Complex s = eps[i] * dir;
    const double f_abs = std::abs(f_factor(s));
    const double product = f_abs * std::abs(zeta::zeta_eval(1.0 - s));
    gaps[i] = std::fabs(product - 0.5);
    char label[64];
    std::snprintf(label, sizeof label, "zero_times_infinity eps=%.0e", eps[i]);
    items.push_back(claim(label, 0.5, product, 10.0 * eps[i]));
    std::snprintf(label, sizeof label, "f_abs_to_zero eps=%.0e", eps[i]);
    items.push_back(claim(label, 0.0, f_abs, 100.0 * eps[i]));
  }
  const bool monotone = gaps[1] < gaps[0] && gaps[2] < gaps[1];
  items.push_back(check("zero_times_infinity monotone", 1.0, monotone ? 1.0 : 0.0, 0.0));
  return items;
}

}  // namespace zetasphere::modulus
