#include "zetasphere/specfun.hpp"

#include <array>
#include <cmath>
#include <string>

#include "zetasphere/errors.hpp"

namespace zetasphere::specfun {
namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

const double kHalfLogTwoPi = 0.5 * std::log(2.0 * kPi);

// B_{2k} / (2k) for k = 1..7.
constexpr std::array<double, 7> kDigammaAsymptotic = {
    1.0 / 12.0, -1.0 / 120.0, 1.0 / 252.0, -1.0 / 240.0, 1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0};

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

[[noreturn]] void throw_gamma_pole(int k) {
  const double residue = ((k % 2 == 0) ? 1.0 : -1.0) / factorial(k);
  throw PoleError("gamma: pole at s = " + std::to_string(-k), Complex(-k, 0.0), Complex(residue, 0.0));
}

// Lanczos log Γ for Re s >= 1/2.
Complex lanczos_log_gamma(Complex s) {
  const Complex z = s - 1.0;
  Complex sum = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    sum += kLanczos[i] / (z + static_cast<double>(i));
  }
  const Complex t = z + kLanczosG + 0.5;
  return kHalfLogTwoPi + (z + 0.5) * std::log(t) - t + std::log(sum);
}

Complex digamma_tail(Complex s, double n) {
  // Σ_{m >= n} (s-1)/((m+1)(m+s)) by Euler–Maclaurin: ∫ + g/2 - g'/12.
  const Complex sm1 = s - 1.0;
  const Complex integral = std::log(n + s) - std::log(n + 1.0);
  const Complex g = sm1 / ((n + 1.0) * (n + s));
  const Complex dg = -sm1 * (2.0 * n + s + 1.0) / ((n + 1.0) * (n + 1.0) * (n + s) * (n + s));
  return integral + 0.5 * g - dg / 12.0;
}

std::int64_t digamma_series_terms(Complex s, const EvalOptions& opts) {
  opts.validate();
  const double scale = std::abs(s - 1.0) + 1.0;
  const double needed = std::max({64.0, 4.0 * std::abs(s), std::pow(scale / opts.tolerance, 0.25)});
  const auto n = static_cast<std::int64_t>(std::ceil(needed));
  if (n > opts.max_terms) {
    throw ConvergenceError("digamma_series: needs " + std::to_string(n) + " terms, budget " +
                           std::to_string(opts.max_terms));
  }
  return n;
}

}  // namespace

int nearest_nonpositive_integer(Complex s) {
  if (s.real() > 0.5) return 1;
  const double k = std::round(s.real());
  if (std::abs(s - Complex(k, 0.0)) <= kPoleWindow) return static_cast<int>(k);
  return 1;
}

Complex gamma(Complex s) {
  require_finite(s, "gamma");
  if (const int k = nearest_nonpositive_integer(s); k <= 0) throw_gamma_pole(-k);
  if (s.real() < 0.5) {
    return kPi / (sin_pi(s) * gamma(1.0 - s));
  }
  return std::exp(lanczos_log_gamma(s));
}

Complex log_gamma(Complex s) {
  require_finite(s, "log_gamma");
  if (const int k = nearest_nonpositive_integer(s); k <= 0) throw_gamma_pole(-k);
  if (s.real() < 0.5) {
    return std::log(kPi) - std::log(sin_pi(s)) - lanczos_log_gamma(1.0 - s);
  }
  return lanczos_log_gamma(s);
}

Complex digamma(Complex s) {
  require_finite(s, "digamma");
  if (const int k = nearest_nonpositive_integer(s); k <= 0) {
    throw PoleError("digamma: pole at s = " + std::to_string(k), Complex(k, 0.0), Complex(-1.0, 0.0));
  }
  if (s.real() < 0.5) {
    return digamma(1.0 - s) - kPi * cos_pi(s) / sin_pi(s);
  }
  Complex shift = 0.0;
  while (std::abs(s) < 10.0) {
    shift -= 1.0 / s;
    s += 1.0;
  }
  const Complex inv2 = 1.0 / (s * s);
  Complex series = 0.0;
  Complex power = inv2;
  for (double c : kDigammaAsymptotic) {
    series += c * power;
    power *= inv2;
  }
  return shift + std::log(s) - 0.5 / s - series;
}

Complex digamma_series(Complex s, const EvalOptions& opts) {
  require_finite(s, "digamma_series");
  if (const int k = nearest_nonpositive_integer(s); k <= 0) {
    throw PoleError("digamma_series: pole at s = " + std::to_string(k), Complex(k, 0.0), Complex(-1.0, 0.0));
  }
  const std::int64_t n = digamma_series_terms(s, opts);
  const Complex sm1 = s - 1.0;
  Complex sum = 0.0;
  for (std::int64_t m = n - 1; m >= 0; --m) {
    const double md = static_cast<double>(m);
    sum += sm1 / ((md + 1.0) * (md + s));
  }
  return -kEulerGamma + sum + digamma_tail(s, static_cast<double>(n));
}

double gamma_abs_critical(double y) {
  const double a = std::fabs(y);
  const double decay = std::exp(-kPi * a);
  return std::sqrt(2.0 * kPi * decay / (1.0 + decay * decay));
}

double gamma_abs_unit(double y) {
  const double a = std::fabs(y);
  if (a == 0.0) return 1.0;
  if (a < 1.0) return std::sqrt(a * kPi / std::sinh(kPi * a));
  const double decay = std::exp(-kPi * a);
  return std::sqrt(2.0 * kPi * a * decay / (1.0 - decay * decay));
}

double reflection_residual(Complex s) {
  require_finite(s, "reflection_residual");
  const double k = std::round(s.real());
  if (std::abs(s - Complex(k, 0.0)) <= kPoleWindow) {
    throw DomainError("reflection_residual: s is an integer");
  }
  return std::abs(gamma(1.0 - s) * gamma(s) * sin_pi(s) - kPi);
}

double psi_pair(Complex s) { return 2.0 * digamma(s).real(); }

double psi_pair_series(Complex s, const EvalOptions& opts) {
  require_finite(s, "psi_pair_series");
  if (const int k = nearest_nonpositive_integer(s); k <= 0) {
    throw PoleError("psi_pair_series: pole at s = " + std::to_string(k), Complex(k, 0.0), Complex(-1.0, 0.0));
  }
  const std::int64_t n = digamma_series_terms(s, opts);
  const double x = s.real();
  const double y2 = s.imag() * s.imag();
  double sum = 0.0;
  for (std::int64_t m = n - 1; m >= 0; --m) {
    const double md = static_cast<double>(m);
    const double nx = md + x;
    sum += ((x - 1.0) * (x + md) + y2) / ((md + 1.0) * (nx * nx + y2));
  }
  return 2.0 * (-kEulerGamma + sum + digamma_tail(s, static_cast<double>(n)).real());
}

}  // namespace zetasphere::specfun
