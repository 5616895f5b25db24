#include "zetasphere/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zetasphere/errors.hpp"
#include "zetasphere/specfun.hpp"

namespace zetasphere::zeta {
namespace {

const double kLog2 = std::log(2.0);
const double kLogPi = std::log(kPi);
const double kLogBorweinRate = std::log(3.0 + std::sqrt(8.0));

constexpr double kPoleWindow = 1e-12;
constexpr int kMaxEvenK = 30;

// Number of terms for which the Borwein bound
// 3 (1 + 2|t|) e^{π|t|/2} / (|Γ(s)| (3 + √8)^n) drops below tol.
std::int64_t borwein_terms(Complex s, double tol) {
  const double t = std::fabs(s.imag());
  // The 1/|Γ(s)| factor is only trusted when it enlarges the bound.
  const double gamma_term = std::max(0.0, -specfun::log_gamma(s).real());
  const double log_bound = std::log(3.0) + std::log1p(2.0 * t) + 0.5 * kPi * t + gamma_term - std::log(tol);
  return std::max<std::int64_t>(8, static_cast<std::int64_t>(std::ceil(log_bound / kLogBorweinRate)) + 1);
}

// w_k = 1 - d_k/d_n for k = 0..n-1, built from log-scaled d-increments.
std::vector<double> borwein_weights(std::int64_t n) {
  const auto nn = static_cast<std::size_t>(n);
  std::vector<double> log_c(nn + 1);
  log_c[0] = 0.0;
  const double nd = static_cast<double>(n);
  for (std::size_t i = 0; i < nn; ++i) {
    const double id = static_cast<double>(i);
    log_c[i + 1] = log_c[i] + std::log(4.0 * (nd + id) * (nd - id) / ((2.0 * id + 1.0) * (2.0 * id + 2.0)));
  }
  const double top = *std::max_element(log_c.begin(), log_c.end());
  std::vector<double> tail(nn + 1, 0.0);  // tail[k] = Σ_{i>k} c_i (scaled)
  double acc = 0.0;
  for (std::size_t i = nn; i > 0; --i) {
    acc += std::exp(log_c[i] - top);
    tail[i - 1] = acc;
  }
  const double total = acc + std::exp(log_c[0] - top);
  std::vector<double> w(nn);
  for (std::size_t k = 0; k < nn; ++k) w[k] = tail[k] / total;
  return w;
}

const std::vector<RationalNumber>& bernoulli_table() {
  static const std::vector<RationalNumber> table = [] {
    constexpr int kMax = 64;
    std::vector<RationalNumber> b(kMax + 1);
    b[0] = 1;
    for (int m = 1; m <= kMax; ++m) {
      // B_m = -1/(m+1) Σ_{k<m} C(m+1, k) B_k
      boost::multiprecision::cpp_int binom = 1;
      RationalNumber sum = 0;
      for (int k = 0; k < m; ++k) {
        sum += RationalNumber(binom) * b[static_cast<std::size_t>(k)];
        binom = binom * (m + 1 - k) / (k + 1);
      }
      b[static_cast<std::size_t>(m)] = -sum / (m + 1);
    }
    return b;
  }();
  return table;
}

// B_{2k}/(2k)! as doubles, k = 1..kTerms.
const std::vector<double>& euler_maclaurin_coefficients() {
  static const std::vector<double> coeffs = [] {
    constexpr int kTerms = 20;
    std::vector<double> c;
    boost::multiprecision::cpp_int fact = 1;
    for (int k = 1; k <= 2 * kTerms; ++k) {
      fact *= k;
      if (k % 2 == 0) {
        const RationalNumber v = bernoulli(k) / RationalNumber(fact);
        c.push_back(static_cast<double>(v));
      }
    }
    return c;
  }();
  return coeffs;
}

bool near_eta_denominator_zero(Complex s) {
  if (std::fabs(s.real() - 1.0) >= 0.5) return false;
  const double k = std::round(s.imag() * kLog2 / (2.0 * kPi));
  if (k == 0.0) return false;
  return std::abs(s - Complex(1.0, 2.0 * kPi * k / kLog2)) < 0.5;
}

Complex zeta_right_half(Complex s) {
  if (near_eta_denominator_zero(s)) return zeta_euler_maclaurin(s);
  const Complex denom = -zetasphere::expm1((1.0 - s) * kLog2);  // 1 - 2^{1-s}
  return eta_eval(s) / denom;
}

bool near_integer(Complex s, double* k_out) {
  const double k = std::round(s.real());
  *k_out = k;
  return std::abs(s - Complex(k, 0.0)) <= kPoleWindow;
}

}  // namespace

Complex eta_eval(Complex s, const EvalOptions& opts) {
  opts.validate();
  require_finite(s, "eta_eval");
  if (s.real() <= 0.0) throw DomainError("eta_eval: requires Re(s) > 0");
  const std::int64_t n = borwein_terms(s, opts.tolerance);
  if (n > opts.max_terms) {
    throw ConvergenceError("eta_eval: needs " + std::to_string(n) + " terms, budget " +
                           std::to_string(opts.max_terms));
  }
  const std::vector<double> w = borwein_weights(n);
  Complex sum = 0.0;
  for (std::int64_t k = n - 1; k >= 0; --k) {
    const Complex term = w[static_cast<std::size_t>(k)] * std::exp(-s * std::log(static_cast<double>(k + 1)));
    sum += (k % 2 == 0) ? term : -term;
  }
  return sum;
}

Complex zeta_euler_maclaurin(Complex s) {
  require_finite(s, "zeta_euler_maclaurin");
  if (std::abs(s - 1.0) <= kPoleWindow) {
    throw PoleError("zeta: pole at s = 1", Complex(1.0, 0.0), Complex(1.0, 0.0));
  }
  const auto n_cut = static_cast<int>(30.0 + std::ceil(std::abs(s)));
  const double nd = n_cut;
  Complex sum = 0.0;
  for (int n = n_cut - 1; n >= 1; --n) sum += std::exp(-s * std::log(static_cast<double>(n)));
  const Complex n_pow = std::exp(-s * std::log(nd));  // N^{-s}
  sum += n_pow * nd / (s - 1.0) + 0.5 * n_pow;
  // Σ B_{2k}/(2k)! s(s+1)...(s+2k-2) N^{1-s-2k}
  Complex rising = s;           // s(s+1)...(s+2k-2)
  Complex power = n_pow / nd;   // N^{-s-1}
  for (std::size_t k = 0; k < euler_maclaurin_coefficients().size(); ++k) {
    const Complex term = euler_maclaurin_coefficients()[k] * rising * power;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    const double j = 2.0 * static_cast<double>(k) + 1.0;
    rising *= (s + j) * (s + j + 1.0);
    power /= nd * nd;
  }
  return sum;
}

Complex functional_factor(Complex s) {
  require_finite(s, "functional_factor");
  Complex log_gamma;
  try {
    log_gamma = specfun::log_gamma(1.0 - s);
  } catch (const PoleError& e) {
    throw PoleError("functional factor: Γ(1-s) has a pole", s, -e.residue());
  }
  return std::exp(s * kLog2 + (s - 1.0) * kLogPi + log_gamma) * sin_pi(0.5 * s);
}

Complex zeta_eval(Complex s) {
  require_finite(s, "zeta_eval");
  if (std::abs(s - 1.0) <= kPoleWindow) {
    throw PoleError("zeta: pole at s = 1", Complex(1.0, 0.0), Complex(1.0, 0.0));
  }
  if (s.real() >= 0.5) return zeta_right_half(s);
  if (std::abs(s) < 0.25) return zeta_euler_maclaurin(s);
  return functional_factor(s) * zeta_right_half(1.0 - s);
}

Complex functional_rhs(Complex s) {
  require_finite(s, "functional_rhs");
  double k = 0.0;
  if (near_integer(s, &k) && k >= 0.0) {
    if (k >= 2.0 && std::fmod(k, 2.0) == 0.0 && k <= 20.0) {
      return even_limit_probe(static_cast<int>(k / 2.0)).value;
    }
    throw DomainError("functional_rhs: s = " + std::to_string(static_cast<int>(k)) +
                      " is a pole of a factor");
  }
  return functional_factor(s) * zeta_eval(1.0 - s);
}

EvenLimit even_limit_probe(int n) {
  if (n < 1 || n > 10) throw DomainError("even_limit_probe: requires 1 <= n <= 10");
  EvenLimit out{};
  const double s0 = 2.0 * n;
  const double eps[3] = {1e-3, 5e-4, 2.5e-4};
  for (int i = 0; i < 3; ++i) {
    const Complex s(s0 + eps[i], 0.0);
    out.raw[static_cast<std::size_t>(i)] = functional_factor(s) * zeta_eval(1.0 - s);
  }
  const Complex r1a = 2.0 * out.raw[1] - out.raw[0];
  const Complex r1b = 2.0 * out.raw[2] - out.raw[1];
  out.value = (4.0 * r1b - r1a) / 3.0;
  const double scale = std::max(1.0, std::abs(out.value));
  if (!std::isfinite(out.value.real()) || std::abs(out.value - r1b) > 1e-6 * scale) {
    throw ConvergenceError("even_limit_probe: extrapolation did not settle");
  }
  return out;
}

Complex completed_zeta(Complex s) {
  require_finite(s, "completed_zeta");
  if (std::abs(s) <= kPoleWindow) {
    throw PoleError("completed zeta: pole at s = 0", Complex(0.0, 0.0), Complex(-1.0, 0.0));
  }
  if (std::abs(s - 1.0) <= kPoleWindow) {
    throw PoleError("completed zeta: pole at s = 1", Complex(1.0, 0.0), Complex(1.0, 0.0));
  }
  double k = 0.0;
  if (near_integer(s, &k) && k < 0.0 && std::fmod(k, 2.0) == 0.0) {
    // Γ(s/2) pole cancels a trivial zero; use ζ̃(s) = ζ̃(1-s).
    return completed_zeta(1.0 - s);
  }
  return std::exp(-0.5 * s * kLogPi + specfun::log_gamma(0.5 * s)) * zeta_eval(s);
}

Complex completed_zeta_scaled(Complex s) {
  require_finite(s, "completed_zeta_scaled");
  if (std::abs(s) <= kPoleWindow || std::abs(s - 1.0) <= kPoleWindow) return completed_zeta(s);
  double k = 0.0;
  if (near_integer(s, &k) && k < 0.0 && std::fmod(k, 2.0) == 0.0) return completed_zeta_scaled(1.0 - s);
  const double lift = 0.25 * kPi * std::fabs(s.imag());
  return std::exp(-0.5 * s * kLogPi + specfun::log_gamma(0.5 * s) + lift) * zeta_eval(s);
}

RationalNumber bernoulli(int n) {
  if (n < 0 || n >= static_cast<int>(bernoulli_table().size())) {
    throw DomainError("bernoulli: index out of range");
  }
  return bernoulli_table()[static_cast<std::size_t>(n)];
}

RationalNumber even_zeta_rational(int k) {
  if (k < 0 || k > kMaxEvenK || k % 2 != 0) {
    throw DomainError("even_zeta_rational: k must be even with 0 <= k <= 30");
  }
  const int n = k / 2;
  boost::multiprecision::cpp_int fact = 1;
  for (int i = 2; i <= k; ++i) fact *= i;
  RationalNumber alpha = bernoulli(k) / RationalNumber(fact);
  if (k == 0) {
    alpha /= 2;
  } else {
    alpha *= RationalNumber(boost::multiprecision::cpp_int(1) << (k - 1));
  }
  return (n % 2 == 0) ? RationalNumber(-alpha) : alpha;
}

double stieltjes_gamma(int k) {
  if (k < 0 || k > 4) throw DomainError("stieltjes_gamma: requires 0 <= k <= 4");
  constexpr int kPoints = 32;
  constexpr double kRadius = 0.5;
  Complex coeff = 0.0;
  for (int j = 0; j < kPoints; ++j) {
    const double theta = 2.0 * kPi * (j + 0.5) / kPoints;
    const Complex h = std::polar(kRadius, theta);
    const Complex regular = zeta_eval(1.0 + h) - 1.0 / h;
    coeff += regular * std::pow(h, -k);
  }
  coeff /= static_cast<double>(kPoints);
  double fact = 1.0;
  for (int i = 2; i <= k; ++i) fact *= i;
  const double value = ((k % 2 == 0) ? 1.0 : -1.0) * fact * coeff.real();
  if (!std::isfinite(value)) throw ConvergenceError("stieltjes_gamma: non-finite fit");
  return value;
}

double euler_gamma_limit() {
  const double h[3] = {1e-3, 5e-4, 2.5e-4};
  double g[3];
  for (int i = 0; i < 3; ++i) g[i] = zeta_eval(Complex(1.0 + h[i], 0.0)).real() - 1.0 / h[i];
  const double r1a = 2.0 * g[1] - g[0];
  const double r1b = 2.0 * g[2] - g[1];
  return (4.0 * r1b - r1a) / 3.0;
}

LaurentData laurent_data(int order) {
  if (order < 0 || order > 4) throw DomainError("laurent_data: order must lie in [0, 4]");
  LaurentData data;
  for (int k = 0; k <= order; ++k) data.stieltjes.push_back(stieltjes_gamma(k));
  return data;
}

Complex laurent_eval(Complex s, const LaurentData& data) {
  require_finite(s, "laurent_eval");
  const Complex h = s - 1.0;
  if (std::abs(h) <= kPoleWindow) {
    throw PoleError("laurent_eval: pole at s = 1", Complex(1.0, 0.0), Complex(1.0, 0.0));
  }
  if (std::abs(h) >= 1.0) throw DomainError("laurent_eval: requires |s - 1| < 1");
  Complex sum = 1.0 / h;
  Complex power = 1.0;
  double fact = 1.0;
  for (std::size_t n = 0; n < data.stieltjes.size(); ++n) {
    if (n > 0) {
      power *= h;
      fact *= static_cast<double>(n);
    }
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    sum += sign * data.stieltjes[n] * power / fact;
  }
  return sum;
}

}  // namespace zetasphere::zeta
