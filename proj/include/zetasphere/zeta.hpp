#pragma once

#include <array>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "zetasphere/types.hpp"

namespace zetasphere::zeta {

/// Exact rational in lowest terms with positive denominator.
using RationalNumber = boost::multiprecision::cpp_rational;

/// Stieltjes constants γ_0..γ_K for the Laurent expansion about s = 1.
struct LaurentData {
  std::vector<double> stieltjes;

  int order() const { return static_cast<int>(stieltjes.size()) - 1; }
};

/// η(s) = Σ (-1)^{n+1} n^{-s} for Re s > 0, via the Borwein / Cohen–Villegas–Zagier
/// weighted alternating sum. The number of terms is chosen from the a-priori
/// error bound. Throws DomainError for Re s <= 0 and ConvergenceError when
/// the bound needs more than opts.max_terms terms.
Complex eta_eval(Complex s, const EvalOptions& opts = {});

/// ζ(s) via Euler–Maclaurin summation. Valid for any s != 1; used near the
/// zeros of 1 - 2^{1-s} where the eta route is ill-conditioned.
Complex zeta_euler_maclaurin(Complex s);

/// f(s) = 2^s π^{s-1} sin(πs/2) Γ(1-s), evaluated through log Γ so large
/// |Re s| does not overflow early. PoleError when 1 - s is a pole of Γ.
Complex functional_factor(Complex s);

/// ζ(s) on all of C except s = 1 (PoleError, residue 1).
/// Re s >= 1/2: η(s)/(1 - 2^{1-s}); Re s < 1/2: functional equation.
Complex zeta_eval(Complex s);

/// 2^s π^{s-1} sin(πs/2) Γ(1-s) ζ(1-s). DomainError at poles of Γ(1-s).
Complex functional_rhs(Complex s);

/// Result of the Richardson-extrapolated 0·∞ probe at s = 2n.
struct EvenLimit {
  Complex value;
  std::array<Complex, 3> raw;  // f(2n+ε)ζ(1-2n-ε) at ε = 1e-3, 5e-4, 2.5e-4
};

/// Resolves f(s)ζ(1-s) at s = 2n, 1 <= n <= 10.
EvenLimit even_limit_probe(int n);

/// ζ̃(s) = π^{-s/2} Γ(s/2) ζ(s). PoleError at 0 and 1.
Complex completed_zeta(Complex s);

/// ζ̃(s)·e^{π|Im s|/4}. Same phase as ζ̃, free of underflow up to |Im s| ~ 10^3.
Complex completed_zeta_scaled(Complex s);

/// α with ζ(k) = α π^k for even 0 <= k <= 30, exact.
RationalNumber even_zeta_rational(int k);

/// Bernoulli number B_n (B_1 = -1/2), exact.
RationalNumber bernoulli(int n);

/// γ_k, 0 <= k <= 4, from a discrete Laurent fit of ζ(1+h) - 1/h on a circle.
double stieltjes_gamma(int k);

/// lim_{h->0} (ζ(1+h) - 1/h) by Richardson extrapolation over h = 1e-3, 5e-4, 2.5e-4.
double euler_gamma_limit();

LaurentData laurent_data(int order);

/// 1/(s-1) + Σ_{n<=K} (-1)^n γ_n (s-1)^n / n!. DomainError unless 0 < |s-1| < 1;
/// PoleError at s = 1.
Complex laurent_eval(Complex s, const LaurentData& data);

}  // namespace zetasphere::zeta
