#pragma once

#include "zetasphere/types.hpp"

// Complex Gamma, log-Gamma and digamma, plus the closed-form modulus
// identities on the lines Re s = 1/2 and Re s = 1.

namespace zetasphere::specfun {

/// Window within which an argument counts as sitting on a pole.
inline constexpr double kPoleWindow = 1e-12;

/// If s is within kPoleWindow of a non-positive integer, returns -k.
/// Otherwise returns 1.
int nearest_nonpositive_integer(Complex s);

/// Γ(s). Lanczos (g = 7, 9 terms) for Re s >= 1/2, reflection below.
/// Throws PoleError at s = -k carrying residue (-1)^k / k!.
Complex gamma(Complex s);

/// A logarithm of Γ(s) (not necessarily the principal branch for Re s < 1/2).
Complex log_gamma(Complex s);

/// ψ(s) = Γ'(s)/Γ(s). Recurrence to Re s >= 10 then the asymptotic series;
/// reflection for Re s < 1/2.
Complex digamma(Complex s);

/// ψ(s) from the series -γ + Σ (s-1)/((n+1)(n+s)) summed to `terms`
/// terms plus an Euler–Maclaurin tail. Used as a cross-check only.
Complex digamma_series(Complex s, const EvalOptions& opts);

/// sqrt(π sech(πy)) = |Γ(1/2 + iy)|.
double gamma_abs_critical(double y);

/// sqrt(yπ csch(πy)) = |Γ(1 + iy)|; the limit 1 at y = 0.
double gamma_abs_unit(double y);

/// |Γ(1-s)Γ(s)sin(πs) - π|. Throws DomainError when s is an integer.
double reflection_residual(Complex s);

/// Ψ(s) = ψ(s) + ψ(conj s) = 2 Re ψ(s).
double psi_pair(Complex s);

/// Ψ(s) from its explicit real series, with tail correction.
double psi_pair_series(Complex s, const EvalOptions& opts);

}  // namespace zetasphere::specfun
