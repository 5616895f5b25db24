#pragma once

#include "zetasphere/report.hpp"
#include "zetasphere/types.hpp"

namespace zetasphere::modulus {

/// Factor-by-factor moduli of f(s) = 2^s π^{s-1} sin(πs/2) Γ(1-s).
struct ModulusBreakdown {
  double two_pow = 0.0;    // |2^s| = 2^x
  double pi_pow = 0.0;     // |π^{s-1}| = π^{x-1}
  double sin_abs = 0.0;    // |sin(πs/2)| = ½[e^{-πy} + e^{πy} + 2(2sin²(πx/2) - 1)]^{1/2}
  double gamma_abs = 0.0;  // |Γ(1-s)|
  double product = 0.0;    // (2π)^{x-1}[...]^{1/2}|Γ(1-s)|
};

/// f(s) as a complex value. PoleError when 1 - s is a non-positive integer.
Complex f_factor(Complex s);

/// Closed-form |f(s)| on the open strip 0 < Re s < 1 (DomainError outside).
ModulusBreakdown f_abs_closed(Complex s);

/// The bracket e^{-πy} + e^{πy} + 2(2sin²(πx/2) - 1) = 2cosh(πy) - 2cos(πx).
double modulus_bracket(Complex s);

/// d/dx |f(s)| as printed (bracket^{3/2} over bracket^{1/2} in the first term).
/// `h` is validated against [1e-8, 1e-4] for the finite-difference contract.
double f_abs_dx(Complex s, double h);

/// d/dx |f(s)| by the chain rule applied to the closed form. Diagnostic only.
double f_abs_dx_chain_rule(Complex s);

/// Central difference of f_abs_closed(s).product in x with step h.
double f_abs_dx_numeric(Complex s, double h);

/// d/dx |Γ(1-s)| = -½|Γ(1-s)| Ψ(1-s).
double gamma_abs_dx(Complex s);

/// Mean of |ζ(s)|/|ζ(1-s)| over 8 equally spaced points on the circle
/// |s - s0| = radius. DomainError unless s0 is in the open strip and
/// radius is in (0, 0.1].
double criterion_ratio(Complex s0, double radius);

/// Limit probes along s = ε(1+i)/√2, ε in {1e-2, 1e-3, 1e-4}.
VerificationItems asymptotic_suite();

}  // namespace zetasphere::modulus
