#pragma once

#include <utility>
#include <vector>

#include "zetasphere/extended_point.hpp"
#include "zetasphere/polynomial.hpp"
#include "zetasphere/types.hpp"

namespace zetasphere::mero {

/// Points closer than this are treated as the same point.
inline constexpr double kRootTolerance = 1e-9;

/// Finite formal sum Σ n_q q over points of the Riemann sphere.
/// Entries are sorted, unique up to kRootTolerance, and never zero.
class Divisor {
 public:
  using Entry = std::pair<ExtendedPoint, int>;

  Divisor() = default;
  Divisor(std::initializer_list<Entry> entries);

  /// Adds n·q, merging with an existing nearby point.
  void add(const ExtendedPoint& q, int n);

  /// n_q; 0 off the support.
  int at(const ExtendedPoint& q) const;

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<Entry> entries_;
};

Divisor divisor_add(const Divisor& a, const Divisor& b);
Divisor divisor_negate(const Divisor& d);
int divisor_degree(const Divisor& d);
/// n_q(a) <= n_q(b) at every point.
bool divisor_leq(const Divisor& a, const Divisor& b);
/// Same support and multiplicities up to kRootTolerance.
bool divisor_equal(const Divisor& a, const Divisor& b);

/// c Π(z - z_i)^{h_i} / Π(z - p_j)^{k_j}.
struct RationalMap {
  Complex constant{1.0, 0.0};
  std::vector<std::pair<Complex, int>> zeros;
  std::vector<std::pair<Complex, int>> poles;

  /// DomainError if c = 0, a multiplicity is < 1, or a point is both
  /// a zero and a pole.
  void validate() const;

  int zero_count() const;  // Σ h_i
  int pole_count() const;  // Σ k_j

  Polynomial numerator() const;    // c Π(z - z_i)^{h_i}
  Polynomial denominator() const;  // Π(z - p_j)^{k_j}
};

/// Pointwise product; the constants multiply and coinciding factors cancel.
RationalMap multiply(const RationalMap& f, const RationalMap& g);
RationalMap reciprocal(const RationalMap& f);

Divisor principal_divisor(const RationalMap& f);

/// DegreeNotZero unless deg D = 0.
RationalMap rational_from_divisor(const Divisor& d, Complex c);

ExtendedPoint evaluate(const RationalMap& f, const ExtendedPoint& p);

struct PrincipalPart {
  Complex pole;
  std::vector<Complex> coeffs;  // coeffs[j-1] multiplies 1/(z - pole)^j
};

struct PartialFractions {
  Polynomial polynomial;
  std::vector<PrincipalPart> parts;

  Complex operator()(Complex z) const;
};

PartialFractions partial_fractions(const RationalMap& f);

/// Quotient num/den in coefficient form.
struct RationalFunction {
  Polynomial num;
  Polynomial den;

  Complex operator()(Complex z) const { return num(z) / den(z); }
};

/// Quotient-rule derivative (N'D - ND')/D².
RationalFunction derivative(const RationalMap& f);

/// Finite critical points with ramification index e >= 2: multiple zeros
/// and the roots of the reduced numerator of f'.
std::vector<std::pair<Complex, int>> critical_points(const RationalMap& f);

struct BranchData {
  int degree = 0;
  std::vector<std::pair<ExtendedPoint, int>> ramification;  // index >= 2
  int total_b = 0;
};

/// Degree and every ramification point of f, including poles of order >= 2
/// and ∞.
BranchData branch_data(const RationalMap& f);

struct HurwitzCheck {
  bool holds = false;   // chi_domain == degree·chi_codomain - b
  bool b_even = false;

  explicit operator bool() const { return holds && b_even; }
};

HurwitzCheck riemann_hurwitz_check(const BranchData& bd, int chi_domain, int chi_codomain);

/// (l(D), i(D)) on the sphere (genus 0).
std::pair<int, int> riemann_roch_dims(const Divisor& d);

/// Distinct solutions of f(s) = w on the sphere.
std::vector<ExtendedPoint> preimages(const RationalMap& f, const ExtendedPoint& w);

struct ZetaHat {
  RationalMap map;
  BranchData branch;
  double ordinate = 0.0;
  Complex anchor;
};

/// ζ̂(s) = c (s - z1)(s - z2)/(s(s - 1)) with z_{1,2} = 1/2 ± i·t0 and c
/// fixed by ζ̂(1/2) = anchor. DomainError if t0 <= 0.
ZetaHat build_zeta_hat(double zero_pair_ordinate, Complex anchor_value);

}  // namespace zetasphere::mero
