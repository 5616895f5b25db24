#pragma once

#include <utility>
#include <vector>

#include "zetasphere/types.hpp"

namespace zetasphere::mero {

/// Dense polynomial with complex coefficients, lowest degree first.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Complex> coeffs);

  static Polynomial constant(Complex c) { return Polynomial({c}); }
  /// Π (z - r)^m over the given roots.
  static Polynomial from_roots(const std::vector<std::pair<Complex, int>>& roots);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  Complex operator[](int i) const;
  Complex leading() const;

  Complex operator()(Complex z) const;
  Polynomial derivative() const;

  /// Roots with multiplicities, clustered within cluster_tol.
  std::vector<std::pair<Complex, int>> roots(double cluster_tol = 1e-6) const;

  /// Drops leading coefficients with |c| <= tol·max|c|.
  Polynomial trimmed(double tol) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Complex c, const Polynomial& p);

  /// Quotient and remainder.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

 private:
  void normalize();

  std::vector<Complex> coeffs_;
};

}  // namespace zetasphere::mero
