#include "zetasphere/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "zetasphere/errors.hpp"

namespace zetasphere::mero {

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == Complex(0.0, 0.0)) coeffs_.pop_back();
}

Polynomial Polynomial::from_roots(const std::vector<std::pair<Complex, int>>& roots) {
  std::vector<Complex> c{Complex(1.0, 0.0)};
  for (const auto& [r, m] : roots) {
    for (int i = 0; i < m; ++i) {
      c.push_back(0.0);
      for (std::size_t j = c.size() - 1; j > 0; --j) c[j] = c[j - 1] - r * c[j];
      c[0] = -r * c[0];
    }
  }
  return Polynomial(std::move(c));
}

Complex Polynomial::operator[](int i) const {
  if (i < 0 || i > degree()) return 0.0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Complex Polynomial::leading() const { return coeffs_.empty() ? Complex(0.0) : coeffs_.back(); }

Complex Polynomial::operator()(Complex z) const {
  Complex acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Complex> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = static_cast<double>(i) * coeffs_[i];
  return Polynomial(std::move(d));
}

std::vector<std::pair<Complex, int>> Polynomial::roots(double cluster_tol) const {
  const int n = degree();
  if (n < 0) throw DomainError("roots: the zero polynomial has no finite root set");
  if (n == 0) return {};
  std::vector<Complex> raw;
  if (n == 1) {
    raw.push_back(-coeffs_[0] / coeffs_[1]);
  } else {
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -coeffs_[static_cast<std::size_t>(i)] / leading();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    if (solver.info() != Eigen::Success) throw ConvergenceError("roots: eigenvalue solver failed");
    for (int i = 0; i < n; ++i) raw.push_back(solver.eigenvalues()(i));
  }

  std::vector<std::pair<Complex, int>> clusters;
  std::vector<std::vector<Complex>> members;
  for (const Complex r : raw) {
    bool placed = false;
    for (std::size_t c = 0; c < clusters.size(); ++c) {
      if (std::abs(r - clusters[c].first) <= cluster_tol * std::max(1.0, std::abs(r))) {
        members[c].push_back(r);
        Complex mean = 0.0;
        for (const Complex m : members[c]) mean += m;
        clusters[c] = {mean / static_cast<double>(members[c].size()), clusters[c].second + 1};
        placed = true;
        break;
      }
    }
    if (!placed) {
      clusters.emplace_back(r, 1);
      members.push_back({r});
    }
  }

  const Polynomial dp = derivative();
  for (auto& [r, m] : clusters) {
    if (m != 1) continue;
    for (int it = 0; it < 4; ++it) {
      const Complex d = dp(r);
      if (d == Complex(0.0)) break;
      const Complex step = (*this)(r) / d;
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
      r -= step;
      if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(r))) break;
    }
  }
  std::sort(clusters.begin(), clusters.end(), [](const auto& a, const auto& b) {
    if (a.first.real() != b.first.real()) return a.first.real() < b.first.real();
    return a.first.imag() < b.first.imag();
  });
  return clusters;
}

Polynomial Polynomial::trimmed(double tol) const {
  double scale = 0.0;
  for (const Complex c : coeffs_) scale = std::max(scale, std::abs(c));
  std::vector<Complex> c = coeffs_;
  while (!c.empty() && std::abs(c.back()) <= tol * scale) c.pop_back();
  return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Complex> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[static_cast<int>(i)] + b[static_cast<int>(i)];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + Complex(-1.0) * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  std::vector<Complex> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(Complex c, const Polynomial& p) {
  std::vector<Complex> out = p.coeffs_;
  for (Complex& v : out) v *= c;
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.degree() < 0) throw DomainError("divmod: division by the zero polynomial");
  std::vector<Complex> rem = coeffs_;
  const int dd = divisor.degree();
  if (degree() < dd) return {Polynomial{}, *this};
  std::vector<Complex> quot(static_cast<std::size_t>(degree() - dd + 1));
  for (int k = degree() - dd; k >= 0; --k) {
    const Complex q = rem[static_cast<std::size_t>(k + dd)] / divisor.leading();
    quot[static_cast<std::size_t>(k)] = q;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= q * divisor[j];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

}  // namespace zetasphere::mero
