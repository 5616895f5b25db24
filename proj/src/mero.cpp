#include "zetasphere/mero.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "zetasphere/errors.hpp"

namespace zetasphere::mero {
namespace {

constexpr double kTrimTolerance = 1e-12;

int total(const std::vector<std::pair<Complex, int>>& points) {
  return std::accumulate(points.begin(), points.end(), 0, [](int acc, const auto& p) { return acc + p.second; });
}

// Taylor coefficients a_i = P^{(i)}(p)/i! for i < count.
std::vector<Complex> taylor_at(const Polynomial& poly, Complex p, std::size_t count) {
  std::vector<Complex> c = poly.coeffs();
  std::vector<Complex> out;
  for (std::size_t i = 0; i < count; ++i) {
    if (c.empty()) {
      out.push_back(0.0);
      continue;
    }
    // Synthetic division by (z - p): remainder is the next Taylor coefficient.
    Complex carry = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      carry = carry * p + *it;
      *it = carry;
    }
    out.push_back(c.front());
    c.erase(c.begin());
  }
  return out;
}

Polynomial log_derivative_numerator(const std::vector<std::pair<Complex, int>>& points) {
  Polynomial q;
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<std::pair<Complex, int>> others;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j != i) others.emplace_back(points[j].first, 1);
    }
    q = q + Complex(points[i].second) * Polynomial::from_roots(others);
  }
  return q;
}

bool close(Complex a, Complex b) { return std::abs(a - b) <= kRootTolerance; }

}  // namespace

Divisor::Divisor(std::initializer_list<Entry> entries) {
  for (const auto& [q, n] : entries) add(q, n);
}

void Divisor::add(const ExtendedPoint& q, int n) {
  if (n == 0) return;
  if (q.is_finite()) require_finite(q.value(), "Divisor::add");
  for (auto it = entries_.begin(); it != entries_.end(); ++it) {
    if (near(it->first, q, kRootTolerance)) {
      it->second += n;
      if (it->second == 0) entries_.erase(it);
      return;
    }
  }
  const auto pos = std::lower_bound(entries_.begin(), entries_.end(), q,
                                    [](const Entry& e, const ExtendedPoint& p) { return e.first < p; });
  entries_.insert(pos, {q, n});
}

int Divisor::at(const ExtendedPoint& q) const {
  for (const auto& [p, n] : entries_) {
    if (near(p, q, kRootTolerance)) return n;
  }
  return 0;
}

Divisor divisor_add(const Divisor& a, const Divisor& b) {
  Divisor out = a;
  for (const auto& [q, n] : b.entries()) out.add(q, n);
  return out;
}

Divisor divisor_negate(const Divisor& d) {
  Divisor out;
  for (const auto& [q, n] : d.entries()) out.add(q, -n);
  return out;
}

int divisor_degree(const Divisor& d) {
  int deg = 0;
  for (const auto& entry : d.entries()) deg += entry.second;
  return deg;
}

bool divisor_leq(const Divisor& a, const Divisor& b) {
  for (const auto& [q, n] : a.entries()) {
    if (n > b.at(q)) return false;
  }
  for (const auto& [q, n] : b.entries()) {
    if (a.at(q) > n) return false;
  }
  return true;
}

bool divisor_equal(const Divisor& a, const Divisor& b) { return divisor_leq(a, b) && divisor_leq(b, a); }

void RationalMap::validate() const {
  require_finite(constant, "RationalMap constant");
  if (constant == Complex(0.0)) throw DomainError("RationalMap: constant must be nonzero");
  for (const auto* list : {&zeros, &poles}) {
    for (const auto& [z, m] : *list) {
      require_finite(z, "RationalMap point");
      if (m < 1) throw DomainError("RationalMap: multiplicities must be positive");
    }
  }
  for (const auto& z : zeros) {
    for (const auto& p : poles) {
      if (close(z.first, p.first)) throw DomainError("RationalMap: a point is both a zero and a pole");
    }
  }
}

int RationalMap::zero_count() const { return total(zeros); }
int RationalMap::pole_count() const { return total(poles); }

Polynomial RationalMap::numerator() const { return constant * Polynomial::from_roots(zeros); }
Polynomial RationalMap::denominator() const { return Polynomial::from_roots(poles); }

RationalMap multiply(const RationalMap& f, const RationalMap& g) {
  Divisor finite;
  for (const auto* map : {&f, &g}) {
    for (const auto& [z, m] : map->zeros) finite.add(z, m);
    for (const auto& [p, k] : map->poles) finite.add(p, -k);
  }
  RationalMap out;
  out.constant = f.constant * g.constant;
  for (const auto& [q, n] : finite.entries()) {
    if (n > 0) out.zeros.emplace_back(q.value(), n);
    if (n < 0) out.poles.emplace_back(q.value(), -n);
  }
  return out;
}

RationalMap reciprocal(const RationalMap& f) {
  if (f.constant == Complex(0.0)) throw DomainError("reciprocal: constant must be nonzero");
  return RationalMap{1.0 / f.constant, f.poles, f.zeros};
}

Divisor principal_divisor(const RationalMap& f) {
  Divisor d;
  for (const auto& [z, m] : f.zeros) d.add(z, m);
  for (const auto& [p, k] : f.poles) d.add(p, -k);
  d.add(ExtendedPoint::infinity(), f.pole_count() - f.zero_count());
  return d;
}

RationalMap rational_from_divisor(const Divisor& d, Complex c) {
  if (divisor_degree(d) != 0) throw DegreeNotZero("rational_from_divisor: divisor degree must be 0");
  RationalMap f;
  f.constant = c;
  for (const auto& [q, n] : d.entries()) {
    if (q.is_infinite()) continue;
    if (n > 0) f.zeros.emplace_back(q.value(), n);
    if (n < 0) f.poles.emplace_back(q.value(), -n);
  }
  f.validate();
  return f;
}

ExtendedPoint evaluate(const RationalMap& f, const ExtendedPoint& p) {
  const int n = f.zero_count();
  const int m = f.pole_count();
  if (p.is_infinite()) {
    if (n == m) return f.constant;
    return n > m ? ExtendedPoint::infinity() : ExtendedPoint(Complex(0.0));
  }
  const Complex z = p.value();
  for (const auto& pole : f.poles) {
    if (close(z, pole.first)) return ExtendedPoint::infinity();
  }
  for (const auto& zero : f.zeros) {
    if (close(z, zero.first)) return Complex(0.0);
  }
  Complex value = f.constant;
  for (const auto& [r, h] : f.zeros) value *= std::pow(z - r, h);
  for (const auto& [r, k] : f.poles) value /= std::pow(z - r, k);
  return value;
}

Complex PartialFractions::operator()(Complex z) const {
  Complex sum = polynomial(z);
  for (const auto& part : parts) {
    const Complex u = 1.0 / (z - part.pole);
    Complex power = u;
    for (const Complex c : part.coeffs) {
      sum += c * power;
      power *= u;
    }
  }
  return sum;
}

PartialFractions partial_fractions(const RationalMap& f) {
  f.validate();
  const Polynomial num = f.numerator();
  PartialFractions out;
  out.polynomial = num.divmod(f.denominator()).first;
  for (std::size_t i = 0; i < f.poles.size(); ++i) {
    const auto [p, k] = f.poles[i];
    std::vector<std::pair<Complex, int>> others;
    for (std::size_t j = 0; j < f.poles.size(); ++j) {
      if (j != i) others.push_back(f.poles[j]);
    }
    const auto count = static_cast<std::size_t>(k);
    const std::vector<Complex> n_series = taylor_at(num, p, count);
    const std::vector<Complex> d_series = taylor_at(Polynomial::from_roots(others), p, count);
    // Power-series quotient g = N/D_other about p; c_{k-i} = g_i.
    std::vector<Complex> g(count);
    for (std::size_t a = 0; a < count; ++a) {
      Complex acc = n_series[a];
      for (std::size_t b = 1; b <= a; ++b) acc -= d_series[b] * g[a - b];
      g[a] = acc / d_series[0];
    }
    PrincipalPart part{p, std::vector<Complex>(count)};
    for (std::size_t a = 0; a < count; ++a) part.coeffs[count - 1 - a] = g[a];
    out.parts.push_back(std::move(part));
  }
  return out;
}

RationalFunction derivative(const RationalMap& f) {
  const Polynomial n = f.numerator();
  const Polynomial d = f.denominator();
  return {n.derivative() * d - n * d.derivative(), d * d};
}

std::vector<std::pair<Complex, int>> critical_points(const RationalMap& f) {
  f.validate();
  std::vector<std::pair<Complex, int>> out;
  for (const auto& [z, h] : f.zeros) {
    if (h >= 2) out.emplace_back(z, h);
  }
  // f'/f = Q / Π(z - z_i)Π(z - p_j); critical points off the divisor are roots of Q.
  std::vector<std::pair<Complex, int>> points = f.zeros;
  for (const auto& [p, k] : f.poles) points.emplace_back(p, -k);
  const Polynomial q = log_derivative_numerator(points).trimmed(kTrimTolerance);
  if (q.degree() >= 1) {
    for (const auto& [r, mu] : q.roots()) out.emplace_back(r, mu + 1);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return ExtendedPoint(a.first) < ExtendedPoint(b.first);
  });
  return out;
}

BranchData branch_data(const RationalMap& f) {
  f.validate();
  const int n = f.zero_count();
  const int m = f.pole_count();
  BranchData bd;
  bd.degree = std::max(n, m);
  if (bd.degree == 0) return bd;
  for (const auto& [z, e] : critical_points(f)) bd.ramification.emplace_back(z, e);
  for (const auto& [p, k] : f.poles) {
    if (k >= 2) bd.ramification.emplace_back(p, k);
  }
  int e_inf = std::abs(n - m);
  if (n == m) {
    const Polynomial gap = (f.numerator() - f.constant * f.denominator()).trimmed(kTrimTolerance);
    e_inf = m - std::max(0, gap.degree());
  }
  if (e_inf >= 2) bd.ramification.emplace_back(ExtendedPoint::infinity(), e_inf);
  std::sort(bd.ramification.begin(), bd.ramification.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& entry : bd.ramification) bd.total_b += entry.second - 1;
  return bd;
}

HurwitzCheck riemann_hurwitz_check(const BranchData& bd, int chi_domain, int chi_codomain) {
  HurwitzCheck out;
  out.holds = chi_domain == bd.degree * chi_codomain - bd.total_b;
  out.b_even = bd.total_b % 2 == 0;
  return out;
}

std::pair<int, int> riemann_roch_dims(const Divisor& d) {
  const int deg = divisor_degree(d);
  return {std::max(0, deg + 1), std::max(0, -deg - 1)};
}

std::vector<ExtendedPoint> preimages(const RationalMap& f, const ExtendedPoint& w) {
  f.validate();
  const int n = f.zero_count();
  const int m = f.pole_count();
  if (n == 0 && m == 0) {
    if (w.is_finite() && w.value() == f.constant) throw DomainError("preimages: every point maps to the constant");
    return {};
  }
  std::vector<ExtendedPoint> out;
  if (w.is_infinite()) {
    for (const auto& [p, k] : f.poles) out.emplace_back(p);
    if (n > m) out.push_back(ExtendedPoint::infinity());
  } else {
    const Complex v = require_finite(w.value(), "preimages");
    const Polynomial eq = (f.numerator() - v * f.denominator()).trimmed(kTrimTolerance);
    if (eq.degree() >= 1) {
      for (const auto& [r, mult] : eq.roots()) out.emplace_back(r);
    }
    const ExtendedPoint at_inf = evaluate(f, ExtendedPoint::infinity());
    if (at_inf.is_finite() &&
        std::abs(at_inf.value() - v) <= kTrimTolerance * std::max(1.0, std::abs(v))) {
      out.push_back(ExtendedPoint::infinity());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ZetaHat build_zeta_hat(double zero_pair_ordinate, Complex anchor_value) {
  const double t0 = zero_pair_ordinate;
  if (!(t0 > 0.0) || !std::isfinite(t0)) throw DomainError("build_zeta_hat: ordinate must be positive");
  require_finite(anchor_value, "build_zeta_hat anchor");
  if (anchor_value == Complex(0.0)) throw DomainError("build_zeta_hat: anchor must be nonzero");
  ZetaHat out;
  out.ordinate = t0;
  out.anchor = anchor_value;
  // (1/2 - z1)(1/2 - z2) = t0² and 1/2·(1/2 - 1) = -1/4.
  out.map.constant = -anchor_value / (4.0 * t0 * t0);
  out.map.zeros = {{Complex(0.5, t0), 1}, {Complex(0.5, -t0), 1}};
  out.map.poles = {{Complex(0.0, 0.0), 1}, {Complex(1.0, 0.0), 1}};
  out.map.validate();
  out.branch = branch_data(out.map);
  return out;
}

}  // namespace zetasphere::mero
