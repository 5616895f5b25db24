#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "zetasphere/extended_point.hpp"
#include "zetasphere/flow.hpp"
#include "zetasphere/mero.hpp"
#include "zetasphere/specfun.hpp"
#include "zetasphere/sphere.hpp"
#include "zetasphere/zeta.hpp"

using namespace zetasphere;

namespace {

constexpr int kCases = 200;

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  Complex point(double x0, double x1, double y0, double y1) { return {uniform(x0, x1), uniform(y0, y1)}; }

  // Keeps s at least `gap` away from every non-positive integer.
  Complex off_poles(double x0, double x1, double y0, double y1, double gap) {
    for (;;) {
      const Complex s = point(x0, x1, y0, y1);
      const double n = std::round(s.real());
      if (n > 0.0 || std::abs(s - n) > gap) return s;
    }
  }

  std::vector<std::pair<Complex, int>> distinct_points(int count, double spread) {
    std::vector<std::pair<Complex, int>> out;
    while (static_cast<int>(out.size()) < count) {
      const Complex z = point(-spread, spread, -spread, spread);
      bool ok = true;
      for (const auto& [w, m] : out) ok = ok && std::abs(z - w) > 0.1;
      if (ok) out.emplace_back(z, integer(1, 3));
    }
    return out;
  }

  mero::RationalMap rational(int max_points) {
    const auto pts = distinct_points(integer(1, max_points), 3.0);
    mero::RationalMap f;
    f.constant = point(0.5, 2.0, -1.0, 1.0);
    for (std::size_t i = 0; i < pts.size(); ++i) (i % 2 == 0 ? f.zeros : f.poles).push_back(pts[i]);
    return f;
  }

  mero::Divisor divisor() {
    mero::Divisor d;
    const int n = integer(0, 5);
    for (int i = 0; i < n; ++i) d.add(Complex(integer(-3, 3), integer(-3, 3)), integer(-4, 4));
    if (integer(0, 1) == 1) d.add(ExtendedPoint::infinity(), integer(-3, 3));
    return d;
  }

 private:
  std::mt19937_64 rng_;
};

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(1e-300, std::abs(b)); }

}  // namespace

TEST(Property, ZetaConjugateSymmetry) {
  Sampler g(0x5eed0001);
  for (int i = 0; i < kCases; ++i) {
    Complex s = g.point(-10.0, 10.0, -40.0, 40.0);
    if (std::abs(s - 1.0) < 0.05) s += 0.1;
    EXPECT_LT(rel(zeta::zeta_eval(std::conj(s)), std::conj(zeta::zeta_eval(s))), 1e-12) << s;
  }
}

TEST(Property, ZetaFunctionalEquation) {
  Sampler g(0x5eed0002);
  for (int i = 0; i < kCases; ++i) {
    const Complex s = g.point(-4.0, 5.0, 0.5, 30.0);
    const Complex rhs = zeta::functional_factor(s) * zeta::zeta_eval(1.0 - s);
    EXPECT_LT(rel(zeta::zeta_eval(s), rhs), 1e-10) << s;
  }
}

TEST(Property, CompletedZetaSymmetry) {
  Sampler g(0x5eed0003);
  for (int i = 0; i < kCases; ++i) {
    const Complex s = g.point(-3.0, 4.0, 0.5, 30.0);
    EXPECT_LT(rel(zeta::completed_zeta(s), zeta::completed_zeta(1.0 - s)), 1e-10) << s;
  }
}

TEST(Property, GammaRecurrence) {
  Sampler g(0x5eed0004);
  for (int i = 0; i < kCases; ++i) {
    const Complex s = g.off_poles(-6.0, 6.0, -10.0, 10.0, 0.05);
    EXPECT_LT(rel(specfun::gamma(s + 1.0), s * specfun::gamma(s)), 1e-12) << s;
  }
}

TEST(Property, GammaReflection) {
  Sampler g(0x5eed0005);
  for (int i = 0; i < kCases; ++i) {
    Complex s = g.off_poles(-6.0, 6.0, -5.0, 5.0, 0.05);
    if (std::abs(s.real() - std::round(s.real())) < 0.05 && std::abs(s.imag()) < 0.05) s += Complex(0.0, 0.1);
    EXPECT_LT(specfun::reflection_residual(s), 1e-12) << s;
  }
}

TEST(Property, DivisorDegreeIsAdditive) {
  Sampler g(0x5eed0006);
  for (int i = 0; i < kCases; ++i) {
    const auto a = g.divisor();
    const auto b = g.divisor();
    const auto sum = mero::divisor_add(a, b);
    EXPECT_EQ(mero::divisor_degree(sum), mero::divisor_degree(a) + mero::divisor_degree(b));
    EXPECT_EQ(mero::divisor_degree(mero::divisor_negate(a)), -mero::divisor_degree(a));
    EXPECT_TRUE(mero::divisor_equal(mero::divisor_add(sum, mero::divisor_negate(b)), a));
  }
}

TEST(Property, PrincipalDivisorsHaveDegreeZero) {
  Sampler g(0x5eed0007);
  for (int i = 0; i < kCases; ++i) {
    const auto f = g.rational(6);
    const auto d = mero::principal_divisor(f);
    EXPECT_EQ(mero::divisor_degree(d), 0);
    EXPECT_TRUE(mero::divisor_equal(mero::principal_divisor(mero::rational_from_divisor(d, f.constant)), d));
  }
}

TEST(Property, PartialFractionsReconstruct) {
  Sampler g(0x5eed0008);
  for (int i = 0; i < kCases; ++i) {
    const auto f = g.rational(6);
    if (f.poles.empty()) continue;
    const auto pf = mero::partial_fractions(f);
    const Complex z = g.point(-4.0, 4.0, -4.0, 4.0);
    const ExtendedPoint v = mero::evaluate(f, z);
    if (v.is_infinite() || std::abs(v.value()) > 1e6) continue;
    EXPECT_LT(std::abs(pf(z) - v.value()), 1e-8 * std::max(1.0, std::abs(v.value())));
  }
}

TEST(Property, RiemannHurwitzForGenericMaps) {
  Sampler g(0x5eed0009);
  for (int i = 0; i < kCases; ++i) {
    const auto f = g.rational(5);
    const auto bd = mero::branch_data(f);
    ASSERT_EQ(bd.degree, std::max(f.zero_count(), f.pole_count()));
    if (bd.degree == 0) continue;
    EXPECT_EQ(bd.total_b, 2 * bd.degree - 2) << i;
    EXPECT_TRUE(mero::riemann_hurwitz_check(bd, 2, 2));
  }
}

TEST(Property, FlowPreservesDegree) {
  Sampler g(0x5eed000a);
  for (int i = 0; i < kCases; ++i) {
    mero::Divisor d;
    const int n = g.integer(1, 6);
    for (int k = 0; k < n; ++k) d.add(g.point(-0.5, 1.5, -30.0, 30.0), g.integer(-3, 3));
    const flow::FlowParams p{g.uniform(0.01, 0.49), g.uniform(0.0, 1.0)};
    const auto moved = flow::transport_divisor(p, d);
    EXPECT_EQ(mero::divisor_degree(moved), mero::divisor_degree(d));
    for (const auto& [q, m] : moved.entries()) EXPECT_LE(std::fabs(q.value().real() - 0.5), 1.0 + 1e-12);
  }
}

TEST(Property, SphereRoundTrip) {
  Sampler g(0x5eed000b);
  for (int i = 0; i < kCases; ++i) {
    const double r = std::pow(10.0, g.uniform(-6.0, 6.0));
    const Complex z = std::polar(r, g.uniform(-M_PI, M_PI));
    const auto p = sphere::stereo_lift(z);
    EXPECT_LT(p.constraint_residual(), 1e-12);
    EXPECT_LT(rel(sphere::stereo_project(p).value(), z), 1e-12) << z;
  }
}

TEST(Property, SectorRetractionIsMonotone) {
  const std::vector<double> ordinates{14.134725141734694, 21.022039638771555, 25.010857580145689,
                                      30.424876125859513, 32.935061587739190};
  Sampler g(0x5eed000c);
  for (int i = 0; i < kCases; ++i) {
    const double a = g.uniform(-60.0, 60.0);
    const double b = a + g.uniform(1e-6, 5.0);
    EXPECT_LT(sphere::sector_retraction(Complex(0.0, a), ordinates).imag(),
              sphere::sector_retraction(Complex(0.0, b), ordinates).imag());
  }
}
