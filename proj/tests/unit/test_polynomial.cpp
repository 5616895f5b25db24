#include <gtest/gtest.h>

#include <algorithm>
#include <complex>

#include "zetasphere/errors.hpp"
#include "zetasphere/polynomial.hpp"

using namespace zetasphere;
using namespace zetasphere::mero;

TEST(Polynomial, DegreeAndNormalization) {
  EXPECT_EQ(Polynomial().degree(), -1);
  EXPECT_EQ(Polynomial({1.0, 2.0, 0.0, 0.0}).degree(), 1);
  EXPECT_EQ(Polynomial::constant(3.0).degree(), 0);
  EXPECT_EQ(Polynomial({1.0, 2.0})[5], Complex(0.0));
  EXPECT_EQ(Polynomial().leading(), Complex(0.0));
}

TEST(Polynomial, FromRootsExpands) {
  const auto p = Polynomial::from_roots({{1.0, 1}, {-2.0, 2}});
  ASSERT_EQ(p.degree(), 3);
  // (z - 1)(z + 2)² = z³ + 3z² - 4
  EXPECT_EQ(p[0], Complex(-4.0));
  EXPECT_EQ(p[1], Complex(0.0));
  EXPECT_EQ(p[2], Complex(3.0));
  EXPECT_EQ(p[3], Complex(1.0));
  EXPECT_EQ(p(1.0), Complex(0.0));
}

TEST(Polynomial, Arithmetic) {
  const Polynomial a({1.0, 1.0});
  const Polynomial b({-1.0, 1.0});
  const auto prod = a * b;
  EXPECT_EQ(prod.degree(), 2);
  EXPECT_EQ(prod[0], Complex(-1.0));
  EXPECT_EQ((a - a).degree(), -1);
  EXPECT_EQ((a + b)[0], Complex(0.0));
  EXPECT_EQ((Complex(0.0, 2.0) * a)[1], Complex(0.0, 2.0));
  EXPECT_EQ((a * Polynomial()).degree(), -1);
}

TEST(Polynomial, Derivative) {
  const auto d = Polynomial({5.0, 3.0, 0.0, 2.0}).derivative();
  ASSERT_EQ(d.degree(), 2);
  EXPECT_EQ(d[0], Complex(3.0));
  EXPECT_EQ(d[2], Complex(6.0));
  EXPECT_EQ(Polynomial::constant(7.0).derivative().degree(), -1);
}

TEST(Polynomial, Divmod) {
  const Polynomial n({1.0, 0.0, 0.0, 1.0});
  const Polynomial d({1.0, 1.0});
  const auto [q, r] = n.divmod(d);
  EXPECT_EQ(q.degree(), 2);
  EXPECT_EQ(r.degree(), -1);
  const auto [q2, r2] = d.divmod(n);
  EXPECT_EQ(q2.degree(), -1);
  EXPECT_EQ(r2.degree(), 1);
  EXPECT_THROW(n.divmod(Polynomial()), DomainError);
}

TEST(Polynomial, RootsSimple) {
  const auto roots = Polynomial::from_roots({{Complex(0.5, 14.0), 1}, {Complex(0.5, -14.0), 1}, {3.0, 1}}).roots();
  ASSERT_EQ(roots.size(), 3U);
  for (const Complex expected : {Complex(0.5, -14.0), Complex(0.5, 14.0), Complex(3.0, 0.0)}) {
    const auto hit = std::count_if(roots.begin(), roots.end(),
                                   [&](const auto& r) { return std::abs(r.first - expected) < 1e-12 && r.second == 1; });
    EXPECT_EQ(hit, 1) << expected;
  }
  EXPECT_LT(std::abs(roots[2].first - 3.0), 1e-12);
}

TEST(Polynomial, RootsClusterMultiplicity) {
  const auto roots = Polynomial::from_roots({{2.0, 2}, {-1.0, 1}}).roots();
  ASSERT_EQ(roots.size(), 2U);
  EXPECT_EQ(roots[0].second, 1);
  EXPECT_EQ(roots[1].second, 2);
  EXPECT_LT(std::abs(roots[1].first - 2.0), 1e-7);
}

TEST(Polynomial, RootsOfConstants) {
  EXPECT_TRUE(Polynomial::constant(2.0).roots().empty());
  EXPECT_THROW(Polynomial().roots(), DomainError);
}

TEST(Polynomial, Trimmed) {
  const Polynomial p({1.0, 2.0, 1e-15});
  EXPECT_EQ(p.trimmed(1e-12).degree(), 1);
  EXPECT_EQ(p.trimmed(0.0).degree(), 2);
}
