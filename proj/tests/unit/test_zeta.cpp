#include <gtest/gtest.h>

#include <cmath>
#include <string>

#include "oracle.hpp"
#include "zetasphere/errors.hpp"
#include "zetasphere/zeta.hpp"

using namespace zetasphere;
using zeta::RationalNumber;
using zeta::zeta_eval;

namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST(Eta, ClassicalValues) {
  EXPECT_NEAR(zeta::eta_eval(1.0).real(), oracle::kLog2, 1e-15);
  EXPECT_NEAR(zeta::eta_eval(2.0).real(), kPi * kPi / 12.0, 1e-15);
  EXPECT_LT(rel(zeta::eta_eval({0.5, 3.0}), oracle::kEta_05_3), 1e-14);
}

TEST(Eta, StableUnderLargerBudget) {
  const EvalOptions a{1e-12, 100000};
  const EvalOptions b{1e-12, 200000};
  for (double y : {0.0, 7.0, 40.0}) {
    EXPECT_LT(std::abs(zeta::eta_eval({0.5, y}, a) - zeta::eta_eval({0.5, y}, b)), 1e-12);
  }
}

TEST(Eta, Errors) {
  EXPECT_THROW(zeta::eta_eval(0.0), DomainError);
  EXPECT_THROW(zeta::eta_eval({-0.5, 2.0}), DomainError);
  EXPECT_THROW(zeta::eta_eval({0.5, 500.0}, EvalOptions{1e-12, 50}), ConvergenceError);
}

TEST(Zeta, PrintedValues) {
  EXPECT_NEAR(zeta_eval(2.0).real(), kPi * kPi / 6.0, 1e-15);
  EXPECT_EQ(zeta_eval(0.0), Complex(-0.5, 0.0));
  EXPECT_LT(std::abs(zeta_eval(-2.0)), 1e-10);
  EXPECT_NEAR(zeta_eval(0.5).real(), -1.4603, 1e-4);
  EXPECT_NEAR(zeta_eval(0.5).real(), oracle::kZetaHalf, 1e-15);
}

TEST(Zeta, OracleValues) {
  EXPECT_LT(rel(zeta_eval({0.3, 5.0}), oracle::kZeta_03_5), 1e-13);
  EXPECT_LT(rel(zeta_eval({-3.7, 2.2}), oracle::kZeta_m37_22), 1e-12);
  EXPECT_LT(rel(zeta_eval({0.5, 100.0}), oracle::kZeta_05_100), 1e-12);
  EXPECT_LT(rel(zeta_eval({2.0, 1.0}), oracle::kZeta_2_1), 1e-14);
}

TEST(Zeta, EtaDenominatorZero) {
  const Complex s(1.0, 2.0 * kPi / std::log(2.0));
  EXPECT_LT(rel(zeta_eval(s), oracle::kZetaEtaDenominatorZero), 1e-13);
  EXPECT_LT(rel(zeta_eval(s + 0.3), zeta::zeta_euler_maclaurin(s + 0.3)), 1e-13);
}

TEST(Zeta, TrivialZeros) {
  for (int n = 1; n <= 8; ++n) EXPECT_LT(std::abs(zeta_eval(-2.0 * n)), 1e-10) << n;
}

TEST(Zeta, PoleAtOne) {
  try {
    zeta_eval(1.0);
    FAIL();
  } catch (const PoleError& e) {
    EXPECT_EQ(e.residue(), Complex(1.0, 0.0));
  }
  EXPECT_NEAR((1e-4 * zeta_eval(1.0 + 1e-4)).real(), 1.0, 1e-3);
}

TEST(FunctionalRhs, AgreesWithZeta) {
  EXPECT_LT(rel(zeta::functional_rhs({0.3, 5.0}), zeta_eval({0.3, 5.0})), 1e-9);
  EXPECT_LT(std::abs(zeta::functional_rhs(-2.0)), 1e-12);
  const Complex s(0.5, 17.3);
  EXPECT_NEAR(std::abs(zeta::functional_rhs(s)), std::abs(zeta_eval(s)), 1e-12);
}

TEST(FunctionalRhs, FactorPoles) {
  EXPECT_THROW(zeta::functional_rhs(1.0), DomainError);
  EXPECT_THROW(zeta::functional_rhs(3.0), DomainError);
  EXPECT_THROW(zeta::functional_rhs(0.0), DomainError);
  EXPECT_NEAR(zeta::functional_rhs(2.0).real(), kPi * kPi / 6.0, 1e-6);
}

TEST(EvenLimit, MatchesTable) {
  EXPECT_NEAR(zeta::even_limit_probe(1).value.real(), kPi * kPi / 6.0, 1e-6);
  EXPECT_NEAR(zeta::even_limit_probe(2).value.real(), std::pow(kPi, 4) / 90.0, 1e-6);
  for (int n = 1; n <= 10; ++n) {
    EXPECT_NEAR(zeta::even_limit_probe(n).value.real(), zeta_eval(2.0 * n).real(), 1e-6) << n;
  }
}

TEST(EvenLimit, ErrorShrinksWithEpsilon) {
  const auto probe = zeta::even_limit_probe(1);
  const double exact = kPi * kPi / 6.0;
  EXPECT_GT(std::abs(probe.raw[0] - exact), std::abs(probe.raw[1] - exact));
  EXPECT_GT(std::abs(probe.raw[1] - exact), std::abs(probe.raw[2] - exact));
  EXPECT_THROW(zeta::even_limit_probe(0), DomainError);
  EXPECT_THROW(zeta::even_limit_probe(11), DomainError);
}

TEST(Completed, Symmetry) {
  EXPECT_LT(rel(zeta::completed_zeta({0.3, 5.0}), zeta::completed_zeta({0.7, -5.0})), 1e-9);
  EXPECT_LT(rel(zeta::completed_zeta({0.3, 5.0}), oracle::kCompleted_03_5), 1e-12);
}

TEST(Completed, HalfAndFirstZero) {
  EXPECT_NEAR(zeta::completed_zeta(0.5).real(), oracle::kCompletedHalf, 1e-14);
  EXPECT_LT(std::abs(zeta::completed_zeta({0.5, 14.134725})), 1e-6);
  EXPECT_NEAR(zeta::completed_zeta({0.5, 20.0}).real(), oracle::kCompleted_05_20, 1e-19);
}

TEST(Completed, PolesAndTrivialZeros) {
  try {
    zeta::completed_zeta(0.0);
    FAIL();
  } catch (const PoleError& e) {
    EXPECT_EQ(e.residue(), Complex(-1.0, 0.0));
  }
  EXPECT_THROW(zeta::completed_zeta(1.0), PoleError);
  EXPECT_LT(rel(zeta::completed_zeta(-2.0), zeta::completed_zeta(3.0)), 1e-12);
}

TEST(Completed, ScaledKeepsPhase) {
  for (double t : {3.0, 30.0, 300.0}) {
    const Complex scaled = zeta::completed_zeta_scaled({0.3, t});
    const Complex plain = zeta::completed_zeta({0.3, t});
    EXPECT_LT(rel(scaled * std::exp(-0.25 * kPi * t), plain), 1e-10) << t;
  }
}

TEST(Bernoulli, Values) {
  EXPECT_EQ(zeta::bernoulli(0), RationalNumber(1));
  EXPECT_EQ(zeta::bernoulli(1), RationalNumber(-1, 2));
  EXPECT_EQ(zeta::bernoulli(2), RationalNumber(1, 6));
  EXPECT_EQ(zeta::bernoulli(3), RationalNumber(0));
  EXPECT_EQ(zeta::bernoulli(12), RationalNumber(-691, 2730));
}

TEST(EvenZetaRational, TableOne) {
  const char* table[] = {"-1/2", "1/6", "1/90", "1/945", "1/9450", "1/93555", "691/638512875", "2/18243225",
                         "3617/325641566250", "43867/38979295480125", "174611/1531329465290625"};
  for (int k = 0; k <= 20; k += 2) {
    EXPECT_EQ(zeta::even_zeta_rational(k).str(), table[k / 2]) << k;
    const double closed = static_cast<double>(zeta::even_zeta_rational(k)) * std::pow(kPi, k);
    EXPECT_LT(std::fabs(closed - zeta_eval(static_cast<double>(k)).real()) / std::fabs(closed), 1e-9) << k;
  }
}

TEST(EvenZetaRational, Errors) {
  EXPECT_THROW(zeta::even_zeta_rational(3), DomainError);
  EXPECT_THROW(zeta::even_zeta_rational(-2), DomainError);
  EXPECT_THROW(zeta::even_zeta_rational(32), DomainError);
  EXPECT_NO_THROW(zeta::even_zeta_rational(30));
}

TEST(Stieltjes, Constants) {
  for (int k = 0; k <= 4; ++k) EXPECT_NEAR(zeta::stieltjes_gamma(k), oracle::kStieltjes[k], 1e-9) << k;
  EXPECT_NEAR(zeta::stieltjes_gamma(0), 0.57721, 1e-5);
  EXPECT_THROW(zeta::stieltjes_gamma(5), DomainError);
}

TEST(Stieltjes, LimitRoute) { EXPECT_NEAR(zeta::euler_gamma_limit(), zeta::stieltjes_gamma(0), 1e-6); }

TEST(Laurent, MatchesZetaNearOne) {
  const auto data = zeta::laurent_data(4);
  EXPECT_EQ(data.order(), 4);
  EXPECT_LT(std::abs(zeta::laurent_eval(1.1, data) - zeta_eval(1.1)), 1e-7);
  for (double a = 0.0; a < 6.28; a += 0.5) {
    const Complex s = 1.0 + std::polar(0.2, a);
    EXPECT_LT(std::abs(zeta::laurent_eval(s, data) - zeta_eval(s)), 1e-7) << s;
  }
  EXPECT_THROW(zeta::laurent_eval(1.0, data), PoleError);
  EXPECT_THROW(zeta::laurent_eval(2.5, data), DomainError);
}
