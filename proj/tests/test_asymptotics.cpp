#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "qdw/asymptotics.hpp"
#include "qdw/formulas.hpp"

using namespace qdw;

namespace {

std::vector<QParam> rational_grid() {
  return {QParam::rational(1, 1), QParam::rational(2, 1), QParam::rational(3, 1),
          QParam::rational(1, 2), QParam::rational(1, 3), QParam::rational(2, 3),
          QParam::rational(3, 2), QParam::rational(5, 2)};
}

const Rat kTol = Rat(1, mpz_class("1000000000000"));  // 1e-12

}  // namespace

TEST(Phi, ClassicalConstants) {
  EXPECT_NEAR(Rat(phi(QParam::rational(1, 1), kTol)).get_d(), 1.6180339887498949,
              1e-10);
  EXPECT_NEAR(Rat(phi(QParam::rational(2, 1), kTol)).get_d(), 1.8392867552141612,
              1e-10);
  EXPECT_NEAR(Rat(phi(QParam::rational(1, 2), kTol)).get_d(), 1.465571231876768,
              1e-10);
}

TEST(Phi, MonotoneInQ) {
  std::vector<QParam> chain = {
      QParam::rational(1, 3), QParam::rational(1, 2), QParam::rational(2, 3),
      QParam::rational(1, 1), QParam::rational(3, 2), QParam::rational(2, 1),
      QParam::rational(5, 2), QParam::rational(3, 1)};
  Rat prev = 1;
  for (const QParam& q : chain) {
    Rat cur = phi(q, kTol);
    EXPECT_GT(cur, prev) << q.to_string();
    prev = cur;
  }
  EXPECT_LT(prev, Rat(2));
}

TEST(Phi, Errors) {
  EXPECT_THROW(phi(QParam::parse("sqrt2"), kTol), std::invalid_argument);
  EXPECT_THROW(phi(QParam::zero(), kTol), std::invalid_argument);
  EXPECT_THROW(phi(QParam::rational(1, 1), Rat(0)), std::invalid_argument);
  EXPECT_THROW(phi(QParam::rational(1, 1), Rat(-1, 10)), std::invalid_argument);
}

TEST(PiPolynomial, Shapes) {
  EXPECT_EQ(pi_polynomial(QParam::rational(1, 1)), (Poly{1, -1, -1}));
  EXPECT_EQ(pi_polynomial(QParam::rational(2, 1)), (Poly{1, -1, -1, -1}));
  EXPECT_EQ(pi_polynomial(QParam::rational(1, 2)), (Poly{1, -1, 0, -1}));
  EXPECT_EQ(pi_polynomial(QParam::rational(3, 2)),
            (Poly{1, -1, -1, 0, -1, -1}));
}

TEST(PiPolynomial, AnchorsWordDenominator) {
  EXPECT_EQ(gf_words(QParam::rational(1, 1)).den(), pi_polynomial(QParam::rational(1, 1)));
  EXPECT_EQ(gf_words(QParam::rational(2, 1)).den(), pi_polynomial(QParam::rational(2, 1)));
  for (const QParam& q : rational_grid()) {
    Poly pi = pi_polynomial(q);
    Poly den = gf_words(q).den();
    // The reduced denominator keeps the growth-carrying factor of (1-x)*Pi.
    EXPECT_TRUE(Poly::divmod(Poly{1, -1} * pi, den).second.is_zero()) << q.to_string();
    Rat root = min_unit_root(den, kTol);
    Rat ph = phi(q, kTol);
    EXPECT_LT(std::fabs(Rat(root * ph - 1).get_d()), 1e-9) << q.to_string();
    Rat residual = pi.eval(Rat(1) / ph);
    EXPECT_LT(std::fabs(residual.get_d()), 1e-9) << q.to_string();
  }
}

TEST(MinUnitRoot, Errors) {
  EXPECT_THROW(min_unit_root(Poly{1, -1, -1}, Rat(0)), std::invalid_argument);
  EXPECT_THROW(min_unit_root(Poly{-1, 1}, kTol), std::domain_error);
  EXPECT_THROW(min_unit_root(Poly{1}, kTol), std::domain_error);
  EXPECT_THROW(min_unit_root(Poly{1, 1}, kTol), std::domain_error);
}

TEST(Growth, PrimeIntervalStepRatio) {
  // Coefficients of the prime-interval GF advance by Phi^c every c+d steps.
  for (const QParam& q : {QParam::rational(1, 1), QParam::rational(2, 1),
                          QParam::rational(1, 2), QParam::rational(3, 2)}) {
    long long c = q.c(), d = q.d();
    std::vector<Rat> s = gf_prime_intervals(q).series(75 + c + d);
    ASSERT_NE(s[75], 0);
    double ratio = Rat(s[(size_t)(75 + c + d)] / s[75]).get_d();
    double want = std::pow(Rat(phi(q, kTol)).get_d(), (double)c);
    EXPECT_LT(std::fabs(ratio / want - 1.0), 1e-3) << q.to_string();
  }
}

TEST(Growth, WordsWindowConverges) {
  for (const QParam& q : rational_grid()) {
    GrowthEstimate est = growth_check("words", q, 30, 60);
    EXPECT_TRUE(est.converged) << q.to_string();
    EXPECT_LE(est.spread, kWordsGrowthThreshold);
    EXPECT_EQ(est.threshold, kWordsGrowthThreshold);
    EXPECT_EQ(est.statistic, "words");
    EXPECT_EQ(est.ratios.size(), 31u);
    EXPECT_GT(est.phi_value, 1.0);
  }
}

TEST(Growth, CoveringsWindowConverges) {
  for (const QParam& q : rational_grid()) {
    GrowthEstimate est = growth_check("coverings", q, 30, 60);
    EXPECT_TRUE(est.converged) << q.to_string();
    EXPECT_LE(est.spread, kCoveringsGrowthThreshold);
    EXPECT_EQ(est.threshold, kCoveringsGrowthThreshold);
  }
}

TEST(Growth, Errors) {
  QParam one = QParam::rational(1, 1);
  EXPECT_THROW(growth_check("primes", one, 30, 60), std::invalid_argument);
  EXPECT_THROW(growth_check("words", QParam::parse("e"), 30, 60),
               std::invalid_argument);
  EXPECT_THROW(growth_check("words", one, 60, 30), std::invalid_argument);
  EXPECT_THROW(growth_check("words", one, 0, 10), std::invalid_argument);
  EXPECT_THROW(growth_check("words", one, 10, 10), std::invalid_argument);
}
