#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "qdw/formulas.hpp"
#include "qdw/lattice.hpp"
#include "qdw/words.hpp"

using namespace qdw;

namespace {

std::vector<QParam> rational_grid() {
  return {QParam::rational(1, 1), QParam::rational(2, 1), QParam::rational(3, 1),
          QParam::rational(1, 2), QParam::rational(1, 3), QParam::rational(2, 3),
          QParam::rational(3, 2), QParam::rational(5, 2)};
}

void expect_series(const RatFun& f, long long from, const std::vector<long long>& want,
                   const std::string& tag) {
  std::vector<Rat> s = f.series(from + (long long)want.size() - 1);
  for (size_t i = 0; i < want.size(); ++i)
    EXPECT_EQ(s[(size_t)from + i], Rat((long)want[i])) << tag << " n=" << from + (long long)i;
}

Poly sq(const Poly& p) { return p * p; }

}  // namespace

TEST(Coverings, LowOrderSeries) {
  expect_series(gf_coverings(QParam::rational(1, 1)), 1,
                {1, 2, 5, 10, 20, 38, 70, 127, 228}, "q=1");
  expect_series(gf_coverings(QParam::rational(2, 1)), 1,
                {1, 4, 9, 22, 50, 108, 229, 476, 976}, "q=2");
  expect_series(gf_coverings(QParam::rational(1, 2)), 1,
                {1, 2, 3, 6, 11, 18, 30, 50, 81}, "q=1/2");
  expect_series(gf_coverings(QParam::rational(1, 3)), 1,
                {1, 2, 3, 4, 7, 12, 19, 28, 42}, "q=1/3");
}

TEST(Coverings, PrintedFormAtOne) {
  Poly num{0, -1, 1, -1, 1, 0, 0, 1};  // x(x^6 + x^3 - x^2 + x - 1)
  Poly den = Poly{-1, 1} * Poly{1, 0, 1} * sq(Poly{-1, 1, 1});
  EXPECT_EQ(gf_coverings(QParam::rational(1, 1)), RatFun(num, den));
}

TEST(Intervals, LowOrderSeries) {
  expect_series(gf_intervals(QParam::rational(1, 1)), 0,
                {1, 3, 6, 13, 27, 56, 115, 234, 474, 955}, "q=1");
  expect_series(gf_intervals(QParam::rational(2, 1)), 0,
                {1, 3, 9, 22, 57, 145, 363, 909, 2261, 5608}, "q=2");
  expect_series(gf_intervals(QParam::rational(2, 3)), 0,
                {1, 3, 6, 13, 27, 51, 100, 196, 376, 723}, "q=2/3");
  expect_series(gf_intervals(QParam::rational(3, 2)), 0,
                {1, 3, 9, 22, 57, 136, 336, 811, 1966, 4721}, "q=3/2");
}

TEST(Intervals, FactorsBackToWords) {
  RatFun one = RatFun::one(), x = RatFun::x();
  for (const QParam& q : rational_grid()) {
    RatFun I = gf_intervals(q);
    RatFun P = gf_prime_intervals(q);
    EXPECT_EQ(I * (one - x) * (one - P), gf_words(q)) << q.to_string();
  }
}

TEST(PrimeIntervals, PrintedFormAtOne) {
  Poly num{0, 0, 0, -2, 0, 0, 0, 1};  // x^3 (x^4 - 2)
  Poly den = Poly{-1, 1} * Poly{-1, 1} * Poly{1, 1} * Poly{-1, 0, 1, 0, 1};
  EXPECT_EQ(gf_prime_intervals(QParam::rational(1, 1)), RatFun(num, den));
}

TEST(PrimeIntervals, SmallestExponent) {
  for (const QParam& q : rational_grid()) {
    std::vector<Rat> s = gf_prime_intervals(q).series(20);
    long long first = -1;
    for (long long n = 0; n <= 20 && first < 0; ++n)
      if (s[(size_t)n] != 0) first = n;
    EXPECT_EQ(first, 2 + q.d() / q.c()) << q.to_string();
  }
}

TEST(PrimeIntervals, CountsPairsUnderPrimeTops) {
  for (const QParam& q :
       {QParam::rational(2, 1), QParam::rational(1, 1), QParam::rational(1, 2)}) {
    RatFun P = gf_prime_intervals(q);
    std::vector<Rat> s = P.series(11);
    for (long long n = 1; n <= 11; ++n) {
      std::vector<std::string> all = enumerate_words(n, q);
      long long pairs = 0;
      for (long long a = 1; a < n; ++a) {
        long long b = n - a;
        if (!q.scaled_gt(a, b)) continue;
        std::string w = std::string(a, '0') + std::string(b, '1');
        for (const std::string& v : all)
          if (leq(v, w)) ++pairs;
      }
      EXPECT_EQ(s[(size_t)n], Rat((long)pairs)) << q.to_string() << " n=" << n;
    }
  }
}

TEST(BlockCounts, DCountsAdmissiblePairs) {
  for (const QParam& q : rational_grid()) {
    std::vector<Rat> s = gf_D(q).series(40);
    for (long long n = 0; n <= 40; ++n) {
      long long pairs = 0;
      for (long long a = 1; a < n; ++a)
        if (q.scaled_gt(a, n - a)) ++pairs;
      EXPECT_EQ(s[(size_t)n], Rat((long)pairs)) << q.to_string() << " n=" << n;
    }
  }
}

TEST(BlockCounts, DClosedFormAtOne) {
  Poly den = Poly{1, -1} * Poly{1, 0, -1};
  EXPECT_EQ(gf_D(QParam::rational(1, 1)), RatFun(Poly{0, 0, 0, 1}, den));
}

TEST(BlockCounts, ATracksTopCoverCount) {
  for (const QParam& q : rational_grid()) {
    std::vector<Rat> s = gf_A(q).series(60);
    EXPECT_EQ(s[0], Rat(0));
    for (long long n = 1; n <= 60; ++n)
      EXPECT_EQ(s[(size_t)n], Rat((long)q.ceil_ratio(n))) << q.to_string() << " " << n;
  }
}

TEST(BlockCounts, BStartsWithASingleCover) {
  for (const QParam& q : rational_grid()) {
    std::vector<Rat> s = gf_B(q).series(20);
    long long first = -1;
    for (long long n = 0; n <= 20 && first < 0; ++n)
      if (s[(size_t)n] != 0) first = n;
    ASSERT_GE(first, 0) << q.to_string();
    EXPECT_EQ(first, 2 + q.d() / q.c());
    EXPECT_EQ(s[(size_t)first], Rat(1));
  }
}

TEST(MeetIrreducible, RoutesByParameter) {
  EXPECT_EQ(gf_meet_irreducible(QParam::rational(1, 1)),
            gf_meet_low(QParam::rational(1, 1)));
  EXPECT_EQ(gf_meet_irreducible(QParam::rational(2, 1)),
            gf_meet_high(QParam::rational(2, 1)));
  EXPECT_THROW(meet_low_parts(QParam::rational(5, 2)), std::invalid_argument);
  EXPECT_THROW(meet_high_system(QParam::rational(1, 1)), std::invalid_argument);
}

TEST(MeetIrreducible, SeriesMatchesLatticeCounts) {
  for (const QParam& q : rational_grid()) {
    std::vector<Rat> s = gf_meet_irreducible(q).series(10);
    for (long long n = 0; n <= 10; ++n) {
      LatticeModel m = build_lattice(n, q);
      EXPECT_EQ(s[(size_t)n], Rat((long)meet_irreducibles(m).size()))
          << q.to_string() << " n=" << n;
    }
  }
  std::vector<Rat> one = gf_meet_irreducible(QParam::rational(1, 1)).series(5);
  EXPECT_EQ(one[1], Rat(1));
  EXPECT_EQ(one[5], Rat(7));
}

TEST(MeetIrreducible, LowLetterSum) {
  for (const QParam& q : {QParam::rational(1, 1), QParam::rational(1, 2),
                          QParam::rational(1, 3), QParam::rational(2, 3)}) {
    MeetLowParts parts = meet_low_parts(q);
    long long fl = q.d() / q.c();
    RatFun want(Poly::monomial(2 + fl), Poly{1, -1});
    EXPECT_EQ(parts.A + parts.B, want) << q.to_string();
  }
}

TEST(MeetIrreducible, HighAlphabetAudit) {
  for (const QParam& q : {QParam::rational(3, 2), QParam::rational(2, 1),
                          QParam::rational(5, 2), QParam::rational(3, 1)}) {
    MeetHighSystem sys = meet_high_system(q);
    long long K = (q.c() + q.d() - 1) / q.d();
    EXPECT_EQ(sys.K, K);
    EXPECT_EQ((long long)sys.letters.size(), 2 * K + 1);
    EXPECT_EQ((long long)sys.forbidden.size(), K * K + 2 * K - 1);
    RatFun sum;
    for (const auto& [name, gf] : sys.letters) sum = sum + gf;
    EXPECT_EQ(sum, RatFun(Poly{0, 0, 1}, Poly{1, -1})) << q.to_string();
  }
}

TEST(MeetIrreducible, HighGoldenFiveHalves) {
  MeetHighSystem sys = meet_high_system(QParam::rational(5, 2));
  Poly den7 = Poly{1} - Poly::monomial(7);
  EXPECT_EQ(sys.A, RatFun(Poly::monomial(3) + Poly::monomial(6), den7));
  EXPECT_EQ(sys.B, RatFun(Poly::monomial(4) + Poly::monomial(7), den7));
  EXPECT_EQ(sys.C, RatFun(Poly::monomial(2) + Poly::monomial(4) + Poly::monomial(5) +
                              Poly::monomial(7) + Poly::monomial(8),
                          den7));
  ASSERT_EQ(sys.D.size(), 3u);
  EXPECT_EQ(sys.D[1],
            RatFun(Poly::monomial(4) + Poly::monomial(7) + Poly::monomial(8), den7));
  EXPECT_EQ(sys.D[2], RatFun(Poly::monomial(7), den7));
  expect_series(sys.M, 0, {0, 1, 2, 3, 6, 9, 13, 23, 34, 52}, "M 5/2");
}

TEST(RealSeries, AgreesWithClosedForms) {
  const long long N = 30;
  for (const QParam& q : rational_grid()) {
    struct Row {
      const char* name;
      RatFun closed;
      SeriesReport real;
    };
    std::vector<Row> rows;
    rows.push_back({"words", gf_words(q), series_words_real(q, N)});
    rows.push_back({"A", gf_A(q), series_A_real(q, N)});
    rows.push_back({"B", gf_B(q), series_B_real(q, N)});
    rows.push_back({"D", gf_D(q), series_D_real(q, N)});
    rows.push_back({"coverings", gf_coverings(q), series_coverings_real(q, N)});
    for (const Row& row : rows) {
      std::vector<Rat> s = row.closed.series(N);
      ASSERT_EQ(row.real.coeffs.size(), (size_t)N + 1);
      for (long long n = 0; n <= N; ++n)
        EXPECT_EQ(Rat(row.real.coeffs[(size_t)n]), s[(size_t)n])
            << row.name << " q=" << q.to_string() << " n=" << n;
    }
  }
}

TEST(RealSeries, IrrationalSpots) {
  SeriesReport pi2 = series_words_real(QParam::parse("pi/2"), 3);
  EXPECT_EQ(pi2.coeffs[3], 7);

  QParam e = QParam::parse("e");
  SeriesReport cov = series_coverings_real(e, 8);
  for (long long n = 1; n <= 8; ++n) {
    LatticeModel m = build_lattice(n, e);
    EXPECT_EQ(cov.coeffs[(size_t)n], (long)count_coverings(m)) << "n=" << n;
  }

  expect_series(gf_join_irreducible(), 0, {0, 1, 2, 3, 4, 5, 6, 7}, "ji");
}

TEST(Errors, DomainChecks) {
  QParam s = QParam::parse("sqrt2");
  EXPECT_THROW(gf_words(s), std::invalid_argument);
  EXPECT_THROW(gf_coverings(s), std::invalid_argument);
  EXPECT_THROW(gf_meet_irreducible(s), std::invalid_argument);
  EXPECT_THROW(gf_words(QParam::zero()), std::invalid_argument);
  EXPECT_THROW(series_words_real(QParam::zero(), 5), std::invalid_argument);
  EXPECT_THROW(series_words_real(QParam::rational(1, 1), -1), std::invalid_argument);
}
