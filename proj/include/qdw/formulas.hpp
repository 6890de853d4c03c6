#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "qdw/qparam.hpp"
#include "qdw/ratfun.hpp"

namespace qdw {

// Truncated series for a statistic, used for real q where no closed form
// exists; coefficients of counting series are integers.
struct SeriesReport {
  QParam q = QParam::rational(1, 1);
  std::string statistic;
  std::vector<mpz_class> coeffs;  // a_0 .. a_N
};

// ---- closed forms, rational q = c/d > 0 ----

// GF of |W_n^q|: (1-x^{c+d}) / ((1-x)(1-x^{c+d} - sum_{i<c} x^{1+i+floor(i/q)})).
RatFun gf_words(const QParam& q);

// Per-n count of elements covered by the all-ones word.
RatFun gf_A(const QParam& q);

// Aggregated count of elements covered via a changed prime block.
RatFun gf_B(const QParam& q);

// GF of prime words 0^a 1^b weighted by the suffix machinery shared by A and B.
RatFun gf_D(const QParam& q);

// Covering count: A/((1-x)(1-D)) + B/((1-x)^2 (1-D)^2).
RatFun gf_coverings(const QParam& q);

// x/(1-x)^2: exactly n join-irreducible elements at length n (q-independent).
RatFun gf_join_irreducible();

// Intervals whose top is a prime word: floor_transform(Gamma, c, d)/(1-x)
// with Gamma = x(1 + W)/(1-x).
RatFun gf_prime_intervals(const QParam& q);

// All intervals: W/((1-x)(1-P)).
RatFun gf_intervals(const QParam& q);

// ---- meet-irreducible counts ----

// Constituents of the meet-irreducible GF for 0 < q <= 1. The two letter GFs
// A and B track admissible factors; M0 and M1 split by final letter.
struct MeetLowParts {
  RatFun A, B, C;
  RatFun M0, M1, M;
};
MeetLowParts meet_low_parts(const QParam& q);
RatFun gf_meet_low(const QParam& q);

// Transfer-matrix construction for q > 1: alphabet of 2K+1 letter GFs
// (K = ceil(q)) with K^2+2K-1 forbidden consecutive pairs; the linear system
// is solved exactly over RatFun.
struct MeetHighSystem {
  long long K = 0;
  RatFun A, B, C;
  std::vector<RatFun> D;  // D[i] valid for 1 <= i <= K-1
  std::vector<std::pair<std::string, RatFun>> letters;
  std::vector<std::pair<std::string, std::string>> forbidden;
  RatFun M0, M1, M;
};
MeetHighSystem meet_high_system(const QParam& q);
RatFun gf_meet_high(const QParam& q);

// Routes to gf_meet_low for q <= 1 and gf_meet_high for q > 1.
RatFun gf_meet_irreducible(const QParam& q);

// ---- truncated series, any q > 0 (rational or irrational built-in) ----

SeriesReport series_words_real(const QParam& q, long long N);
SeriesReport series_A_real(const QParam& q, long long N);
SeriesReport series_B_real(const QParam& q, long long N);
SeriesReport series_D_real(const QParam& q, long long N);
SeriesReport series_coverings_real(const QParam& q, long long N);

}  // namespace qdw
