#pragma once

#include <string>
#include <vector>

#include "qdw/poly.hpp"
#include "qdw/qparam.hpp"

namespace qdw {

// Spread tolerated by growth_check before declaring non-convergence.
inline constexpr double kWordsGrowthThreshold = 1e-3;
inline constexpr double kCoveringsGrowthThreshold = 1e-2;

// 1 - x^{c+d} - sum_{i=0}^{c-1} x^{1 + i + floor(i/q)} for q = c/d. Its
// unique root in (0, 1) is the reciprocal of the growth constant.
Poly pi_polynomial(const QParam& q);

// Smallest positive root of p, assuming p(0) > 0 and a sign change inside
// (0, 1). Exact rational bisection; the returned value is within tol of the
// root (absolute, on the x axis).
Rat min_unit_root(const Poly& p, const Rat& tol);

// Growth constant of |W_n^q|, within tol (absolute). Exact bisection on the
// sign of pi_polynomial, so the only error is the final interval width.
Rat phi(const QParam& q, const Rat& tol);

struct GrowthEstimate {
  QParam q = QParam::rational(1, 1);
  std::string statistic;
  Rat phi_value;
  long long n_lo = 0;
  long long n_hi = 0;
  std::vector<double> ratios;  // a_n / phi^n, or a_n / (n phi^n) for coverings
  double spread = 0.0;         // max over n of |ratio_{n+1}/ratio_n - 1|
  double threshold = 0.0;
  bool converged = false;
};

// Checks that the normalized coefficient sequence of the named statistic
// ("words" or "coverings") flattens over [n_lo, n_hi].
GrowthEstimate growth_check(const std::string& statistic, const QParam& q,
                            long long n_lo, long long n_hi);

}  // namespace qdw
