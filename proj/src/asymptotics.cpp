#include "qdw/asymptotics.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>

#include "qdw/formulas.hpp"
#include "qdw/ratfun.hpp"

namespace qdw {
namespace {

void require_positive_rational(const QParam& q, const char* what) {
  if (!q.is_rational() || q.is_zero())
    throw std::invalid_argument(std::string(what) + " needs a positive rational q");
}

int sign_at(const Poly& p, const Rat& x) {
  Rat v = p.eval(x);
  return sgn(v);
}

// Bisect [lo, hi] with p(lo) > 0 > p(hi) until hi - lo <= tol.
Rat bisect_root(const Poly& p, Rat lo, Rat hi, const Rat& tol) {
  while (hi - lo > tol) {
    Rat mid = (lo + hi) / 2;
    int s = sign_at(p, mid);
    if (s == 0) return mid;
    if (s > 0)
      lo = mid;
    else
      hi = mid;
  }
  return (lo + hi) / 2;
}

}  // namespace

Poly pi_polynomial(const QParam& q) {
  require_positive_rational(q, "pi_polynomial");
  const long long c = q.c();
  const long long d = q.d();
  std::map<long long, Rat> coeff;
  coeff[0] += Rat(1);
  coeff[c + d] -= Rat(1);
  for (long long i = 0; i < c; ++i) coeff[1 + i + q.floor_div(i)] -= Rat(1);
  long long deg = c + d;
  std::vector<Rat> v(deg + 1);
  for (const auto& [e, r] : coeff) v[e] = r;
  return Poly(v);
}

Rat min_unit_root(const Poly& p, const Rat& tol) {
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  if (sign_at(p, Rat(0)) <= 0)
    throw std::domain_error("min_unit_root expects p(0) > 0");
  // No roots precede the first one, so p stays positive on the grid until
  // the bracketing step lands.
  const long grid = 64;
  for (long k = 1; k <= grid; ++k) {
    Rat x(k, grid);
    int s = sign_at(p, x);
    if (s == 0) return x;
    if (s < 0) return bisect_root(p, Rat(k - 1, grid), x, tol);
  }
  throw std::domain_error("no sign change of p inside (0, 1]");
}

Rat phi(const QParam& q, const Rat& tol) {
  require_positive_rational(q, "phi");
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  Poly p = pi_polynomial(q);
  Rat lo(1, 100);
  Rat hi(999, 1000);
  while (sign_at(p, lo) <= 0) lo /= 2;
  while (sign_at(p, hi) >= 0) hi = (hi + 1) / 2;
  // Converge on the reciprocal: (hi-lo)/(lo*hi) bounds |1/lo - 1/hi|.
  while ((hi - lo) > tol * lo * hi) {
    Rat mid = (lo + hi) / 2;
    int s = sign_at(p, mid);
    if (s == 0) return 1 / mid;
    if (s > 0)
      lo = mid;
    else
      hi = mid;
  }
  return 2 / (lo + hi);
}

GrowthEstimate growth_check(const std::string& statistic, const QParam& q,
                            long long n_lo, long long n_hi) {
  require_positive_rational(q, "growth_check");
  if (n_lo < 1 || n_hi <= n_lo)
    throw std::invalid_argument("growth window must satisfy 1 <= n_lo < n_hi");

  GrowthEstimate est;
  est.q = q;
  est.statistic = statistic;
  est.n_lo = n_lo;
  est.n_hi = n_hi;

  RatFun gf;
  bool per_n = false;
  if (statistic == "words") {
    gf = gf_words(q);
    est.threshold = kWordsGrowthThreshold;
  } else if (statistic == "coverings") {
    gf = gf_coverings(q);
    est.threshold = kCoveringsGrowthThreshold;
    per_n = true;  // the leading term carries an extra factor of n
  } else {
    throw std::invalid_argument("growth_check knows 'words' and 'coverings' only");
  }

  est.phi_value = phi(q, Rat(1, 1000000000000000L));
  std::vector<Rat> coeffs = gf.series(n_hi + 1);

  Rat powv = 1;
  for (long long i = 0; i < n_lo; ++i) powv *= est.phi_value;
  std::vector<Rat> norm;
  for (long long n = n_lo; n <= n_hi; ++n) {
    Rat r = coeffs[n] / powv;
    if (per_n) r /= Rat((long)n);
    norm.push_back(r);
    powv *= est.phi_value;
  }

  est.spread = 0.0;
  for (size_t i = 0; i < norm.size(); ++i) {
    est.ratios.push_back(norm[i].get_d());
    if (i + 1 < norm.size()) {
      Rat rel = norm[i + 1] / norm[i] - 1;
      double mag = std::abs(rel.get_d());
      if (mag > est.spread) est.spread = mag;
    }
  }
  est.converged = est.spread < est.threshold;
  return est;
}

}  // namespace qdw
