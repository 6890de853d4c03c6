#include "qdw/gfcore.hpp"

#include <numeric>
#include <stdexcept>

namespace qdw {
namespace {

// Floor of a/b for b > 0 and a of either sign.
long long floor_quot(long long a, long long b) {
  long long t = a / b;
  return (a % b != 0 && (a < 0)) ? t - 1 : t;
}

// Power sums p_1..p_m of the roots of a monic polynomial, by Newton's
// identities; e_k are the elementary symmetric functions read off the
// coefficients.
std::vector<Rat> newton_power_sums(const std::vector<Rat>& monic, long long m) {
  long long s = (long long)monic.size() - 1;
  std::vector<Rat> e(s + 1);
  for (long long k = 0; k <= s; ++k)
    e[k] = (k % 2 == 0) ? monic[s - k] : -monic[s - k];
  std::vector<Rat> p(m + 1, Rat(0));
  for (long long k = 1; k <= m; ++k) {
    Rat acc(0);
    if (k <= s) acc = Rat((long)k) * e[k] * ((k % 2 == 1) ? 1 : -1);
    long long lim = std::min(k - 1, s);
    for (long long i = 1; i <= lim; ++i) {
      Rat term = e[i] * p[k - i];
      acc += (i % 2 == 1) ? term : -term;
    }
    p[k] = acc;
  }
  return p;
}

// Monic polynomial of degree s whose root power sums are P[1..s].
std::vector<Rat> from_power_sums(const std::vector<Rat>& P, long long s) {
  std::vector<Rat> e(s + 1, Rat(0));
  e[0] = 1;
  for (long long k = 1; k <= s; ++k) {
    Rat acc(0);
    for (long long i = 1; i <= k; ++i) {
      Rat term = e[k - i] * P[i];
      acc += (i % 2 == 1) ? term : -term;
    }
    e[k] = acc / Rat((long)k);
  }
  std::vector<Rat> coef(s + 1);
  for (long long k = 0; k <= s; ++k)
    coef[s - k] = (k % 2 == 0) ? e[k] : -e[k];
  return coef;
}

}  // namespace

RatFun floor_seq_gf(long long a, long long b, long long c) {
  if (a < 1 || b < 1) throw std::invalid_argument("floor_seq_gf needs a, b >= 1");
  if (std::gcd(a, b) != 1) throw std::invalid_argument("floor_seq_gf needs gcd(a,b) = 1");
  std::vector<Rat> qc(b);
  for (long long r = 0; r < b; ++r) qc[r] = Rat((long)floor_quot(a * r + c, b));
  Poly Q(std::move(qc));
  Poly one_minus_x{1, -1};
  Poly num = Poly::monomial(b, Rat((long)a)) + one_minus_x * Q;
  Poly den = one_minus_x * (Poly{1} - Poly::monomial(b));
  return RatFun(std::move(num), std::move(den));
}

Poly root_power_transform(const Poly& Q, long long c) {
  if (Q.is_zero()) throw std::invalid_argument("root_power_transform needs Q != 0");
  if (c < 1) throw std::invalid_argument("root_power_transform needs c >= 1");
  long long s = Q.degree();
  Rat lam = Q.leading();
  Rat lam_c(1);
  for (long long i = 0; i < c; ++i) lam_c *= lam;
  if (s == 0) return Poly::constant(lam_c);
  std::vector<Rat> monic(s + 1);
  for (long long i = 0; i <= s; ++i) monic[i] = Q.coeff(i) / lam;
  std::vector<Rat> p = newton_power_sums(monic, c * s);
  std::vector<Rat> P(s + 1, Rat(0));
  for (long long k = 1; k <= s; ++k) P[k] = p[c * k];
  Poly out(from_power_sums(P, s));
  return out.scaled(lam_c);
}

Poly exponent_map(const Poly& S, long long c, long long d) {
  if (c < 1 || d < 1) throw std::invalid_argument("exponent_map needs c, d >= 1");
  if (S.is_zero()) return Poly();
  std::vector<Rat> out(2 + ((c + d) * S.degree()) / c, Rat(0));
  for (long long k = 0; k <= S.degree(); ++k)
    out[1 + ((c + d) * k) / c] += S.coeff(k);
  return Poly(std::move(out));
}

RatFun floor_transform(const RatFun& g, long long c, long long d) {
  if (c < 1 || d < 1 || std::gcd(c, d) != 1)
    throw std::invalid_argument("floor_transform needs coprime c, d >= 1");
  const Poly& P = g.num();
  const Poly& Q = g.den();
  long long s = Q.degree();
  Poly U = root_power_transform(Q, c);
  bool negate = ((c + 1) * s) % 2 != 0;
  // sigma * U(x^c) equals the product of Q(rho^k x) over all c-th roots of
  // unity rho^k, so dividing out Q leaves a genuine polynomial.
  Poly prodQ = U.compose_xk(c);
  if (negate) prodQ = -prodQ;
  Poly S = Poly::div_exact(P * prodQ, Q);
  Poly N = exponent_map(S, c, d);
  Poly D = U.compose_xk(c + d);
  if (negate) D = -D;
  return RatFun(std::move(N), std::move(D));
}

}  // namespace qdw
