#include "qdw/formulas.hpp"

#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "qdw/gfcore.hpp"

namespace qdw {
namespace {

void require_positive_rational(const QParam& q, const char* who) {
  if (!q.is_rational() || q.is_zero())
    throw std::invalid_argument(std::string(who) + " needs a positive rational q");
}

RatFun one_minus_x_pow(long long k) { return RatFun(Poly{1} - Poly::monomial(k)); }

long long mod_inverse(long long a, long long m) {
  long long r0 = a % m, r1 = m, s0 = 1, s1 = 0;
  while (r1 != 0) {
    long long t = r0 / r1;
    r0 -= t * r1;
    std::swap(r0, r1);
    s0 -= t * s1;
    std::swap(s0, s1);
  }
  if (r0 != 1 && r0 != -1) throw std::logic_error("mod_inverse: arguments not coprime");
  if (r0 == -1) s0 = -s0;
  return ((s0 % m) + m) % m;
}

// representative of v mod c inside {1, ..., c}
long long rep_mod(long long v, long long c) {
  v %= c;
  if (v < 0) v += c;
  return v == 0 ? c : v;
}

}  // namespace

RatFun gf_words(const QParam& q) {
  require_positive_rational(q, "gf_words");
  long long c = q.c(), d = q.d();
  Poly top = Poly{1} - Poly::monomial(c + d);
  Poly inner = top;
  for (long long i = 0; i < c; ++i) inner -= Poly::monomial(1 + i + i * d / c);
  return RatFun(top, Poly{1, -1} * inner);
}

RatFun gf_A(const QParam& q) {
  require_positive_rational(q, "gf_A");
  RatFun x = RatFun::x(), one = RatFun::one();
  return one + x / (one - x) + floor_seq_gf(q.c(), q.c() + q.d(), -1);
}

RatFun gf_D(const QParam& q) {
  require_positive_rational(q, "gf_D");
  long long c = q.c(), d = q.d();
  Poly num;
  for (long long k = 1; k <= c; ++k) num += Poly::monomial(1 + (c + d) * k / c);
  Poly den = Poly{1, -1} * (Poly{1} - Poly::monomial(c + d));
  return RatFun(std::move(num), std::move(den));
}

RatFun gf_B(const QParam& q) {
  require_positive_rational(q, "gf_B");
  long long c = q.c(), d = q.d(), cd = c + d;
  // x(1 - x^{cd}) + c*x^{cd} + (1-x) * sum_{r<cd} floor((cr+d-1)/cd) x^r
  Poly w = Poly{0, 1} - Poly::monomial(cd + 1) + Poly::monomial(cd, Rat((long)c));
  std::vector<Rat> qc(cd);
  for (long long r = 0; r < cd; ++r) qc[r] = Rat((long)((c * r + d - 1) / cd));
  w += Poly{1, -1} * Poly(std::move(qc));
  // geometric factors 1 + ... + x^{c-1} and 1 + x^{cd} + ... + x^{cd(c-1)}
  Poly ge1(std::vector<Rat>(c, Rat(1)));
  Poly ge2 = ge1.compose_xk(cd >= 1 ? cd : 1);
  Poly T = w * ge1 * ge2;
  Poly num = exponent_map(T, c, d);
  Poly den = Poly{1, -1} * (Poly{1} - Poly::monomial(cd)) * (Poly{1} - Poly::monomial(cd * cd));
  return RatFun(std::move(num), std::move(den));
}

RatFun gf_coverings(const QParam& q) {
  RatFun A = gf_A(q), B = gf_B(q), D = gf_D(q);
  RatFun mx = one_minus_x_pow(1), mD = RatFun::one() - D;
  return A / (mx * mD) + B / (mx * mx * mD * mD);
}

RatFun gf_join_irreducible() {
  return RatFun(Poly{0, 1}, Poly{1, -1} * Poly{1, -1});
}

RatFun gf_prime_intervals(const QParam& q) {
  require_positive_rational(q, "gf_prime_intervals");
  RatFun W = gf_words(q);
  RatFun x = RatFun::x(), one = RatFun::one();
  RatFun gamma = x * (one + W) / (one - x);
  return floor_transform(gamma, q.c(), q.d()) / (one - x);
}

RatFun gf_intervals(const QParam& q) {
  require_positive_rational(q, "gf_intervals");
  RatFun W = gf_words(q);
  RatFun P = gf_prime_intervals(q);
  RatFun one = RatFun::one();
  return W / ((one - RatFun::x()) * (one - P));
}

MeetLowParts meet_low_parts(const QParam& q) {
  require_positive_rational(q, "meet_low_parts");
  long long c = q.c(), d = q.d();
  if (c > d) throw std::invalid_argument("meet_low_parts needs q <= 1");
  long long fl = d / c;
  Poly anum;
  for (long long i = 1; i <= c; ++i) anum += Poly::monomial(1 + i + i * d / c);
  RatFun A(std::move(anum), Poly{1} - Poly::monomial(c + d));
  RatFun one = RatFun::one(), x = RatFun::x();
  RatFun B = RatFun::x_pow(2 + fl) / (one - x) - A;
  RatFun C = A / x - RatFun::x_pow(1 + fl);
  RatFun den = one - A - (B - C) - C * A;
  RatFun M1 = (A + B + C * A) / den;
  std::vector<Rat> geo_coeffs(2 + fl, Rat(1));
  geo_coeffs[0] = 0;
  RatFun geo{Poly(std::move(geo_coeffs))};  // x + ... + x^{1+fl}
  RatFun M0 = geo + ((A + (B - C) + C * A) / den) * geo;
  RatFun M = (M0 + M1) / (one - x);
  return {A, B, C, M0, M1, M};
}

RatFun gf_meet_low(const QParam& q) { return meet_low_parts(q).M; }

MeetHighSystem meet_high_system(const QParam& q) {
  require_positive_rational(q, "meet_high_system");
  long long c = q.c(), d = q.d();
  if (c <= d) throw std::invalid_argument("meet_high_system needs q > 1");
  MeetHighSystem sys;
  long long K = (c + d - 1) / d;  // ceil(q)
  sys.K = K;
  long long cd = c + d;
  long long dinv = mod_inverse(d, c);
  Poly den_cd = Poly{1} - Poly::monomial(cd);
  auto over_cd = [&](Poly num) { return RatFun(std::move(num), den_cd); };

  Poly anum;
  for (long long i = 1; i <= d; ++i) {
    long long ai = rep_mod(dinv * (c - d - 1 + i), c);
    anum += Poly::monomial(1 + ai + ai * d / c);
  }
  sys.A = over_cd(std::move(anum));
  sys.B = RatFun::x() * sys.A;
  Poly cnum;
  for (long long i = 2; i <= c + 1; ++i) cnum += Poly::monomial(i + i * d / c);
  sys.C = over_cd(std::move(cnum));
  sys.D.assign(K, RatFun());
  for (long long i = 1; i <= K - 1; ++i) {
    Poly num;
    for (long long m = 0; m < c - d * i; ++m) {
      long long bm = rep_mod(dinv * m - 1, c);
      num += Poly::monomial(1 + bm + (bm + 1) * d / c);
    }
    sys.D[i] = over_cd(std::move(num));
  }

  // letter GFs; for K = 2 the f/g families are empty and the chain
  // D_1 <= B <= C collapses the c/d/e letters accordingly
  auto& L = sys.letters;
  L.emplace_back("a", sys.A - RatFun::x_pow(K));
  L.emplace_back("b", RatFun::x_pow(K));
  if (K >= 3) {
    L.emplace_back("c", sys.C - sys.D[1] - RatFun::x_pow(K - 1));
    L.emplace_back("d", sys.B - sys.D[K - 1]);
    L.emplace_back("e", sys.D[K - 1]);
    for (long long i = 1; i <= K - 2; ++i)
      L.emplace_back("f" + std::to_string(i), RatFun::x_pow(1 + i));
    for (long long i = 1; i <= K - 3; ++i)
      L.emplace_back("g" + std::to_string(i),
                     sys.D[i] - sys.D[i + 1] - RatFun::x_pow(1 + K - 2 - i));
    L.emplace_back("g" + std::to_string(K - 2), sys.D[K - 2] - sys.B);
  } else {
    L.emplace_back("c", sys.C - sys.B);
    L.emplace_back("d", sys.B - sys.D[1]);
    L.emplace_back("e", sys.D[1]);
  }

  std::set<std::pair<std::string, std::string>> forb;
  for (const char* p : {"cd", "ce", "dd", "de", "eb", "ed", "ee"})
    forb.insert({std::string(1, p[0]), std::string(1, p[1])});
  for (long long i = 1; i <= K - 2; ++i) {
    std::string fi = "f" + std::to_string(i), gi = "g" + std::to_string(i);
    forb.insert({"d", fi});
    forb.insert({"e", fi});
    forb.insert({fi, "d"});
    forb.insert({fi, "e"});
    forb.insert({gi, "d"});
    forb.insert({gi, "e"});
    for (long long j = 1; j <= i; ++j) forb.insert({gi, "f" + std::to_string(j)});
  }
  for (long long i = 1; i <= K - 3; ++i)
    for (long long j = 1; j <= K - 2 - i; ++j)
      forb.insert({"f" + std::to_string(i), "f" + std::to_string(j)});
  sys.forbidden.assign(forb.begin(), forb.end());
  if ((long long)L.size() != 2 * K + 1)
    throw std::logic_error("letter alphabet size mismatch");
  if ((long long)forb.size() != K * K + 2 * K - 1)
    throw std::logic_error("forbidden pattern count mismatch");

  // M_l = letter_l + sum over allowed predecessors l' of M_{l'} * letter_l,
  // rewritten as a linear system and solved by Gaussian elimination
  long long n = (long long)L.size();
  std::vector<std::vector<RatFun>> mat(n, std::vector<RatFun>(n + 1));
  for (long long j = 0; j < n; ++j) {
    const auto& [name_j, gf_j] = L[j];
    for (long long i = 0; i < n; ++i) {
      if (!forb.count({L[i].first, name_j})) mat[j][i] = gf_j;
    }
    mat[j][j] = mat[j][j] - RatFun::one();
    mat[j][n] = -gf_j;
  }
  for (long long col = 0; col < n; ++col) {
    long long piv = col;
    while (piv < n && mat[piv][col].is_zero()) ++piv;
    if (piv == n) throw std::logic_error("singular transfer-matrix system");
    std::swap(mat[col], mat[piv]);
    for (long long r = 0; r < n; ++r) {
      if (r == col || mat[r][col].is_zero()) continue;
      RatFun f = mat[r][col] / mat[col][col];
      for (long long cc = col; cc <= n; ++cc)
        mat[r][cc] = mat[r][cc] - f * mat[col][cc];
    }
  }
  std::map<std::string, RatFun> sol;
  RatFun M1;
  for (long long i = 0; i < n; ++i) {
    sol[L[i].first] = mat[i][n] / mat[i][i];
    M1 = M1 + sol[L[i].first];
  }
  sys.M0 = (RatFun::one() + sol["a"] + sol["b"]) * RatFun::x();
  sys.M1 = M1;
  sys.M = (sys.M0 + sys.M1) / (RatFun::one() - RatFun::x());
  return sys;
}

RatFun gf_meet_high(const QParam& q) { return meet_high_system(q).M; }

RatFun gf_meet_irreducible(const QParam& q) {
  require_positive_rational(q, "gf_meet_irreducible");
  return q.c() <= q.d() ? gf_meet_low(q) : gf_meet_high(q);
}

// ---- truncated series evaluators ----

namespace {

void require_positive(const QParam& q, const char* who) {
  if (q.is_rational() && q.is_zero())
    throw std::invalid_argument(std::string(who) + " needs q > 0");
}

// 1/a for a series with a[0] = 1, truncated at N
std::vector<mpz_class> ts_inv(const std::vector<mpz_class>& a, long long N) {
  std::vector<mpz_class> r(N + 1);
  r[0] = 1;
  for (long long n = 1; n <= N; ++n) {
    mpz_class s = 0;
    long long kmax = std::min<long long>(n, (long long)a.size() - 1);
    for (long long k = 1; k <= kmax; ++k) s += a[k] * r[n - k];
    r[n] = -s;
  }
  return r;
}

std::vector<mpz_class> ts_mul(const std::vector<mpz_class>& a,
                              const std::vector<mpz_class>& b, long long N) {
  std::vector<mpz_class> r(N + 1);
  for (long long i = 0; i <= N && i < (long long)a.size(); ++i) {
    if (a[i] == 0) continue;
    for (long long j = 0; j + i <= N && j < (long long)b.size(); ++j)
      r[i + j] += a[i] * b[j];
  }
  return r;
}

std::vector<mpz_class> ts_prefix(const std::vector<mpz_class>& a, long long N) {
  std::vector<mpz_class> r(N + 1);
  mpz_class acc = 0;
  for (long long n = 0; n <= N; ++n) {
    if (n < (long long)a.size()) acc += a[n];
    r[n] = acc;
  }
  return r;
}

SeriesReport report(const QParam& q, const char* stat, std::vector<mpz_class> v) {
  return SeriesReport{q, stat, std::move(v)};
}

}  // namespace

SeriesReport series_words_real(const QParam& q, long long N) {
  require_positive(q, "series_words_real");
  if (N < 0) throw std::invalid_argument("series order must be >= 0");
  std::vector<mpz_class> sub(N + 1);
  for (long long i = 0;; ++i) {
    long long e = 1 + i + q.floor_div(i);
    if (e > N) break;
    sub[e] += 1;
  }
  std::vector<mpz_class> inner(N + 1);
  inner[0] = 1;
  for (long long k = 1; k <= N; ++k) inner[k] = -sub[k];
  return report(q, "words", ts_prefix(ts_inv(inner, N), N));
}

SeriesReport series_A_real(const QParam& q, long long N) {
  require_positive(q, "series_A_real");
  std::vector<mpz_class> r(N + 1);
  for (long long n = 1; n <= N; ++n) r[n] = (long)q.ceil_ratio(n);
  return report(q, "A", std::move(r));
}

SeriesReport series_D_real(const QParam& q, long long N) {
  require_positive(q, "series_D_real");
  std::vector<mpz_class> s(N + 1);
  for (long long b = 1;; ++b) {
    long long e = 1 + b + q.floor_div(b);
    if (e > N) break;
    s[e] += 1;
  }
  return report(q, "D", ts_prefix(s, N));
}

SeriesReport series_B_real(const QParam& q, long long N) {
  require_positive(q, "series_B_real");
  std::vector<mpz_class> s(N + 1);
  for (long long b = 1;; ++b) {
    long long e = 1 + b + q.floor_div(b);
    if (e > N) break;
    // elements covered through a prime block 0^a 1^b:
    // ceil((qb+1)/(q+1)) = 1 + ceil(q(b-1)/(q+1)), safe for irrational q
    s[e] += (long)(1 + q.ceil_ratio(b - 1));
  }
  return report(q, "B", ts_prefix(s, N));
}

SeriesReport series_coverings_real(const QParam& q, long long N) {
  require_positive(q, "series_coverings_real");
  auto A = series_A_real(q, N).coeffs;
  auto B = series_B_real(q, N).coeffs;
  auto D = series_D_real(q, N).coeffs;
  std::vector<mpz_class> one_minus_D(N + 1);
  one_minus_D[0] = 1;
  for (long long k = 1; k <= N; ++k) one_minus_D[k] = -D[k];
  auto u = ts_inv(one_minus_D, N);
  auto t1 = ts_prefix(ts_mul(A, u, N), N);
  auto t2 = ts_prefix(ts_prefix(ts_mul(ts_mul(B, u, N), u, N), N), N);
  std::vector<mpz_class> out(N + 1);
  for (long long k = 0; k <= N; ++k) out[k] = t1[k] + t2[k];
  return report(q, "coverings", std::move(out));
}

}  // namespace qdw
