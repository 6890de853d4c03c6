#include "qdw/ratfun.hpp"

#include <stdexcept>

namespace qdw {

namespace {

// Scale num/den by a rational so den has coprime integer coefficients and a
// positive constant term. den(0) != 0 is guaranteed by the caller.
void scale_to_primitive(Poly& num, Poly& den) {
  mpz_class lcm_den(1);
  for (const Rat& v : den.coeffs()) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), v.get_den().get_mpz_t());
    lcm_den = lcm_den / g * v.get_den();
  }
  mpz_class gcd_num(0);
  for (const Rat& v : den.coeffs()) {
    mpz_class scaled = v.get_num() * (lcm_den / v.get_den());
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), scaled.get_mpz_t());
  }
  Rat lambda(lcm_den, gcd_num);
  lambda.canonicalize();
  if (den.coeff(0) * lambda < 0) lambda = -lambda;
  num = num.scaled(lambda);
  den = den.scaled(lambda);
}

}  // namespace

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  canonicalize();
}

RatFun::RatFun(Poly num) : num_(std::move(num)), den_(Poly{1}) { canonicalize(); }

RatFun RatFun::x() { return RatFun(Poly{0, 1}); }

RatFun RatFun::x_pow(long long k) { return RatFun(Poly::monomial(k)); }

RatFun RatFun::one() { return RatFun(Poly{1}); }

RatFun RatFun::constant(const Rat& value) { return RatFun(Poly::constant(value)); }

void RatFun::canonicalize() {
  if (den_.is_zero()) throw std::invalid_argument("zero denominator");
  if (num_.is_zero()) {
    den_ = Poly{1};
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (g.degree() >= 1) {
    num_ = Poly::div_exact(num_, g);
    den_ = Poly::div_exact(den_, g);
  }
  if (den_.coeff(0) == 0)
    throw std::domain_error("denominator vanishes at 0; not a power series");
  scale_to_primitive(num_, den_);
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw std::invalid_argument("division by the zero function");
  return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

RatFun RatFun::operator-() const {
  RatFun r(*this);
  r.num_ = -r.num_;
  return r;
}

RatFun RatFun::compose_xk(long long k) const {
  return RatFun(num_.compose_xk(k), den_.compose_xk(k));
}

std::vector<Rat> RatFun::series(long long N) const {
  if (N < 0) throw std::invalid_argument("series order must be >= 0");
  std::vector<Rat> out;
  out.reserve(N + 1);
  const Rat d0 = den_.coeff(0);
  for (long long n = 0; n <= N; ++n) {
    Rat s = num_.coeff(n);
    long long kmax = std::min(n, den_.degree());
    for (long long k = 1; k <= kmax; ++k) s -= den_.coeff(k) * out[n - k];
    out.push_back(s / d0);
  }
  return out;
}

std::string RatFun::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  if (den_ == Poly{1}) return num_.to_string(var);
  return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

}  // namespace qdw
