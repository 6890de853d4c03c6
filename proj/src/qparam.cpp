#include "qdw/qparam.hpp"

#include <mpfr.h>

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace qdw {
namespace {

// Minimal RAII wrapper so every refinement round gets cleanly sized limbs.
class Real {
 public:
  explicit Real(mpfr_prec_t prec) { mpfr_init2(x_, prec); }
  ~Real() { mpfr_clear(x_); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;
  mpfr_ptr get() { return x_; }

 private:
  mpfr_t x_;
};

void eval_bound(mpfr_ptr out, QParam::RealName name, long long pi_den,
                mpfr_rnd_t rnd) {
  switch (name) {
    case QParam::RealName::sqrt2:
      mpfr_sqrt_ui(out, 2, rnd);
      break;
    case QParam::RealName::pi_over:
      mpfr_const_pi(out, rnd);
      mpfr_div_si(out, out, pi_den, rnd);
      break;
    case QParam::RealName::e: {
      mpfr_set_si(out, 1, MPFR_RNDN);
      mpfr_exp(out, out, rnd);
      break;
    }
  }
}

long long floor_to_ll(mpfr_ptr x) {
  Real f(mpfr_get_prec(x));
  mpfr_floor(f.get(), x);
  return mpfr_get_sj(f.get(), MPFR_RNDN);
}

long long ceil_to_ll(mpfr_ptr x) {
  Real f(mpfr_get_prec(x));
  mpfr_ceil(f.get(), x);
  return mpfr_get_sj(f.get(), MPFR_RNDN);
}

long long parse_ll(const std::string& s) {
  size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("q: '" + s + "' is not an integer");
  }
  if (pos != s.size()) throw std::invalid_argument("q: trailing characters in '" + s + "'");
  return v;
}

}  // namespace

QParam QParam::rational(long long c, long long d) {
  if (d <= 0 || c < 0) throw std::invalid_argument("q must be a non-negative rational with positive denominator");
  QParam q;
  q.kind_ = Kind::rational;
  long long g = std::gcd(c, d);
  q.c_ = c / g;
  q.d_ = c == 0 ? 1 : d / g;
  return q;
}

QParam QParam::zero() { return rational(0, 1); }

QParam QParam::real(RealName name, long long pi_den, unsigned precision_bits) {
  if (name == RealName::pi_over && pi_den <= 0)
    throw std::invalid_argument("pi/<k> needs a positive integer k");
  QParam q;
  q.kind_ = Kind::real;
  q.name_ = name;
  q.pi_den_ = name == RealName::pi_over ? pi_den : 1;
  q.precision_bits_ = precision_bits;
  return q;
}

QParam QParam::parse(const std::string& text, unsigned precision_bits) {
  if (text.empty()) throw std::invalid_argument("empty q");
  if (text == "sqrt2") return real(RealName::sqrt2, 1, precision_bits);
  if (text == "e") return real(RealName::e, 1, precision_bits);
  if (text == "pi") return real(RealName::pi_over, 1, precision_bits);
  if (text.rfind("pi/", 0) == 0)
    return real(RealName::pi_over, parse_ll(text.substr(3)), precision_bits);
  if (text.find('.') != std::string::npos)
    throw std::invalid_argument("decimal q rejected; use an exact c/d or a symbolic name");
  auto slash = text.find('/');
  if (slash == std::string::npos) return rational(parse_ll(text), 1);
  return rational(parse_ll(text.substr(0, slash)), parse_ll(text.substr(slash + 1)));
}

long long QParam::c() const {
  if (!is_rational()) throw std::logic_error("c/d accessors are rational-only");
  return c_;
}

long long QParam::d() const {
  if (!is_rational()) throw std::logic_error("c/d accessors are rational-only");
  return d_;
}

bool QParam::scaled_gt(long long a, long long b) const {
  if (is_rational()) return (__int128)c_ * a > (__int128)d_ * b;
  if (a == 0) return b < 0;
  // q*a > b decided from an enclosure [lo, hi] of q; equality q*a = b is
  // impossible for irrational q, so doubling the precision terminates.
  for (mpfr_prec_t prec = 64; prec <= (mpfr_prec_t)precision_bits_; prec *= 2) {
    Real lo(prec), hi(prec), t(prec);
    eval_bound(lo.get(), name_, pi_den_, MPFR_RNDD);
    eval_bound(hi.get(), name_, pi_den_, MPFR_RNDU);
    mpfr_mul_si(t.get(), lo.get(), a, MPFR_RNDD);
    if (mpfr_cmp_si(t.get(), b) > 0) return true;
    mpfr_mul_si(t.get(), hi.get(), a, MPFR_RNDU);
    if (mpfr_cmp_si(t.get(), b) <= 0) return false;
  }
  throw precision_exhausted("q*a vs b undecidable at " + std::to_string(precision_bits_) + " bits");
}

bool QParam::scaled_ge(long long a, long long b) const {
  if (is_rational()) return (__int128)c_ * a >= (__int128)d_ * b;
  return scaled_gt(a, b);  // ties cannot occur for irrational q
}

long long QParam::floor_div(long long i) const {
  if (i < 0) throw std::invalid_argument("floor_div needs i >= 0");
  if (i == 0) return 0;
  if (is_rational()) {
    if (c_ == 0) throw std::domain_error("floor_div undefined for q = 0");
    return i * d_ / c_;
  }
  for (mpfr_prec_t prec = 64; prec <= (mpfr_prec_t)precision_bits_; prec *= 2) {
    Real lo(prec), hi(prec), tlo(prec), thi(prec);
    eval_bound(lo.get(), name_, pi_den_, MPFR_RNDD);
    eval_bound(hi.get(), name_, pi_den_, MPFR_RNDU);
    mpfr_si_div(tlo.get(), i, hi.get(), MPFR_RNDD);
    mpfr_si_div(thi.get(), i, lo.get(), MPFR_RNDU);
    long long a = floor_to_ll(tlo.get()), b = floor_to_ll(thi.get());
    if (a == b) return a;
  }
  throw precision_exhausted("floor(i/q) undecidable at " + std::to_string(precision_bits_) + " bits");
}

long long QParam::ceil_ratio(long long n) const {
  if (n < 0) throw std::invalid_argument("ceil_ratio needs n >= 0");
  if (n == 0) return 0;
  if (is_rational()) {
    // ceil(c*n/(c+d)) with non-negative operands
    return (c_ * n + c_ + d_ - 1) / (c_ + d_);
  }
  for (mpfr_prec_t prec = 64; prec <= (mpfr_prec_t)precision_bits_; prec *= 2) {
    Real lo(prec), hi(prec), num(prec), den(prec), zlo(prec), zhi(prec);
    eval_bound(lo.get(), name_, pi_den_, MPFR_RNDD);
    eval_bound(hi.get(), name_, pi_den_, MPFR_RNDU);
    // q*n/(q+1) is increasing in q, but plain interval arithmetic is enough
    mpfr_mul_si(num.get(), lo.get(), n, MPFR_RNDD);
    mpfr_add_si(den.get(), hi.get(), 1, MPFR_RNDU);
    mpfr_div(zlo.get(), num.get(), den.get(), MPFR_RNDD);
    mpfr_mul_si(num.get(), hi.get(), n, MPFR_RNDU);
    mpfr_add_si(den.get(), lo.get(), 1, MPFR_RNDD);
    mpfr_div(zhi.get(), num.get(), den.get(), MPFR_RNDU);
    long long a = ceil_to_ll(zlo.get()), b = ceil_to_ll(zhi.get());
    if (a == b) return a;
  }
  throw precision_exhausted("ceil(qn/(q+1)) undecidable at " + std::to_string(precision_bits_) + " bits");
}

std::string QParam::to_string() const {
  if (is_rational())
    return d_ == 1 ? std::to_string(c_) : std::to_string(c_) + "/" + std::to_string(d_);
  switch (name_) {
    case RealName::sqrt2:
      return "sqrt2";
    case RealName::e:
      return "e";
    case RealName::pi_over:
      return pi_den_ == 1 ? "pi" : "pi/" + std::to_string(pi_den_);
  }
  return "?";
}

bool QParam::operator==(const QParam& o) const {
  if (kind_ != o.kind_) return false;
  if (is_rational()) return c_ == o.c_ && d_ == o.d_;
  return name_ == o.name_ && pi_den_ == o.pi_den_;
}

}  // namespace qdw
