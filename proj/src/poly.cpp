#include "qdw/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace qdw {

namespace {
const Rat kZero(0);
}

Poly::Poly(std::initializer_list<long long> ints) {
  c_.reserve(ints.size());
  for (long long v : ints) c_.emplace_back((long)v);
  normalize();
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
  for (Rat& v : c_) v.canonicalize();
  normalize();
}

Poly Poly::monomial(long long exponent, const Rat& coeff) {
  if (exponent < 0) throw std::invalid_argument("monomial exponent must be >= 0");
  if (coeff == 0) return Poly();
  Poly p;
  p.c_.assign(exponent + 1, kZero);
  p.c_.back() = coeff;
  return p;
}

Poly Poly::constant(const Rat& value) { return monomial(0, value); }

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat Poly::coeff(long long k) const {
  if (k < 0 || k >= (long long)c_.size()) return kZero;
  return c_[k];
}

const Rat& Poly::leading() const {
  if (c_.empty()) throw std::logic_error("zero polynomial has no leading coefficient");
  return c_.back();
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (Rat& v : r.c_) v = -v;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), kZero);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), kZero);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  Poly r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, kZero);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  r.normalize();
  return r;
}

Poly Poly::scaled(const Rat& s) const {
  if (s == 0) return Poly();
  Poly r(*this);
  for (Rat& v : r.c_) v *= s;
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  Poly rem(a), quot;
  if (a.degree() >= b.degree())
    quot.c_.assign(a.degree() - b.degree() + 1, kZero);
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    long long k = rem.degree() - b.degree();
    Rat f = rem.leading() / b.leading();
    quot.c_[k] = f;
    for (size_t j = 0; j < b.c_.size(); ++j) rem.c_[k + j] -= f * b.c_[j];
    rem.normalize();
  }
  quot.normalize();
  return {quot, rem};
}

Poly Poly::div_exact(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("polynomial division expected to be exact");
  return q;
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  Poly u(a), v(b);
  while (!v.is_zero()) {
    Poly r = divmod(u, v).second;
    u = std::move(v);
    v = std::move(r);
    if (!u.is_zero()) u = u.scaled(1 / u.leading());  // monic to tame growth
  }
  if (!u.is_zero()) u = u.scaled(1 / u.leading());
  return u;
}

Poly Poly::compose_xk(long long k) const {
  if (k <= 0) throw std::invalid_argument("compose_xk needs k >= 1");
  if (is_zero()) return Poly();
  Poly r;
  r.c_.assign(k * degree() + 1, kZero);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i * k] = c_[i];
  r.normalize();
  return r;
}

Poly Poly::derivative() const {
  if (degree() < 1) return Poly();
  Poly r;
  r.c_.reserve(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r.c_.push_back(Rat((long)i) * c_[i]);
  r.normalize();
  return r;
}

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rat v = c_[i];
    if (first) {
      if (v < 0) os << "-";
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    Rat av = abs(v);
    if (i == 0) {
      os << av.get_str();
    } else {
      if (av != 1) os << av.get_str() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

}  // namespace qdw
