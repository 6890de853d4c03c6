#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace qdw {

using Rat = mpq_class;

// Dense univariate polynomial over arbitrary-precision rationals. Exact
// arithmetic throughout; the zero polynomial is the empty coefficient list
// and no trailing zero coefficient is ever stored.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<long long> ints);
  explicit Poly(std::vector<Rat> coeffs);
  static Poly monomial(long long exponent, const Rat& coeff = Rat(1));
  static Poly constant(const Rat& value);

  bool is_zero() const { return c_.empty(); }
  long long degree() const { return (long long)c_.size() - 1; }  // -1 for zero
  Rat coeff(long long k) const;
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& leading() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Rat& s) const;

  // Quotient and remainder over the rationals (den != 0).
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  // Division known to be remainder-free; throws if a remainder appears.
  static Poly div_exact(const Poly& a, const Poly& b);
  // Euclidean gcd, normalized monic at every step and in the result.
  static Poly gcd(const Poly& a, const Poly& b);

  Poly compose_xk(long long k) const;  // p(x^k)
  Poly derivative() const;
  Rat eval(const Rat& x) const;

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();
  std::vector<Rat> c_;
};

}  // namespace qdw
