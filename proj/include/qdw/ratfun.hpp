#pragma once

#include <string>
#include <vector>

#include "qdw/poly.hpp"

namespace qdw {

// Quotient of polynomials kept in a canonical form: numerator and denominator
// coprime, denominator a primitive integer polynomial with positive constant
// term. Every generating function here is a power series at 0, so a zero
// denominator constant term after reduction is rejected.
class RatFun {
 public:
  RatFun() = default;  // the zero function 0/1
  RatFun(Poly num, Poly den);
  explicit RatFun(Poly num);
  static RatFun x();
  static RatFun x_pow(long long k);
  static RatFun one();
  static RatFun constant(const Rat& value);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  RatFun operator-() const;

  // Canonical form makes equality a plain coefficient comparison; it agrees
  // with the cross-multiplication test by construction.
  bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFun& o) const { return !(*this == o); }

  RatFun compose_xk(long long k) const;

  // Taylor coefficients a_0..a_N via the recurrence induced by den.
  std::vector<Rat> series(long long N) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void canonicalize();
  Poly num_;
  Poly den_ = Poly{1};
};

}  // namespace qdw
