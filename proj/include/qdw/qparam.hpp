#pragma once

#include <cstdint>
#include <string>

#include "qdw/errors.hpp"

namespace qdw {

// The growth parameter q. Either an exact rational c/d in lowest terms or
// one of a few symbolic irrational constants (sqrt2, pi/k, e) evaluated by
// interval refinement at increasing precision. All integer comparisons and
// floor/ceil queries against q are exact: rational q uses integer
// arithmetic, irrational q refines an enclosing interval until the answer
// is unambiguous (termination relies on q being irrational, so the compared
// quantity is never exactly equal).
class QParam {
 public:
  enum class Kind { rational, real };
  enum class RealName { sqrt2, pi_over, e };

  static constexpr unsigned kDefaultPrecisionBits = 512;

  static QParam rational(long long c, long long d);
  static QParam zero();  // the special 0/1 flag (membership ops only)
  static QParam real(RealName name, long long pi_den = 1,
                     unsigned precision_bits = kDefaultPrecisionBits);

  // Accepts "c/d", a bare integer, "sqrt2", "pi/<k>", or "e".
  // Decimal literals are rejected.
  static QParam parse(const std::string& text,
                      unsigned precision_bits = kDefaultPrecisionBits);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::rational; }
  bool is_zero() const { return is_rational() && c_ == 0; }
  long long c() const;  // numerator, rational only
  long long d() const;  // denominator, rational only
  unsigned precision_bits() const { return precision_bits_; }

  // q*a > b, resp. q*a >= b, for non-negative integers a, b.
  bool scaled_gt(long long a, long long b) const;
  bool scaled_ge(long long a, long long b) const;

  // floor(i/q) for i >= 0.
  long long floor_div(long long i) const;
  // ceil(q*n/(q+1)) for n >= 0.
  long long ceil_ratio(long long n) const;

  std::string to_string() const;

  bool operator==(const QParam& o) const;

 private:
  QParam() = default;

  Kind kind_ = Kind::rational;
  long long c_ = 1, d_ = 1;            // rational case
  RealName name_ = RealName::sqrt2;    // real case
  long long pi_den_ = 1;               // divisor k in pi/k
  unsigned precision_bits_ = kDefaultPrecisionBits;
};

}  // namespace qdw
