#pragma once

#include "qdw/ratfun.hpp"

namespace qdw {

// Generating function of n -> floor((a*n + c)/b) for coprime a, b >= 1:
// (a*x^b + (1-x)*Q(x)) / ((1-x)(1-x^b)) with Q(x) = sum_{r<b} floor((ar+c)/b) x^r.
RatFun floor_seq_gf(long long a, long long b, long long c);

// Polynomial whose roots are the c-th powers of Q's roots (with multiplicity),
// scaled so the leading coefficient is leading(Q)^c. Computed exactly through
// Newton power sums; no complex arithmetic.
Poly root_power_transform(const Poly& Q, long long c);

// Re-exponentiation sum_k s_k x^k -> sum_k s_k x^{1 + floor((c+d)k/c)}.
Poly exponent_map(const Poly& S, long long c, long long d);

// For g = sum a_n x^n returns the rational function with series
// sum a_n x^{1 + floor((c+d)n/c)}, for coprime positive c, d. Realized as
// exponent_map(P * prod_{k>=1} Q(rho^k x)) / (sigma * U(x^{c+d})) where
// U = root_power_transform(den g, c) and sigma fixes the sign of the
// roots-of-unity product, all in rational arithmetic.
RatFun floor_transform(const RatFun& g, long long c, long long d);

}  // namespace qdw
