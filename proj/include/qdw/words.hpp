#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "qdw/qparam.hpp"

namespace qdw {

// One maximal 0^zeros 1^ones factor inside a word (zeros, ones >= 1).
struct Block {
  long long zeros = 0;
  long long ones = 0;
  bool operator==(const Block& o) const { return zeros == o.zeros && ones == o.ones; }
};

// Canonical run decomposition 1^m 0^{a1}1^{b1} ... 0^{ak}1^{bk} 0^ell.
struct Decomposition {
  long long leading_ones = 0;
  std::vector<Block> blocks;
  long long trailing_zeros = 0;

  std::string reassemble() const;
  bool operator==(const Decomposition& o) const {
    return leading_ones == o.leading_ones && blocks == o.blocks &&
           trailing_zeros == o.trailing_zeros;
  }
};

Decomposition decompose(const std::string& word);

// Every maximal factor 0^a 1^b (a,b >= 1) must satisfy q*a > b; trailing
// zeros and the leading ones run are unconstrained.
bool is_q_decreasing(const std::string& word, const QParam& q);

// Weak variant: q*a >= b. For irrational q the two predicates coincide.
bool is_q_plus_decreasing(const std::string& word, const QParam& q);

// All members of length n in lexicographic order (0 < 1); output-sensitive.
std::vector<std::string> enumerate_words(long long n, const QParam& q, bool plus = false);

// |W_n^q| by dynamic programming over run states; never materializes words.
mpz_class count_words(long long n, const QParam& q, bool plus = false);

// The unique (a, b) with a+b = n and 1+floor(b/q) <= a <= 1+floor((b+1)/q).
// Requires rational q and n >= 2 + floor(1/q).
std::pair<long long, long long> unique_admissible_factor(long long n, const QParam& q);

}  // namespace qdw
