#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qdw/lattice.hpp"
#include "qdw/qparam.hpp"

namespace qdw {

// One statistic at one length: the value recomputed from the explicit poset
// next to the value read off the closed-form series.
struct VerifyRow {
  long long n = 0;
  std::string statistic;
  mpz_class from_model;
  mpz_class from_series;
  bool match = false;
};

struct VerifyReport {
  QParam q = QParam::rational(1, 1);
  long long n_max = 0;
  std::vector<VerifyRow> rows;
  bool pass = true;
  // Set when the element cap stopped the scan before n_max.
  bool truncated = false;
  long long last_n = -1;
  std::vector<double> wall_ms;  // one entry per completed length
};

// Builds the poset for n = 0..n_max and compares element, covering,
// interval, and irreducible counts against the generating functions.
// Rational q only, since the closed forms are.
VerifyReport verify(const QParam& q, long long n_max,
                    long long cap = kDefaultElementCap);

// Confirms that cover generation by block replacement produces exactly the
// covers of the raw order definition (no intermediate element), for every
// length up to n_max. Works for irrational q too.
bool verify_covers_equivalence(const QParam& q, long long n_max,
                               long long cap = kDefaultElementCap);

}  // namespace qdw
