#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qdw/qparam.hpp"

namespace qdw {

inline constexpr long long kDefaultElementCap = 200000;

// Explicit model of (W_n^q, <=): elements in lexicographic order and the
// cover adjacency in both directions, indices into `elements`.
struct LatticeModel {
  long long n = 0;
  QParam q = QParam::rational(1, 1);
  std::vector<std::string> elements;
  std::vector<std::vector<int32_t>> upper_covers;
  std::vector<std::vector<int32_t>> lower_covers;

  long long size() const { return (long long)elements.size(); }
  long long index_of(const std::string& w) const;  // -1 when absent
  long long top_index() const;                     // the all-ones word
  long long edge_count() const;
};

// Componentwise order; equal lengths required.
bool leq(const std::string& v, const std::string& w);

// Bitwise conjunction, the greatest lower bound; inputs must be q-decreasing.
std::string meet(const std::string& v, const std::string& w, const QParam& q);

// Least upper bound: bitwise AND folded over all common upper bounds in the
// model (the all-ones word guarantees the set is nonempty).
std::string join(const std::string& v, const std::string& w, const LatticeModel& model);

// All elements covered by w, generated by the block-replacement rule: one
// replacement of the leading ones run 1^m by 1^{m-a_i-i} 0^{a_i} 1^i, or of
// one prime block 0^a 1^b by 0^{a+1} 1^{b-1} or 0^a 1^{b-a_i-i} 0^{a_i} 1^i,
// with a_i = 1 + floor(i/q) and the i ranges bounded by ceil ratios.
std::vector<std::string> lower_covers_of(const std::string& w, const QParam& q);

// Cover test through the block-replacement characterization.
bool covers(const std::string& v, const std::string& w, const QParam& q);

LatticeModel build_lattice(long long n, const QParam& q,
                           long long cap = kDefaultElementCap);

long long count_coverings(const LatticeModel& m);
long long count_intervals(const LatticeModel& m);
std::vector<std::string> join_irreducibles(const LatticeModel& m);
// Elements with exactly one upper cover, the top excluded.
std::vector<std::string> meet_irreducibles(const LatticeModel& m);

// Hasse diagram in DOT form, edges pointing from lower to upper cover.
std::string to_dot(const LatticeModel& m);

}  // namespace qdw
