#include "qdw/oracle.hpp"

#include <chrono>
#include <stdexcept>

#include "qdw/errors.hpp"
#include "qdw/formulas.hpp"
#include "qdw/words.hpp"

namespace qdw {
namespace {

mpz_class integer_coeff(const Rat& r) {
  if (r.get_den() != 1)
    throw std::logic_error("series coefficient is not an integer");
  return r.get_num();
}

}  // namespace

VerifyReport verify(const QParam& q, long long n_max, long long cap) {
  if (!q.is_rational() || q.is_zero())
    throw std::invalid_argument("verify needs a positive rational q");
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");

  VerifyReport report;
  report.q = q;
  report.n_max = n_max;

  const size_t terms = (size_t)n_max + 1;
  std::vector<Rat> words_gf = gf_words(q).series(terms);
  std::vector<Rat> cov_gf = gf_coverings(q).series(terms);
  std::vector<Rat> intv_gf = gf_intervals(q).series(terms);
  std::vector<Rat> ji_gf = gf_join_irreducible().series(terms);
  std::vector<Rat> mi_gf = gf_meet_irreducible(q).series(terms);

  for (long long n = 0; n <= n_max; ++n) {
    auto t0 = std::chrono::steady_clock::now();
    LatticeModel m;
    try {
      m = build_lattice(n, q, cap);
    } catch (const cap_exceeded&) {
      report.truncated = true;
      break;
    }
    auto add = [&](const std::string& stat, long long model_value, const Rat& series_value) {
      VerifyRow row;
      row.n = n;
      row.statistic = stat;
      row.from_model = (long)model_value;
      row.from_series = integer_coeff(series_value);
      row.match = row.from_model == row.from_series;
      if (!row.match) report.pass = false;
      report.rows.push_back(row);
    };
    add("words", m.size(), words_gf[n]);
    add("coverings", count_coverings(m), cov_gf[n]);
    add("intervals", count_intervals(m), intv_gf[n]);
    add("join_irreducible", (long long)join_irreducibles(m).size(), ji_gf[n]);
    add("meet_irreducible", (long long)meet_irreducibles(m).size(), mi_gf[n]);
    auto t1 = std::chrono::steady_clock::now();
    report.wall_ms.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    report.last_n = n;
  }
  return report;
}

bool verify_covers_equivalence(const QParam& q, long long n_max, long long cap) {
  for (long long n = 0; n <= n_max; ++n) {
    LatticeModel m;
    try {
      m = build_lattice(n, q, cap);
    } catch (const cap_exceeded&) {
      return true;  // everything checked so far agreed
    }
    const long long size = m.size();
    const size_t limbs = (size_t)((size + 63) / 64);

    // Dominance bitsets over element indices: up[i] holds every j above i,
    // down[j] every i below j.
    std::vector<std::vector<uint64_t>> up(size, std::vector<uint64_t>(limbs, 0));
    std::vector<std::vector<uint64_t>> down(size, std::vector<uint64_t>(limbs, 0));
    for (long long i = 0; i < size; ++i)
      for (long long j = 0; j < size; ++j)
        if (leq(m.elements[i], m.elements[j])) {
          up[i][j / 64] |= (uint64_t)1 << (j % 64);
          down[j][i / 64] |= (uint64_t)1 << (i % 64);
        }

    for (long long i = 0; i < size; ++i) {
      std::vector<int32_t> definitional;
      for (long long j = 0; j < size; ++j) {
        if (i == j) continue;
        if (!(up[i][j / 64] & ((uint64_t)1 << (j % 64)))) continue;
        long long between = 0;
        for (size_t t = 0; t < limbs; ++t)
          between += __builtin_popcountll(up[i][t] & down[j][t]);
        if (between == 2) definitional.push_back((int32_t)j);
      }
      if (definitional != m.upper_covers[i]) return false;
    }
  }
  return true;
}

}  // namespace qdw
