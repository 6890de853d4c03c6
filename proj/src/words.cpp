#include "qdw/words.hpp"

#include <map>
#include <stdexcept>

namespace qdw {
namespace {

void check_bits(const std::string& word) {
  for (char ch : word)
    if (ch != '0' && ch != '1')
      throw std::invalid_argument("binary word may only contain 0 and 1");
}

bool factor_ok(const QParam& q, long long a, long long b, bool plus) {
  return plus ? q.scaled_ge(a, b) : q.scaled_gt(a, b);
}

}  // namespace

std::string Decomposition::reassemble() const {
  std::string w(leading_ones, '1');
  for (const Block& f : blocks) {
    w.append(f.zeros, '0');
    w.append(f.ones, '1');
  }
  w.append(trailing_zeros, '0');
  return w;
}

Decomposition decompose(const std::string& word) {
  check_bits(word);
  Decomposition d;
  size_t i = 0;
  while (i < word.size() && word[i] == '1') ++i;
  d.leading_ones = (long long)i;
  while (i < word.size()) {
    size_t z = i;
    while (i < word.size() && word[i] == '0') ++i;
    if (i == word.size()) {
      d.trailing_zeros = (long long)(i - z);
      break;
    }
    size_t o = i;
    while (i < word.size() && word[i] == '1') ++i;
    d.blocks.push_back({(long long)(o - z), (long long)(i - o)});
  }
  return d;
}

bool is_q_decreasing(const std::string& word, const QParam& q) {
  Decomposition d = decompose(word);
  for (const Block& f : d.blocks)
    if (!q.scaled_gt(f.zeros, f.ones)) return false;
  return true;
}

bool is_q_plus_decreasing(const std::string& word, const QParam& q) {
  if (!q.is_rational()) return is_q_decreasing(word, q);
  Decomposition d = decompose(word);
  for (const Block& f : d.blocks)
    if (!q.scaled_ge(f.zeros, f.ones)) return false;
  return true;
}

namespace {

// Shared scan state for enumeration and counting. A word prefix is tracked by
// the run it currently sits in; a ones-run state (a, b) is only kept while the
// factor can still end validly, so every reachable state is a valid word end.
enum class Run { leading, zeros, ones };

void enumerate_rec(std::string& buf, long long n, const QParam& q, bool plus,
                   Run run, long long a, long long b,
                   std::vector<std::string>& out) {
  if ((long long)buf.size() == n) {
    out.push_back(buf);
    return;
  }
  // '0' first keeps lexicographic order
  if (run == Run::leading || run == Run::zeros || factor_ok(q, a, b, plus)) {
    buf.push_back('0');
    enumerate_rec(buf, n, q, plus, Run::zeros, run == Run::zeros ? a + 1 : 1, 0, out);
    buf.pop_back();
  }
  bool one_ok;
  long long na = a, nb = b;
  if (run == Run::leading) {
    one_ok = true;
  } else {
    nb = (run == Run::zeros) ? 1 : b + 1;
    one_ok = factor_ok(q, a, nb, plus);
  }
  if (one_ok) {
    buf.push_back('1');
    enumerate_rec(buf, n, q, plus, run == Run::leading ? Run::leading : Run::ones, na, nb, out);
    buf.pop_back();
  }
}

}  // namespace

std::vector<std::string> enumerate_words(long long n, const QParam& q, bool plus) {
  if (n < 0) throw std::invalid_argument("word length must be >= 0");
  std::vector<std::string> out;
  std::string buf;
  buf.reserve(n);
  enumerate_rec(buf, n, q, plus, Run::leading, 0, 0, out);
  return out;
}

mpz_class count_words(long long n, const QParam& q, bool plus) {
  if (n < 0) throw std::invalid_argument("word length must be >= 0");
  mpz_class leading = 1;                         // prefix is 1^pos
  std::map<long long, mpz_class> zeros;          // key: current zero-run length
  std::map<std::pair<long long, long long>, mpz_class> ones;  // key: (a, b), kept live
  for (long long pos = 0; pos < n; ++pos) {
    std::map<long long, mpz_class> nzeros;
    std::map<std::pair<long long, long long>, mpz_class> nones;
    // '1' from the leading run stays leading; '0' opens a zero run
    nzeros[1] += leading;
    for (const auto& [a, cnt] : zeros) {
      nzeros[a + 1] += cnt;
      if (factor_ok(q, a, 1, plus)) nones[{a, 1}] += cnt;
    }
    for (const auto& [key, cnt] : ones) {
      auto [a, b] = key;
      nzeros[1] += cnt;  // run was live, so the factor 0^a 1^b ends validly
      if (factor_ok(q, a, b + 1, plus)) nones[{a, b + 1}] += cnt;
    }
    zeros = std::move(nzeros);
    ones = std::move(nones);
  }
  mpz_class total = leading;
  for (const auto& [a, cnt] : zeros) total += cnt;
  for (const auto& [key, cnt] : ones) total += cnt;
  return total;
}

std::pair<long long, long long> unique_admissible_factor(long long n, const QParam& q) {
  if (!q.is_rational() || q.is_zero())
    throw std::invalid_argument("unique_admissible_factor needs a positive rational q");
  if (n < 2 + q.floor_div(1))
    throw std::invalid_argument("no admissible factor below length 2 + floor(1/q)");
  long long b = q.ceil_ratio(n) - 1;
  return {n - b, b};
}

}  // namespace qdw
