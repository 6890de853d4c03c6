#include "qdw/lattice.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "qdw/errors.hpp"
#include "qdw/words.hpp"

namespace qdw {
namespace {

void require_positive(const QParam& q) {
  if (q.is_zero())
    throw std::domain_error("order-theoretic operations need q > 0");
}

std::string segment(long long ones_left, long long zeros, long long ones_right) {
  std::string s(ones_left, '1');
  s.append(zeros, '0');
  s.append(ones_right, '1');
  return s;
}

}  // namespace

long long LatticeModel::index_of(const std::string& w) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), w);
  if (it == elements.end() || *it != w) return -1;
  return it - elements.begin();
}

long long LatticeModel::top_index() const {
  return index_of(std::string(n, '1'));
}

long long LatticeModel::edge_count() const {
  long long total = 0;
  for (const auto& ups : upper_covers) total += (long long)ups.size();
  return total;
}

bool leq(const std::string& v, const std::string& w) {
  if (v.size() != w.size())
    throw std::invalid_argument("componentwise order compares equal lengths only");
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] > w[i]) return false;
  return true;
}

std::string meet(const std::string& v, const std::string& w, const QParam& q) {
  require_positive(q);
  if (v.size() != w.size())
    throw std::invalid_argument("meet needs words of equal length");
  if (!is_q_decreasing(v, q) || !is_q_decreasing(w, q))
    throw std::invalid_argument("meet operands must satisfy the run condition");
  std::string out(v.size(), '0');
  for (size_t i = 0; i < v.size(); ++i)
    out[i] = (v[i] == '1' && w[i] == '1') ? '1' : '0';
  return out;
}

std::string join(const std::string& v, const std::string& w, const LatticeModel& model) {
  if (model.index_of(v) < 0 || model.index_of(w) < 0)
    throw std::invalid_argument("join operands must belong to the model");
  std::string acc(model.n, '1');
  for (const std::string& u : model.elements) {
    if (!leq(v, u) || !leq(w, u)) continue;
    for (size_t i = 0; i < acc.size(); ++i)
      if (u[i] == '0') acc[i] = '0';
  }
  return acc;
}

std::vector<std::string> lower_covers_of(const std::string& w, const QParam& q) {
  require_positive(q);
  if (!is_q_decreasing(w, q))
    throw std::invalid_argument("cover generation needs a valid word");
  Decomposition d = decompose(w);
  const std::string tail(d.trailing_zeros, '0');
  std::vector<std::string> out;

  // Lower the leading ones run 1^m. The bound ceil(q m / (q+1)) - 1 is the
  // largest i with 1 + floor(i/q) + i <= m, so every candidate fits.
  if (d.leading_ones >= 1) {
    const long long m = d.leading_ones;
    const long long imax = q.ceil_ratio(m) - 1;
    for (long long i = 0; i <= imax; ++i) {
      const long long alpha = 1 + q.floor_div(i);
      std::string cand = segment(m - alpha - i, alpha, i);
      for (const Block& f : d.blocks) cand += segment(0, f.zeros, f.ones);
      cand += tail;
      out.push_back(std::move(cand));
    }
  }

  // Lower one interior block 0^a 1^b, the rest untouched.
  for (size_t j = 0; j < d.blocks.size(); ++j) {
    auto emit = [&](const std::string& repl) {
      std::string cand(d.leading_ones, '1');
      for (size_t t = 0; t < d.blocks.size(); ++t) {
        if (t == j)
          cand += repl;
        else
          cand += segment(0, d.blocks[t].zeros, d.blocks[t].ones);
      }
      cand += tail;
      out.push_back(std::move(cand));
    };
    const long long a = d.blocks[j].zeros;
    const long long b = d.blocks[j].ones;
    emit(segment(0, a + 1, b - 1));
    // Here the bound keeps b - alpha - i >= 1, so the block count is stable.
    const long long imax = q.ceil_ratio(b - 1) - 1;
    for (long long i = 0; i <= imax; ++i) {
      const long long alpha = 1 + q.floor_div(i);
      std::string repl(a, '0');
      repl += segment(b - alpha - i, alpha, i);
      emit(repl);
    }
  }

  std::sort(out.begin(), out.end());
  return out;
}

bool covers(const std::string& v, const std::string& w, const QParam& q) {
  if (v.size() != w.size())
    throw std::invalid_argument("covers needs words of equal length");
  if (!is_q_decreasing(v, q))
    throw std::invalid_argument("covers operands must satisfy the run condition");
  std::vector<std::string> lows = lower_covers_of(w, q);
  return std::binary_search(lows.begin(), lows.end(), v);
}

LatticeModel build_lattice(long long n, const QParam& q, long long cap) {
  require_positive(q);
  if (n < 0) throw std::invalid_argument("word length must be >= 0");
  mpz_class total = count_words(n, q);
  if (total > (long)cap) {
    std::ostringstream msg;
    msg << "lattice for n=" << n << ", q=" << q.to_string() << " has " << total
        << " elements, above the cap of " << cap;
    throw cap_exceeded(msg.str());
  }
  LatticeModel m;
  m.n = n;
  m.q = q;
  m.elements = enumerate_words(n, q);
  const long long size = (long long)m.elements.size();
  m.upper_covers.assign(size, {});
  m.lower_covers.assign(size, {});
  for (long long iw = 0; iw < size; ++iw) {
    for (const std::string& v : lower_covers_of(m.elements[iw], q)) {
      long long iv = m.index_of(v);
      if (iv < 0)
        throw std::logic_error("generated cover is not a valid word: " + v);
      m.lower_covers[iw].push_back((int32_t)iv);
      m.upper_covers[iv].push_back((int32_t)iw);
    }
  }
  for (auto& ups : m.upper_covers) std::sort(ups.begin(), ups.end());
  return m;
}

long long count_coverings(const LatticeModel& m) { return m.edge_count(); }

long long count_intervals(const LatticeModel& m) {
  const long long size = m.size();
  const size_t limbs = (size_t)((m.n + 63) / 64);
  // Pack each word into bits so v <= w becomes a couple of limb operations.
  std::vector<std::vector<uint64_t>> mask(size, std::vector<uint64_t>(std::max(limbs, (size_t)1), 0));
  for (long long i = 0; i < size; ++i)
    for (long long p = 0; p < m.n; ++p)
      if (m.elements[i][p] == '1') mask[i][p / 64] |= (uint64_t)1 << (p % 64);
  long long total = 0;
  for (long long i = 0; i < size; ++i) {
    for (long long j = 0; j < size; ++j) {
      bool below = true;
      for (size_t t = 0; t < limbs; ++t)
        if (mask[i][t] & ~mask[j][t]) { below = false; break; }
      if (below) ++total;
    }
  }
  return total;
}

std::vector<std::string> join_irreducibles(const LatticeModel& m) {
  std::vector<std::string> out;
  for (long long i = 0; i < m.size(); ++i)
    if (m.lower_covers[i].size() == 1) out.push_back(m.elements[i]);
  return out;
}

std::vector<std::string> meet_irreducibles(const LatticeModel& m) {
  const long long top = m.top_index();
  std::vector<std::string> out;
  for (long long i = 0; i < m.size(); ++i)
    if (i != top && m.upper_covers[i].size() == 1) out.push_back(m.elements[i]);
  return out;
}

std::string to_dot(const LatticeModel& m) {
  auto label = [&](long long i) -> std::string {
    return m.elements[i].empty() ? "ε" : m.elements[i];
  };
  std::ostringstream out;
  out << "digraph hasse {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box, fontname=\"monospace\"];\n";
  for (long long i = 0; i < m.size(); ++i)
    out << "  \"" << label(i) << "\";\n";
  for (long long i = 0; i < m.size(); ++i)
    for (int32_t up : m.upper_covers[i])
      out << "  \"" << label(i) << "\" -> \"" << label(up) << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace qdw
