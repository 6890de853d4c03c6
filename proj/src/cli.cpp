#include "qdw/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qdw/asymptotics.hpp"
#include "qdw/errors.hpp"
#include "qdw/formulas.hpp"
#include "qdw/lattice.hpp"
#include "qdw/oracle.hpp"
#include "qdw/words.hpp"

namespace qdw {
namespace {

using nlohmann::json;

unsigned env_precision_bits() {
  const char* env = std::getenv("QDW_PRECISION_BITS");
  if (env == nullptr) return QParam::kDefaultPrecisionBits;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 16 || v > (1L << 20))
    return QParam::kDefaultPrecisionBits;
  return (unsigned)v;
}

std::string fmt_double(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

json rat_strings(const std::vector<Rat>& v) {
  json arr = json::array();
  for (const Rat& r : v) arr.push_back(r.get_str());
  return arr;
}

json int_strings(const std::vector<mpz_class>& v) {
  json arr = json::array();
  for (const mpz_class& z : v) arr.push_back(z.get_str());
  return arr;
}

std::string join_rats(const std::vector<Rat>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].get_str();
  }
  return s;
}

std::string join_ints(const std::vector<mpz_class>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].get_str();
  }
  return s;
}

bool q_above_one(const QParam& q) { return q.scaled_gt(1, 1); }

RatFun gf_by_name(const std::string& stat, const QParam& q) {
  if (stat == "words") return gf_words(q);
  if (stat == "A") return gf_A(q);
  if (stat == "B") return gf_B(q);
  if (stat == "D") return gf_D(q);
  if (stat == "coverings") return gf_coverings(q);
  if (stat == "prime_intervals") return gf_prime_intervals(q);
  if (stat == "intervals") return gf_intervals(q);
  if (stat == "join_irreducible") return gf_join_irreducible();
  if (stat == "meet_irreducible") return gf_meet_irreducible(q);
  if (stat == "M0") return q_above_one(q) ? meet_high_system(q).M0 : meet_low_parts(q).M0;
  if (stat == "M1") return q_above_one(q) ? meet_high_system(q).M1 : meet_low_parts(q).M1;
  throw std::invalid_argument("unknown statistic: " + stat);
}

std::vector<mpz_class> real_series(const std::string& stat, const QParam& q, long long N) {
  if (stat == "words") return series_words_real(q, N).coeffs;
  if (stat == "A") return series_A_real(q, N).coeffs;
  if (stat == "B") return series_B_real(q, N).coeffs;
  if (stat == "D") return series_D_real(q, N).coeffs;
  if (stat == "coverings") return series_coverings_real(q, N).coeffs;
  if (stat == "join_irreducible") {
    std::vector<mpz_class> out;
    for (const Rat& r : gf_join_irreducible().series(N))
      out.push_back(r.get_num());
    return out;
  }
  throw std::invalid_argument("statistic '" + stat + "' has no series evaluator for irrational q");
}

int cmd_words(const CliConfig& cfg, std::ostream& out) {
  QParam q = QParam::parse(cfg.q_text, cfg.precision_bits);
  if (cfg.n < 0) throw std::invalid_argument("--n must be >= 0");
  if (cfg.count_only) {
    mpz_class total = count_words(cfg.n, q, cfg.plus);
    if (cfg.format == "json") {
      json j;
      j["q"] = q.to_string();
      j["n"] = cfg.n;
      j["plus"] = cfg.plus;
      j["count"] = total.get_str();
      out << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
      out << "count\n" << total.get_str() << "\n";
    } else {
      out << total.get_str() << "\n";
    }
    return 0;
  }
  std::vector<std::string> words = enumerate_words(cfg.n, q, cfg.plus);
  if (cfg.format == "json") {
    json j;
    j["q"] = q.to_string();
    j["n"] = cfg.n;
    j["plus"] = cfg.plus;
    json arr = json::array();
    for (const std::string& w : words) arr.push_back(w);
    j["words"] = arr;
    out << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << "word\n";
    for (const std::string& w : words) out << w << "\n";
  } else {
    for (const std::string& w : words) out << w << "\n";
  }
  return 0;
}

int cmd_gf(const CliConfig& cfg, std::ostream& out) {
  QParam q = QParam::parse(cfg.q_text, cfg.precision_bits);
  if (cfg.terms < 0) throw std::invalid_argument("--terms must be >= 0");
  const long long N = cfg.terms;
  if (q.is_rational()) {
    RatFun f = gf_by_name(cfg.statistic, q);
    std::vector<Rat> series = f.series(N);
    if (cfg.format == "json") {
      json j;
      j["q"] = q.to_string();
      j["statistic"] = cfg.statistic;
      j["num"] = rat_strings(f.num().coeffs());
      j["den"] = rat_strings(f.den().coeffs());
      j["series"] = rat_strings(series);
      out << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
      out << "n,coefficient\n";
      for (long long i = 0; i <= N; ++i)
        out << i << "," << series[i].get_str() << "\n";
    } else {
      out << "statistic: " << cfg.statistic << "\n";
      out << "q: " << q.to_string() << "\n";
      out << "num: " << f.num().to_string("x") << "\n";
      out << "den: " << f.den().to_string("x") << "\n";
      out << "series: " << join_rats(series) << "\n";
    }
    return 0;
  }
  std::vector<mpz_class> coeffs = real_series(cfg.statistic, q, N);
  if (cfg.format == "json") {
    json j;
    j["q"] = q.to_string();
    j["statistic"] = cfg.statistic;
    j["series"] = int_strings(coeffs);
    out << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << "n,coefficient\n";
    for (long long i = 0; i <= N; ++i)
      out << i << "," << coeffs[i].get_str() << "\n";
  } else {
    out << "statistic: " << cfg.statistic << "\n";
    out << "q: " << q.to_string() << "\n";
    out << "series: " << join_ints(coeffs) << "\n";
  }
  return 0;
}

int cmd_lattice(const CliConfig& cfg, std::ostream& out) {
  QParam q = QParam::parse(cfg.q_text, cfg.precision_bits);
  LatticeModel m = build_lattice(cfg.n, q);
  const long long elements = m.size();
  const long long coverings = count_coverings(m);
  const long long intervals = count_intervals(m);
  const long long ji = (long long)join_irreducibles(m).size();
  const long long mi = (long long)meet_irreducibles(m).size();
  if (cfg.format == "json") {
    json j;
    j["q"] = q.to_string();
    j["n"] = cfg.n;
    j["elements"] = elements;
    j["coverings"] = coverings;
    j["intervals"] = intervals;
    j["join_irreducible"] = ji;
    j["meet_irreducible"] = mi;
    out << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << "q,n,elements,coverings,intervals,join_irreducible,meet_irreducible\n";
    out << q.to_string() << "," << cfg.n << "," << elements << "," << coverings
        << "," << intervals << "," << ji << "," << mi << "\n";
  } else {
    out << "q: " << q.to_string() << "\n";
    out << "n: " << cfg.n << "\n";
    out << "elements: " << elements << "\n";
    out << "coverings: " << coverings << "\n";
    out << "intervals: " << intervals << "\n";
    out << "join_irreducible: " << ji << "\n";
    out << "meet_irreducible: " << mi << "\n";
  }
  return 0;
}

int cmd_hasse(const CliConfig& cfg, std::ostream& out) {
  QParam q = QParam::parse(cfg.q_text, cfg.precision_bits);
  out << to_dot(build_lattice(cfg.n, q));
  return 0;
}

int cmd_check(const CliConfig& cfg, std::ostream& out) {
  QParam q = QParam::parse(cfg.q_text, cfg.precision_bits);
  VerifyReport rep = verify(q, cfg.n_max);
  if (cfg.format == "json") {
    json rows = json::array();
    for (const VerifyRow& r : rep.rows) {
      json row;
      row["n"] = r.n;
      row["statistic"] = r.statistic;
      row["model"] = r.from_model.get_str();
      row["series"] = r.from_series.get_str();
      row["match"] = r.match;
      rows.push_back(row);
    }
    json j;
    j["q"] = q.to_string();
    j["n_max"] = rep.n_max;
    j["pass"] = rep.pass;
    j["truncated"] = rep.truncated;
    j["last_n"] = rep.last_n;
    j["rows"] = rows;
    out << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << "n,statistic,model,series,match\n";
    for (const VerifyRow& r : rep.rows)
      out << r.n << "," << r.statistic << "," << r.from_model.get_str() << ","
          << r.from_series.get_str() << "," << (r.match ? 1 : 0) << "\n";
  } else {
    out << "q: " << q.to_string() << "\n";
    out << "n_max: " << rep.n_max << "\n";
    for (size_t i = 0; i < rep.rows.size();) {
      const long long n = rep.rows[i].n;
      out << "n=" << n;
      bool ok = true;
      while (i < rep.rows.size() && rep.rows[i].n == n) {
        const VerifyRow& r = rep.rows[i];
        out << " " << r.statistic << "=" << r.from_model.get_str() << "/"
            << r.from_series.get_str();
        ok = ok && r.match;
        ++i;
      }
      out << (ok ? " ok" : " MISMATCH") << "\n";
    }
    if (rep.truncated)
      out << "truncated: element cap reached after n=" << rep.last_n << "\n";
    out << (rep.pass ? "pass" : "FAIL") << "\n";
  }
  return rep.pass ? 0 : 1;
}

int cmd_asympt(const CliConfig& cfg, std::ostream& out) {
  QParam q = QParam::parse(cfg.q_text, cfg.precision_bits);
  GrowthEstimate est = growth_check(cfg.statistic, q, cfg.n, cfg.n_max);
  const double phi_printed = phi(q, Rat(cfg.tol)).get_d();
  if (cfg.format == "json") {
    json j;
    j["q"] = q.to_string();
    j["statistic"] = est.statistic;
    j["phi"] = phi_printed;
    j["n_lo"] = est.n_lo;
    j["n_hi"] = est.n_hi;
    j["ratios"] = est.ratios;
    j["spread"] = est.spread;
    j["threshold"] = est.threshold;
    j["converged"] = est.converged;
    out << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << "n,ratio\n";
    for (size_t i = 0; i < est.ratios.size(); ++i)
      out << (est.n_lo + (long long)i) << "," << fmt_double(est.ratios[i]) << "\n";
  } else {
    out << "q: " << q.to_string() << "\n";
    out << "statistic: " << est.statistic << "\n";
    out << "phi: " << fmt_double(phi_printed) << "\n";
    out << "window: " << est.n_lo << ".." << est.n_hi << "\n";
    out << "spread: " << fmt_double(est.spread) << "\n";
    out << "threshold: " << fmt_double(est.threshold) << "\n";
    out << "converged: " << (est.converged ? "yes" : "no") << "\n";
  }
  return est.converged ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  cfg.precision_bits = env_precision_bits();
  long long window_lo = 30, window_hi = 60;

  CLI::App app{"lattice of q-decreasing binary words: enumeration, closed forms, verification"};
  app.name("qdw");
  app.require_subcommand(1);

  auto add_q = [&](CLI::App* cmd) {
    cmd->add_option("--q", cfg.q_text, "parameter: c/d, an integer, sqrt2, pi/<k>, or e")
        ->capture_default_str();
    cmd->add_option("--precision-bits", cfg.precision_bits,
                    "interval precision cap for irrational q")
        ->check(CLI::Range(16u, 1048576u))
        ->capture_default_str();
  };
  auto add_output = [&](CLI::App* cmd, const std::vector<std::string>& formats) {
    cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
    cmd->add_option("--out", cfg.out_path, "write the payload to this file");
    cmd->add_flag("--timing", cfg.timing, "report wall time on standard error");
  };

  CLI::App* words_cmd = app.add_subcommand("words", "list or count the words of one length");
  add_q(words_cmd);
  words_cmd->add_option("--n", cfg.n, "word length")->required()->check(CLI::NonNegativeNumber);
  words_cmd->add_flag("--plus", cfg.plus, "weak variant of the run condition");
  words_cmd->add_flag("--count", cfg.count_only, "print the count instead of the list");
  add_output(words_cmd, {"plain", "json", "csv"});

  CLI::App* gf_cmd = app.add_subcommand("gf", "closed form and series of one statistic");
  add_q(gf_cmd);
  gf_cmd->add_option("statistic", cfg.statistic, "which counting sequence")
      ->required()
      ->check(CLI::IsMember({"words", "A", "B", "D", "coverings", "prime_intervals",
                             "intervals", "join_irreducible", "meet_irreducible", "M0", "M1"}));
  gf_cmd->add_option("--terms", cfg.terms, "highest series index")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  add_output(gf_cmd, {"plain", "json", "csv"});

  CLI::App* lattice_cmd = app.add_subcommand("lattice", "statistic counts for one length");
  add_q(lattice_cmd);
  lattice_cmd->add_option("--n", cfg.n, "word length")->required()->check(CLI::NonNegativeNumber);
  add_output(lattice_cmd, {"plain", "json", "csv"});

  CLI::App* hasse_cmd = app.add_subcommand("hasse", "cover diagram in DOT form");
  add_q(hasse_cmd);
  hasse_cmd->add_option("--n", cfg.n, "word length")->required()->check(CLI::NonNegativeNumber);
  add_output(hasse_cmd, {"dot", "plain"});

  CLI::App* check_cmd = app.add_subcommand("check", "recompute every statistic from the explicit poset");
  add_q(check_cmd);
  check_cmd->add_option("--n-max", cfg.n_max, "verify lengths 0..n_max")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  add_output(check_cmd, {"plain", "json", "csv"});

  CLI::App* asympt_cmd = app.add_subcommand("asympt", "growth constant and ratio flattening");
  add_q(asympt_cmd);
  asympt_cmd->add_option("statistic", cfg.statistic, "words or coverings")
      ->check(CLI::IsMember({"words", "coverings"}));
  asympt_cmd->add_option("--n", window_lo, "window start")->capture_default_str();
  asympt_cmd->add_option("--n-max", window_hi, "window end")->capture_default_str();
  asympt_cmd->add_option("--tol", cfg.tol, "tolerance for the printed growth constant")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_output(asympt_cmd, {"plain", "json", "csv"});

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  cfg.command = sub->get_name();
  if (cfg.command == "asympt") {
    cfg.n = window_lo;
    cfg.n_max = window_hi;
    if (cfg.statistic.empty()) cfg.statistic = "words";
  }

  std::ostringstream payload;
  int code = 2;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (cfg.command == "words")
      code = cmd_words(cfg, payload);
    else if (cfg.command == "gf")
      code = cmd_gf(cfg, payload);
    else if (cfg.command == "lattice")
      code = cmd_lattice(cfg, payload);
    else if (cfg.command == "hasse")
      code = cmd_hasse(cfg, payload);
    else if (cfg.command == "check")
      code = cmd_check(cfg, payload);
    else if (cfg.command == "asympt")
      code = cmd_asympt(cfg, payload);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  const auto t1 = std::chrono::steady_clock::now();

  if (!cfg.out_path.empty()) {
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << cfg.out_path << "\n";
      return 2;
    }
    file << payload.str();
  } else {
    out << payload.str();
  }
  if (cfg.timing) {
    const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    err << "timing_ms=" << fmt_double(ms) << "\n";
  }
  return code;
}

}  // namespace qdw
