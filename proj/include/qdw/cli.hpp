#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qdw/qparam.hpp"

namespace qdw {

// Everything one invocation carries, collected from flags and environment.
struct CliConfig {
  std::string command;
  std::string statistic;
  std::string q_text = "1";
  long long n = 0;
  long long n_max = 8;
  long long terms = 30;
  std::string format = "plain";
  unsigned precision_bits = QParam::kDefaultPrecisionBits;
  double tol = 1e-9;
  std::string out_path;  // empty means standard output
  bool timing = false;
  bool plus = false;
  bool count_only = false;
};

// Executes one command line (program name excluded). Data goes to `out` or
// the --out file, diagnostics to `err`. Returns 0 on success, 1 when a
// verification or convergence check fails, 2 on usage or domain errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qdw
