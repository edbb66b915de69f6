#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cmcgap/gap.hpp"

namespace cmcgap {

/// Configuration of one CLI run. Range strings use the syntax
/// "a" | "a..b" | "a..b:step"; integer ranges default to step 1, real ranges
/// require an explicit step. Output is deterministic for identical configs.
struct RunConfig {
  std::string command;  // constants | verify | classify | scan
  std::string n_spec = "4";
  bool has_n = false;  // set when --n was given (verify keeps suite defaults otherwise)
  std::string h_spec = "1";
  double c = 1.0;
  double big_s = 0.0;
  bool has_s = false;
  std::string suite = "all";
  long long samples = 10000;
  std::uint64_t seed = 0;
  int grid = 1000;
  int threads = 0;
  double descent_step = 0.1;
  int descent_iterations = 200;
  double classify_tol = kClassifyRelTol;
  std::string format = "text";  // text | json | csv
  std::string output_path;      // empty = stdout
};

/// "a" | "a..b" | "a..b:step"; empty result when a > b. Malformed input
/// throws std::invalid_argument.
std::vector<int> parse_int_range(const std::string& spec);

/// "x" | "a..b:step" (step mandatory for multi-value ranges).
std::vector<double> parse_real_range(const std::string& spec);

/// Numbers in reports are emitted with 12 significant digits.
std::string format_g12(double v);

/// Executes the command, writing the report to `out`. Returns 0 when all
/// checks pass, 1 when a verification failed. Usage and precondition
/// errors throw std::invalid_argument / std::domain_error (mapped to exit
/// code 2 by the CLI front end).
int run_command(const RunConfig& cfg, std::ostream& out);

}  // namespace cmcgap
