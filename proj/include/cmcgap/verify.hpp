#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cmcgap/report.hpp"

namespace cmcgap {

/// Options shared by the verification suites. An empty search_n keeps each
/// suite's default dimension set.
struct SuiteOptions {
  std::vector<int> search_n;
  long long samples = 10000;
  std::uint64_t seed = 0;
  int threads = 0;
  int grid = 1000;
  double descent_step = 0.1;
  int descent_iterations = 200;
};

/// Known suite names: lemma1, lemma2, lemma3, envelope, band, identities,
/// all. (These tokens are the CLI contract; see README.)
std::vector<std::string> suite_names();

/// Runs one suite and returns its reports in a fixed order. Unknown names
/// throw std::invalid_argument.
std::vector<VerificationReport> run_suite(const std::string& suite,
                                          const SuiteOptions& opts);

}  // namespace cmcgap
