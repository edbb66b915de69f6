#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cmcgap/spectrum.hpp"

namespace cmcgap {

/// Outcome of one verification check. The pass rule is uniform:
/// passed == (worst_margin >= -tol).
struct VerificationReport {
  std::string check_id;
  bool passed = false;
  double worst_margin = 0.0;
  double tol = 0.0;
  std::optional<TraceFreeSpectrum> witness;
  long long samples = 0;
  std::uint64_t seed = 0;
  std::string note;

  static VerificationReport make(std::string id, double worst, double tol,
                                 long long samples = 0, std::uint64_t seed = 0) {
    VerificationReport r;
    r.check_id = std::move(id);
    r.worst_margin = worst;
    r.tol = tol;
    r.passed = worst >= -tol;
    r.samples = samples;
    r.seed = seed;
    return r;
  }
};

}  // namespace cmcgap
