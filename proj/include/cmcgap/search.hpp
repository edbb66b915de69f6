#pragma once

#include <cstdint>
#include <vector>

#include "cmcgap/report.hpp"

namespace cmcgap {

/// Which margin the adversarial search tries to drive negative. The first
/// three are unconstrained; the last three are constrained to spectra with
/// phi below phi_threshold(n) (handled by exact penalty inside the search,
/// and reported only over feasible iterates).
enum class MarginObjective {
  phi_vs_eta,         // sqrt(n(n-1))/(n-2) phi - eta
  eta_vs_sigma,       // eta - sigma^2/2
  phi_vs_eta_sigma,   // the combined second inequality
  eta_bound,          // 0.0445 - eta          (hypothesis-constrained)
  sigma_bound,        // 0.295 - sigma         (hypothesis-constrained)
  eigen_gap,          // (mu_2 - mu_1) - eigen_gap_threshold(n)  (constrained)
};

const char* objective_name(MarginObjective o);

struct SearchParams {
  long long samples = 100000;  // random multi-starts
  std::uint64_t seed = 0;
  int threads = 0;  // 0 = hardware concurrency
  double initial_step = 0.1;
  int max_iterations = 200;
  double min_step = 1e-12;
  double hypothesis_penalty = 1e4;
};

/// Multi-start projected descent over the constraint manifold. Starts from
/// `samples` isotropic-Gaussian draws (stream-seeded per sample index, so
/// results are identical for any thread count) plus the n-1 two-valued
/// spectra as deterministic seeds. Reports the minimum margin seen over all
/// accepted iterates (feasible ones only, for constrained objectives)
/// together with the witness attaining it.
VerificationReport counterexample_search(int n, MarginObjective objective,
                                         const SearchParams& params = {});

namespace detail {

/// Single descent from `start` (canonicalized in place); appends the
/// objective value of the start and of every accepted iterate to
/// `accepted_objectives`. Exposed for tests of descent monotonicity.
void descend_recording(int n, MarginObjective objective,
                       const SearchParams& params, std::vector<double> start,
                       std::vector<double>& accepted_objectives);

}  // namespace detail

}  // namespace cmcgap
