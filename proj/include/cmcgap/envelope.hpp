#pragma once

#include <vector>

#include "cmcgap/report.hpp"

namespace cmcgap {

/// One-dimensional certification of the eta-analysis: the function
/// f(n, eta) bounding sqrt((n-1)/n) phi from below, its n-free lower
/// envelopes on the two dimension ranges, concavity, and the endpoint
/// minima that force the eta / sigma bounds.

/// f(n, eta) = eta (3 - 3(n+1)/n eta - 2 sqrt(2(n-1) eta / n)).
/// Requires n >= 4 and eta >= 0 (eta < 0 throws std::domain_error).
double phi_eta_lower_bound(int n, double eta);

/// Envelope valid for 4 <= n <= 20: eta (3 - 15/4 eta - sqrt(38 eta / 5)).
double envelope_small_n(double eta);

/// Envelope valid for n > 20: eta (3 - 66/21 eta - 2 sqrt(2 eta)).
double envelope_large_n(double eta);

/// Upper bound on eta implied by the phi threshold: n/(10(n-2)) for
/// 4 <= n <= 20, 49n/(500(n-2)) for n > 20. Verifies the cap is at most
/// 1/5 (resp. 0.11); a violation throws std::logic_error.
double eta_cap(int n);

enum class EnvelopeCaseId { small_n, large_n };

struct EnvelopeCase {
  EnvelopeCaseId id = EnvelopeCaseId::small_n;
  double eta_cap = 0.0;        // 1/5 or 0.11
  double eta_threshold = 0.0;  // 0.0445 or 0.04305
  double floor = 0.0;          // 1/10 or 0.098 (= B_n/2 on the range)
  std::vector<int> n_samples;

  static EnvelopeCase small_case();
  static EnvelopeCase large_case();
};

/// Certifies one case on a closed grid of `grid_points` points
/// (>= 1000 required):
///  (a) the envelope never exceeds f(n, .) on [0, eta_cap] for each sampled n,
///  (b) f(n, .) is concave (central second difference < -1e-6, step 1e-4),
///  (c) the envelope's minimum on [eta_threshold, eta_cap] sits at an
///      endpoint and both endpoint values exceed the floor,
///  (d) the envelope exceeds the floor throughout [eta_threshold, eta_cap].
/// The report's worst_margin is the minimum margin across all sub-checks;
/// failures carry the offending eta and n in the note.
VerificationReport certify_envelope_case(const EnvelopeCase& c, int grid_points);

}  // namespace cmcgap
