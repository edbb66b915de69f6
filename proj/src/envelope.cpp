#include "cmcgap/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace cmcgap {

namespace {

void require_eta(double eta, const char* who) {
  if (eta < 0.0) {
    std::ostringstream os;
    os << who << ": eta = " << eta << " < 0";
    throw std::domain_error(os.str());
  }
}

}  // namespace

double phi_eta_lower_bound(int n, double eta) {
  if (n < 4)
    throw std::invalid_argument("phi_eta_lower_bound: n >= 4 required");
  require_eta(eta, "phi_eta_lower_bound");
  const double nd = n;
  return eta * (3.0 - 3.0 * (nd + 1.0) / nd * eta -
                2.0 * std::sqrt(2.0 * (nd - 1.0) * eta / nd));
}

double envelope_small_n(double eta) {
  require_eta(eta, "envelope_small_n");
  return eta * (3.0 - 15.0 / 4.0 * eta - std::sqrt(38.0 / 5.0 * eta));
}

double envelope_large_n(double eta) {
  require_eta(eta, "envelope_large_n");
  return eta * (3.0 - 66.0 / 21.0 * eta - 2.0 * std::sqrt(2.0 * eta));
}

double eta_cap(int n) {
  if (n < 4) throw std::invalid_argument("eta_cap: n >= 4 required");
  const double nd = n;
  const double cap =
      n <= 20 ? nd / (10.0 * (nd - 2.0)) : 49.0 * nd / (500.0 * (nd - 2.0));
  const double bound = n <= 20 ? 1.0 / 5.0 : 0.11;
  if (cap > bound) {
    std::ostringstream os;
    os << "eta_cap: cap " << cap << " exceeds " << bound << " at n = " << n;
    throw std::logic_error(os.str());
  }
  return cap;
}

EnvelopeCase EnvelopeCase::small_case() {
  EnvelopeCase c;
  c.id = EnvelopeCaseId::small_n;
  c.eta_cap = 1.0 / 5.0;
  c.eta_threshold = 0.0445;
  c.floor = 1.0 / 10.0;
  for (int n = 4; n <= 20; ++n) c.n_samples.push_back(n);
  return c;
}

EnvelopeCase EnvelopeCase::large_case() {
  EnvelopeCase c;
  c.id = EnvelopeCaseId::large_n;
  c.eta_cap = 0.11;
  c.eta_threshold = 0.04305;
  c.floor = 0.098;
  // The n-dependent coefficient 3(n+1)/n approaches its supremum only as
  // n grows, so the samples include a very large proxy.
  c.n_samples = {21, 30, 50, 100, 1000000};
  return c;
}

VerificationReport certify_envelope_case(const EnvelopeCase& c,
                                         int grid_points) {
  if (grid_points < 1000)
    throw std::invalid_argument("certify_envelope_case: grid_points >= 1000");
  if (c.eta_threshold >= c.eta_cap || c.floor <= 0.0 || c.n_samples.empty())
    throw std::invalid_argument("certify_envelope_case: malformed case");

  double (*env)(double) =
      c.id == EnvelopeCaseId::small_n ? envelope_small_n : envelope_large_n;

  double worst = std::numeric_limits<double>::infinity();
  std::ostringstream note;
  bool failed = false;
  const auto record = [&](double margin, const char* what, double eta, int n) {
    worst = std::min(worst, margin);
    if (margin < 0.0 && !failed) {
      failed = true;
      note << what << " fails at eta = " << eta << ", n = " << n;
    }
  };

  const auto grid_at = [&](double lo, double hi, int i) {
    if (i == 0) return lo;
    if (i == grid_points - 1) return hi;  // endpoints of the closed grid exact
    return lo + (hi - lo) * static_cast<double>(i) /
                    static_cast<double>(grid_points - 1);
  };

  // (a) envelope dominance on [0, eta_cap], (b) concavity of f.
  const double h = 1e-4;
  for (int n : c.n_samples) {
    for (int i = 0; i < grid_points; ++i) {
      const double eta = grid_at(0.0, c.eta_cap, i);
      const double f = phi_eta_lower_bound(n, eta);
      record(f - env(eta) + 1e-12, "envelope dominance", eta, n);
      if (eta >= h) {
        const double d2 = (phi_eta_lower_bound(n, eta + h) - 2.0 * f +
                           phi_eta_lower_bound(n, eta - h)) /
                          (h * h);
        record(-d2 - 1e-6, "concavity", eta, n);
      }
    }
  }

  // (c) endpoint minimum and floor strictness on [eta_threshold, eta_cap].
  const double at_lo = env(c.eta_threshold);
  const double at_hi = env(c.eta_cap);
  const double endpoint_min = std::min(at_lo, at_hi);
  double grid_min = std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid_points; ++i) {
    const double eta = grid_at(c.eta_threshold, c.eta_cap, i);
    const double e = env(eta);
    grid_min = std::min(grid_min, e);
    // (d) the floor B_n/2 is beaten throughout the interval.
    record(e - c.floor, "floor", eta, c.n_samples.front());
  }
  record(1e-12 - std::fabs(grid_min - endpoint_min), "endpoint minimality",
         c.eta_threshold, c.n_samples.front());
  record(at_lo - c.floor, "lower endpoint floor", c.eta_threshold,
         c.n_samples.front());
  record(at_hi - c.floor, "upper endpoint floor", c.eta_cap,
         c.n_samples.front());

  VerificationReport r = VerificationReport::make(
      c.id == EnvelopeCaseId::small_n ? "envelope.case_small_n"
                                      : "envelope.case_large_n",
      worst, 0.0, static_cast<long long>(grid_points) * 2);
  if (failed) r.note = note.str();
  return r;
}

}  // namespace cmcgap
