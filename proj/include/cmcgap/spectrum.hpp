#pragma once

#include <vector>

namespace cmcgap {

/// The normalized trace-free principal-curvature spectrum: n real numbers
/// mu_1 <= ... <= mu_n with sum mu_i = 0 and sum mu_i^2 = 1. Construction
/// always canonicalizes (center, normalize, sort), so every instance
/// satisfies the constraints to ~1e-15.
class TraceFreeSpectrum {
 public:
  /// Canonicalizes an arbitrary vector (n >= 3) onto the constraint set.
  /// Throws std::invalid_argument for n < 3 and std::domain_error when the
  /// input is (numerically) proportional to the all-ones vector.
  static TraceFreeSpectrum from_raw(std::vector<double> raw);

  /// The two-valued spectrum with k bottom entries and n-k top entries:
  /// k copies of -sqrt((n-k)/(n k)) and n-k copies of sqrt(k/(n(n-k))).
  /// k = 1 is the equality case of the moment inequalities.
  static TraceFreeSpectrum two_valued(int n, int k);

  int size() const { return static_cast<int>(mu_.size()); }
  const std::vector<double>& values() const { return mu_; }
  double operator[](int i) const { return mu_[static_cast<size_t>(i)]; }

 private:
  explicit TraceFreeSpectrum(std::vector<double> canonical)
      : mu_(std::move(canonical)) {}
  std::vector<double> mu_;
};

/// The three spectral functionals:
///   phi   = sum mu_i^3 + (n-2)/sqrt(n(n-1))
///   eta   = sqrt(n/(n-1)) mu_1 + 1           (always in [0, 1))
///   sigma = [ sum_{i>=2} (mu_i + mu_1/(n-1))^2 ]^{1/2}
/// They satisfy sigma^2 = eta(2 - eta) exactly.
struct SpectrumFunctionals {
  double phi = 0.0;
  double eta = 0.0;
  double sigma = 0.0;
};

SpectrumFunctionals functionals(const TraceFreeSpectrum& s);

/// Margins of the moment inequalities; all three are nonnegative for every
/// spectrum, with equality exactly at the two-valued k = 1 spectrum.
struct MomentInequalityMargins {
  double phi_vs_eta = 0.0;        // sqrt(n(n-1))/(n-2) phi - eta
  double eta_vs_sigma = 0.0;      // eta - sigma^2/2
  double phi_vs_eta_sigma = 0.0;  // sqrt(n(n-1)) phi
                                  //   - eta [3n - 3(n+1) eta - 2 sqrt(n(n-1)) sigma]
};

MomentInequalityMargins moment_inequality_margins(const TraceFreeSpectrum& s);

/// Residual of the exact cubic decomposition
///   sum_i (mu_i + mu_1/(n-1))^2 (mu_i - mu_1)
///     = phi - (n-2)/sqrt(n(n-1)) eta + mu_1/(n-1) sigma^2.
/// Both sides are evaluated independently; returns lhs - rhs.
double phi_decomposition_residual(const TraceFreeSpectrum& s);

/// Threshold (B_n/2) sqrt(n/(n-1)) below which the small-phi conclusions
/// apply. Requires n >= 4.
double phi_threshold(int n);

/// True iff phi(s) <= phi_threshold(n).
bool phi_below_threshold(const TraceFreeSpectrum& s);

inline constexpr double kEtaBound = 0.0445;
inline constexpr double kSigmaBound = 0.295;

/// Eigen-gap threshold (2 / (3 - 3^-9)) sqrt(n/(n-1)).
double eigen_gap_threshold(int n);

/// The three conclusions that hold for every spectrum with phi below the
/// threshold: eta < 0.0445, sigma < 0.295, and mu_2 - mu_1 above the
/// eigen-gap threshold. Calling this on a spectrum that fails the hypothesis
/// is a usage error (std::invalid_argument).
struct SmallPhiConclusions {
  bool eta_ok = false;
  bool sigma_ok = false;
  bool gap_ok = false;
  double gap_margin = 0.0;  // (mu_2 - mu_1) - eigen_gap_threshold(n)
};

SmallPhiConclusions small_phi_conclusions(const TraceFreeSpectrum& s);

namespace detail {

/// Core evaluations on a canonical (sorted, centered, unit-norm) vector.
/// These are the single source of truth shared by the public wrappers and
/// the counterexample search.
SpectrumFunctionals functionals_of(const std::vector<double>& mu);
MomentInequalityMargins margins_of(const std::vector<double>& mu);
double sigma_sq_of(const std::vector<double>& mu);

/// Center, normalize, sort ascending, in place. Returns false when the
/// centered vector is numerically zero.
bool canonicalize(std::vector<double>& v);

}  // namespace detail

}  // namespace cmcgap
