#pragma once

#include <vector>

#include "cmcgap/spectrum.hpp"

namespace cmcgap {

/// Evaluable algebra of the gap bounds: the Simons-type balance, the
/// forbidden-band inequality chains, gap classification of (n, H, c, S)
/// tuples, and the product models that realize the boundary cases.

/// Right side of the balance
///   |nabla h|^2 + n H ringS^{3/2} phi
///     = ringS [ ringS - n(H^2+c) + (n-2) sqrt(n/(n-1) ringS) H ].
/// Requires ringS >= 0 and H >= 0 (canonical orientation). Vanishes at
/// ringS = ring_alpha(n, H, c).
double simons_rhs(int n, double H, double c, double ring_s);

/// A balance configuration; residual() is how far (grad_norm_sq, phi) sit
/// from the algebraic right side.
struct SimonsBalance {
  int n = 0;
  double H = 0.0;
  double c = 1.0;
  double ring_s = 0.0;
  double grad_norm_sq = 0.0;
  double phi = 0.0;

  double residual() const;
};

/// Inside the band ring_alpha <= ringS <= ring_alpha + delta the bracket is
/// dominated by the B_n-scaled term; lhs <= rhs yields the phi threshold.
struct BandPhiBound {
  double lhs = 0.0;  // ringS - n(H^2+c) + (n-2) sqrt(n/(n-1) ringS) H
  double rhs = 0.0;  // (B_n n / 2) sqrt(n/(n-1) ringS) H
};

BandPhiBound band_phi_bound(int n, double H, double c, double ring_s);

/// The eta-coefficient lower bound on the same band:
///   sqrt((n-1)/n) (n(H^2+c) - ringS) - 2(n-1) H sqrt(ringS)
///     >= -(6/5) n H sqrt(ringS).
struct BandEtaCoefficient {
  double value = 0.0;
  double floor = 0.0;
};

BandEtaCoefficient band_eta_coefficient(int n, double H, double c, double ring_s);

/// Curvature invariants of one configuration: mean curvature H, squared
/// second-fundamental-form length S, and the trace-free part
/// ring_s = S - n H^2, which is nonnegative for any genuine configuration.
struct CmcInvariants {
  double H = 0.0;
  double S = 0.0;
  double ring_s = 0.0;

  /// Validates S >= n H^2 (std::invalid_argument otherwise).
  static CmcInvariants from_s(int n, double H, double S);
};

enum class GapTag { subcritical, rigid_boundary, forbidden_band, above };

const char* gap_tag_name(GapTag t);

/// Default relative tolerance for boundary identification in classify().
inline constexpr double kClassifyRelTol = 1e-6;

struct GapRegion {
  GapTag tag = GapTag::subcritical;
  double alpha = 0.0;
  double delta = 0.0;
  double dist_alpha = 0.0;     // S - alpha
  double dist_band_top = 0.0;  // S - (alpha + delta)
};

/// Places S relative to the forbidden band (alpha, alpha + delta]:
/// subcritical below alpha, rigid_boundary within tol of alpha,
/// forbidden_band inside the half-open band, above beyond it.
/// tol = rel_tol * max(1, alpha). Requires n >= 4, H^2 + c > 0 and
/// S >= n H^2 (else std::invalid_argument naming the violated condition).
GapRegion classify(int n, double H, double c, double S,
                   double rel_tol = kClassifyRelTol);

/// An isoparametric product model described purely by its principal
/// curvatures. H may come out negative for small lambda; S is the squared
/// curvature norm.
struct ModelHypersurface {
  int n = 0;
  int k = 0;
  double lambda = 0.0;
  double c = 1.0;
  double H = 0.0;
  double S = 0.0;
  std::vector<double> principal_curvatures;  // sorted ascending
};

/// Product model in the unit sphere (c = 1): curvature lambda with
/// multiplicity n-k and -1/lambda with multiplicity k. When lambda equals
/// lambda_k(n, H0, k), the model reproduces H = H0 and S = alpha_k(n, H0).
ModelHypersurface clifford_model(int n, int k, double lambda);

/// The k = 1 boundary model in a space form of curvature c: curvature
/// lambda = (n|H| + sqrt(n^2 H^2 + 4(n-1)c)) / (2(n-1)) with multiplicity
/// n-1 and -c/lambda with multiplicity 1; satisfies S = alpha(n, H, c).
ModelHypersurface rigid_model(int n, double H, double c);

/// Squared curvature norm (g-1) n of a closed minimal isoparametric
/// hypersurface with g distinct principal curvatures, g in {1,2,3,4,6}.
double muenzner_s(int n, int g);

/// Normalized trace-free spectrum mu_i = (lambda_i - H) / sqrt(ringS) of a
/// model. Requires ringS > 0 (totally umbilical models throw
/// std::domain_error).
TraceFreeSpectrum spectrum_of_model(const ModelHypersurface& m);

}  // namespace cmcgap
