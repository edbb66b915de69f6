#pragma once

#include <vector>

namespace cmcgap {

/// Closed-form pinching constants for constant-mean-curvature hypersurfaces
/// in a simply connected space form of curvature c, plus the exact-identity
/// cross-checks that certify the closed forms.
///
/// Every function is a pure function of its arguments and is safe to call
/// concurrently. All inputs accept H of either sign; only H^2 (or |H| where
/// noted) enters the formulas.

/// alpha(n, H, c) = n c + n^3 H^2 / (2(n-1))
///                  - n(n-2)/(2(n-1)) * sqrt(n^2 H^4 + 4(n-1) c H^2).
/// Requires n >= 3 and a nonnegative radicand (guaranteed when H^2 + c > 0).
/// Throws std::domain_error with the offending (n, H, c) otherwise.
double alpha_general(int n, double H, double c);

/// ring_alpha = alpha(n, H, c) - n H^2, the trace-free pinching level.
/// Nonnegative whenever H^2 + c >= 0.
double ring_alpha(int n, double H, double c);

/// alpha_k(n, H) for the unit-sphere ambient (c = 1), 1 <= k <= n-1.
/// alpha_1 = alpha(n, H, 1) and alpha_{n-1} = beta(n, H); strictly increasing
/// in k when H != 0. Throws std::invalid_argument for k out of range.
double alpha_k(int n, double H, int k);

/// beta(n, H) = n + n^3 H^2/(2(n-1)) + n(n-2)/(2(n-1)) sqrt(n^2 H^4 + 4(n-1) H^2).
double beta(int n, double H);

/// Band-width coefficient: 1/5 for 4 <= n <= 20, 49/250 for n > 20.
/// Throws std::invalid_argument for n < 4.
double b_n(int n);

/// Gap-band width delta = B_n * min{ n H^2/(n-1), ring_alpha(n, H, c) }.
/// The min resolves to n H^2/(n-1) when c > 0 and to ring_alpha when c <= 0.
/// Requires n >= 4 and H^2 + c > 0.
double delta_band(int n, double H, double c);

/// Principal-curvature parameter of the k-th product model in the unit
/// sphere: lambda_k = (n|H| + sqrt(n^2 H^2 + 4 k (n-k))) / (2(n-k)).
double lambda_k(int n, double H, int k);

/// Residual of the exact identity
///   (n-2) sqrt(n/(n-1) H^2 ring_alpha) = n (H^2 + c) - ring_alpha,
/// valid for H^2 + c > 0. Returns lhs - rhs, which must vanish to floating
/// tolerance; also verifies rhs >= 0 and ring_alpha >= 0 (identity-domain
/// failures throw std::domain_error).
double ring_alpha_identity_residual(int n, double H, double c);

/// Independent root oracle for ring_alpha: the smaller nonnegative root of
///   (n(H^2+c) - x)^2 = (n-2)^2 * n/(n-1) * H^2 * x
/// located by bisection on [0, n(H^2+c)]. Evaluates none of the closed forms
/// above, so agreement with ring_alpha() certifies both routes.
double ring_alpha_root_oracle(int n, double H, double c);

/// Margin (2n + 3n H^2) - alpha_{floor(n/2)}(n, H); positive for all n >= 4,
/// H != 0. Throws std::invalid_argument when H == 0.
double alpha_mid_gap(int n, double H);

/// Bundle of every pinching constant for one (n, H, c). alpha_k and lambda_k
/// are the unit-sphere family, indexed k = 1..n-1 (stored at [k-1]).
struct PinchingProfile {
  int n = 0;
  double H = 0.0;
  double c = 1.0;
  double alpha = 0.0;
  double ring_alpha = 0.0;
  double beta = 0.0;
  double b_n = 0.0;    // defined for n >= 4
  double delta = 0.0;  // defined for n >= 4
  std::vector<double> alpha_k;
  std::vector<double> lambda_k;
};

/// Evaluates the full profile. Requires n >= 3 and a nonnegative radicand;
/// b_n and delta are filled only for n >= 4 (zero otherwise).
PinchingProfile pinching_profile(int n, double H, double c);

}  // namespace cmcgap
