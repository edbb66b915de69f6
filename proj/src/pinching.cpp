#include "cmcgap/pinching.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cmcgap {

namespace {

void require_n(int n, int least, const char* who) {
  if (n < least) {
    std::ostringstream os;
    os << who << ": n = " << n << " (requires n >= " << least << ")";
    throw std::invalid_argument(os.str());
  }
}

double radicand_general(double n, double H, double c) {
  const double h2 = H * H;
  return n * n * h2 * h2 + 4.0 * (n - 1.0) * c * h2;
}

}  // namespace

double alpha_general(int n, double H, double c) {
  require_n(n, 3, "alpha_general");
  const double nd = n;
  const double rad = radicand_general(nd, H, c);
  if (rad < 0.0) {
    std::ostringstream os;
    os << "alpha_general: negative radicand at (n=" << n << ", H=" << H
       << ", c=" << c << ")";
    throw std::domain_error(os.str());
  }
  if (H == 0.0) return nd * c;
  const double h2 = H * H;
  // Algebraically equal to
  //   nc + n^3 H^2/(2(n-1)) - n(n-2)/(2(n-1)) sqrt(rad);
  // rationalized so the two large terms never cancel. The denominator is
  // positive for H != 0.
  const double num = nd * nd * h2 - (nd - 2.0) * (nd - 2.0) * c;
  const double den = nd * nd * h2 + (nd - 2.0) * std::sqrt(rad);
  return nd * c + 2.0 * nd * h2 * num / den;
}

double ring_alpha(int n, double H, double c) {
  return alpha_general(n, H, c) - static_cast<double>(n) * H * H;
}

double alpha_k(int n, double H, int k) {
  require_n(n, 3, "alpha_k");
  if (k < 1 || k > n - 1) {
    std::ostringstream os;
    os << "alpha_k: k = " << k << " out of range [1, " << n - 1 << "]";
    throw std::invalid_argument(os.str());
  }
  const double nd = n, kd = k;
  if (H == 0.0) return nd;
  const double h2 = H * H;
  if (n - 2 * k >= 0) {
    // Rationalized form (valid while the radical coefficient n-2k is
    // nonnegative): n + 2n|H| (n^2 H^2 - (n-2k)^2) / (n^2|H| + (n-2k) R)
    // with R = sqrt(n^2 H^2 + 4k(n-k)).
    const double ah = std::fabs(H);
    const double r = std::sqrt(nd * nd * h2 + 4.0 * kd * (nd - kd));
    const double coef = nd - 2.0 * kd;
    return nd + 2.0 * nd * ah * (nd * nd * h2 - coef * coef) /
                    (nd * nd * ah + coef * r);
  }
  // For k > n/2 the radical term adds, so the direct form is stable.
  const double denom = 2.0 * kd * (nd - kd);
  const double rad = nd * nd * h2 * h2 + 4.0 * kd * (nd - kd) * h2;
  return nd + nd * nd * nd * h2 / denom -
         nd * (nd - 2.0 * kd) / denom * std::sqrt(rad);
}

double beta(int n, double H) {
  require_n(n, 3, "beta");
  const double nd = n;
  const double h2 = H * H;
  const double rad = nd * nd * h2 * h2 + 4.0 * (nd - 1.0) * h2;
  return nd + nd * nd * nd * h2 / (2.0 * (nd - 1.0)) +
         nd * (nd - 2.0) / (2.0 * (nd - 1.0)) * std::sqrt(rad);
}

double b_n(int n) {
  require_n(n, 4, "b_n");
  return n <= 20 ? 1.0 / 5.0 : 49.0 / 250.0;
}

double delta_band(int n, double H, double c) {
  require_n(n, 4, "delta_band");
  if (H * H + c <= 0.0) {
    std::ostringstream os;
    os << "delta_band: H^2 + c must be positive, got H=" << H << ", c=" << c;
    throw std::invalid_argument(os.str());
  }
  const double umbilical = static_cast<double>(n) * H * H / (n - 1.0);
  const double ra = ring_alpha(n, H, c);
  return b_n(n) * std::min(umbilical, ra);
}

double lambda_k(int n, double H, int k) {
  require_n(n, 3, "lambda_k");
  if (k < 1 || k > n - 1) {
    std::ostringstream os;
    os << "lambda_k: k = " << k << " out of range [1, " << n - 1 << "]";
    throw std::invalid_argument(os.str());
  }
  const double nd = n, kd = k;
  const double ah = std::fabs(H);
  return (nd * ah + std::sqrt(nd * nd * H * H + 4.0 * kd * (nd - kd))) /
         (2.0 * (nd - kd));
}

double ring_alpha_identity_residual(int n, double H, double c) {
  require_n(n, 3, "ring_alpha_identity_residual");
  const double ra = ring_alpha(n, H, c);
  if (ra < 0.0) {
    std::ostringstream os;
    os << "ring_alpha_identity_residual: ring_alpha = " << ra
       << " < 0 at (n=" << n << ", H=" << H << ", c=" << c << ")";
    throw std::domain_error(os.str());
  }
  const double nd = n;
  const double rhs = nd * (H * H + c) - ra;
  const double scale = std::max(1.0, std::fabs(nd * (H * H + c)));
  if (rhs < -1e-9 * scale) {
    std::ostringstream os;
    os << "ring_alpha_identity_residual: n(H^2+c) - ring_alpha = " << rhs
       << " < 0 at (n=" << n << ", H=" << H << ", c=" << c << ")";
    throw std::domain_error(os.str());
  }
  const double lhs = (nd - 2.0) * std::sqrt(nd / (nd - 1.0) * H * H * ra);
  return lhs - rhs;
}

double ring_alpha_root_oracle(int n, double H, double c) {
  require_n(n, 3, "ring_alpha_root_oracle");
  const double nd = n;
  const double h2 = H * H;
  if (h2 + c <= 0.0) {
    std::ostringstream os;
    os << "ring_alpha_root_oracle: H^2 + c must be positive, got H=" << H
       << ", c=" << c;
    throw std::invalid_argument(os.str());
  }
  const double top = nd * (h2 + c);
  if (H == 0.0) return top;  // double root of the degenerate quadratic

  // q(x) = (n(H^2+c) - x)^2 - (n-2)^2 n/(n-1) H^2 x is positive at 0,
  // negative at x = n(H^2+c); the sign change brackets the smaller root.
  const double coef = (nd - 2.0) * (nd - 2.0) * nd / (nd - 1.0) * h2;
  const auto q = [&](double x) {
    const double d = top - x;
    return d * d - coef * x;
  };
  double lo = 0.0, hi = top;
  while (true) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // adjacent doubles reached
    (q(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double alpha_mid_gap(int n, double H) {
  require_n(n, 4, "alpha_mid_gap");
  if (H == 0.0)
    throw std::invalid_argument("alpha_mid_gap: H must be nonzero");
  const double nd = n;
  return (2.0 * nd + 3.0 * nd * H * H) - alpha_k(n, H, n / 2);
}

PinchingProfile pinching_profile(int n, double H, double c) {
  require_n(n, 3, "pinching_profile");
  PinchingProfile p;
  p.n = n;
  p.H = H;
  p.c = c;
  p.alpha = alpha_general(n, H, c);
  p.ring_alpha = p.alpha - static_cast<double>(n) * H * H;
  p.beta = beta(n, H);
  if (n >= 4) {
    p.b_n = b_n(n);
    if (H * H + c > 0.0) p.delta = delta_band(n, H, c);
  }
  p.alpha_k.reserve(static_cast<size_t>(n - 1));
  p.lambda_k.reserve(static_cast<size_t>(n - 1));
  for (int k = 1; k <= n - 1; ++k) {
    p.alpha_k.push_back(alpha_k(n, H, k));
    p.lambda_k.push_back(lambda_k(n, H, k));
  }
  return p;
}

}  // namespace cmcgap
