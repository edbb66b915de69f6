#include "cmcgap/gap.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "cmcgap/pinching.hpp"

namespace cmcgap {

namespace {

double band_bracket(int n, double H, double c, double ring_s) {
  const double nd = n;
  return ring_s - nd * (H * H + c) +
         (nd - 2.0) * std::sqrt(nd / (nd - 1.0) * ring_s) * H;
}

void require_band_point(int n, double H, double c, double ring_s,
                        const char* who) {
  if (n < 4) {
    std::ostringstream os;
    os << who << ": n >= 4 required, got " << n;
    throw std::invalid_argument(os.str());
  }
  if (H < 0.0) {
    std::ostringstream os;
    os << who << ": H >= 0 required (canonical orientation), got " << H;
    throw std::invalid_argument(os.str());
  }
  if (H * H + c <= 0.0) {
    std::ostringstream os;
    os << who << ": H^2 + c must be positive, got H=" << H << ", c=" << c;
    throw std::invalid_argument(os.str());
  }
  const double ra = ring_alpha(n, H, c);
  const double top = ra + (H == 0.0 ? 0.0 : delta_band(n, H, c));
  const double slack = 1e-9 * std::max(1.0, ra);
  if (ring_s < ra - slack || ring_s > top + slack) {
    std::ostringstream os;
    os << who << ": ring_s = " << ring_s << " outside the band [" << ra << ", "
       << top << "] at (n=" << n << ", H=" << H << ", c=" << c << ")";
    throw std::invalid_argument(os.str());
  }
}

}  // namespace

double simons_rhs(int n, double H, double c, double ring_s) {
  if (n < 3) throw std::invalid_argument("simons_rhs: n >= 3 required");
  if (ring_s < 0.0)
    throw std::invalid_argument("simons_rhs: ring_s must be nonnegative");
  if (H < 0.0)
    throw std::invalid_argument(
        "simons_rhs: H >= 0 required (canonical orientation)");
  return ring_s * band_bracket(n, H, c, ring_s);
}

double SimonsBalance::residual() const {
  return (grad_norm_sq + n * H * std::pow(ring_s, 1.5) * phi) -
         simons_rhs(n, H, c, ring_s);
}

BandPhiBound band_phi_bound(int n, double H, double c, double ring_s) {
  require_band_point(n, H, c, ring_s, "band_phi_bound");
  BandPhiBound b;
  b.lhs = band_bracket(n, H, c, ring_s);
  const double nd = n;
  b.rhs = 0.5 * b_n(n) * nd * std::sqrt(nd / (nd - 1.0) * ring_s) * H;
  return b;
}

BandEtaCoefficient band_eta_coefficient(int n, double H, double c,
                                        double ring_s) {
  require_band_point(n, H, c, ring_s, "band_eta_coefficient");
  BandEtaCoefficient b;
  const double nd = n;
  const double root_s = std::sqrt(ring_s);
  b.value = std::sqrt((nd - 1.0) / nd) * (nd * (H * H + c) - ring_s) -
            2.0 * (nd - 1.0) * H * root_s;
  b.floor = -6.0 / 5.0 * nd * H * root_s;
  return b;
}

const char* gap_tag_name(GapTag t) {
  switch (t) {
    case GapTag::subcritical: return "subcritical";
    case GapTag::rigid_boundary: return "rigid_boundary";
    case GapTag::forbidden_band: return "forbidden_band";
    case GapTag::above: return "above";
  }
  return "unknown";
}

CmcInvariants CmcInvariants::from_s(int n, double H, double S) {
  if (n < 3) throw std::invalid_argument("CmcInvariants: n >= 3 required");
  const double nh2 = static_cast<double>(n) * H * H;
  if (S < nh2) {
    std::ostringstream os;
    os << "CmcInvariants: S = " << S << " < n H^2 = " << nh2
       << " (trace-free part would be negative)";
    throw std::invalid_argument(os.str());
  }
  CmcInvariants inv;
  inv.H = H;
  inv.S = S;
  inv.ring_s = S - nh2;
  return inv;
}

GapRegion classify(int n, double H, double c, double S, double rel_tol) {
  if (n < 4) throw std::invalid_argument("classify: n >= 4 required");
  if (H * H + c <= 0.0)
    throw std::invalid_argument("classify: H^2 + c must be positive");
  const CmcInvariants inv = CmcInvariants::from_s(n, H, S);
  GapRegion r;
  r.alpha = alpha_general(n, H, c);
  r.delta = delta_band(n, H, c);
  r.dist_alpha = inv.S - r.alpha;
  r.dist_band_top = inv.S - (r.alpha + r.delta);
  const double tol = rel_tol * std::max(1.0, r.alpha);
  if (std::fabs(S - r.alpha) <= tol)
    r.tag = GapTag::rigid_boundary;
  else if (S < r.alpha)
    r.tag = GapTag::subcritical;
  else if (S <= r.alpha + r.delta + tol)
    r.tag = GapTag::forbidden_band;
  else
    r.tag = GapTag::above;
  return r;
}

ModelHypersurface clifford_model(int n, int k, double lambda) {
  if (n < 3) throw std::invalid_argument("clifford_model: n >= 3 required");
  if (k < 1 || k > n - 1)
    throw std::invalid_argument("clifford_model: k out of range");
  if (!(lambda > 0.0))
    throw std::invalid_argument("clifford_model: lambda must be positive");
  ModelHypersurface m;
  m.n = n;
  m.k = k;
  m.lambda = lambda;
  m.c = 1.0;
  const double low = -1.0 / lambda;
  m.principal_curvatures.assign(static_cast<size_t>(n), lambda);
  for (int i = 0; i < k; ++i)
    m.principal_curvatures[static_cast<size_t>(i)] = low;
  std::sort(m.principal_curvatures.begin(), m.principal_curvatures.end());
  const double nd = n, kd = k;
  m.H = ((nd - kd) * lambda - kd / lambda) / nd;
  m.S = (nd - kd) * lambda * lambda + kd / (lambda * lambda);
  return m;
}

ModelHypersurface rigid_model(int n, double H, double c) {
  if (n < 3) throw std::invalid_argument("rigid_model: n >= 3 required");
  if (H * H + c <= 0.0)
    throw std::invalid_argument("rigid_model: H^2 + c must be positive");
  const double nd = n;
  const double rad = nd * nd * H * H + 4.0 * (nd - 1.0) * c;
  if (rad < 0.0) {
    std::ostringstream os;
    os << "rigid_model: no real curvature parameter at (n=" << n
       << ", H=" << H << ", c=" << c << ")";
    throw std::domain_error(os.str());
  }
  ModelHypersurface m;
  m.n = n;
  m.k = 1;
  m.c = c;
  m.lambda = (nd * std::fabs(H) + std::sqrt(rad)) / (2.0 * (nd - 1.0));
  m.principal_curvatures.assign(static_cast<size_t>(n), m.lambda);
  m.principal_curvatures[0] = -c / m.lambda;
  std::sort(m.principal_curvatures.begin(), m.principal_curvatures.end());
  m.H = ((nd - 1.0) * m.lambda - c / m.lambda) / nd;
  m.S = (nd - 1.0) * m.lambda * m.lambda + c * c / (m.lambda * m.lambda);
  return m;
}

double muenzner_s(int n, int g) {
  if (n < 3) throw std::invalid_argument("muenzner_s: n >= 3 required");
  if (g != 1 && g != 2 && g != 3 && g != 4 && g != 6) {
    std::ostringstream os;
    os << "muenzner_s: g = " << g << " not in {1, 2, 3, 4, 6}";
    throw std::invalid_argument(os.str());
  }
  return static_cast<double>(g - 1) * n;
}

TraceFreeSpectrum spectrum_of_model(const ModelHypersurface& m) {
  const double ring_s = m.S - static_cast<double>(m.n) * m.H * m.H;
  if (!(ring_s > 1e-12 * std::max(1.0, m.S))) {
    std::ostringstream os;
    os << "spectrum_of_model: totally umbilical model (ring_s = " << ring_s
       << ")";
    throw std::domain_error(os.str());
  }
  const double inv = 1.0 / std::sqrt(ring_s);
  std::vector<double> mu;
  mu.reserve(m.principal_curvatures.size());
  for (double lam : m.principal_curvatures) mu.push_back((lam - m.H) * inv);
  return TraceFreeSpectrum::from_raw(std::move(mu));
}

}  // namespace cmcgap
