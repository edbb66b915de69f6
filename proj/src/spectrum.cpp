#include "cmcgap/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "cmcgap/pinching.hpp"

namespace cmcgap {

namespace detail {

bool canonicalize(std::vector<double>& v) {
  const size_t n = v.size();
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(n);
  double norm_sq = 0.0;
  for (double& x : v) {
    x -= mean;
    norm_sq += x * x;
  }
  const double norm = std::sqrt(norm_sq);
  if (!(norm > 1e-300) || !std::isfinite(norm)) return false;
  for (double& x : v) x /= norm;
  std::sort(v.begin(), v.end());
  return true;
}

SpectrumFunctionals functionals_of(const std::vector<double>& mu) {
  const double n = static_cast<double>(mu.size());
  SpectrumFunctionals f;
  double cubes = 0.0;
  for (double x : mu) cubes += x * x * x;
  f.phi = cubes + (n - 2.0) / std::sqrt(n * (n - 1.0));
  f.eta = std::sqrt(n / (n - 1.0)) * mu[0] + 1.0;
  f.sigma = std::sqrt(sigma_sq_of(mu));
  return f;
}

double sigma_sq_of(const std::vector<double>& mu) {
  const double n = static_cast<double>(mu.size());
  const double shift = mu[0] / (n - 1.0);
  double s = 0.0;
  for (size_t i = 1; i < mu.size(); ++i) {
    const double t = mu[i] + shift;
    s += t * t;
  }
  return s;
}

MomentInequalityMargins margins_of(const std::vector<double>& mu) {
  const double n = static_cast<double>(mu.size());
  const SpectrumFunctionals f = functionals_of(mu);
  const double root = std::sqrt(n * (n - 1.0));
  MomentInequalityMargins m;
  m.phi_vs_eta = root / (n - 2.0) * f.phi - f.eta;
  m.eta_vs_sigma = f.eta - 0.5 * sigma_sq_of(mu);
  m.phi_vs_eta_sigma =
      root * f.phi -
      f.eta * (3.0 * n - 3.0 * (n + 1.0) * f.eta - 2.0 * root * f.sigma);
  return m;
}

}  // namespace detail

TraceFreeSpectrum TraceFreeSpectrum::from_raw(std::vector<double> raw) {
  if (raw.size() < 3)
    throw std::invalid_argument("TraceFreeSpectrum: needs n >= 3 entries");
  for (double x : raw) {
    if (!std::isfinite(x))
      throw std::invalid_argument("TraceFreeSpectrum: non-finite entry");
  }
  double scale = 0.0;
  for (double x : raw) scale = std::max(scale, std::fabs(x));
  std::vector<double> v = raw;
  const size_t n = v.size();
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(n);
  double norm_sq = 0.0;
  for (double& x : v) {
    x -= mean;
    norm_sq += x * x;
  }
  // Degenerate exactly when the input is (numerically) a multiple of the
  // all-ones vector.
  if (std::sqrt(norm_sq) <= 1e-14 * std::max(1.0, scale))
    throw std::domain_error(
        "TraceFreeSpectrum: input projects to zero (proportional to the "
        "all-ones vector)");
  if (!detail::canonicalize(v))
    throw std::domain_error("TraceFreeSpectrum: degenerate input");
  return TraceFreeSpectrum(std::move(v));
}

TraceFreeSpectrum TraceFreeSpectrum::two_valued(int n, int k) {
  if (n < 3) throw std::invalid_argument("two_valued: n >= 3 required");
  if (k < 1 || k > n - 1)
    throw std::invalid_argument("two_valued: k out of range");
  const double nd = n, kd = k;
  const double low = -std::sqrt((nd - kd) / (nd * kd));
  const double high = std::sqrt(kd / (nd * (nd - kd)));
  std::vector<double> v(static_cast<size_t>(n), high);
  for (int i = 0; i < k; ++i) v[static_cast<size_t>(i)] = low;
  return TraceFreeSpectrum(std::move(v));
}

SpectrumFunctionals functionals(const TraceFreeSpectrum& s) {
  return detail::functionals_of(s.values());
}

MomentInequalityMargins moment_inequality_margins(const TraceFreeSpectrum& s) {
  return detail::margins_of(s.values());
}

double phi_decomposition_residual(const TraceFreeSpectrum& s) {
  const std::vector<double>& mu = s.values();
  const double n = static_cast<double>(mu.size());
  const double shift = mu[0] / (n - 1.0);
  double lhs = 0.0;
  for (double x : mu) {
    const double t = x + shift;
    lhs += t * t * (x - mu[0]);
  }
  const SpectrumFunctionals f = detail::functionals_of(mu);
  const double rhs = f.phi - (n - 2.0) / std::sqrt(n * (n - 1.0)) * f.eta +
                     shift * detail::sigma_sq_of(mu);
  return lhs - rhs;
}

double phi_threshold(int n) {
  const double nd = n;
  return 0.5 * b_n(n) * std::sqrt(nd / (nd - 1.0));
}

bool phi_below_threshold(const TraceFreeSpectrum& s) {
  return functionals(s).phi <= phi_threshold(s.size());
}

double eigen_gap_threshold(int n) {
  if (n < 3) throw std::invalid_argument("eigen_gap_threshold: n >= 3");
  const double nd = n;
  return 2.0 / (3.0 - 1.0 / 19683.0) * std::sqrt(nd / (nd - 1.0));
}

SmallPhiConclusions small_phi_conclusions(const TraceFreeSpectrum& s) {
  if (!phi_below_threshold(s)) {
    std::ostringstream os;
    os << "small_phi_conclusions: phi = " << functionals(s).phi
       << " exceeds the threshold " << phi_threshold(s.size());
    throw std::invalid_argument(os.str());
  }
  const SpectrumFunctionals f = functionals(s);
  SmallPhiConclusions out;
  out.eta_ok = f.eta < kEtaBound;
  out.sigma_ok = f.sigma < kSigmaBound;
  out.gap_margin = (s[1] - s[0]) - eigen_gap_threshold(s.size());
  out.gap_ok = out.gap_margin > 0.0;
  return out;
}

}  // namespace cmcgap
