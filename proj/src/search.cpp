#include "cmcgap/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cmcgap/rng.hpp"

namespace cmcgap {

namespace {

constexpr double kSigmaGradFloor = 1e-12;

struct Eval {
  double objective = 0.0;  // descent target (margin + hypothesis penalty)
  double margin = 0.0;
  bool feasible = true;
};

struct ObjectiveCtx {
  MarginObjective obj;
  int n;
  double root;       // sqrt(n(n-1))
  double eta_coef;   // sqrt(n/(n-1))
  double threshold;  // phi threshold, constrained objectives only
  double gap_threshold;
  double penalty;
  bool constrained;
};

ObjectiveCtx make_ctx(int n, MarginObjective obj, const SearchParams& p) {
  ObjectiveCtx c;
  c.obj = obj;
  c.n = n;
  const double nd = n;
  c.root = std::sqrt(nd * (nd - 1.0));
  c.eta_coef = std::sqrt(nd / (nd - 1.0));
  c.constrained = obj == MarginObjective::eta_bound ||
                  obj == MarginObjective::sigma_bound ||
                  obj == MarginObjective::eigen_gap;
  c.threshold = c.constrained ? phi_threshold(n) : 0.0;
  c.gap_threshold =
      obj == MarginObjective::eigen_gap ? eigen_gap_threshold(n) : 0.0;
  c.penalty = p.hypothesis_penalty;
  return c;
}

Eval evaluate(const ObjectiveCtx& c, const std::vector<double>& mu) {
  Eval e;
  switch (c.obj) {
    case MarginObjective::phi_vs_eta:
      e.margin = detail::margins_of(mu).phi_vs_eta;
      break;
    case MarginObjective::eta_vs_sigma:
      e.margin = detail::margins_of(mu).eta_vs_sigma;
      break;
    case MarginObjective::phi_vs_eta_sigma:
      e.margin = detail::margins_of(mu).phi_vs_eta_sigma;
      break;
    case MarginObjective::eta_bound: {
      const SpectrumFunctionals f = detail::functionals_of(mu);
      e.margin = kEtaBound - f.eta;
      e.feasible = f.phi <= c.threshold;
      e.objective = e.margin + c.penalty * std::max(0.0, f.phi - c.threshold);
      return e;
    }
    case MarginObjective::sigma_bound: {
      const SpectrumFunctionals f = detail::functionals_of(mu);
      e.margin = kSigmaBound - f.sigma;
      e.feasible = f.phi <= c.threshold;
      e.objective = e.margin + c.penalty * std::max(0.0, f.phi - c.threshold);
      return e;
    }
    case MarginObjective::eigen_gap: {
      const SpectrumFunctionals f = detail::functionals_of(mu);
      e.margin = (mu[1] - mu[0]) - c.gap_threshold;
      e.feasible = f.phi <= c.threshold;
      e.objective = e.margin + c.penalty * std::max(0.0, f.phi - c.threshold);
      return e;
    }
  }
  e.objective = e.margin;
  return e;
}

// Euclidean gradient of the selected margin (plus penalty term) with respect
// to the sorted coordinates. grad sigma^2 has no mu_1 component because the
// shifted entries sum to zero.
void gradient(const ObjectiveCtx& c, const std::vector<double>& mu,
              std::vector<double>& g) {
  const size_t n = mu.size();
  const double nd = static_cast<double>(c.n);
  g.assign(n, 0.0);

  const auto add_phi = [&](double w) {
    for (size_t i = 0; i < n; ++i) g[i] += w * 3.0 * mu[i] * mu[i];
  };
  const auto add_eta = [&](double w) { g[0] += w * c.eta_coef; };
  const auto add_sigma_sq = [&](double w) {
    const double shift = mu[0] / (nd - 1.0);
    for (size_t i = 1; i < n; ++i) g[i] += w * 2.0 * (mu[i] + shift);
  };
  const auto add_sigma = [&](double w) {
    const double s2 = detail::sigma_sq_of(mu);
    const double s = std::sqrt(s2);
    if (s > kSigmaGradFloor) add_sigma_sq(w / (2.0 * s));
  };

  switch (c.obj) {
    case MarginObjective::phi_vs_eta:
      add_phi(c.root / (nd - 2.0));
      add_eta(-1.0);
      break;
    case MarginObjective::eta_vs_sigma:
      add_eta(1.0);
      add_sigma_sq(-0.5);
      break;
    case MarginObjective::phi_vs_eta_sigma: {
      const SpectrumFunctionals f = detail::functionals_of(mu);
      const double bracket =
          3.0 * nd - 3.0 * (nd + 1.0) * f.eta - 2.0 * c.root * f.sigma;
      add_phi(c.root);
      add_eta(-bracket + 3.0 * (nd + 1.0) * f.eta);
      add_sigma(2.0 * c.root * f.eta);
      break;
    }
    case MarginObjective::eta_bound:
      add_eta(-1.0);
      break;
    case MarginObjective::sigma_bound:
      add_sigma(-1.0);
      break;
    case MarginObjective::eigen_gap:
      g[0] -= 1.0;
      g[1] += 1.0;
      break;
  }
  if (c.constrained) {
    const double phi = detail::functionals_of(mu).phi;
    if (phi > c.threshold) add_phi(c.penalty);
  }
}

// Orthogonal projection onto the tangent space of {sum = 0, norm = 1} at mu.
void project_tangent(const std::vector<double>& mu, std::vector<double>& v) {
  const size_t n = v.size();
  double mean = 0.0, dot = 0.0;
  for (size_t i = 0; i < n; ++i) {
    mean += v[i];
    dot += v[i] * mu[i];
  }
  mean /= static_cast<double>(n);
  for (size_t i = 0; i < n; ++i) v[i] -= mean + dot * mu[i];
}

struct Best {
  double margin = std::numeric_limits<double>::infinity();
  std::vector<double> mu;
  long long index = -1;
  bool any = false;

  void offer(double m, const std::vector<double>& candidate, long long idx) {
    if (!any || m < margin || (m == margin && idx < index)) {
      any = true;
      margin = m;
      mu = candidate;
      index = idx;
    }
  }
};

// Descent from a canonical start. on_point is called with every evaluated
// accepted iterate (start included).
template <typename OnPoint>
void descend(const ObjectiveCtx& ctx, const SearchParams& p,
             std::vector<double> mu, OnPoint&& on_point) {
  Eval cur = evaluate(ctx, mu);
  on_point(mu, cur);
  std::vector<double> g, trial;
  double step = p.initial_step;
  for (int it = 0; it < p.max_iterations && step >= p.min_step; ++it) {
    gradient(ctx, mu, g);
    project_tangent(mu, g);
    double norm = 0.0;
    for (double x : g) norm += x * x;
    norm = std::sqrt(norm);
    if (!(norm > 1e-18)) break;
    trial = mu;
    for (size_t i = 0; i < mu.size(); ++i) trial[i] -= step / norm * g[i];
    if (!detail::canonicalize(trial)) {
      step *= 0.5;
      continue;
    }
    const Eval next = evaluate(ctx, trial);
    if (next.objective < cur.objective) {
      mu.swap(trial);
      cur = next;
      on_point(mu, cur);
    } else {
      step *= 0.5;
    }
  }
}

std::vector<double> start_for_index(int n, long long index, long long samples,
                                    std::uint64_t seed) {
  if (index >= samples) {
    // Deterministic two-valued seeds after the random starts.
    const int k = static_cast<int>(index - samples) + 1;
    return TraceFreeSpectrum::two_valued(n, k).values();
  }
  SplitMix64 rng = SplitMix64::stream(seed, static_cast<std::uint64_t>(index));
  std::vector<double> v(static_cast<size_t>(n));
  for (double& x : v) x = rng.normal();
  return v;
}

}  // namespace

const char* objective_name(MarginObjective o) {
  switch (o) {
    case MarginObjective::phi_vs_eta: return "phi_vs_eta";
    case MarginObjective::eta_vs_sigma: return "eta_vs_sigma";
    case MarginObjective::phi_vs_eta_sigma: return "phi_vs_eta_sigma";
    case MarginObjective::eta_bound: return "eta_bound";
    case MarginObjective::sigma_bound: return "sigma_bound";
    case MarginObjective::eigen_gap: return "eigen_gap";
  }
  return "unknown";
}

VerificationReport counterexample_search(int n, MarginObjective objective,
                                         const SearchParams& params) {
  const bool constrained = objective == MarginObjective::eta_bound ||
                           objective == MarginObjective::sigma_bound ||
                           objective == MarginObjective::eigen_gap;
  if (n < (constrained ? 4 : 3))
    throw std::invalid_argument("counterexample_search: n too small");
  if (params.samples < 1)
    throw std::invalid_argument("counterexample_search: samples >= 1");

  const ObjectiveCtx ctx = make_ctx(n, objective, params);
  const long long total = params.samples + (n - 1);

  int threads = params.threads;
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 1;
  }
  threads = static_cast<int>(
      std::min<long long>(threads, std::max<long long>(1, total / 256 + 1)));

  std::vector<Best> bests(static_cast<size_t>(threads));
  const auto worker = [&](int t) {
    Best& best = bests[static_cast<size_t>(t)];
    std::vector<double> start;
    for (long long i = t; i < total; i += threads) {
      start = start_for_index(n, i, params.samples, params.seed);
      if (i < params.samples && !detail::canonicalize(start)) continue;
      descend(ctx, params, start,
              [&](const std::vector<double>& mu, const Eval& e) {
                if (e.feasible) best.offer(e.margin, mu, i);
              });
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  Best best;
  for (const Best& b : bests)
    if (b.any) best.offer(b.margin, b.mu, b.index);

  VerificationReport r;
  std::ostringstream id;
  id << objective_name(objective) << ".n=" << n;
  r.check_id = id.str();
  r.samples = params.samples;
  r.seed = params.seed;
  r.tol = 1e-9;
  if (!best.any) {
    r.passed = false;
    r.worst_margin = std::numeric_limits<double>::quiet_NaN();
    r.note = "no feasible point encountered";
    return r;
  }
  r.worst_margin = best.margin;
  r.passed = best.margin >= -r.tol;
  r.witness = TraceFreeSpectrum::from_raw(best.mu);
  if (!r.passed) r.note = "margin below acceptance floor";
  return r;
}

namespace detail {

void descend_recording(int n, MarginObjective objective,
                       const SearchParams& params, std::vector<double> start,
                       std::vector<double>& accepted_objectives) {
  if (static_cast<int>(start.size()) != n)
    throw std::invalid_argument("descend_recording: start size mismatch");
  if (!canonicalize(start))
    throw std::domain_error("descend_recording: degenerate start");
  const ObjectiveCtx ctx = make_ctx(n, objective, params);
  descend(ctx, params, std::move(start),
          [&](const std::vector<double>&, const Eval& e) {
            accepted_objectives.push_back(e.objective);
          });
}

}  // namespace detail

}  // namespace cmcgap
