#include "cmcgap/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cmcgap/pinching.hpp"
#include "cmcgap/verify.hpp"

namespace cmcgap {

namespace {

constexpr const char* kToolVersion = "1.0.0";

[[noreturn]] void usage_error(const std::string& msg) {
  throw std::invalid_argument(msg);
}

double parse_double(std::string_view s, const std::string& what) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [p, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || p != last)
    usage_error("malformed number in " + what + ": '" + std::string(s) + "'");
  return v;
}

long long parse_ll(std::string_view s, const std::string& what) {
  long long v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [p, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || p != last)
    usage_error("malformed integer in " + what + ": '" + std::string(s) + "'");
  return v;
}

// Splits "a..b[:step]" into parts; empty step part when absent.
bool split_range(const std::string& spec, std::string& a, std::string& b,
                 std::string& step) {
  const size_t dots = spec.find("..");
  if (dots == std::string::npos) return false;
  a = spec.substr(0, dots);
  std::string rest = spec.substr(dots + 2);
  const size_t colon = rest.find(':');
  if (colon == std::string::npos) {
    b = rest;
    step.clear();
  } else {
    b = rest.substr(0, colon);
    step = rest.substr(colon + 1);
  }
  return true;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

std::string jstr(const std::string& s) { return '"' + json_escape(s) + '"'; }

std::string jnum(double v) {
  if (!std::isfinite(v)) return "null";
  return format_g12(v);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r;") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += '"';
  return out;
}

std::string join_g12(const std::vector<double>& v, char sep) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += format_g12(v[i]);
  }
  return out;
}

// ------------------------------------------------------------- constants

struct ConstantsRow {
  PinchingProfile p;
  double residual_rel = 0.0;
  bool residual_defined = false;
  bool ok = true;
};

std::vector<ConstantsRow> constants_rows(const RunConfig& cfg,
                                         const std::vector<int>& ns,
                                         const std::vector<double>& hs) {
  std::vector<ConstantsRow> rows;
  for (int n : ns) {
    if (n < 3) usage_error("constants: n >= 3 required");
    for (double H : hs) {
      if (H * H + cfg.c < 0.0) {
        std::ostringstream os;
        os << "constants: H^2 + c < 0 at (n=" << n << ", H=" << H
           << ", c=" << cfg.c << ")";
        usage_error(os.str());
      }
      ConstantsRow r;
      r.p = pinching_profile(n, H, cfg.c);
      if (H * H + cfg.c > 0.0) {
        const double rhs =
            static_cast<double>(n) * (H * H + cfg.c) - r.p.ring_alpha;
        r.residual_rel = std::fabs(ring_alpha_identity_residual(n, H, cfg.c)) /
                         std::max(1.0, std::fabs(rhs));
        r.residual_defined = true;
        r.ok = r.residual_rel <= 1e-10;
      }
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

// --------------------------------------------------------------- classify

struct ClassifyResult {
  GapRegion region;
  bool has_model = false;
  int model_k = 0;
  double model_lambda = 0.0;
  double model_s = 0.0;
};

ClassifyResult classify_with_model(int n, double H, double c, double S,
                                   double tol) {
  ClassifyResult out;
  out.region = classify(n, H, c, S, tol);
  const bool wants_model = out.region.tag == GapTag::rigid_boundary ||
                           out.region.tag == GapTag::above;
  if (!wants_model) return out;
  if (c == 1.0) {
    // Nearest member of the product family by squared-norm value.
    int best_k = 1;
    double best_dist = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= n - 1; ++k) {
      const double dist = std::fabs(alpha_k(n, H, k) - S);
      if (dist < best_dist) {
        best_dist = dist;
        best_k = k;
      }
    }
    out.has_model = true;
    out.model_k = best_k;
    out.model_lambda = lambda_k(n, H, best_k);
    out.model_s = alpha_k(n, H, best_k);
  } else if (out.region.tag == GapTag::rigid_boundary) {
    const ModelHypersurface m = rigid_model(n, H, c);
    out.has_model = true;
    out.model_k = 1;
    out.model_lambda = m.lambda;
    out.model_s = m.S;
  }
  return out;
}

// ------------------------------------------------------------------- scan

struct ScanRow {
  int n = 0;
  double H = 0.0;
  double alpha = 0.0;
  double alpha_plus_delta = 0.0;
  double alpha_2 = 0.0;
  double s_g3 = 0.0;
  double problem_margin = 0.0;
  double band_phi_margin = 0.0;
  double band_eta_margin = 0.0;
  bool ok = true;
};

ScanRow scan_row(int n, double H, double c, int grid) {
  if (n < 4) usage_error("scan: n >= 4 required");
  if (H <= 0.0) usage_error("scan: H must be positive");
  if (H * H + c <= 0.0) {
    std::ostringstream os;
    os << "scan: H^2 + c <= 0 at (n=" << n << ", H=" << H << ", c=" << c
       << ")";
    usage_error(os.str());
  }
  ScanRow r;
  r.n = n;
  r.H = H;
  r.alpha = alpha_general(n, H, c);
  const double d = delta_band(n, H, c);
  r.alpha_plus_delta = r.alpha + d;
  r.alpha_2 = n >= 3 ? alpha_k(n, H, 2) : 0.0;
  r.s_g3 = 2.0 * n + 3.0 * n * H * H;
  r.problem_margin = alpha_mid_gap(n, H);
  const double ra = r.alpha - n * H * H;
  double phi_m = std::numeric_limits<double>::infinity();
  double eta_m = std::numeric_limits<double>::infinity();
  const int g = std::max(grid, 2);
  for (int i = 0; i < g; ++i) {
    const double ring_s = ra + d * static_cast<double>(i) / (g - 1);
    const BandPhiBound b = band_phi_bound(n, H, c, ring_s);
    phi_m = std::min(phi_m, b.rhs - b.lhs);
    const BandEtaCoefficient e = band_eta_coefficient(n, H, c, ring_s);
    eta_m = std::min(eta_m, e.value - e.floor);
  }
  r.band_phi_margin = phi_m;
  r.band_eta_margin = eta_m;
  r.ok = r.problem_margin > 0.0 && phi_m >= -1e-9 && eta_m >= -1e-9;
  return r;
}

// --------------------------------------------------------------- emitters

void emit_json_head(std::ostream& out, const RunConfig& cfg,
                    const std::string& config_body) {
  out << "{\"tool_version\":" << jstr(kToolVersion) << ",\"command\":"
      << jstr(cfg.command) << ",\"config\":{" << config_body
      << "},\"results\":[";
}

void emit_json_tail(std::ostream& out, long long passed, long long failed,
                    double worst) {
  out << "],\"summary\":{\"passed\":" << passed << ",\"failed\":" << failed
      << ",\"worst_margin\":" << jnum(worst) << "}}\n";
}

void emit_reports_json(std::ostream& out, const RunConfig& cfg,
                       const std::vector<VerificationReport>& reports) {
  std::ostringstream config;
  config << "\"suite\":" << jstr(cfg.suite) << ",\"n\":"
         << jstr(cfg.has_n ? cfg.n_spec : "") << ",\"samples\":" << cfg.samples
         << ",\"seed\":" << cfg.seed << ",\"grid\":" << cfg.grid
         << ",\"threads\":" << cfg.threads << ",\"step\":"
         << jnum(cfg.descent_step) << ",\"iters\":" << cfg.descent_iterations
         << ",\"format\":" << jstr(cfg.format);
  emit_json_head(out, cfg, config.str());
  long long passed = 0, failed = 0;
  double worst = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < reports.size(); ++i) {
    const VerificationReport& r = reports[i];
    (r.passed ? passed : failed) += 1;
    worst = std::min(worst, r.worst_margin);
    if (i) out << ',';
    out << "{\"check_id\":" << jstr(r.check_id)
        << ",\"passed\":" << (r.passed ? "true" : "false")
        << ",\"worst_margin\":" << jnum(r.worst_margin)
        << ",\"tol\":" << jnum(r.tol) << ",\"samples\":" << r.samples
        << ",\"seed\":" << r.seed << ",\"note\":" << jstr(r.note)
        << ",\"witness\":";
    if (r.witness.has_value()) {
      out << '[';
      const std::vector<double>& mu = r.witness->values();
      for (size_t j = 0; j < mu.size(); ++j) {
        if (j) out << ',';
        out << jnum(mu[j]);
      }
      out << ']';
    } else {
      out << "null";
    }
    out << '}';
  }
  if (reports.empty()) worst = 0.0;
  emit_json_tail(out, passed, failed, worst);
}

void emit_reports_csv(std::ostream& out,
                      const std::vector<VerificationReport>& reports) {
  out << "check_id,passed,worst_margin,tol,samples,seed,note\n";
  for (const VerificationReport& r : reports) {
    out << csv_field(r.check_id) << ',' << (r.passed ? "true" : "false") << ','
        << format_g12(r.worst_margin) << ',' << format_g12(r.tol) << ','
        << r.samples << ',' << r.seed << ',' << csv_field(r.note) << "\n";
  }
}

void emit_reports_text(std::ostream& out,
                       const std::vector<VerificationReport>& reports) {
  long long passed = 0;
  for (const VerificationReport& r : reports) {
    out << (r.passed ? "[PASS] " : "[FAIL] ") << r.check_id
        << "  worst_margin=" << format_g12(r.worst_margin)
        << " tol=" << format_g12(r.tol);
    if (r.samples > 0) out << " samples=" << r.samples;
    if (!r.note.empty()) out << "  (" << r.note << ")";
    out << "\n";
    if (r.passed) ++passed;
  }
  out << passed << "/" << reports.size() << " checks passed\n";
}

// ---------------------------------------------------------------- runners

int run_constants(const RunConfig& cfg, std::ostream& out) {
  const std::vector<int> ns = parse_int_range(cfg.n_spec);
  const std::vector<double> hs = parse_real_range(cfg.h_spec);
  const std::vector<ConstantsRow> rows = constants_rows(cfg, ns, hs);
  long long passed = 0, failed = 0;
  double worst = 0.0;
  for (const ConstantsRow& r : rows) {
    (r.ok ? passed : failed) += 1;
    if (r.residual_defined) worst = std::min(worst, -r.residual_rel);
  }
  if (cfg.format == "json") {
    std::ostringstream config;
    config << "\"n\":" << jstr(cfg.n_spec) << ",\"H\":" << jstr(cfg.h_spec)
           << ",\"c\":" << jnum(cfg.c) << ",\"format\":" << jstr(cfg.format);
    emit_json_head(out, cfg, config.str());
    for (size_t i = 0; i < rows.size(); ++i) {
      const ConstantsRow& r = rows[i];
      if (i) out << ',';
      out << "{\"n\":" << r.p.n << ",\"H\":" << jnum(r.p.H)
          << ",\"c\":" << jnum(r.p.c) << ",\"alpha\":" << jnum(r.p.alpha)
          << ",\"ring_alpha\":" << jnum(r.p.ring_alpha)
          << ",\"beta\":" << jnum(r.p.beta) << ",\"b_n\":"
          << (r.p.n >= 4 ? jnum(r.p.b_n) : "null") << ",\"delta\":"
          << (r.p.n >= 4 ? jnum(r.p.delta) : "null")
          << ",\"lemma3_residual\":"
          << (r.residual_defined ? jnum(r.residual_rel) : "null")
          << ",\"alpha_k\":[";
      for (size_t j = 0; j < r.p.alpha_k.size(); ++j) {
        if (j) out << ',';
        out << jnum(r.p.alpha_k[j]);
      }
      out << "],\"lambda_k\":[";
      for (size_t j = 0; j < r.p.lambda_k.size(); ++j) {
        if (j) out << ',';
        out << jnum(r.p.lambda_k[j]);
      }
      out << "]}";
    }
    emit_json_tail(out, passed, failed, worst);
  } else if (cfg.format == "csv") {
    out << "n,H,c,alpha,ring_alpha,beta,b_n,delta,lemma3_residual,alpha_k,"
           "lambda_k\n";
    for (const ConstantsRow& r : rows) {
      out << r.p.n << ',' << format_g12(r.p.H) << ',' << format_g12(r.p.c)
          << ',' << format_g12(r.p.alpha) << ',' << format_g12(r.p.ring_alpha)
          << ',' << format_g12(r.p.beta) << ','
          << (r.p.n >= 4 ? format_g12(r.p.b_n) : "") << ','
          << (r.p.n >= 4 ? format_g12(r.p.delta) : "") << ','
          << (r.residual_defined ? format_g12(r.residual_rel) : "") << ','
          << csv_field(join_g12(r.p.alpha_k, ';')) << ','
          << csv_field(join_g12(r.p.lambda_k, ';')) << "\n";
    }
  } else {
    for (const ConstantsRow& r : rows) {
      out << "n=" << r.p.n << " H=" << format_g12(r.p.H)
          << " c=" << format_g12(r.p.c) << "\n"
          << "  alpha=" << format_g12(r.p.alpha)
          << "  ring_alpha=" << format_g12(r.p.ring_alpha)
          << "  beta=" << format_g12(r.p.beta) << "\n";
      if (r.p.n >= 4)
        out << "  b_n=" << format_g12(r.p.b_n)
            << "  delta=" << format_g12(r.p.delta) << "\n";
      if (r.residual_defined)
        out << "  identity_residual_rel=" << format_g12(r.residual_rel)
            << "\n";
      out << "  alpha_k=" << join_g12(r.p.alpha_k, ' ') << "\n"
          << "  lambda_k=" << join_g12(r.p.lambda_k, ' ') << "\n";
    }
  }
  return failed == 0 ? 0 : 1;
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
  SuiteOptions opts;
  if (cfg.has_n) opts.search_n = parse_int_range(cfg.n_spec);
  opts.samples = cfg.samples;
  opts.seed = cfg.seed;
  opts.threads = cfg.threads;
  opts.grid = cfg.grid;
  if (!(cfg.descent_step > 0.0))
    usage_error("verify: --step must be positive");
  if (cfg.descent_iterations < 1)
    usage_error("verify: --iters must be at least 1");
  opts.descent_step = cfg.descent_step;
  opts.descent_iterations = cfg.descent_iterations;
  const std::vector<VerificationReport> reports = run_suite(cfg.suite, opts);
  if (cfg.format == "json")
    emit_reports_json(out, cfg, reports);
  else if (cfg.format == "csv")
    emit_reports_csv(out, reports);
  else
    emit_reports_text(out, reports);
  for (const VerificationReport& r : reports)
    if (!r.passed) return 1;
  return 0;
}

int run_classify(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.has_s) usage_error("classify: --S is required");
  const std::vector<int> ns = parse_int_range(cfg.n_spec);
  const std::vector<double> hs = parse_real_range(cfg.h_spec);
  if (ns.size() != 1 || hs.size() != 1)
    usage_error("classify: --n and --H must be single values");
  const int n = ns[0];
  const double H = hs[0];
  const ClassifyResult r =
      classify_with_model(n, H, cfg.c, cfg.big_s, cfg.classify_tol);
  const GapRegion& g = r.region;
  if (cfg.format == "json") {
    std::ostringstream config;
    config << "\"n\":" << jstr(cfg.n_spec) << ",\"H\":" << jstr(cfg.h_spec)
           << ",\"c\":" << jnum(cfg.c) << ",\"S\":" << jnum(cfg.big_s)
           << ",\"tol\":" << jnum(cfg.classify_tol) << ",\"format\":"
           << jstr(cfg.format);
    emit_json_head(out, cfg, config.str());
    out << "{\"n\":" << n << ",\"H\":" << jnum(H) << ",\"c\":" << jnum(cfg.c)
        << ",\"S\":" << jnum(cfg.big_s) << ",\"tag\":"
        << jstr(gap_tag_name(g.tag)) << ",\"alpha\":" << jnum(g.alpha)
        << ",\"delta\":" << jnum(g.delta) << ",\"band_low\":" << jnum(g.alpha)
        << ",\"band_high\":" << jnum(g.alpha + g.delta)
        << ",\"dist_alpha\":" << jnum(g.dist_alpha)
        << ",\"dist_band_top\":" << jnum(g.dist_band_top) << ",\"model_k\":";
    if (r.has_model)
      out << r.model_k << ",\"model_lambda\":" << jnum(r.model_lambda)
          << ",\"model_S\":" << jnum(r.model_s);
    else
      out << "null,\"model_lambda\":null,\"model_S\":null";
    out << '}';
    emit_json_tail(out, 1, 0, 0.0);
  } else if (cfg.format == "csv") {
    out << "n,H,c,S,tag,alpha,delta,band_low,band_high,dist_alpha,"
           "dist_band_top,model_k,model_lambda,model_S\n";
    out << n << ',' << format_g12(H) << ',' << format_g12(cfg.c) << ','
        << format_g12(cfg.big_s) << ',' << gap_tag_name(g.tag) << ','
        << format_g12(g.alpha) << ',' << format_g12(g.delta) << ','
        << format_g12(g.alpha) << ',' << format_g12(g.alpha + g.delta) << ','
        << format_g12(g.dist_alpha) << ',' << format_g12(g.dist_band_top)
        << ',';
    if (r.has_model)
      out << r.model_k << ',' << format_g12(r.model_lambda) << ','
          << format_g12(r.model_s);
    else
      out << ",,";
    out << "\n";
  } else {
    out << "tag: " << gap_tag_name(g.tag) << "\n"
        << "alpha = " << format_g12(g.alpha)
        << ", band = (" << format_g12(g.alpha) << ", "
        << format_g12(g.alpha + g.delta) << "]\n"
        << "S - alpha = " << format_g12(g.dist_alpha)
        << ", S - (alpha + delta) = " << format_g12(g.dist_band_top) << "\n";
    if (r.has_model)
      out << "nearest model: k=" << r.model_k
          << " lambda=" << format_g12(r.model_lambda)
          << " S=" << format_g12(r.model_s) << "\n";
  }
  return 0;
}

int run_scan(const RunConfig& cfg, std::ostream& out) {
  const std::vector<int> ns = parse_int_range(cfg.n_spec);
  const std::vector<double> hs = parse_real_range(cfg.h_spec);
  std::vector<ScanRow> rows;
  rows.reserve(ns.size() * hs.size());
  for (int n : ns)
    for (double H : hs) rows.push_back(scan_row(n, H, cfg.c, cfg.grid));
  long long passed = 0, failed = 0;
  double worst = std::numeric_limits<double>::infinity();
  for (const ScanRow& r : rows) {
    (r.ok ? passed : failed) += 1;
    worst = std::min({worst, r.problem_margin, r.band_phi_margin,
                      r.band_eta_margin});
  }
  if (rows.empty()) worst = 0.0;
  if (cfg.format == "json") {
    std::ostringstream config;
    config << "\"n\":" << jstr(cfg.n_spec) << ",\"H\":" << jstr(cfg.h_spec)
           << ",\"c\":" << jnum(cfg.c) << ",\"grid\":" << cfg.grid
           << ",\"format\":" << jstr(cfg.format);
    emit_json_head(out, cfg, config.str());
    for (size_t i = 0; i < rows.size(); ++i) {
      const ScanRow& r = rows[i];
      if (i) out << ',';
      out << "{\"n\":" << r.n << ",\"H\":" << jnum(r.H)
          << ",\"c\":" << jnum(cfg.c) << ",\"alpha\":" << jnum(r.alpha)
          << ",\"alpha_plus_delta\":" << jnum(r.alpha_plus_delta)
          << ",\"alpha_2\":" << jnum(r.alpha_2) << ",\"s_g3\":" << jnum(r.s_g3)
          << ",\"problem_margin\":" << jnum(r.problem_margin)
          << ",\"band_phi_margin\":" << jnum(r.band_phi_margin)
          << ",\"band_eta_margin\":" << jnum(r.band_eta_margin) << '}';
    }
    emit_json_tail(out, passed, failed, worst);
  } else if (cfg.format == "csv") {
    out << "n,H,c,alpha,alpha_plus_delta,alpha_2,s_g3,problem_margin,"
           "band_phi_margin,band_eta_margin\n";
    for (const ScanRow& r : rows) {
      out << r.n << ',' << format_g12(r.H) << ',' << format_g12(cfg.c) << ','
          << format_g12(r.alpha) << ',' << format_g12(r.alpha_plus_delta)
          << ',' << format_g12(r.alpha_2) << ',' << format_g12(r.s_g3) << ','
          << format_g12(r.problem_margin) << ','
          << format_g12(r.band_phi_margin) << ','
          << format_g12(r.band_eta_margin) << "\n";
    }
  } else {
    for (const ScanRow& r : rows) {
      out << "n=" << r.n << " H=" << format_g12(r.H)
          << "  alpha=" << format_g12(r.alpha)
          << "  band_top=" << format_g12(r.alpha_plus_delta)
          << "  problem_margin=" << format_g12(r.problem_margin)
          << "  band_margins=(" << format_g12(r.band_phi_margin) << ", "
          << format_g12(r.band_eta_margin) << ")\n";
    }
    out << rows.size() << " rows, " << passed << " ok\n";
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

std::string format_g12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::vector<int> parse_int_range(const std::string& spec) {
  std::string a, b, step;
  if (!split_range(spec, a, b, step))
    return {static_cast<int>(parse_ll(spec, "integer range"))};
  const long long lo = parse_ll(a, "integer range");
  const long long hi = parse_ll(b, "integer range");
  const long long st = step.empty() ? 1 : parse_ll(step, "integer range step");
  if (st <= 0) usage_error("integer range step must be positive");
  std::vector<int> out;
  for (long long v = lo; v <= hi; v += st)
    out.push_back(static_cast<int>(v));
  return out;
}

std::vector<double> parse_real_range(const std::string& spec) {
  std::string a, b, step;
  if (!split_range(spec, a, b, step))
    return {parse_double(spec, "real range")};
  if (step.empty())
    usage_error("real range requires an explicit step: 'a..b:step'");
  const double lo = parse_double(a, "real range");
  const double hi = parse_double(b, "real range");
  const double st = parse_double(step, "real range step");
  if (!(st > 0.0)) usage_error("real range step must be positive");
  std::vector<double> out;
  if (hi < lo) return out;
  const double q = (hi - lo) / st;
  long long count = static_cast<long long>(std::floor(q)) + 1;
  const long long rounded = std::llround(q);
  if (std::fabs(q - static_cast<double>(rounded)) <
      1e-9 * std::max(1.0, std::fabs(q)))
    count = rounded + 1;
  out.reserve(static_cast<size_t>(count));
  for (long long i = 0; i < count; ++i)
    out.push_back(lo + st * static_cast<double>(i));
  return out;
}

int run_command(const RunConfig& cfg, std::ostream& out) {
  if (cfg.format != "text" && cfg.format != "json" && cfg.format != "csv")
    usage_error("unknown format: " + cfg.format);
  if (cfg.command == "constants") return run_constants(cfg, out);
  if (cfg.command == "verify") return run_verify(cfg, out);
  if (cfg.command == "classify") return run_classify(cfg, out);
  if (cfg.command == "scan") return run_scan(cfg, out);
  usage_error("unknown command: " + cfg.command);
}

}  // namespace cmcgap
