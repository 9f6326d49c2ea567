#include <chrono>
#include <cmath>
#include <random>

#include "hurzeta/cli/commands.hpp"
#include "hurzeta/evaluate.hpp"
#include "hurzeta/hurwitz.hpp"
#include "hurzeta/parallel.hpp"
#include "hurzeta/validation.hpp"

namespace hurzeta::cli {
namespace {

using Clock = std::chrono::steady_clock;

const std::vector<long> kDecades = {100, 1000, 10000};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Json nan_to_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json report_record(const std::string& suite, const ConvergenceReport& r, double timing) {
  Json n = Json::array();
  Json obs = Json::array();
  Json tgt = Json::array();
  Json dev = Json::array();
  Json err = Json::array();
  for (std::size_t i = 0; i < r.n_values.size(); ++i) {
    n.push_back(r.n_values[i]);
    obs.push_back(r.observed[i]);
    tgt.push_back(r.target[i]);
    dev.push_back(r.deviation[i]);
    err.push_back(r.error_estimate[i]);
  }
  double worst_err = 0.0;
  for (double e : r.error_estimate) worst_err = std::max(worst_err, e);
  Json warnings = Json::array();
  for (std::size_t i = 0; i < r.converged.size(); ++i) {
    if (!r.converged[i]) warnings.push_back("quadrature_not_converged at n=" + std::to_string(r.n_values[i]));
  }
  return Json{{"suite", suite},
              {"status", "ok"},
              {"inputs", {{"parameter", r.parameter}, {"n", n}}},
              {"outputs",
               {{"observed", obs},
                {"target", tgt},
                {"deviation", dev},
                {"target_model", r.target_model},
                {"fitted_rate", nan_to_null(r.fitted_rate)},
                {"rate_window", {nan_to_null(r.rate_lo), nan_to_null(r.rate_hi)}},
                {"verdict", std::string(to_string(r.verdict))},
                {"note", r.note}}},
              {"error_estimate", worst_err},
              {"warnings", warnings},
              {"pass", r.ok()},
              {"timing_s", timing}};
}

ScanOptions scan_options(const RunConfig& cfg) {
  ScanOptions opts;
  opts.spec = cfg.tolerances;
  opts.threads = cfg.threads;
  return opts;
}

std::vector<Json> suite_theorem1(const RunConfig& cfg) {
  std::vector<Json> out;
  for (int k : {0, 1, 3}) {
    const auto t0 = Clock::now();
    const ConvergenceReport r = theorem1_scan(k, kDecades, scan_options(cfg));
    out.push_back(report_record("theorem1", r, seconds_since(t0)));
  }
  return out;
}

std::vector<Json> suite_zero_integral(const RunConfig& cfg) {
  const auto t0 = Clock::now();
  const ConvergenceReport r = zero_integral_scan({1, 2, 5, 10, 20, 50, 100}, 1e-8, scan_options(cfg));
  return {report_record("zero-integral", r, seconds_since(t0))};
}

std::vector<Json> suite_log_asymptotic(const RunConfig& cfg) {
  ScanOptions opts = scan_options(cfg);
  // The residual shrinks like n^-2; the default tolerances would swamp it by n = 1e4.
  opts.spec.rel_tol = std::min(opts.spec.rel_tol, 1e-13);
  opts.spec.abs_tol = std::min(opts.spec.abs_tol, 1e-15);
  std::vector<Json> out;
  for (double k : {2.0, 3.0}) {
    const auto t0 = Clock::now();
    const ConvergenceReport r = log_asymptotic_scan(k, kDecades, opts);
    out.push_back(report_record("log-asymptotic", r, seconds_since(t0)));
  }
  return out;
}

std::vector<Json> suite_oracle_grid(const RunConfig& cfg) {
  const std::vector<Complex> bs = {0.25, 0.5, 1.25, 2.0, 3.75, {1.0, 0.5}, {2.0, 1.0}, {0.6, -0.2}};
  std::vector<std::pair<int, Complex>> points;
  for (Complex b : bs) {
    for (int k = 2; k <= 10; ++k) points.emplace_back(k, b);
  }
  std::vector<Json> out(points.size());
  parallel_for(points.size(), cfg.threads, [&](std::size_t i) {
    const auto t0 = Clock::now();
    const auto [k, b] = points[i];
    Json rec{{"suite", "oracle-grid"}, {"status", "ok"}, {"inputs", {{"k", k}, {"b", complex_json(b)}}}};
    try {
      RouteOptions opts;
      opts.spec = cfg.tolerances;
      const ZetaValue z = zeta(k, b, opts);
      const Complex oracle = hurwitz_series_reference(k, b, 1e-15 * std::pow(std::abs(b), -k));
      const double rel = std::abs(z.value - oracle) / std::abs(oracle);
      rec["outputs"] = {{"value", complex_json(z.value)},
                        {"oracle", complex_json(oracle)},
                        {"relative_error", rel},
                        {"route", std::string(to_string(z.route))}};
      rec["error_estimate"] = z.error_estimate;
      rec["warnings"] = z.breakdown.warnings;
      rec["pass"] = rel <= 1e-8;
    } catch (const Error& e) {
      rec["status"] = "error";
      rec["error"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
      rec["pass"] = false;
    }
    rec["timing_s"] = seconds_since(t0);
    out[i] = std::move(rec);
  });
  return out;
}

std::vector<Json> suite_endpoint_identity(const RunConfig& cfg) {
  const auto t0 = Clock::now();
  constexpr int kDraws = 300;
  constexpr double kThreshold = 1e-11;
  const int draws = cfg.has("draws") ? parse_int(cfg.param("draws"), "--draws") : kDraws;
  if (draws < 1) throw UsageError("--draws must be >= 1");

  // Draw serially so the sample does not depend on the thread count.
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<int> k_dist(2, 10);
  std::uniform_real_distribution<double> re_dist(0.0, 5.0);
  std::uniform_real_distribution<double> im_dist(-2.0, 2.0);
  std::vector<std::pair<int, Complex>> points;
  while (static_cast<int>(points.size()) < draws) {
    const int k = k_dist(rng);
    const Complex b(re_dist(rng), (points.size() % 2 == 0) ? 0.0 : im_dist(rng));
    if (dist_to_int(b) < 1e-3) continue;
    points.emplace_back(k, b);
  }

  std::vector<double> ratio(points.size());
  parallel_for(points.size(), cfg.threads, [&](std::size_t i) {
    const ZetaParams p(points[i].first, points[i].second);
    double scale = 0.0;
    for (int t = 1; t <= 9; ++t) scale = std::max(scale, std::abs(bracket_kernel(p, t / 10.0)));
    ratio[i] = std::abs(bracket_kernel(p, 0.0)) / scale;
  });

  std::size_t worst = 0;
  int failures = 0;
  for (std::size_t i = 0; i < ratio.size(); ++i) {
    if (ratio[i] > ratio[worst]) worst = i;
    if (!(ratio[i] <= kThreshold)) ++failures;
  }
  return {Json{{"suite", "endpoint-identity"},
               {"status", "ok"},
               {"inputs", {{"seed", cfg.seed}, {"draws", draws}, {"threshold", kThreshold}}},
               {"outputs",
                {{"worst_ratio", ratio[worst]},
                 {"worst_k", points[worst].first},
                 {"worst_b", complex_json(points[worst].second)},
                 {"failures", failures}}},
               {"error_estimate", 0.0},
               {"warnings", Json::array()},
               {"pass", failures == 0},
               {"timing_s", seconds_since(t0)}}};
}

}  // namespace

std::vector<Json> run_suite(const std::string& name, const RunConfig& config) {
  if (name == "theorem1") return suite_theorem1(config);
  if (name == "zero-integral") return suite_zero_integral(config);
  if (name == "log-asymptotic") return suite_log_asymptotic(config);
  if (name == "oracle-grid") return suite_oracle_grid(config);
  if (name == "endpoint-identity") return suite_endpoint_identity(config);
  if (name == "all") {
    std::vector<Json> all;
    for (const char* s : {"theorem1", "zero-integral", "log-asymptotic", "oracle-grid", "endpoint-identity"}) {
      for (auto& rec : run_suite(s, config)) all.push_back(std::move(rec));
    }
    return all;
  }
  throw UsageError("unknown suite '" + name + "'");
}

}  // namespace hurzeta::cli
