#include "hurzeta/cli/commands.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>

#include "hurzeta/evaluate.hpp"
#include "hurzeta/genfun.hpp"
#include "hurzeta/hurwitz.hpp"
#include "hurzeta/parallel.hpp"

namespace hurzeta::cli {
namespace {

using Clock = std::chrono::steady_clock;

Json quadrature_json(const QuadratureResult& q) {
  Json w = Json::array();
  for (auto x : q.warnings) w.push_back(std::string(to_string(x)));
  return Json{{"value", complex_json(q.value)},
              {"error_estimate", q.error_estimate},
              {"evaluations", q.evaluations},
              {"converged", q.converged},
              {"warnings", w}};
}

Json error_json(const Error& e) {
  return Json{{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
}

bool is_pole(Complex b) {
  return b.imag() == 0.0 && b.real() <= 0.0 && b.real() == std::round(b.real());
}

// Runs body(i, record) for every index on the worker pool, catching library
// errors into error records, and stamps index/status/timing.
std::vector<Json> run_records(std::size_t count, unsigned threads,
                              const std::function<void(std::size_t, Json&)>& body) {
  std::vector<Json> records(count);
  parallel_for(count, threads, [&](std::size_t i) {
    Json& rec = records[i];
    rec["index"] = i;
    rec["status"] = "ok";
    const auto t0 = Clock::now();
    try {
      body(i, rec);
    } catch (const Error& e) {
      rec["status"] = e.kind() == ErrorKind::unsupported ? "unsupported" : "error";
      rec["error"] = error_json(e);
    }
    if (!rec.contains("warnings")) rec["warnings"] = Json::array();
    rec["timing_s"] = std::chrono::duration<double>(Clock::now() - t0).count();
  });
  return records;
}

void tally(ReportEnvelope& report) {
  for (const auto& r : report.results) {
    const bool ok = r.value("status", "") == "ok" && r.value("pass", true);
    (ok ? report.passed : report.failed) += 1;
  }
}

Json eval_record(int k, Complex b, const RunConfig& cfg, bool with_breakdown, bool with_oracle) {
  RouteOptions opts;
  opts.spec = cfg.tolerances;
  const ZetaValue z = zeta(k, b, opts);

  Json out;
  out["value"] = complex_json(z.value);
  out["route"] = std::string(to_string(z.route));
  out["conjugated"] = z.conjugated;
  Json warnings = Json::array();
  if (z.route != Route::series) {
    for (const auto& w : z.breakdown.warnings) warnings.push_back(w);
    if (with_breakdown) {
      const EvalBreakdown& e = z.breakdown;
      out["breakdown"] = {{"term_half_bk", complex_json(e.term_half_bk)},
                          {"term_polylog_single", complex_json(e.term_polylog_single)},
                          {"term_polylog_sum", complex_json(e.term_polylog_sum)},
                          {"term_integral", complex_json(e.term_integral)},
                          {"total", complex_json(e.total)}};
      out["quadrature"] = quadrature_json(e.quadrature);
    }
  }
  out["notices"] = z.notices;
  if (with_oracle) {
    try {
      const double tol = 1e-15 * std::max(std::abs(z.value), 1e-280);
      const Complex oracle = hurwitz_series_reference(k, b, tol);
      out["oracle"] = complex_json(oracle);
      const double diff = std::abs(z.value - oracle);
      out["discrepancy_abs"] = diff;
      out["discrepancy_rel"] = diff / std::abs(oracle);
      if (diff > 1e-8 * std::abs(oracle)) warnings.push_back("oracle_disagreement");
    } catch (const Error& e) {
      out["oracle"] = nullptr;
      warnings.push_back(std::string("oracle_unavailable: ") + e.what());
    }
  }
  Json rec;
  rec["inputs"] = {{"k", k}, {"b", complex_json(b)}};
  rec["outputs"] = out;
  rec["error_estimate"] = z.error_estimate;
  rec["warnings"] = warnings;
  return rec;
}

void merge(Json& into, const Json& from) {
  for (auto it = from.begin(); it != from.end(); ++it) into[it.key()] = it.value();
}

ReportEnvelope cmd_eval(const RunConfig& cfg) {
  const int k = parse_int(cfg.param("k"), "--k");
  const Complex b = parse_complex(cfg.param("b"));
  if (k < 2) throw UsageError("--k must be >= 2");
  if (is_pole(b)) throw UsageError("b = " + cfg.param("b") + " is a pole of zeta(k, b)");
  if (std::abs(b.imag()) > kImCap) throw UsageError("|Im b| must be <= 5");

  ReportEnvelope report;
  report.results = run_records(1, 1, [&](std::size_t, Json& rec) {
    rec["inputs"] = {{"k", k}, {"b", complex_json(b)}};
    merge(rec, eval_record(k, b, cfg, true, true));
  });
  return report;
}

ReportEnvelope cmd_sweep(const RunConfig& cfg) {
  const std::vector<int> ks = parse_int_range(cfg.param("k"));
  const std::vector<double> res = parse_real_grid(cfg.param("b"));
  const double im = parse_double(cfg.param("im"), "--im");
  const bool oracle = parse_int(cfg.param("oracle"), "--oracle") != 0;
  for (int k : ks) {
    if (k < 2) throw UsageError("--k values must be >= 2");
  }
  if (std::abs(im) > kImCap) throw UsageError("|--im| must be <= 5");

  std::vector<std::pair<int, Complex>> points;
  for (int k : ks) {
    for (double re : res) points.emplace_back(k, Complex(re, im));
  }
  ReportEnvelope report;
  report.results = run_records(points.size(), cfg.threads, [&](std::size_t i, Json& rec) {
    const auto [k, b] = points[i];
    rec["inputs"] = {{"k", k}, {"b", complex_json(b)}};
    if (is_pole(b)) throw Error(ErrorKind::domain, "b is a pole of zeta(k, b)");
    merge(rec, eval_record(k, b, cfg, false, oracle));
  });
  return report;
}

ReportEnvelope cmd_genfun(const RunConfig& cfg) {
  const std::string& xs_text = cfg.param("x");
  std::vector<Complex> xs;
  if (xs_text.find(':') != std::string::npos) {
    for (double v : parse_real_grid(xs_text)) xs.emplace_back(v, 0.0);
  } else {
    xs.push_back(parse_complex(xs_text));
  }
  const Complex b = parse_complex(cfg.param("b"));
  const int kmax = parse_int(cfg.param("kmax"), "--kmax");
  if (kmax < 2) throw UsageError("--kmax must be >= 2");
  int recover = 0;
  if (cfg.has("recover")) {
    recover = parse_int(cfg.param("recover"), "--recover");
    if (recover < 2) throw UsageError("--recover must be >= 2");
  }
  const double r = genfun_radius(b);
  const double radius = cfg.has("radius") ? parse_double(cfg.param("radius"), "--radius") : r / 4;
  const int nodes = cfg.has("nodes") ? parse_int(cfg.param("nodes"), "--nodes")
                                     : std::max(32, 4 * recover);

  ReportEnvelope report;
  report.results = run_records(xs.size(), cfg.threads, [&](std::size_t i, Json& rec) {
    const Complex x = xs[i];
    rec["inputs"] = {{"x", complex_json(x)}, {"b", complex_json(b)}};
    const GenFunCase gc = classify_case(x, b);
    rec["case"] = std::string(to_string(gc.tag));
    const GenFunEval e = genfun_closed(x, b, cfg.tolerances);
    Json out;
    out["rational_term"] = complex_json(e.rational_term);
    out["trig_term"] = complex_json(e.trig_term);
    out["integral_term"] = complex_json(e.integral_term);
    out["total"] = complex_json(e.total);
    out["quadrature"] = quadrature_json(e.quadrature);
    Json warnings = e.warnings;
    if (std::abs(x) < 0.9 * r) {
      const SeriesSum s = genfun_series(x, b, kmax);
      out["series"] = complex_json(s.value);
      out["series_tail_bound"] = s.tail_bound;
      out["discrepancy_abs"] = std::abs(s.value - e.total);
    } else {
      warnings.push_back("outside_series_disc");
    }
    rec["outputs"] = out;
    rec["error_estimate"] = std::abs(x) * M_PI * e.quadrature.error_estimate;
    rec["warnings"] = warnings;
  });

  if (recover >= 2) {
    Json rec;
    rec["index"] = report.results.size();
    rec["status"] = "ok";
    rec["inputs"] = {{"k", recover}, {"b", complex_json(b)}, {"radius", radius}, {"nodes", nodes}};
    const auto t0 = Clock::now();
    try {
      const TaylorRecovery t = zeta_from_genfun(recover, b, radius, nodes, cfg.tolerances);
      rec["outputs"] = {{"zeta", complex_json(t.value)},
                        {"zeta_half_radius", complex_json(t.value_half_radius)},
                        {"relative_spread", t.relative_spread}};
      rec["warnings"] = t.warnings;
    } catch (const Error& e) {
      rec["status"] = "error";
      rec["error"] = error_json(e);
    }
    rec["timing_s"] = std::chrono::duration<double>(Clock::now() - t0).count();
    report.results.push_back(rec);
  }
  return report;
}

ReportEnvelope cmd_oddzeta(const RunConfig& cfg) {
  const std::vector<int> js = parse_int_range(cfg.param("j"));
  for (int j : js) {
    if (j < 1 || j > 10) throw UsageError("--j must lie in 1..10");
  }
  ReportEnvelope report;
  report.results = run_records(js.size(), cfg.threads, [&](std::size_t i, Json& rec) {
    const int j = js[i];
    rec["inputs"] = {{"j", j}};
    const double value = odd_zeta_integral(j, cfg.tolerances);
    const double ref = hurwitz_series_oracle(2 * j + 1, 1.0, 1e-16).real();
    rec["outputs"] = {{"zeta", value}, {"series", ref}, {"relative_error", std::abs(value - ref) / ref}};
    rec["warnings"] = Json::array();
  });
  return report;
}

ReportEnvelope cmd_validate(const RunConfig& cfg) {
  ReportEnvelope report;
  report.results = run_suite(cfg.param("suite"), cfg);
  for (std::size_t i = 0; i < report.results.size(); ++i) report.results[i]["index"] = i;
  return report;
}

}  // namespace

ReportEnvelope run_command(const RunConfig& config) {
  ReportEnvelope report;
  switch (config.command) {
    case Command::eval: report = cmd_eval(config); break;
    case Command::genfun: report = cmd_genfun(config); break;
    case Command::oddzeta: report = cmd_oddzeta(config); break;
    case Command::validate: report = cmd_validate(config); break;
    case Command::sweep: report = cmd_sweep(config); break;
  }
  report.tool_version = HURZETA_VERSION;
  report.config_echo = config.to_json();
  tally(report);

  switch (config.command) {
    case Command::validate:
    case Command::eval:
    case Command::oddzeta:
      report.exit_code = report.failed == 0 ? kExitOk : kExitNumeric;
      break;
    case Command::genfun:
    case Command::sweep:
      // Partial sweeps are normal; fail only if nothing worked.
      report.exit_code = report.passed > 0 ? kExitOk : kExitNumeric;
      break;
  }
  return report;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_args(args);
  } catch (const EarlyExit& e) {
    out << e.text;
    return kExitOk;
  } catch (const UsageError& e) {
    err << "hurzeta: usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  ReportEnvelope report;
  try {
    report = run_command(config);
  } catch (const UsageError& e) {
    err << "hurzeta: usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "hurzeta: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kExitNumeric;
  }

  const std::string text = render(report, config.output_format);
  if (config.output_path) {
    std::ofstream file(*config.output_path, std::ios::binary);
    if (!(file << text)) {
      err << "hurzeta: cannot write " << *config.output_path << "\n";
      return kExitNumeric;
    }
  } else {
    out << text;
  }
  return report.exit_code;
}

}  // namespace hurzeta::cli
