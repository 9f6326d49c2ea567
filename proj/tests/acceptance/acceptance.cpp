// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.
// argv[1] is the path of the hurzeta executable (criterion 10).

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hurzeta/evaluate.hpp"
#include "hurzeta/genfun.hpp"
#include "hurzeta/hurwitz.hpp"
#include "hurzeta/special_functions.hpp"
#include "hurzeta/validation.hpp"

using namespace hurzeta;
using Json = nlohmann::ordered_json;

namespace {

constexpr double kPi = Constants::pi;
const double kSpecial = -16.0 + kPi * kPi + 8.0 * Constants::catalan;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

Outcome special_value() {
  const EvalBreakdown e = hurwitz_zeta(ZetaParams(2, 1.25));
  const double rel = std::abs(e.total - kSpecial) / kSpecial;
  const TaylorRecovery t = zeta_from_genfun(2, 1.25, 0.3, 32);
  const double diff = std::abs(t.value - kSpecial);
  return {rel <= 1e-10 && diff <= 1e-6,
          "formula rel " + fmt("%.2e", rel) + " (<= 1e-10), genfun abs " + fmt("%.2e", diff) + " (<= 1e-6)"};
}

Outcome oracle_grid() {
  const std::vector<Complex> bs = {0.25, 0.5, 1.25, 2.0, 3.75, {1.0, 0.5}, {2.0, 1.0}, {0.6, -0.2}};
  double worst = 0.0;
  for (Complex b : bs) {
    for (int k = 2; k <= 10; ++k) {
      const Complex z = zeta(k, b).value;
      const Complex o = hurwitz_series_reference(k, b, 1e-15 * std::pow(std::abs(b), -k));
      worst = std::max(worst, std::abs(z - o) / std::abs(o));
    }
  }
  return {worst <= 1e-8, "72 points, worst rel " + fmt("%.2e", worst) + " (<= 1e-8)"};
}

Outcome endpoint_identity() {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> kd(2, 10);
  std::uniform_real_distribution<double> red(0.0, 5.0);
  std::uniform_real_distribution<double> imd(-2.0, 2.0);
  double worst = 0.0;
  int draws = 0;
  while (draws < 300) {
    const int k = kd(rng);
    const Complex b(red(rng), draws % 2 == 0 ? 0.0 : imd(rng));
    if (dist_to_int(b) < 1e-3) continue;
    const ZetaParams p(k, b);
    double scale = 0.0;
    for (int t = 1; t <= 9; ++t) scale = std::max(scale, std::abs(bracket_kernel(p, t / 10.0)));
    worst = std::max(worst, std::abs(bracket_kernel(p, 0.0)) / scale);
    ++draws;
  }
  return {worst <= 1e-11, "300 draws, worst |B(0)|/scale " + fmt("%.2e", worst) + " (<= 1e-11)"};
}

Outcome realness_shift() {
  RouteOptions opts;
  opts.rel_target = 0.0;
  opts.abs_target = 1e-11;
  double real_worst = 0.0;
  double shift_worst = 0.0;
  for (double b : {0.1, 0.25, 0.4, 0.5, 0.75, 0.9, 1.25, 1.6, 2.0, 2.3, 3.75, 4.5}) {
    for (int k = 2; k <= 10; ++k) {
      const Complex z0 = zeta(k, b, opts).value;
      const Complex z1 = zeta(k, b + 1.0, opts).value;
      real_worst = std::max(real_worst, std::abs(z0.imag()) / (1.0 + std::abs(z0)));
      shift_worst = std::max(shift_worst, std::abs(z0 - z1 - std::pow(b, -k)));
    }
  }
  return {real_worst <= 1e-10 && shift_worst <= 1e-9,
          "|Im|/(1+|z|) " + fmt("%.2e", real_worst) + " (<= 1e-10), shift " + fmt("%.2e", shift_worst) +
              " (<= 1e-9)"};
}

Outcome generating_function() {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst_excess = 0.0;
  int points = 0;
  auto draw_b = [&](GenFunBranch branch) -> Complex {
    switch (branch) {
      case GenFunBranch::b_zero: return 0.0;
      case GenFunBranch::b_pos_int: return std::floor(1 + 4 * unit(rng));
      case GenFunBranch::b_neg_int: return -std::floor(1 + 4 * unit(rng));
      default: return Complex(-3.0 + 6.0 * unit(rng), unit(rng) < 0.5 ? 0.0 : -1.0 + 2.0 * unit(rng));
    }
  };
  for (GenFunBranch branch :
       {GenFunBranch::generic, GenFunBranch::b_zero, GenFunBranch::b_pos_int, GenFunBranch::b_neg_int}) {
    int got = 0;
    while (got < 25) {
      const Complex b = draw_b(branch);
      const GenFunCase gc = classify_case(0.1, b);
      if (gc.tag != branch || gc.near_branch_boundary) continue;
      const double r = genfun_radius(b);
      const Complex x = std::polar(0.85 * r * unit(rng), 2 * kPi * unit(rng));
      GenFunEval e;
      try {
        e = genfun_closed(x, b);
      } catch (const Error& err) {
        if (err.kind() == ErrorKind::ill_conditioned) continue;
        throw;
      }
      const SeriesSum s = genfun_series(x, b, 120);
      const double err = std::abs(e.total - s.value);
      worst_excess = std::max(worst_excess, err / std::max(1e-6, s.tail_bound));
      ++got;
      ++points;
    }
  }
  double vanish = 0.0;
  for (Complex b : {Complex(0.3), Complex(0.7), Complex(-1.3), Complex(0.6, -0.2), Complex(2.2, 0.4)}) {
    vanish = std::max(vanish, std::abs(genfun_closed(2.0 * b, b).integral_term));
  }
  return {worst_excess <= 1.0 && vanish <= 1e-9,
          std::to_string(points) + " points, worst err/max(1e-6, tail) " + fmt("%.2e", worst_excess) +
              " (<= 1), |integral at x=2b| " + fmt("%.2e", vanish) + " (<= 1e-9)"};
}

Outcome odd_zeta() {
  double worst = 0.0;
  for (int j = 1; j <= 5; ++j) {
    const int s = 2 * j + 1;
    double dirichlet = 0.0;
    for (int n = 2000; n >= 1; --n) dirichlet += std::pow(static_cast<double>(n), -s);
    dirichlet += std::pow(2000.5, 1 - s) / (s - 1);
    worst = std::max(worst, std::abs(odd_zeta_integral(j) - dirichlet) / dirichlet);
  }
  return {worst <= 1e-9, "j = 1..5, worst rel " + fmt("%.2e", worst) + " (<= 1e-9)"};
}

Outcome theorem1() {
  const std::vector<long> ns = {100, 1000, 10000};
  std::string detail;
  bool ok = true;
  for (int k : {0, 1, 3}) {
    const ConvergenceReport r = theorem1_scan(k, ns);
    ok = ok && r.ok();
    detail += "k=" + std::to_string(k) + " " + std::string(to_string(r.verdict));
    if (std::isfinite(r.fitted_rate)) detail += " rate " + fmt("%.3f", r.fitted_rate);
    detail += "; ";
  }
  const ConvergenceReport z = zero_integral_scan({1, 2, 5, 10, 20, 50, 100}, 1e-8);
  double zmax = 0.0;
  for (double d : z.deviation) zmax = std::max(zmax, d);
  ok = ok && z.ok();
  return {ok, detail + "zero-integral max " + fmt("%.2e", zmax) + " (<= 1e-8)"};
}

Outcome log_asymptotic() {
  ScanOptions opts;
  opts.spec.rel_tol = 1e-13;
  opts.spec.abs_tol = 1e-15;
  bool ok = true;
  std::string detail;
  for (double k : {2.0, 3.0}) {
    const ConvergenceReport r = log_asymptotic_scan(k, {100, 1000, 10000}, opts);
    ok = ok && r.ok();
    detail += "k=" + fmt("%g", k) + " dev";
    for (double d : r.deviation) detail += " " + fmt("%.1e", d);
    detail += "; ";
  }
  return {ok, detail + "each decade >= 2x"};
}

Outcome sinh_identity() {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const Complex c = std::polar(2.8 * unit(rng), 2 * kPi * unit(rng));
    const double u = unit(rng);
    const int terms = sinh_kernel_terms_for(c, 1e-12);
    worst = std::max(worst, std::abs(sinh_kernel_series(c, u, terms) - sinh_kernel(c, u)));
  }
  return {worst <= 1e-10, "20 draws |c| < 2.8, worst " + fmt("%.2e", worst) + " (<= 1e-10)"};
}

// ---- criterion 10 ---------------------------------------------------------

struct Proc {
  int code = -1;
  std::string out;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += (c == '\'') ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

Proc run_cli(const std::string& exe, const std::vector<std::string>& args) {
  std::string cmd = quote(exe);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " 2>/dev/null";
  Proc p;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return p;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) p.out.append(buf, n);
  const int status = pclose(pipe);
  p.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return p;
}

void strip_timing(Json& j) {
  if (j.is_object()) {
    j.erase("timing_s");
    for (auto& [k, v] : j.items()) strip_timing(v);
  } else if (j.is_array()) {
    for (auto& v : j) strip_timing(v);
  }
}

void flatten(const Json& j, const std::string& prefix, std::map<std::string, double>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    }
  } else if (j.is_number()) {
    out[prefix] = j.get<double>();
  }
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows(1);
  std::string cell;
  bool quoted = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        cell += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cell += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      rows.back().push_back(cell);
      cell.clear();
    } else if (c == '\n') {
      rows.back().push_back(cell);
      cell.clear();
      rows.emplace_back();
    } else {
      cell += c;
    }
  }
  if (rows.back().empty()) rows.pop_back();
  return rows;
}

Outcome cli_blackbox(const std::string& exe) {
  std::vector<std::string> failures;
  auto expect = [&](const std::vector<std::string>& args, int code) {
    const Proc p = run_cli(exe, args);
    if (p.code != code) {
      std::string a;
      for (const auto& s : args) a += " " + s;
      failures.push_back("exit " + std::to_string(p.code) + " != " + std::to_string(code) + " for" + a);
    }
    return p;
  };

  expect({"eval", "--k", "2", "--b", "1.25"}, 0);
  expect({"eval", "--k", "2", "--b", "1"}, 0);
  expect({"eval", "--k", "2", "--b", "0"}, 2);
  expect({"eval", "--k", "2"}, 2);
  expect({"eval", "--k", "2", "--b", "1.25", "--bogus"}, 2);
  expect({"--rel-tol", "-1", "eval", "--k", "2", "--b", "1.25"}, 2);
  expect({"genfun", "--x", "0.6", "--b", "0.3"}, 0);
  expect({"genfun", "--x", "0.3", "--b", "0.5"}, 3);
  expect({"validate", "--suite", "endpoint-identity", "--seed", "7"}, 0);
  expect({"validate", "--suite", "zero-integral"}, 0);
  expect({"validate", "--suite", "nope"}, 2);
  expect({"--help"}, 0);

  // Determinism: identical reruns, and a rerun from the echoed argv.
  const std::vector<std::string> sweep = {"--seed", "7", "sweep", "--k", "2:4", "--b", "0.2:2.2:4", "--im", "-0.3"};
  Proc a = expect(sweep, 0);
  Proc b = expect(sweep, 0);
  Json ja;
  Json jb;
  try {
    ja = Json::parse(a.out);
    jb = Json::parse(b.out);
    std::vector<std::string> echoed = ja["config_echo"]["argv"].get<std::vector<std::string>>();
    Json jc = Json::parse(run_cli(exe, echoed).out);
    strip_timing(ja);
    strip_timing(jb);
    strip_timing(jc);
    if (ja != jb) failures.push_back("json rerun differs");
    if (ja != jc) failures.push_back("json rerun from echoed config differs");
  } catch (const std::exception& e) {
    failures.push_back(std::string("json parse: ") + e.what());
  }

  // -o writes the same bytes as stdout (modulo timing).
  const auto tmp = std::filesystem::temp_directory_path() / ("hurzeta_accept_" + std::to_string(::getpid()) + ".json");
  std::vector<std::string> with_o = sweep;
  with_o.insert(with_o.begin(), {"-o", tmp.string()});
  expect(with_o, 0);
  try {
    std::ifstream f(tmp);
    std::stringstream ss;
    ss << f.rdbuf();
    Json jf = Json::parse(ss.str());
    strip_timing(jf);
    jf["config_echo"].erase("argv");
    jf["config_echo"].erase("output_path");
    Json jref = ja;
    jref["config_echo"].erase("argv");
    jref["config_echo"].erase("output_path");
    if (jf != jref) failures.push_back("-o output differs from stdout");
  } catch (const std::exception& e) {
    failures.push_back(std::string("-o read: ") + e.what());
  }
  std::filesystem::remove(tmp);

  // CSV and JSON of the same run carry identical numbers.
  std::vector<std::string> csv_args = sweep;
  csv_args.insert(csv_args.begin(), {"--format", "csv"});
  const Proc c = expect(csv_args, 0);
  const auto rows = parse_csv(c.out);
  if (rows.size() != ja["results"].size() + 1) {
    failures.push_back("csv row count " + std::to_string(rows.size()));
  } else {
    const auto& header = rows[0];
    int compared = 0;
    for (std::size_t r = 1; r < rows.size(); ++r) {
      std::map<std::string, double> flat;
      flatten(ja["results"][r - 1], "", flat);
      for (std::size_t col = 0; col < header.size() && col < rows[r].size(); ++col) {
        auto it = flat.find(header[col]);
        if (it == flat.end()) continue;
        if (std::strtod(rows[r][col].c_str(), nullptr) != it->second) {
          failures.push_back("csv/json mismatch at " + header[col]);
        }
        ++compared;
      }
    }
    if (compared == 0) failures.push_back("no numeric csv cells compared");
  }

  if (failures.empty()) return {true, "exit codes, reruns, -o, csv/json agree"};
  std::string d;
  for (const auto& f : failures) d += f + "; ";
  return {false, d};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string exe = argc > 1 ? argv[1] : "hurzeta";
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "special value zeta(2, 5/4)", 1, special_value},
      {2, "oracle grid", 30, oracle_grid},
      {3, "endpoint identity", 5, endpoint_identity},
      {4, "realness and shift", 10, realness_shift},
      {5, "generating function", 60, generating_function},
      {6, "odd zeta integral", 10, odd_zeta},
      {7, "oscillatory limit scan", 120, theorem1},
      {8, "log asymptotic scan", 120, log_asymptotic},
      {9, "sinh kernel series", 1, sinh_identity},
      {10, "cli black box", 10, [&exe] { return cli_blackbox(exe); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = t < c.budget_s;
    const bool pass = o.pass && in_time;
    failed += pass ? 0 : 1;
    std::printf("[%s] %2d %-28s %.2fs/%gs  %s%s\n", pass ? "PASS" : "FAIL", c.id, c.name, t, c.budget_s,
                o.detail.c_str(), in_time ? "" : "  (over time budget)");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
