#include "hurzeta/cli/config.hpp"

#include <CLI11.hpp>

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <regex>

#include "hurzeta/parallel.hpp"

namespace hurzeta::cli {
namespace {

const std::map<std::string, Command> kCommands = {
    {"eval", Command::eval},         {"genfun", Command::genfun}, {"oddzeta", Command::oddzeta},
    {"validate", Command::validate}, {"sweep", Command::sweep},
};

const std::map<std::string, Format> kFormats = {
    {"json", Format::json}, {"csv", Format::csv}, {"human", Format::human}};

const std::vector<std::string> kSuites = {"theorem1",    "zero-integral",     "log-asymptotic",
                                          "oracle-grid", "endpoint-identity", "all"};

}  // namespace

std::string to_string(Command c) {
  for (const auto& [name, cmd] : kCommands) {
    if (cmd == c) return name;
  }
  return "unknown";
}

std::string to_string(Format f) {
  for (const auto& [name, fmt] : kFormats) {
    if (fmt == f) return name;
  }
  return "unknown";
}

const std::string& RunConfig::param(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end()) throw UsageError("missing required parameter --" + key);
  return it->second;
}

nlohmann::ordered_json RunConfig::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = to_string(command);
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : params) j["params"][k] = v;
  j["tolerances"] = {{"rel_tol", tolerances.rel_tol},
                     {"abs_tol", tolerances.abs_tol},
                     {"max_subdivisions", tolerances.max_subdivisions},
                     {"endpoint_margin", tolerances.endpoint_margin},
                     {"endpoint_tol", tolerances.endpoint_tol}};
  j["output_format"] = to_string(output_format);
  j["output_path"] = output_path ? nlohmann::ordered_json(*output_path) : nullptr;
  j["seed"] = seed;
  j["threads"] = threads;
  j["argv"] = argv;
  return j;
}

int parse_int(const std::string& text, const std::string& what) {
  char* end = nullptr;
  errno = 0;
  const long v = std::strtol(text.c_str(), &end, 10);
  if (text.empty() || *end != '\0' || errno != 0 || v < INT32_MIN || v > INT32_MAX) {
    throw UsageError(what + ": not an integer: '" + text + "'");
  }
  return static_cast<int>(v);
}

double parse_double(const std::string& text, const std::string& what) {
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || *end != '\0' || errno != 0 || !std::isfinite(v)) {
    throw UsageError(what + ": not a finite number: '" + text + "'");
  }
  return v;
}

Complex parse_complex(const std::string& text) {
  static const std::string num = R"([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)";
  static const std::regex pair("^(" + num + "),(" + num + ")$");
  static const std::regex real("^(" + num + ")$");
  static const std::regex imag_only("^(" + num + ")?i$");
  static const std::regex both("^(" + num + ")([+-](?:\\d+\\.?\\d*|\\.\\d+)(?:[eE][+-]?\\d+)?)?i$");
  std::smatch m;
  const std::string what = "complex value";
  if (std::regex_match(text, m, pair)) {
    return {parse_double(m[1], what), parse_double(m[2], what)};
  }
  if (std::regex_match(text, m, real)) return {parse_double(m[1], what), 0.0};
  if (std::regex_match(text, m, both) && m[2].matched) {
    return {parse_double(m[1], what), parse_double(m[2], what)};
  }
  if (std::regex_match(text, m, imag_only)) {
    const double im = m[1].matched ? parse_double(m[1], what) : 1.0;
    return {0.0, im};
  }
  throw UsageError("cannot parse complex value '" + text + "' (use re, re,im or re+imi)");
}

std::vector<double> parse_real_grid(const std::string& text) {
  const auto c1 = text.find(':');
  if (c1 == std::string::npos) return {parse_double(text, "grid value")};
  const auto c2 = text.find(':', c1 + 1);
  if (c2 == std::string::npos || text.find(':', c2 + 1) != std::string::npos) {
    throw UsageError("grid must be start:stop:count, got '" + text + "'");
  }
  const double start = parse_double(text.substr(0, c1), "grid start");
  const double stop = parse_double(text.substr(c1 + 1, c2 - c1 - 1), "grid stop");
  const int count = parse_int(text.substr(c2 + 1), "grid count");
  if (count < 1 || count > 1'000'000) throw UsageError("grid count must be in [1, 1e6]");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    out.push_back(count == 1 ? start : start + (stop - start) * i / (count - 1));
  }
  return out;
}

std::vector<int> parse_int_range(const std::string& text) {
  const auto c = text.find(':');
  if (c == std::string::npos) return {parse_int(text, "integer")};
  const int lo = parse_int(text.substr(0, c), "range start");
  const int hi = parse_int(text.substr(c + 1), "range end");
  if (hi < lo || hi - lo > 100'000) throw UsageError("bad integer range '" + text + "'");
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig cfg;
  cfg.argv = args;

  CLI::App app{"Hurwitz zeta function and generating-function toolkit", "hurzeta"};
  app.set_version_flag("--version", std::string(HURZETA_VERSION));
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  std::string output;
  std::uint64_t seed = kDefaultSeed;
  QuadratureSpec& tol = cfg.tolerances;
  app.add_option("--format", format, "json | csv | human")->check(CLI::IsMember({"json", "csv", "human"}));
  app.add_option("-o,--output", output, "write the report here instead of stdout");
  app.add_option("--seed", seed, "seed for randomized suites");
  app.add_option("--rel-tol", tol.rel_tol, "quadrature relative tolerance");
  app.add_option("--abs-tol", tol.abs_tol, "quadrature absolute tolerance");
  app.add_option("--max-subdivisions", tol.max_subdivisions, "quadrature panel budget");
  app.add_option("--endpoint-margin", tol.endpoint_margin, "cot-weighted endpoint neighborhood");

  std::map<std::string, std::string> raw;
  auto opt = [&raw](CLI::App* sub, const std::string& name, const std::string& help,
                    bool required = false, const std::string& def = "") {
    if (!def.empty()) raw[sub->get_name() + "." + name] = def;
    auto* o = sub->add_option("--" + name, raw[sub->get_name() + "." + name], help);
    if (required) o->required();
    return o;
  };

  auto* eval = app.add_subcommand("eval", "evaluate zeta(k, b) by formula and series oracle");
  opt(eval, "k", "integer k >= 2", true);
  opt(eval, "b", "complex b, e.g. 1.25, 1,0.5 or 1+0.5i", true);

  auto* genfun = app.add_subcommand("genfun", "closed form of sum_k x^k (zeta(k,b) - b^-k)");
  opt(genfun, "x", "x value or real grid start:stop:count", true);
  opt(genfun, "b", "complex b", true);
  opt(genfun, "kmax", "terms of the cross-check series", false, "120");
  opt(genfun, "recover", "also recover zeta(K, b) from the Taylor coefficient");
  opt(genfun, "radius", "circle radius for --recover (default r(b)/4)");
  opt(genfun, "nodes", "circle nodes for --recover (default max(32, 4K))");

  auto* oddzeta = app.add_subcommand("oddzeta", "zeta(2j+1) from the Bernoulli integral");
  opt(oddzeta, "j", "j in 1..10 or a range lo:hi", false, "1:5");

  auto* validate = app.add_subcommand("validate", "run a validation suite");
  opt(validate, "suite", "theorem1 | zero-integral | log-asymptotic | oracle-grid | "
                         "endpoint-identity | all", true)
      ->check(CLI::IsMember(kSuites));
  opt(validate, "draws", "random draws for endpoint-identity", false, "300");

  auto* sweep = app.add_subcommand("sweep", "zeta(k, b) over a grid of k and real b");
  opt(sweep, "k", "k or range lo:hi", false, "2:10");
  opt(sweep, "b", "real grid start:stop:count", true);
  opt(sweep, "im", "imaginary part added to every b", false, "0");
  opt(sweep, "oracle", "also evaluate the series oracle (0 or 1)", false, "1");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw EarlyExit{app.help()};
  } catch (const CLI::CallForAllHelp&) {
    throw EarlyExit{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::CallForVersion&) {
    throw EarlyExit{std::string(HURZETA_VERSION) + "\n"};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  CLI::App* chosen = app.get_subcommands().front();
  cfg.command = kCommands.at(chosen->get_name());
  const std::string prefix = chosen->get_name() + ".";
  for (const auto& [key, value] : raw) {
    if (key.rfind(prefix, 0) == 0 && !value.empty()) cfg.params[key.substr(prefix.size())] = value;
  }
  cfg.output_format = kFormats.at(format);
  if (!output.empty()) cfg.output_path = output;
  cfg.seed = seed;
  try {
    cfg.tolerances.validate();
    cfg.threads = max_threads_from_env();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

}  // namespace hurzeta::cli
