#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hurzeta/common.hpp"
#include "hurzeta/quadrature.hpp"

namespace hurzeta::cli {

enum class Command { eval, genfun, oddzeta, validate, sweep };
enum class Format { json, csv, human };

inline constexpr std::uint64_t kDefaultSeed = 20240611;

std::string to_string(Command c);
std::string to_string(Format f);

/// Bad flags or parameters; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// --help or --version: print `text` and exit 0.
struct EarlyExit {
  std::string text;
};

struct RunConfig {
  Command command = Command::eval;
  /// Raw command-specific values as given on the command line (or defaults).
  std::map<std::string, std::string> params;
  QuadratureSpec tolerances{};
  Format output_format = Format::json;
  std::optional<std::string> output_path;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 1;
  std::vector<std::string> argv;

  const std::string& param(const std::string& key) const;
  bool has(const std::string& key) const { return params.count(key) != 0; }

  nlohmann::ordered_json to_json() const;
};

/// Throws UsageError, or EarlyExit for --help / --version.
RunConfig parse_args(const std::vector<std::string>& args);

/// "re", "re,im", "re+imi", "re-imi", "imi".
Complex parse_complex(const std::string& text);
/// "start:stop:count" (inclusive, count >= 1) or a single number.
std::vector<double> parse_real_grid(const std::string& text);
/// "lo:hi" inclusive or a single integer.
std::vector<int> parse_int_range(const std::string& text);
int parse_int(const std::string& text, const std::string& what);
double parse_double(const std::string& text, const std::string& what);

}  // namespace hurzeta::cli
