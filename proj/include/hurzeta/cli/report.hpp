#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hurzeta/cli/config.hpp"
#include "hurzeta/common.hpp"

namespace hurzeta::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumeric = 3;

struct ReportEnvelope {
  std::string tool_version;
  Json config_echo;
  /// Each record: index, status, inputs, outputs, error_estimate, warnings,
  /// optional pass / error, timing_s.
  std::vector<Json> results;
  int passed = 0;
  int failed = 0;
  int exit_code = kExitOk;

  Json to_json() const;
};

/// {"re": .., "im": ..}
Json complex_json(Complex z);
Complex complex_from_json(const Json& j);

std::string render_json(const ReportEnvelope& report);
/// One row per record; nested keys joined with '.', complex values as
/// paired .re/.im columns, lists joined with ';'.
std::string render_csv(const ReportEnvelope& report);
std::string render_human(const ReportEnvelope& report);
std::string render(const ReportEnvelope& report, Format format);

/// %.17g
std::string format_double(double v);

}  // namespace hurzeta::cli
