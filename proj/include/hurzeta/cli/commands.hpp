#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "hurzeta/cli/config.hpp"
#include "hurzeta/cli/report.hpp"

namespace hurzeta::cli {

/// Runs the configured command. Throws UsageError for bad parameters; numeric
/// failures become error records and exit code 3.
ReportEnvelope run_command(const RunConfig& config);

/// Suite records for `validate`; each carries a boolean "pass".
std::vector<Json> run_suite(const std::string& name, const RunConfig& config);

/// Full CLI: parse, run, render. `args` excludes the program name. Returns the
/// process exit code.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hurzeta::cli
