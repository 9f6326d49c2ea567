#include "hurzeta/cli/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace hurzeta::cli {
namespace {

bool is_complex(const Json& j) {
  return j.is_object() && j.size() == 2 && j.contains("re") && j.contains("im");
}

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    }
  } else if (j.is_array()) {
    std::string joined;
    for (const auto& e : j) {
      if (!joined.empty()) joined += ';';
      joined += e.is_string() ? e.get<std::string>() : e.dump();
    }
    out.emplace_back(prefix, joined);
  } else if (j.is_number_float()) {
    out.emplace_back(prefix, format_double(j.get<double>()));
  } else if (j.is_string()) {
    out.emplace_back(prefix, j.get<std::string>());
  } else if (j.is_null()) {
    out.emplace_back(prefix, "");
  } else {
    out.emplace_back(prefix, j.dump());
  }
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string human_value(const Json& j) {
  if (is_complex(j)) {
    const double re = j["re"].get<double>();
    const double im = j["im"].get<double>();
    std::ostringstream s;
    s << format_double(re) << (std::signbit(im) ? " - " : " + ") << format_double(std::abs(im))
      << "i";
    return s.str();
  }
  if (j.is_number_float()) return format_double(j.get<double>());
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void human_block(const Json& j, const std::string& indent, std::ostringstream& s) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    if (v.is_object() && !is_complex(v)) {
      s << indent << it.key() << ":\n";
      human_block(v, indent + "  ", s);
    } else if (v.is_array()) {
      if (v.empty()) continue;
      s << indent << it.key() << ": ";
      for (std::size_t i = 0; i < v.size(); ++i) s << (i ? ", " : "") << human_value(v[i]);
      s << "\n";
    } else {
      s << indent << it.key() << ": " << human_value(v) << "\n";
    }
  }
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json complex_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Complex complex_from_json(const Json& j) { return {j.at("re").get<double>(), j.at("im").get<double>()}; }

Json ReportEnvelope::to_json() const {
  Json j;
  j["tool_version"] = tool_version;
  j["config_echo"] = config_echo;
  j["results"] = results;
  j["summary"] = {{"records", results.size()}, {"passed", passed}, {"failed", failed},
                  {"exit_code", exit_code}};
  return j;
}

std::string render_json(const ReportEnvelope& report) {
  // NaN is not JSON; the encoder writes null for it.
  return report.to_json().dump(2) + "\n";
}

std::string render_csv(const ReportEnvelope& report) {
  std::vector<std::string> columns;
  std::vector<std::vector<std::pair<std::string, std::string>>> rows;
  for (const auto& record : report.results) {
    std::vector<std::pair<std::string, std::string>> cells;
    flatten(record, "", cells);
    for (const auto& [key, value] : cells) {
      if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
    }
    rows.push_back(std::move(cells));
  }
  std::ostringstream s;
  for (std::size_t c = 0; c < columns.size(); ++c) s << (c ? "," : "") << csv_escape(columns[c]);
  s << "\n";
  for (const auto& cells : rows) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (c) s << ',';
      for (const auto& [key, value] : cells) {
        if (key == columns[c]) {
          s << csv_escape(value);
          break;
        }
      }
    }
    s << "\n";
  }
  return s.str();
}

std::string render_human(const ReportEnvelope& report) {
  std::ostringstream s;
  s << "hurzeta " << report.tool_version << "  " << report.config_echo.value("command", "")
    << "\n";
  for (const auto& record : report.results) {
    s << "\n[" << record.value("index", 0) << "] " << record.value("status", "") << "\n";
    Json body = record;
    body.erase("index");
    body.erase("status");
    const Json terms = body.contains("outputs") && body["outputs"].contains("breakdown")
                           ? body["outputs"]["breakdown"]
                           : Json();
    if (!terms.is_null()) body["outputs"].erase("breakdown");
    human_block(body, "  ", s);
    if (!terms.is_null()) {
      s << "  breakdown:\n";
      char line[160];
      std::snprintf(line, sizeof line, "    %-22s %26s %26s\n", "term", "re", "im");
      s << line;
      for (auto it = terms.begin(); it != terms.end(); ++it) {
        if (!is_complex(it.value())) continue;
        std::snprintf(line, sizeof line, "    %-22s %26.17g %26.17g\n", it.key().c_str(),
                      it.value()["re"].get<double>(), it.value()["im"].get<double>());
        s << line;
      }
    }
  }
  s << "\nsummary: " << report.results.size() << " records, " << report.passed << " passed, "
    << report.failed << " failed, exit " << report.exit_code << "\n";
  return s.str();
}

std::string render(const ReportEnvelope& report, Format format) {
  switch (format) {
    case Format::json: return render_json(report);
    case Format::csv: return render_csv(report);
    case Format::human: return render_human(report);
  }
  return render_json(report);
}

}  // namespace hurzeta::cli
