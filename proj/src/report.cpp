#include "thinset/report.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "thinset/errors.hpp"

namespace thinset {

namespace {

using ordered_json = nlohmann::ordered_json;

// JSON has no infinities or NaN; they travel as strings.
ordered_json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

double read_number(const ordered_json& j) {
  if (j.is_number()) return j.get<double>();
  std::string s = j.get<std::string>();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  return std::numeric_limits<double>::quiet_NaN();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_number(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

bool ExperimentReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

ReportFormat parse_report_format(const std::string& name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  throw UsageError("unknown report format '" + name + "'");
}

std::string emit_report(const ExperimentReport& r, ReportFormat format, bool include_metadata) {
  if (format == ReportFormat::csv) {
    std::string out = "experiment_id,name,statistic,fitted_constant,pass,detail\n";
    for (const auto& c : r.checks) {
      out += csv_field(r.experiment_id) + "," + csv_field(c.name) + "," + csv_number(c.statistic) +
             "," + csv_number(c.fitted_constant) + "," + (c.pass ? "true" : "false") + "," +
             csv_field(c.detail) + "\n";
    }
    return out;
  }
  ordered_json j;
  j["experiment_id"] = r.experiment_id;
  j["config"] = ordered_json::object();
  for (const auto& [k, v] : r.config) j["config"][k] = v;
  j["checks"] = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json cj;
    cj["name"] = c.name;
    cj["statistic"] = number(c.statistic);
    cj["fitted_constant"] = number(c.fitted_constant);
    cj["pass"] = c.pass;
    cj["detail"] = c.detail;
    j["checks"].push_back(std::move(cj));
  }
  j["all_pass"] = r.all_pass();
  j["artifacts"] = r.artifacts;
  if (include_metadata) j["metadata"] = {{"runtime_ms", r.runtime_ms}};
  return j.dump(2) + "\n";
}

ExperimentReport parse_report(const std::string& json_text) {
  ExperimentReport r;
  try {
    auto j = ordered_json::parse(json_text);
    r.experiment_id = j.at("experiment_id").get<std::string>();
    for (const auto& [k, v] : j.at("config").items()) r.config[k] = v.get<std::string>();
    for (const auto& cj : j.at("checks")) {
      CheckResult c;
      c.name = cj.at("name").get<std::string>();
      c.statistic = read_number(cj.at("statistic"));
      c.fitted_constant = read_number(cj.at("fitted_constant"));
      c.pass = cj.at("pass").get<bool>();
      c.detail = cj.value("detail", "");
      r.checks.push_back(std::move(c));
    }
    r.artifacts = j.value("artifacts", std::vector<std::string>{});
    if (j.contains("metadata")) r.runtime_ms = j["metadata"].value("runtime_ms", 0.0);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed report: ") + e.what());
  }
  return r;
}

void write_text_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << bytes;
  out.flush();
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace thinset
