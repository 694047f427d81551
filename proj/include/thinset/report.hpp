#pragma once

#include <map>
#include <string>
#include <vector>

namespace thinset {

struct CheckResult {
  std::string name;
  double statistic = 0.0;
  double fitted_constant = 0.0;
  bool pass = false;
  std::string detail;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct ExperimentReport {
  std::string experiment_id;
  std::map<std::string, std::string> config;  // every parameter actually used
  std::vector<CheckResult> checks;
  double runtime_ms = 0.0;
  std::vector<std::string> artifacts;

  bool all_pass() const;
  friend bool operator==(const ExperimentReport&, const ExperimentReport&) = default;
};

enum class ReportFormat { json, csv };

ReportFormat parse_report_format(const std::string& name);

/// Fields are emitted in a fixed order. Wall-clock runtime goes into a
/// separate "metadata" object only when requested, so reports of identical
/// runs compare byte for byte.
std::string emit_report(const ExperimentReport& r, ReportFormat format, bool include_metadata = false);

/// Inverse of the JSON form; runtime_ms is read back from metadata if present.
ExperimentReport parse_report(const std::string& json_text);

/// Writes the bytes to `path`; throws std::runtime_error if the file cannot be written.
void write_text_file(const std::string& path, const std::string& bytes);

}  // namespace thinset
