// SPDX-License-Identifier: Apache-2.0
//
// Structured experiment output: named checks with pass/fail verdicts, free
// form results, and numeric series written as CSV. JSON carries a schema tag.
#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace tlwavelab {

inline constexpr const char* kReportSchema = "tlwavelab/1";

using Json = nlohmann::ordered_json;

struct Check {
  std::string name;
  bool passed = false;
  double value = 0.0;
  double threshold = 0.0;
  std::string relation;  // how value compares to threshold, e.g. "<=", ">", "info"
};

struct Series {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

struct Report {
  std::string kind;
  Json params = Json::object();
  Json results = Json::object();
  std::vector<Check> checks;
  std::vector<std::pair<std::string, Series>> series;

  /// Adds a check whose verdict is `value relation threshold`.
  const Check& check(std::string name, double value, const std::string& relation, double threshold);
  /// Adds a check with an externally decided verdict.
  const Check& check_flag(std::string name, bool passed, double value = 0.0);
  Series& add_series(std::string name, std::vector<std::string> columns);

  bool passed() const;
  Json to_json() const;
  /// Writes <dir>/<kind>.json and <dir>/<kind>_<series>.csv; returns the JSON path.
  std::filesystem::path write(const std::filesystem::path& dir) const;
};

std::string series_csv(const Series& s);

}  // namespace tlwavelab
