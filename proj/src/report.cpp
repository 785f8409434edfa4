// SPDX-License-Identifier: Apache-2.0
#include "tlwavelab/report.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "tlwavelab/io.hpp"

namespace tlwavelab {
namespace {

// JSON has no NaN/inf; keep them readable as strings.
Json number(double v) {
  if (std::isfinite(v)) return v;
  return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
}

}  // namespace

const Check& Report::check(std::string name, double value, const std::string& relation,
                           double threshold) {
  bool ok = false;
  if (relation == "<=") ok = value <= threshold;
  else if (relation == "<") ok = value < threshold;
  else if (relation == ">=") ok = value >= threshold;
  else if (relation == ">") ok = value > threshold;
  else throw std::invalid_argument("unknown relation " + relation);
  checks.push_back({std::move(name), ok, value, threshold, relation});
  return checks.back();
}

const Check& Report::check_flag(std::string name, bool passed, double value) {
  checks.push_back({std::move(name), passed, value, 0.0, "flag"});
  return checks.back();
}

Series& Report::add_series(std::string name, std::vector<std::string> columns) {
  series.emplace_back(std::move(name), Series{std::move(columns), {}});
  return series.back().second;
}

bool Report::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

Json Report::to_json() const {
  Json j;
  j["schema"] = kReportSchema;
  j["kind"] = kind;
  j["passed"] = passed();
  j["params"] = params;
  j["results"] = results;
  Json list = Json::array();
  for (const auto& c : checks) {
    Json e;
    e["name"] = c.name;
    e["passed"] = c.passed;
    e["value"] = number(c.value);
    if (c.relation != "flag") {
      e["relation"] = c.relation;
      e["threshold"] = number(c.threshold);
    }
    list.push_back(std::move(e));
  }
  j["checks"] = std::move(list);
  Json names = Json::array();
  for (const auto& [name, s] : series) names.push_back(kind + "_" + name + ".csv");
  if (!names.empty()) j["series"] = std::move(names);
  return j;
}

std::string series_csv(const Series& s) {
  std::ostringstream out;
  out.precision(17);
  for (std::size_t i = 0; i < s.columns.size(); ++i) out << (i ? "," : "") << s.columns[i];
  out << '\n';
  for (const auto& row : s.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << '\n';
  }
  return out.str();
}

std::filesystem::path Report::write(const std::filesystem::path& dir) const {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
  const auto json_path = dir / (kind + ".json");
  {
    std::ofstream out(json_path);
    if (!out) throw IoError("cannot write " + json_path.string());
    out << to_json().dump(2) << '\n';
  }
  for (const auto& [name, s] : series) {
    const auto path = dir / (kind + "_" + name + ".csv");
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    out << series_csv(s);
  }
  return json_path;
}

}  // namespace tlwavelab
