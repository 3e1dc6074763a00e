// Copyright 2026 The qql Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qql/report.hpp"

#include <cmath>
#include <sstream>

namespace qql {

void ExperimentReport::check(std::string check_name, bool pass,
                             std::string detail) {
  checks.push_back(Check{std::move(check_name), pass, std::move(detail)});
}

bool ExperimentReport::pass() const {
  for (const auto& c : checks) {
    if (!c.pass) {
      return false;
    }
  }
  return true;
}

nlohmann::ordered_json ExperimentReport::to_json() const {
  nlohmann::ordered_json j;
  j["report_version"] = kReportVersion;
  j["name"] = name;
  j["parameters"] = parameters;
  j["statistics"] = statistics;
  auto& cs = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    cs.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  j["pass"] = pass();
  if (!record_columns.empty()) {
    j["records"] = {{"columns", record_columns}, {"rows", records}};
  }
  return j;
}

std::string ExperimentReport::to_csv() const {
  std::ostringstream out;
  out.precision(17);
  if (!record_columns.empty()) {
    for (std::size_t c = 0; c < record_columns.size(); ++c) {
      out << (c ? "," : "") << record_columns[c];
    }
    out << '\n';
    for (const auto& row : records) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        out << (c ? "," : "") << row[c];
      }
      out << '\n';
    }
    return out.str();
  }
  out << "metric,value\n";
  for (const auto& [key, value] : statistics.items()) {
    out << key << ',' << value.dump() << '\n';
  }
  for (const auto& c : checks) {
    out << "check:" << c.name << ',' << (c.pass ? 1 : 0) << '\n';
  }
  return out.str();
}

double SampleStats::standard_error() const {
  return count == 0 ? 0.0 : stddev / std::sqrt(static_cast<double>(count));
}

SampleStats sample_stats(const std::vector<double>& values) {
  SampleStats s;
  s.count = values.size();
  if (values.empty()) {
    return s;
  }
  double sum = 0.0;
  for (double v : values) {
    sum += v;
  }
  s.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double sq = 0.0;
    for (double v : values) {
      sq += (v - s.mean) * (v - s.mean);
    }
    s.stddev = std::sqrt(sq / static_cast<double>(values.size() - 1));
  }
  return s;
}

double proportion_sigma(double p, std::size_t trials) {
  return trials == 0 ? 0.0
                     : std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

}  // namespace qql
