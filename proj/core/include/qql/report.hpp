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

#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace qql {

inline constexpr int kReportVersion = 1;

/// Named pass/fail condition evaluated from a report's statistics.
struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Result of one experiment.
///
/// JSON layout (report_version 1):
///
///     {"report_version": 1, "name": ..., "parameters": {...},
///      "statistics": {...}, "checks": [{"name", "pass", "detail"}...],
///      "pass": bool, "records": {"columns": [...], "rows": [[...]...]}}
///
/// `records` is present only when per-trial rows were kept. A caller may
/// add a "timestamp" member; it is the only non-deterministic field.
struct ExperimentReport {
  std::string name;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  nlohmann::ordered_json statistics = nlohmann::ordered_json::object();
  std::vector<Check> checks;
  std::vector<std::string> record_columns;
  std::vector<std::vector<double>> records;

  void check(std::string check_name, bool pass, std::string detail = {});
  bool pass() const;

  nlohmann::ordered_json to_json() const;

  /// With records: one row per record under `record_columns`. Without:
  /// two columns, `metric,value`, listing statistics then checks (1/0).
  std::string to_csv() const;
};

/// Mean and sample standard deviation of a sequence.
struct SampleStats {
  double mean = 0.0;
  double stddev = 0.0;
  std::size_t count = 0;

  /// Standard error of the mean, stddev / sqrt(count).
  double standard_error() const;
};

SampleStats sample_stats(const std::vector<double>& values);

/// sqrt(p (1 - p) / trials) for an empirical proportion p.
double proportion_sigma(double p, std::size_t trials);

}  // namespace qql
