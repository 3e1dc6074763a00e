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

#include "qql/experiments.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "qql/grover.hpp"
#include "support/reference.hpp"

namespace qql {
namespace {

double stat(const ExperimentReport& r, const char* key) {
  return r.statistics.at(key).get<double>();
}

TEST(Separation, FourQubitExample) {
  EXPECT_NEAR(one_query_separation(4), 0.234375, 1e-12);
}

TEST(Separation, ClosedFormForAllSmallN) {
  for (std::size_t n = 1; n <= 12; ++n) {
    EXPECT_NEAR(one_query_separation(n), reference::one_query_closed_form(n), 1e-12)
        << n;
  }
  EXPECT_THROW(one_query_separation(0), std::invalid_argument);
}

TEST(Separation, DependsOnlyOnMarkedCount) {
  EXPECT_NEAR(one_query_separation(Oracle::marking(5, 3)),
              reference::one_query_closed_form(5), 1e-12);
  EXPECT_NEAR(one_query_separation(Oracle::zero(5)), 0.0, 1e-15);
  // Marking half the strings sends psi0 to an orthogonal state.
  std::vector<std::uint64_t> half(8, 0);
  for (std::size_t i = 0; i < 4; ++i) {
    half[i] = 1;
  }
  EXPECT_NEAR(one_query_separation(Oracle(3, OracleKind::boolean, half)), 1.0, 1e-12);
}

TEST(PatchCounting, MatchesExactFormulas) {
  const ExperimentReport r = patch_counting(6, 20000, 5);
  EXPECT_TRUE(r.pass());
  EXPECT_NEAR(stat(r, "exact_no_preimage"), reference::no_preimage(6), 1e-12);
  EXPECT_NEAR(stat(r, "exact_unique_preimage"), reference::unique_preimage(6), 1e-12);
  EXPECT_EQ(r.statistics.at("patch_violations").get<int>(), 0);
}

TEST(PatchCounting, ExactValuesAtSix) {
  EXPECT_NEAR(reference::no_preimage(6), 0.364987, 1e-6);
  EXPECT_NEAR(reference::unique_preimage(6), 0.370780, 1e-6);
}

TEST(PatchCounting, DeterministicPerSeed) {
  const auto a = patch_counting(4, 500, 9).to_json();
  const auto b = patch_counting(4, 500, 9).to_json();
  EXPECT_EQ(a, b);
  EXPECT_NE(a, patch_counting(4, 500, 10).to_json());
}

TEST(PatchCounting, RejectsBadArguments) {
  EXPECT_THROW(patch_counting(0, 10, 1), std::invalid_argument);
  EXPECT_THROW(patch_counting(11, 10, 1), std::invalid_argument);
  EXPECT_THROW(patch_counting(3, 0, 1), std::invalid_argument);
}

TEST(DistinguishGap, GroverProgramRespectsBothRoutes) {
  const ExperimentReport r = distinguish_gap(grover_program(5, 2), 32, 1);
  EXPECT_TRUE(r.pass());
  EXPECT_TRUE(r.parameters.at("exhaustive").get<bool>());
  EXPECT_NEAR(stat(r, "max_success"), reference::grover_separation(5, 2), 1e-10);
}

TEST(DistinguishGap, ClassicalProgramFindsOnlyQueriedStrings) {
  const std::vector<std::uint64_t> queried = {1, 6};
  const QueryProgram p = classical_program(3, queried);
  EXPECT_EQ(p.num_queries(), 2U);
  const ExperimentReport r = distinguish_gap(p, 8, 0);
  EXPECT_TRUE(r.pass());
  // Success 1 on the two queried strings, 0 elsewhere.
  EXPECT_NEAR(stat(r, "mean_success"), 2.0 / 8.0, 1e-12);
}

TEST(UniformQueryProgram, TraceIsFlat) {
  const QueryProgram p = uniform_query_program(3, 4);
  EXPECT_EQ(p.num_queries(), 4U);
  EXPECT_EQ(p.workspace(), 4U);
  const RunResult r = run(p, Oracle::zero(3), 0);
  for (const auto& row : r.trace.magnitudes) {
    for (double q : row) {
      EXPECT_NEAR(q, 1.0 / 8.0, 1e-15);
    }
  }
}

TEST(PermutationHybrid, SmallRunPasses) {
  const ExperimentReport r = permutation_hybrid(6, 3, 400, 21);
  EXPECT_TRUE(r.pass());
  // Uniform queries put 2^-n on every distinct pair (i, x_j); the x_j are
  // drawn with replacement, so the expected count of distinct strings
  // among k draws is N (1 - (1 - 1/N)^k).
  double expected = 0.0;
  for (int i = 0; i < 3; ++i) {
    expected += 1.0 - std::pow(63.0 / 64.0, 3 - i);
  }
  EXPECT_LE(stat(r, "mean_alpha"), 6.0 / 64.0);
  EXPECT_NEAR(stat(r, "mean_alpha"), expected, 4.0 * stat(r, "sigma_mean_alpha"));
}

TEST(PermutationHybrid, RejectsTooManyCalls) {
  EXPECT_THROW(permutation_hybrid(3, 4, 10, 1), std::invalid_argument);
  EXPECT_THROW(permutation_hybrid(3, 2, 0, 1), std::invalid_argument);
}

TEST(HybridSweep, SafeBoundHolds) {
  SweepOptions o;
  o.n_max = 4;
  o.queries_max = 4;
  o.trials = 200;
  o.seed = 3;
  const ExperimentReport r = hybrid_sweep(o);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.statistics.at("safe_bound_violations").get<int>(), 0);
  EXPECT_LE(stat(r, "max_distance_over_bound"), 1.0 + 1e-9);
}

TEST(HybridSweep, KeepsRecordsOnRequest) {
  SweepOptions o;
  o.n_max = 2;
  o.queries_max = 2;
  o.trials = 10;
  o.keep_records = true;
  const ExperimentReport r = hybrid_sweep(o);
  EXPECT_EQ(r.records.size(), 10U);
  EXPECT_EQ(r.records.front().size(), r.record_columns.size());
}

TEST(HeavySetSweep, BothChecksHold) {
  SweepOptions o;
  o.n_max = 4;
  o.queries_max = 4;
  o.trials = 200;
  o.seed = 4;
  EXPECT_TRUE(heavy_set_sweep(o).pass());
  o.eps = 0.3;
  EXPECT_TRUE(heavy_set_sweep(o).pass());
}

TEST(Report, CsvWithoutRecordsListsMetrics) {
  ExperimentReport r;
  r.name = "x";
  r.statistics = {{"a", 1.5}};
  r.check("ok", true);
  EXPECT_EQ(r.to_csv(), "metric,value\na,1.5\ncheck:ok,1\n");
  EXPECT_TRUE(r.pass());
  r.check("bad", false);
  EXPECT_FALSE(r.pass());
  EXPECT_EQ(r.to_json().at("report_version"), kReportVersion);
}

TEST(Report, SampleStats) {
  const SampleStats s = sample_stats({1.0, 2.0, 3.0});
  EXPECT_DOUBLE_EQ(s.mean, 2.0);
  EXPECT_DOUBLE_EQ(s.stddev, 1.0);
  EXPECT_NEAR(s.standard_error(), 1.0 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(proportion_sigma(0.5, 100), 0.05, 1e-15);
}

}  // namespace
}  // namespace qql
