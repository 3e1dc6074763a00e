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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

namespace qql::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json report(const Result& r) {
  auto j = nlohmann::json::parse(r.out);
  j.erase("timestamp");
  return j;
}

TEST(Cli, HelpExitsZero) {
  const Result r = invoke({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("grover"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(invoke({"grover", "--n", "4"}).code, kExitUsage);
  EXPECT_EQ(invoke({"grover", "--n", "four", "--kmax", "2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"grover", "--n", "0", "--kmax", "2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"separation", "--n", "4", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(invoke({"boost", "--success", "0.7", "--k", "4"}).code, kExitUsage);
  EXPECT_EQ(invoke({"oracle", "sample", "--n", "3", "--kind", "nope", "--seed", "1"}).code,
            kExitUsage);
  EXPECT_EQ(invoke({"program", "validate", "--in", "/nonexistent.json"}).code,
            kExitUsage);
}

TEST(Cli, SeedIsMandatory) {
  const Result r = invoke({"hybrid", "--n", "2", "--steps", "2", "--trials", "5"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("--seed"), std::string::npos);
}

TEST(Cli, SeparationReport) {
  const Result r = invoke({"separation", "--n", "4"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = report(r);
  EXPECT_NEAR(j["statistics"]["success"].get<double>(), 0.234375, 1e-12);
  EXPECT_EQ(j["config"]["n"], 4);
  EXPECT_TRUE(j["pass"].get<bool>());
}

TEST(Cli, GroverCsv) {
  const Result r = invoke({"grover", "--n", "10", "--kmax", "8", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.rfind(
                "k,success_exact,success_approx_4k2N,distance_exact,"
                "distance_approx_2kSqrtN,found_exact\n",
                0),
            0U);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 10);
}

TEST(Cli, HybridExample) {
  const Result r = invoke({"hybrid", "--n", "6", "--steps", "4", "--trials", "1000",
                           "--eps", "0.25", "--seed", "7"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(report(r)["statistics"]["holds"].get<bool>());
}

TEST(Cli, DeterministicApartFromTimestamp) {
  const std::vector<std::string> args = {"heavyset", "--n", "3", "--steps", "3",
                                         "--trials", "50", "--seed", "11"};
  const Result a = invoke(args);
  const Result b = invoke(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(report(a), report(b));
  EXPECT_TRUE(nlohmann::json::parse(a.out).contains("timestamp"));
  const Result c = invoke({"heavyset", "--n", "3", "--steps", "3", "--trials", "50",
                           "--seed", "12"});
  EXPECT_NE(report(a), report(c));
}

TEST(Cli, TidyExample) {
  const Result r = invoke({"tidy", "--success", "0.9"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NEAR(report(r)["statistics"]["tidiness"].get<double>(), 0.81, 1e-9);
}

TEST(Cli, BoostReportsRepetitions) {
  const Result r = invoke({"boost", "--success", "0.6666666666666666", "--k", "3",
                           "--eps", "0.01"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = report(r);
  EXPECT_NEAR(j["statistics"]["majority_success"].get<double>(), 20.0 / 27.0, 1e-12);
  EXPECT_EQ(j["statistics"]["required_repetitions"], 47);
}

TEST(Cli, PatchcountAndPermhybrid) {
  EXPECT_EQ(invoke({"patchcount", "--n", "4", "--trials", "2000", "--seed", "1"}).code,
            kExitOk);
  EXPECT_EQ(invoke({"permhybrid", "--n", "5", "--steps", "3", "--trials", "100",
                    "--seed", "1"})
                .code,
            kExitOk);
  EXPECT_EQ(invoke({"permhybrid", "--n", "3", "--steps", "4", "--trials", "100",
                    "--seed", "1"})
                .code,
            kExitUsage);
  EXPECT_EQ(invoke({"gap", "--n", "4", "--steps", "2", "--trials", "16", "--seed", "1"})
                .code,
            kExitOk);
}

TEST(Cli, OracleAndProgramFiles) {
  const std::string oracle_path = "cli_test_oracle.json";
  ASSERT_EQ(invoke({"oracle", "sample", "--n", "2", "--kind", "boolean", "--seed", "3",
                    "--out", oracle_path})
                .code,
            kExitOk);
  const Result inspect = invoke({"oracle", "inspect", "--in", oracle_path});
  ASSERT_EQ(inspect.code, kExitOk) << inspect.err;
  EXPECT_EQ(nlohmann::json::parse(inspect.out)["n"], 2);

  const std::string program_path = "cli_test_program.json";
  {
    std::ofstream f(program_path);
    f << R"({"n": 2, "workspace": 0, "steps": [
              {"kind": "unitary", "gate": "h_all"},
              {"kind": "query", "mode": "phase"},
              {"kind": "unitary", "gate": "diffusion"}]})";
  }
  const Result valid = invoke({"program", "validate", "--in", program_path});
  ASSERT_EQ(valid.code, kExitOk) << valid.err;
  EXPECT_EQ(nlohmann::json::parse(valid.out)["T"], 1);

  {
    std::ofstream f("cli_test_marked.json");
    f << R"({"n": 2, "kind": "boolean", "table": ["0", "0", "1", "0"]})";
  }
  const Result ran = invoke({"program", "run", "--in", program_path, "--oracle",
                             "cli_test_marked.json"});
  ASSERT_EQ(ran.code, kExitOk) << ran.err;
  const auto j = nlohmann::json::parse(ran.out);
  EXPECT_NEAR(std::abs(j["final_state"]["re"][2].get<double>()), 1.0, 1e-12);
  EXPECT_EQ(j["trace"]["T"], 1);
}

TEST(Cli, UnwritableOutputExitsOne) {
  EXPECT_EQ(invoke({"separation", "--n", "3", "--out", "/nonexistent/dir/r.json"}).code,
            kExitCheckFailed);
}

TEST(Cli, BoostEpsNeedsMajorityAdvantage) {
  EXPECT_EQ(invoke({"boost", "--success", "0.4", "--eps", "0.1"}).code, kExitUsage);
}

}  // namespace
}  // namespace qql::cli
