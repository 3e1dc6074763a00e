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

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qql/qql.hpp"

namespace qql::cli {

namespace {

using nlohmann::ordered_json;

/// Invalid flag values detected after parsing; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& message) {
  if (!condition) {
    throw UsageError(message);
  }
}

/// Every flag the tool understands, resolved after parsing. Embedded in
/// each report so a run can be reproduced from its output alone.
struct RunConfig {
  std::string subcommand;
  std::size_t n = 0;
  std::size_t steps = 0;
  std::size_t kmax = 0;
  std::size_t k = 1;
  std::size_t trials = 0;
  std::size_t workspace_max = 2;
  std::optional<std::uint64_t> seed;
  std::optional<double> eps;
  double success = 0.0;
  std::string kind = "length_preserving";
  std::string in_path;
  std::string oracle_path;
  std::string input;
  std::string out_path;
  std::string format = "json";

  ordered_json to_json() const {
    ordered_json j = {{"subcommand", subcommand},
                      {"n", n},
                      {"steps", steps},
                      {"kmax", kmax},
                      {"k", k},
                      {"trials", trials},
                      {"workspace_max", workspace_max}};
    j["seed"] = seed ? ordered_json(*seed) : ordered_json(nullptr);
    j["eps"] = eps ? ordered_json(*eps) : ordered_json(nullptr);
    j["success"] = success;
    j["kind"] = kind;
    j["in"] = in_path;
    j["oracle"] = oracle_path;
    j["input"] = input;
    j["out"] = out_path;
    j["format"] = format;
    return j;
  }
};

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(
      std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void write_text(const RunConfig& cfg, const std::string& text,
                std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out_path);
  if (!file) {
    throw std::runtime_error("cannot write " + cfg.out_path);
  }
  file << text;
}

int emit_report(const RunConfig& cfg, const ExperimentReport& report,
                std::ostream& out) {
  std::string text;
  if (cfg.format == "csv") {
    text = report.to_csv();
  } else {
    ordered_json j = report.to_json();
    j["config"] = cfg.to_json();
    j["timestamp"] = utc_timestamp();
    text = j.dump(2) + "\n";
  }
  write_text(cfg, text, out);
  return report.pass() ? kExitOk : kExitCheckFailed;
}

int emit_json(const RunConfig& cfg, ordered_json j, std::ostream& out) {
  require(cfg.format == "json", "this subcommand only writes JSON");
  j["config"] = cfg.to_json();
  j["timestamp"] = utc_timestamp();
  write_text(cfg, j.dump(2) + "\n", out);
  return kExitOk;
}

void require_seed(const RunConfig& cfg) {
  require(cfg.seed.has_value(), "--seed is required for this subcommand");
}

int do_grover(const RunConfig& cfg, std::ostream& out) {
  require(cfg.n >= 1 && cfg.n <= 20, "--n must be in [1, 20]");
  require(cfg.kmax <= 100000, "--kmax must be at most 100000");
  const GroverSchedule g = success_curve(cfg.n, cfg.kmax);
  if (cfg.format == "csv") {
    write_text(cfg, g.to_csv(), out);
    return kExitOk;
  }
  ExperimentReport r;
  r.name = "grover";
  r.parameters = {{"n", cfg.n}, {"kmax", cfg.kmax}, {"marked", g.marked}};
  r.record_columns = {"k",
                      "success_exact",
                      "success_approx_4k2N",
                      "distance_exact",
                      "distance_approx_2kSqrtN",
                      "found_exact"};
  for (std::size_t k = 0; k <= g.kmax(); ++k) {
    r.records.push_back({static_cast<double>(k), g.separation[k],
                         g.separation_approx[k], g.distance[k],
                         g.distance_approx[k], g.found[k]});
  }
  const double size = std::ldexp(1.0, static_cast<int>(cfg.n));
  const auto small_k = static_cast<std::size_t>(std::sqrt(size) / 4.0);
  double worst_sep = 0.0;
  double worst_dist = 0.0;
  for (std::size_t k = 1; k <= std::min(small_k, g.kmax()); ++k) {
    worst_sep = std::max(worst_sep, std::abs(g.separation[k] / g.separation_approx[k] - 1.0));
    worst_dist = std::max(worst_dist, std::abs(g.distance[k] / g.distance_approx[k] - 1.0));
  }
  r.statistics = {{"found_at_0", g.found[0]},
                  {"small_k_limit", small_k},
                  {"max_rel_error_success", worst_sep},
                  {"max_rel_error_distance", worst_dist},
                  {"optimal_iterations", optimal_iterations(cfg.n)}};
  r.check("uniform_start", std::abs(g.found[0] - 1.0 / size) <= kTolerance);
  r.check("success_within_10pct_of_4k2N", worst_sep <= 0.10);
  r.check("distance_within_10pct_of_2kSqrtN", worst_dist <= 0.10);
  return emit_report(cfg, r, out);
}

int do_separation(const RunConfig& cfg, std::ostream& out) {
  require(cfg.n >= 1 && cfg.n <= 24, "--n must be in [1, 24]");
  const double size = std::ldexp(1.0, static_cast<int>(cfg.n));
  const double value = one_query_separation(cfg.n);
  const double closed = 4.0 / size - 4.0 / (size * size);
  ExperimentReport r;
  r.name = "separation";
  r.parameters = {{"n", cfg.n}};
  r.statistics = {{"success", value},
                  {"closed_form_4_over_N_minus_4_over_N2", closed},
                  {"classical_one_query", 1.0 / size},
                  {"ratio_to_classical", value * size}};
  r.check("matches_closed_form", std::abs(value - closed) <= kTolerance);
  return emit_report(cfg, r, out);
}

SweepOptions sweep_options(const RunConfig& cfg) {
  require_seed(cfg);
  require(cfg.n >= 1 && cfg.n <= 10, "--n must be in [1, 10]");
  require(cfg.steps >= 1 && cfg.steps <= 16, "--steps must be in [1, 16]");
  require(cfg.trials >= 1, "--trials must be positive");
  require(cfg.workspace_max <= 4, "--workspace-max must be at most 4");
  require(!cfg.eps || *cfg.eps > 0.0, "--eps must be positive");
  SweepOptions o;
  o.n_min = o.n_max = cfg.n;
  o.queries_min = o.queries_max = cfg.steps;
  o.workspace_max = cfg.workspace_max;
  o.trials = cfg.trials;
  o.eps = cfg.eps;
  o.seed = *cfg.seed;
  o.keep_records = cfg.format == "csv";
  return o;
}

int do_patchcount(const RunConfig& cfg, std::ostream& out) {
  require_seed(cfg);
  require(cfg.n >= 1 && cfg.n <= 10, "--n must be in [1, 10]");
  require(cfg.trials >= 1, "--trials must be positive");
  return emit_report(cfg, patch_counting(cfg.n, cfg.trials, *cfg.seed), out);
}

int do_permhybrid(const RunConfig& cfg, std::ostream& out) {
  require_seed(cfg);
  require(cfg.n >= 1 && cfg.n <= 16, "--n must be in [1, 16]");
  require(cfg.trials >= 1, "--trials must be positive");
  require(static_cast<double>(cfg.steps * (cfg.steps + 1) / 2) <
              std::ldexp(1.0, static_cast<int>(cfg.n)),
          "--steps must satisfy T(T+1)/2 < 2^n");
  if (!cfg.in_path.empty()) {
    const QueryProgram p = program_from_json(read_json_file(cfg.in_path));
    require(p.n() == cfg.n && p.num_queries() == cfg.steps,
            "program must have n = --n and exactly --steps calls");
    return emit_report(
        cfg, permutation_hybrid(cfg.n, cfg.steps, cfg.trials, *cfg.seed, p),
        out);
  }
  require(cfg.n + cfg.steps <= kMaxQubits,
          "--n plus --steps exceeds the simulator limit");
  return emit_report(
      cfg, permutation_hybrid(cfg.n, cfg.steps, cfg.trials, *cfg.seed), out);
}

int do_gap(const RunConfig& cfg, std::ostream& out) {
  require_seed(cfg);
  require(cfg.trials >= 1, "--trials must be positive");
  QueryProgram p = [&] {
    if (!cfg.in_path.empty()) {
      return program_from_json(read_json_file(cfg.in_path));
    }
    require(cfg.n >= 1 && cfg.n <= 16, "--n must be in [1, 16]");
    return grover_program(cfg.n, cfg.steps);
  }();
  require(p.n() >= 1, "program must query at least one bit");
  return emit_report(cfg, distinguish_gap(p, cfg.trials, *cfg.seed), out);
}

int do_boost(const RunConfig& cfg, std::ostream& out) {
  require(cfg.success >= 0.0 && cfg.success <= 1.0,
          "--success must lie in [0, 1]");
  require(cfg.k % 2 == 1, "--k must be odd");
  const double closed = majority_success(cfg.success, cfg.k);
  ExperimentReport r;
  r.name = "boost";
  r.parameters = {{"success", cfg.success}, {"k", cfg.k}};
  r.statistics = {{"majority_success", closed}};
  if (cfg.k + 1 <= kQubitBudget) {
    const QueryProgram boosted = boost_program(coin_program(cfg.success), cfg.k, 0);
    const double simulated = qubit_probability(
        run(boosted, Oracle::zero(0), 0).final_state, boosted.num_qubits() - 1,
        true);
    r.statistics["simulated_success"] = simulated;
    r.check("simulation_matches_binomial",
            std::abs(simulated - closed) <= kTolerance);
  }
  if (cfg.eps) {
    require(cfg.success > 0.5, "--eps needs --success > 1/2");
    require(*cfg.eps > 0.0 && *cfg.eps <= 1.0 - cfg.success,
            "--eps must lie in (0, 1 - success]");
    const double e = *cfg.eps;
    const std::size_t k = required_repetitions(e, cfg.success);
    r.statistics["required_repetitions"] = k;
    if (e < 1.0) {
      r.statistics["k_over_ln_inverse_eps"] = static_cast<double>(k) / std::log(1.0 / e);
    }
    r.check("required_repetitions_reaches_target",
            majority_success(cfg.success, k) >= 1.0 - e - 1e-12);
  }
  return emit_report(cfg, r, out);
}

int do_tidy(const RunConfig& cfg, std::ostream& out) {
  require(cfg.success >= 0.0 && cfg.success <= 1.0,
          "--success must lie in [0, 1]");
  require(cfg.k % 2 == 1, "--k must be odd");
  require(cfg.k + 1 <= kQubitBudget, "--k exceeds the qubit budget");
  QueryProgram p = coin_program(cfg.success);
  std::size_t answer = 0;
  if (cfg.k > 1) {
    p = boost_program(p, cfg.k, 0);
    answer = p.num_qubits() - 1;
  }
  const TidyReport t = tidiness(p, answer, Oracle::zero(0), 0, true);
  ExperimentReport r;
  r.name = "tidy";
  r.parameters = {{"success", cfg.success}, {"k", cfg.k}};
  r.statistics = {{"base_success", t.base_success},
                  {"tidiness", t.tidiness},
                  {"bound", t.bound}};
  r.check("tidiness_at_least_base_squared", t.tidiness >= t.bound - kTolerance);
  return emit_report(cfg, r, out);
}

int do_oracle_sample(const RunConfig& cfg, std::ostream& out) {
  require_seed(cfg);
  require(cfg.n >= 1 && cfg.n <= 20, "--n must be in [1, 20]");
  OracleKind kind;
  try {
    kind = parse_oracle_kind(cfg.kind);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return emit_json(cfg, oracle_to_json(sample_oracle(cfg.n, kind, *cfg.seed)),
                   out);
}

int do_oracle_inspect(const RunConfig& cfg, std::ostream& out) {
  const Oracle a = [&] {
    try {
      return oracle_from_json(read_json_file(cfg.in_path));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(e.what());
    }
  }();
  const std::uint64_t ones =
      (std::uint64_t{1} << a.output_width()) - 1;
  std::size_t marked = 0;
  for (std::uint64_t x = 0; x < a.domain_size(); ++x) {
    marked += a.answer_bit(x) ? 1 : 0;
  }
  std::vector<bool> hit(std::size_t{1} << a.output_width(), false);
  std::size_t image = 0;
  for (auto v : a.table()) {
    if (!hit[v]) {
      hit[v] = true;
      ++image;
    }
  }
  ordered_json j = {{"n", a.n()},
                    {"kind", std::string(to_string(a.kind()))},
                    {"domain_size", a.domain_size()},
                    {"image_size", image},
                    {"bijective", image == a.domain_size() &&
                                      a.output_width() == a.n()},
                    {"preimages_of_all_ones", a.preimage_count(ones)},
                    {"first_bit_ones", marked}};
  return emit_json(cfg, j, out);
}

QueryProgram load_program(const RunConfig& cfg) {
  try {
    return program_from_json(read_json_file(cfg.in_path));
  } catch (const std::invalid_argument& e) {
    throw UsageError(cfg.in_path + ": " + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(cfg.in_path + ": " + e.what());
  }
}

int do_program_validate(const RunConfig& cfg, std::ostream& out) {
  const QueryProgram p = load_program(cfg);
  ordered_json j = {{"valid", true},
                    {"n", p.n()},
                    {"workspace", p.workspace()},
                    {"T", p.num_queries()},
                    {"steps", p.steps().size()}};
  return emit_json(cfg, j, out);
}

int do_program_run(const RunConfig& cfg, std::ostream& out) {
  const QueryProgram p = load_program(cfg);
  const Oracle a = [&] {
    if (cfg.oracle_path.empty()) {
      return Oracle::zero(p.n());
    }
    try {
      return oracle_from_json(read_json_file(cfg.oracle_path));
    } catch (const std::exception& e) {
      throw UsageError(cfg.oracle_path + ": " + e.what());
    }
  }();
  require(a.n() == p.n(), "oracle length does not match the program's n");
  std::uint64_t input = 0;
  if (!cfg.input.empty()) {
    try {
      input = parse_bitstring(cfg.input, p.num_qubits());
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--input: ") + e.what());
    }
  }
  const RunResult result = run(p, a, input);
  ordered_json j = {{"final_state", state_to_json(result.final_state)},
                    {"trace", trace_to_json(result.trace)}};
  return emit_json(cfg, j, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Quantum query-model laboratory: exact state-vector experiments",
               "qql"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  const auto formats = CLI::IsMember({"json", "csv"});
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")
        ->check(formats)
        ->capture_default_str();
    sub->add_option("--out", cfg.out_path, "Write the report to a file");
  };
  auto seed = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "Random seed (mandatory)");
  };

  auto* grover = app.add_subcommand("grover", "Grover success curve");
  grover->add_option("--n", cfg.n, "Query bits")->required();
  grover->add_option("--kmax", cfg.kmax, "Largest iteration count")->required();
  common(grover);

  auto* separation =
      app.add_subcommand("separation", "One-query separation from psi0");
  separation->add_option("--n", cfg.n, "Query bits")->required();
  common(separation);

  auto* hybrid = app.add_subcommand(
      "hybrid", "Hybrid-argument bound over random programs and patches");
  auto* heavyset = app.add_subcommand(
      "heavyset", "Heavy-set size and light-string distance sweep");
  for (auto* sub : {hybrid, heavyset}) {
    sub->add_option("--n", cfg.n, "Query bits")->required();
    sub->add_option("--steps", cfg.steps, "Oracle calls T")->required();
    sub->add_option("--trials", cfg.trials, "Random instances")->required();
    sub->add_option("--eps", cfg.eps, "Epsilon (random per trial if unset)");
    sub->add_option("--workspace-max", cfg.workspace_max,
                    "Largest random workspace")
        ->capture_default_str();
    seed(sub);
    common(sub);
  }

  auto* patchcount = app.add_subcommand(
      "patchcount", "Preimage counting for random length-preserving oracles");
  patchcount->add_option("--n", cfg.n, "Bits")->required();
  patchcount->add_option("--trials", cfg.trials, "Sampled oracles")->required();
  seed(patchcount);
  common(patchcount);

  auto* permhybrid = app.add_subcommand(
      "permhybrid", "Random-transposition hybrid for permutation oracles");
  permhybrid->add_option("--n", cfg.n, "Bits")->required();
  permhybrid->add_option("--steps", cfg.steps, "Oracle calls T")->required();
  permhybrid->add_option("--trials", cfg.trials, "Trials")->required();
  permhybrid->add_option("--program", cfg.in_path,
                         "Program JSON (default: uniform queries)");
  seed(permhybrid);
  common(permhybrid);

  auto* gap = app.add_subcommand(
      "gap", "Empty vs single-marked oracle distinguishing gap");
  gap->add_option("--n", cfg.n, "Query bits for the default Grover program");
  gap->add_option("--steps", cfg.steps, "Grover iterations")
      ->capture_default_str();
  gap->add_option("--program", cfg.in_path, "Program JSON");
  gap->add_option("--trials", cfg.trials, "Marked strings")->required();
  seed(gap);
  common(gap);

  auto* boost = app.add_subcommand("boost", "Majority-vote boosting");
  boost->add_option("--success", cfg.success, "Base success p0")->required();
  boost->add_option("--k", cfg.k, "Odd number of copies")
      ->capture_default_str();
  boost->add_option("--eps", cfg.eps, "Target error for required_repetitions");
  common(boost);

  auto* tidy = app.add_subcommand("tidy", "Compute-copy-uncompute tidiness");
  tidy->add_option("--success", cfg.success, "Base success p0")->required();
  tidy->add_option("--k", cfg.k, "Boost with k copies first")
      ->capture_default_str();
  common(tidy);

  auto* oracle = app.add_subcommand("oracle", "Sample or inspect oracles");
  oracle->require_subcommand(1);
  auto* oracle_sample = oracle->add_subcommand("sample", "Sample an oracle");
  oracle_sample->add_option("--n", cfg.n, "Bits")->required();
  oracle_sample->add_option("--kind", cfg.kind,
                            "boolean | length_preserving | permutation")
      ->capture_default_str();
  seed(oracle_sample);
  common(oracle_sample);
  auto* oracle_inspect = oracle->add_subcommand("inspect", "Summarize an oracle");
  oracle_inspect->add_option("--in", cfg.in_path, "Oracle JSON")->required();
  common(oracle_inspect);

  auto* program = app.add_subcommand("program", "Validate or run programs");
  program->require_subcommand(1);
  auto* program_validate =
      program->add_subcommand("validate", "Check a program file");
  program_validate->add_option("--in", cfg.in_path, "Program JSON")->required();
  common(program_validate);
  auto* program_run = program->add_subcommand("run", "Run a program");
  program_run->add_option("--in", cfg.in_path, "Program JSON")->required();
  program_run->add_option("--oracle", cfg.oracle_path,
                          "Oracle JSON (default: all-zero)");
  program_run->add_option("--input", cfg.input,
                          "Input bitstring over all qubits (default zeros)");
  common(program_run);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "qql: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (grover->parsed()) {
      cfg.subcommand = "grover";
      return do_grover(cfg, out);
    }
    if (separation->parsed()) {
      cfg.subcommand = "separation";
      return do_separation(cfg, out);
    }
    if (hybrid->parsed()) {
      cfg.subcommand = "hybrid";
      const SweepOptions o = sweep_options(cfg);
      return emit_report(cfg, hybrid_sweep(o), out);
    }
    if (heavyset->parsed()) {
      cfg.subcommand = "heavyset";
      const SweepOptions o = sweep_options(cfg);
      return emit_report(cfg, heavy_set_sweep(o), out);
    }
    if (patchcount->parsed()) {
      cfg.subcommand = "patchcount";
      return do_patchcount(cfg, out);
    }
    if (permhybrid->parsed()) {
      cfg.subcommand = "permhybrid";
      return do_permhybrid(cfg, out);
    }
    if (gap->parsed()) {
      cfg.subcommand = "gap";
      return do_gap(cfg, out);
    }
    if (boost->parsed()) {
      cfg.subcommand = "boost";
      return do_boost(cfg, out);
    }
    if (tidy->parsed()) {
      cfg.subcommand = "tidy";
      return do_tidy(cfg, out);
    }
    if (oracle_sample->parsed()) {
      cfg.subcommand = "oracle sample";
      return do_oracle_sample(cfg, out);
    }
    if (oracle_inspect->parsed()) {
      cfg.subcommand = "oracle inspect";
      return do_oracle_inspect(cfg, out);
    }
    if (program_validate->parsed()) {
      cfg.subcommand = "program validate";
      return do_program_validate(cfg, out);
    }
    if (program_run->parsed()) {
      cfg.subcommand = "program run";
      return do_program_run(cfg, out);
    }
  } catch (const UsageError& e) {
    err << "qql " << cfg.subcommand << ": " << e.what() << "\n\n"
        << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "qql " << cfg.subcommand << ": " << e.what() << '\n';
    return kExitCheckFailed;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace qql::cli
