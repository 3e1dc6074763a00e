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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qql/random.hpp"

namespace qql {

namespace {

double pow2(std::size_t n) { return std::ldexp(1.0, static_cast<int>(n)); }

std::uint64_t all_ones(std::size_t n) { return (std::uint64_t{1} << n) - 1; }

}  // namespace

double one_query_separation(std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("one_query_separation needs n >= 1");
  }
  return one_query_separation(Oracle::marking(n, all_ones(n)));
}

double one_query_separation(const Oracle& a) {
  const StateVector psi0 = StateVector::uniform(a.n());
  std::vector<std::size_t> reg(a.n());
  for (std::size_t q = 0; q < reg.size(); ++q) {
    reg[q] = q;
  }
  const StateVector psi1 = phase_query(psi0, a, reg);
  return 1.0 - std::norm(inner_product(psi0, psi1));
}

ExperimentReport patch_counting(std::size_t n, std::size_t trials,
                                std::uint64_t seed) {
  if (n < 1 || n > 10) {
    throw std::invalid_argument("patch_counting needs 1 <= n <= 10");
  }
  if (trials == 0) {
    throw std::invalid_argument("patch_counting needs at least one trial");
  }
  const std::uint64_t target = all_ones(n);
  std::size_t none = 0;
  std::size_t unique = 0;
  std::size_t patched = 0;
  std::size_t violations = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = Rng::for_trial(seed, t);
    const Oracle a = sample_oracle(n, OracleKind::length_preserving, rng);
    const std::size_t count = a.preimage_count(target);
    if (count == 1) {
      ++unique;
    }
    if (count == 0) {
      ++none;
      const std::uint64_t y = rng.below(a.domain_size());
      const Oracle a_y = patch(a, OraclePatch{y, target});
      ++patched;
      if (a_y.preimage_count(target) != 1) {
        ++violations;
      }
    }
  }

  const double size = pow2(n);
  const double exact_none = std::pow((size - 1.0) / size, size);
  const double exact_unique = std::pow((size - 1.0) / size, size - 1.0);
  const double p_none = static_cast<double>(none) / static_cast<double>(trials);
  const double p_unique =
      static_cast<double>(unique) / static_cast<double>(trials);
  const double sigma_none = proportion_sigma(p_none, trials);
  const double sigma_unique = proportion_sigma(p_unique, trials);
  const double inv_e = 1.0 / std::numbers::e;

  ExperimentReport r;
  r.name = "patchcount";
  r.parameters = {{"n", n}, {"trials", trials}, {"seed", seed}};
  r.statistics = {
      {"p_no_preimage", p_none},
      {"sigma_no_preimage", sigma_none},
      {"exact_no_preimage", exact_none},
      {"p_unique_preimage", p_unique},
      {"sigma_unique_preimage", sigma_unique},
      {"exact_unique_preimage", exact_unique},
      {"inverse_e", inv_e},
      {"patched_samples", patched},
      {"patch_violations", violations},
  };
  r.check("no_preimage_within_3sigma",
          std::abs(p_none - exact_none) <= 3.0 * sigma_none);
  r.check("no_preimage_at_least_quarter", p_none >= 0.25);
  r.check("unique_preimage_within_3sigma",
          std::abs(p_unique - exact_unique) <= 3.0 * sigma_unique);
  r.check("unique_preimage_at_least_inverse_e",
          p_unique >= inv_e - 3.0 * sigma_unique);
  r.check("patch_gives_unique_preimage", violations == 0);
  return r;
}

QueryProgram classical_program(std::size_t n,
                               std::span<const std::uint64_t> queried) {
  QueryProgram p(n, queried.size());
  for (std::size_t i = 0; i < queried.size(); ++i) {
    if (queried[i] >= (std::uint64_t{1} << n)) {
      throw std::invalid_argument("queried string out of range");
    }
    auto load = [&] {
      for (std::size_t q = 0; q < n; ++q) {
        if ((queried[i] >> (n - 1 - q)) & 1U) {
          p.x(q);
        }
      }
    };
    load();
    p.bit_query(n + i);
    load();
  }
  return p;
}

QueryProgram uniform_query_program(std::size_t n, std::size_t num_queries) {
  QueryProgram p(n, num_queries);
  p.h_all();
  for (std::size_t i = 0; i < num_queries; ++i) {
    p.bit_query(n + i);
  }
  return p;
}

ExperimentReport distinguish_gap(const QueryProgram& p, std::size_t trials,
                                 std::uint64_t seed) {
  const std::size_t n = p.n();
  if (n == 0) {
    throw std::invalid_argument("distinguish_gap needs n >= 1");
  }
  const std::uint64_t domain = std::uint64_t{1} << n;
  const bool exhaustive = trials >= domain;
  const std::size_t count = exhaustive ? domain : trials;

  const Oracle empty = Oracle::zero(n);
  const RunResult reference = run(p, empty, 0);
  const double t = static_cast<double>(p.num_queries());

  std::vector<double> successes;
  std::vector<double> distances;
  std::size_t tv_violations = 0;
  std::size_t hybrid_violations = 0;
  double max_success = 0.0;
  Rng rng(seed);

  ExperimentReport r;
  r.name = "distinguish_gap";
  r.record_columns = {"y", "success", "distance", "mass", "bound"};
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t y = exhaustive ? i : rng.below(domain);
    const Oracle marked = Oracle::marking(n, y);
    const StateVector final_y = run(p, marked, 0).final_state;
    const double fidelity =
        std::norm(inner_product(reference.final_state, final_y));
    const double success = std::clamp(1.0 - fidelity, 0.0, 1.0);
    const double distance = euclidean_distance(reference.final_state, final_y);
    // The two-outcome test on the empty-oracle run never accepts, so the
    // outcome distributions differ by 2 * success in total variation.
    if (2.0 * success > 4.0 * distance + kTolerance) {
      ++tv_violations;
    }
    const double mass = reference.trace.total_for(y);
    const double bound = 2.0 * std::sqrt(t * mass);
    if (distance > bound + kTolerance) {
      ++hybrid_violations;
    }
    successes.push_back(success);
    distances.push_back(distance);
    max_success = std::max(max_success, success);
    r.records.push_back({static_cast<double>(y), success, distance, mass, bound});
  }

  const SampleStats s = sample_stats(successes);
  const SampleStats d = sample_stats(distances);
  const double quadratic = 4.0 * t * t / pow2(n);
  const double sigma = exhaustive ? 0.0 : s.standard_error();

  r.parameters = {{"n", n},
                  {"T", p.num_queries()},
                  {"trials", trials},
                  {"seed", seed},
                  {"exhaustive", exhaustive}};
  r.statistics = {{"mean_success", s.mean},
                  {"sigma_mean_success", sigma},
                  {"max_success", max_success},
                  {"quadratic_law_4T2_over_N", quadratic},
                  {"classical_T_over_N", t / pow2(n)},
                  {"mean_distance", d.mean},
                  {"false_positive_rate", 0.0},
                  {"tv_violations", tv_violations},
                  {"hybrid_violations", hybrid_violations}};
  r.check("tv_le_4_distance_every_y", tv_violations == 0);
  r.check("hybrid_bound_every_y", hybrid_violations == 0);
  r.check("mean_success_within_quadratic_law",
          s.mean <= quadratic + 3.0 * sigma + kTolerance);
  return r;
}

ExperimentReport permutation_hybrid(std::size_t n, std::size_t num_queries,
                                    std::size_t trials, std::uint64_t seed) {
  return permutation_hybrid(n, num_queries, trials, seed,
                            uniform_query_program(n, num_queries));
}

ExperimentReport permutation_hybrid(std::size_t n, std::size_t num_queries,
                                    std::size_t trials, std::uint64_t seed,
                                    const QueryProgram& program) {
  const std::size_t big_t = num_queries;
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("permutation_hybrid needs 1 <= n <= " +
                                std::to_string(kMaxQubits));
  }
  if (static_cast<double>(big_t * (big_t + 1) / 2) >= pow2(n)) {
    throw std::invalid_argument(
        "permutation_hybrid needs T(T+1)/2 < 2^n");
  }
  if (trials == 0) {
    throw std::invalid_argument("permutation_hybrid needs at least one trial");
  }
  if (program.n() != n || program.num_queries() != big_t) {
    throw std::invalid_argument(
        "program must act on n-bit queries and make exactly T calls");
  }

  const std::uint64_t domain = std::uint64_t{1} << n;
  const std::uint64_t target = domain - 1;
  std::vector<double> alphas;
  std::vector<double> distances;
  std::vector<double> to_last;
  std::vector<double> to_previous;
  std::size_t split_membership = 0;
  std::size_t alpha_over_t = 0;
  std::size_t bound_violations = 0;

  ExperimentReport r;
  r.name = "permhybrid";
  r.record_columns = {"trial", "alpha", "distance", "hybrid_to_AT",
                      "hybrid_to_AT_minus_1"};
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Rng rng = Rng::for_trial(seed, trial);
    std::vector<std::uint64_t> xs(big_t + 2);
    for (auto& x : xs) {
      x = rng.below(domain);
    }
    Oracle pi0 = sample_oracle(n, OracleKind::permutation, rng);
    {
      // Condition on pi_0(x_0) = 1^n by swapping two images.
      std::vector<std::uint64_t> table(pi0.table().begin(), pi0.table().end());
      const auto at = std::find(table.begin(), table.end(), target);
      std::swap(*at, table[xs[0]]);
      pi0 = Oracle(n, OracleKind::permutation, std::move(table));
    }
    const std::vector<Oracle> chain = transposition_chain(pi0, xs);

    double alpha = 0.0;
    double distance = 0.0;
    double d_last = 0.0;
    double d_prev = 0.0;
    if (big_t > 0) {
      const Oracle& a_last = chain[big_t];
      const Oracle& a_prev = chain[big_t - 1];
      std::vector<Oracle> per_call(chain.begin() + 1,
                                   chain.begin() + 1 + big_t);

      const StateVector initial = StateVector::basis(program.num_qubits(), 0);
      const RunResult hybrid = run_patched_traced(
          program, a_last, patch_towards(program, a_last, per_call), initial);
      std::set<std::pair<std::size_t, std::uint64_t>> pairs;
      for (std::size_t i = 0; i < big_t; ++i) {
        for (std::size_t j = i + 1; j <= big_t; ++j) {
          pairs.emplace(i, xs[j]);
        }
      }
      for (const auto& [i, y] : pairs) {
        alpha += hybrid.trace.magnitudes[i][y];
      }

      const HybridReport last = hybrid_check(
          program, a_last, patch_towards(program, a_last, per_call), 0);
      const HybridReport prev = hybrid_check(
          program, a_prev, patch_towards(program, a_prev, per_call), 0);
      bound_violations += (last.holds ? 0 : 1) + (prev.holds ? 0 : 1);
      d_last = last.distance;
      d_prev = prev.distance;
      distance = euclidean_distance(run(program, a_last, 0).final_state,
                                    run(program, a_prev, 0).final_state);
      // 1^n has preimage x_T under A_T and x_{T-1} under A_{T-1}.
      const std::uint64_t first_bit = domain >> 1;
      if (((xs[big_t] ^ xs[big_t - 1]) & first_bit) != 0) {
        ++split_membership;
      }
    }
    if (alpha > static_cast<double>(big_t) + kTolerance) {
      ++alpha_over_t;
    }
    alphas.push_back(alpha);
    distances.push_back(distance);
    to_last.push_back(d_last);
    to_previous.push_back(d_prev);
    r.records.push_back(
        {static_cast<double>(trial), alpha, distance, d_last, d_prev});
  }

  const SampleStats a = sample_stats(alphas);
  const SampleStats d = sample_stats(distances);
  const SampleStats dl = sample_stats(to_last);
  const SampleStats dp = sample_stats(to_previous);
  const double t = static_cast<double>(big_t);
  const double pair_bound = t * (t + 1.0) / 2.0 / pow2(n);
  const double jensen_bound = std::sqrt(2.0 * t * a.mean);

  r.parameters = {{"n", n}, {"T", big_t}, {"trials", trials}, {"seed", seed}};
  r.statistics = {
      {"mean_alpha", a.mean},
      {"sigma_mean_alpha", a.standard_error()},
      {"pair_bound_T1choose2_over_N", pair_bound},
      {"max_alpha", alphas.empty() ? 0.0
                                   : *std::max_element(alphas.begin(),
                                                       alphas.end())},
      {"mean_distance", d.mean},
      {"sigma_mean_distance", d.standard_error()},
      {"jensen_bound_sqrt_2T_mean_alpha", jensen_bound},
      {"mean_hybrid_to_AT", dl.mean},
      {"mean_hybrid_to_AT_minus_1", dp.mean},
      {"split_membership_fraction",
       static_cast<double>(split_membership) / static_cast<double>(trials)},
      {"safe_bound_violations", bound_violations},
      {"alpha_over_T", alpha_over_t},
  };
  r.check("mean_alpha_within_pair_bound",
          a.mean <= pair_bound + 3.0 * a.standard_error() + kTolerance);
  r.check("mean_distance_within_jensen_bound",
          d.mean <= jensen_bound + 3.0 * d.standard_error() + kTolerance);
  r.check("safe_hybrid_bound_every_trial", bound_violations == 0);
  r.check("alpha_at_most_T", alpha_over_t == 0);
  return r;
}

namespace {

struct SweepInstance {
  QueryProgram program;
  Oracle oracle;
  double eps;
};

SweepInstance draw_instance(const SweepOptions& o, Rng& rng) {
  if (o.n_min < 1 || o.n_min > o.n_max || o.queries_min > o.queries_max) {
    throw std::invalid_argument("sweep ranges are empty or start at n = 0");
  }
  RandomProgramOptions po;
  po.n = o.n_min + rng.below(o.n_max - o.n_min + 1);
  po.queries = o.queries_min + rng.below(o.queries_max - o.queries_min + 1);
  po.workspace = rng.below(o.workspace_max + 1);
  QueryProgram program = random_program(po, rng);
  const OracleKind kind =
      rng.coin() ? OracleKind::boolean : OracleKind::length_preserving;
  Oracle oracle = sample_oracle(po.n, kind, rng);
  const double eps = o.eps ? *o.eps : 0.1 + 0.9 * rng.uniform();
  return SweepInstance{std::move(program), std::move(oracle), eps};
}

nlohmann::ordered_json sweep_parameters(const SweepOptions& o) {
  nlohmann::ordered_json j = {{"n_min", o.n_min},
                              {"n_max", o.n_max},
                              {"T_min", o.queries_min},
                              {"T_max", o.queries_max},
                              {"workspace_max", o.workspace_max},
                              {"trials", o.trials},
                              {"seed", o.seed}};
  if (o.eps) {
    j["eps"] = *o.eps;
  } else {
    j["eps"] = "uniform[0.1,1]";
  }
  return j;
}

// Oracle differing from `a` only at y, with the Boolean view flipped there.
Oracle flipped_at(const Oracle& a, std::uint64_t y) {
  const std::uint64_t flip = std::uint64_t{1} << (a.output_width() - 1);
  return patch(a, OraclePatch{y, a(y) ^ flip});
}

}  // namespace

ExperimentReport hybrid_sweep(const SweepOptions& o) {
  ExperimentReport r;
  r.name = "hybrid";
  r.parameters = sweep_parameters(o);
  if (o.keep_records) {
    r.record_columns = {"trial", "n", "T",     "patch_size", "mass",
                        "distance", "bound", "holds", "stated_holds"};
  }

  std::size_t violations = 0;
  std::size_t stated_violations = 0;
  std::size_t hypothesis_met = 0;
  std::size_t hypothesis_violations = 0;
  double worst_ratio = 0.0;
  for (std::size_t trial = 0; trial < o.trials; ++trial) {
    Rng rng = Rng::for_trial(o.seed, trial);
    SweepInstance inst = draw_instance(o, rng);
    const QueryProgram& p = inst.program;
    const std::uint64_t domain = inst.oracle.domain_size();

    TimedPatch f;
    if (rng.coin()) {
      const double density = rng.uniform();
      for (std::size_t i = 0; i < p.num_queries(); ++i) {
        for (std::uint64_t y = 0; y < domain; ++y) {
          if (rng.uniform() < density) {
            f.set(i, y, rng.coin());
          }
        }
      }
    } else {
      // Calls answered by another oracle on a random subset of calls.
      const Oracle other = sample_oracle(p.n(), inst.oracle.kind(), rng);
      std::vector<Oracle> per_call;
      for (std::size_t i = 0; i < p.num_queries(); ++i) {
        per_call.push_back(rng.coin() ? other : inst.oracle);
      }
      f = patch_towards(p, inst.oracle, per_call);
    }

    const std::uint64_t input = rng.below(std::uint64_t{1} << p.num_qubits());
    const HybridReport h = hybrid_check(p, inst.oracle, f, input);
    violations += h.holds ? 0 : 1;
    stated_violations += h.stated_holds ? 0 : 1;
    const double t = static_cast<double>(h.num_queries);
    if (t > 0 && h.mass <= inst.eps * inst.eps / t) {
      ++hypothesis_met;
      if (h.distance > inst.eps + kTolerance) {
        ++hypothesis_violations;
      }
    }
    if (h.bound > 0.0) {
      worst_ratio = std::max(worst_ratio, h.distance / h.bound);
    }
    if (o.keep_records) {
      r.records.push_back({static_cast<double>(trial),
                           static_cast<double>(p.n()), t,
                           static_cast<double>(f.size()), h.mass, h.distance,
                           h.bound, h.holds ? 1.0 : 0.0,
                           h.stated_holds ? 1.0 : 0.0});
    }
  }

  r.statistics = {{"instances", o.trials},
                  {"safe_bound_violations", violations},
                  {"max_distance_over_bound", worst_ratio},
                  {"stated_form_violations", stated_violations},
                  {"eps_hypothesis_met", hypothesis_met},
                  {"eps_hypothesis_distance_over_eps", hypothesis_violations},
                  {"holds", violations == 0}};
  r.check("safe_bound_every_instance", violations == 0);
  return r;
}

ExperimentReport heavy_set_sweep(const SweepOptions& o) {
  ExperimentReport r;
  r.name = "heavyset";
  r.parameters = sweep_parameters(o);
  if (o.keep_records) {
    r.record_columns = {"trial", "n", "T", "eps", "heavy_size", "limit",
                        "max_light_distance"};
  }

  std::size_t size_violations = 0;
  std::size_t distance_violations = 0;
  std::size_t stated_violations = 0;
  std::size_t light_points = 0;
  double worst_ratio = 0.0;
  for (std::size_t trial = 0; trial < o.trials; ++trial) {
    Rng rng = Rng::for_trial(o.seed, trial);
    SweepInstance inst = draw_instance(o, rng);
    const QueryProgram& p = inst.program;
    const std::uint64_t input = rng.below(std::uint64_t{1} << p.num_qubits());
    const RunResult base = run(p, inst.oracle, input);
    const auto heavy = heavy_set(base.trace, inst.eps);
    const double limit = heavy_set_limit(p.num_queries(), inst.eps);
    if (static_cast<double>(heavy.size()) > std::floor(limit + kTolerance)) {
      ++size_violations;
    }

    double max_light = 0.0;
    for (std::uint64_t y = 0; y < inst.oracle.domain_size(); ++y) {
      if (std::binary_search(heavy.begin(), heavy.end(), y)) {
        continue;
      }
      ++light_points;
      const Oracle a_y = flipped_at(inst.oracle, y);
      const StateVector moved =
          run_patched(p, inst.oracle, patch_point(p, inst.oracle, a_y, y),
                      input);
      const double distance = euclidean_distance(base.final_state, moved);
      max_light = std::max(max_light, distance);
      if (distance > std::numbers::sqrt2 * inst.eps + kTolerance) {
        ++distance_violations;
      }
      if (distance > inst.eps + kTolerance) {
        ++stated_violations;
      }
      worst_ratio = std::max(worst_ratio, distance / inst.eps);
    }
    if (o.keep_records) {
      r.records.push_back({static_cast<double>(trial),
                           static_cast<double>(p.n()),
                           static_cast<double>(p.num_queries()), inst.eps,
                           static_cast<double>(heavy.size()), limit,
                           max_light});
    }
  }

  r.statistics = {{"instances", o.trials},
                  {"light_points_checked", light_points},
                  {"size_violations", size_violations},
                  {"sqrt2_eps_violations", distance_violations},
                  {"eps_violations", stated_violations},
                  {"max_light_distance_over_eps", worst_ratio}};
  r.check("heavy_set_within_2T2_over_eps2", size_violations == 0);
  r.check("light_points_within_sqrt2_eps", distance_violations == 0);
  return r;
}

}  // namespace qql
