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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "qql/oracle.hpp"
#include "qql/program.hpp"
#include "qql/report.hpp"

namespace qql {

/// Success of one phase query followed by the test "does the state still
/// agree with the uniform superposition psi0": 1 - |<psi0|psi1>|^2.
/// The single-argument form marks 1^n, giving 4/2^n - 4/4^n.
double one_query_separation(std::size_t n);
double one_query_separation(const Oracle& a);

/// Samples random length-preserving oracles on n bits and estimates the
/// probability that 1^n has no preimage and a unique preimage; every
/// sample without a preimage is patched at a random point to 1^n and must
/// then have exactly one. Requires 1 <= n <= 10.
ExperimentReport patch_counting(std::size_t n, std::size_t trials,
                                std::uint64_t seed);

/// Runs `p` against the empty oracle and against oracles marking one
/// string y, from |0...0>. "Success" is the probability that projecting the
/// marked-oracle final state onto the empty-oracle final state fails.
/// Marked strings are enumerated when trials >= 2^n, sampled otherwise.
/// Per y, checks the measured-distribution gap against 4x the distance and
/// the distance against 2 sqrt(T sum_i q_i(y)).
ExperimentReport distinguish_gap(const QueryProgram& p, std::size_t trials,
                                 std::uint64_t seed);

/// Classical-style search: before call i the query register is loaded with
/// the basis string queried[i], answered into its own workspace qubit, and
/// unloaded again.
QueryProgram classical_program(std::size_t n,
                               std::span<const std::uint64_t> queried);

/// T bit queries of the uniform superposition, call i answering into
/// workspace qubit i; every call sees query magnitude 2^-n on each string.
QueryProgram uniform_query_program(std::size_t n, std::size_t num_queries);

/// Random-transposition hybrid. Each trial samples x_0..x_{T+1} and a
/// permutation pi_0 with pi_0(x_0) = 1^n, builds the transposition chain,
/// and runs the program against A_T, A_{T-1}, and the hybrid that answers
/// call i with pi_{i+1}. alpha is the hybrid's query mass on
/// {(i, x_j) : i < j <= T}. Requires T (T + 1) / 2 < 2^n; the program must
/// make exactly T calls (defaults to uniform_query_program).
ExperimentReport permutation_hybrid(std::size_t n, std::size_t num_queries,
                                    std::size_t trials, std::uint64_t seed);
ExperimentReport permutation_hybrid(std::size_t n, std::size_t num_queries,
                                    std::size_t trials, std::uint64_t seed,
                                    const QueryProgram& program);

/// Parameters of the random-program sweeps. Each trial draws n and T
/// uniformly from the closed ranges and a workspace in [0, workspace_max].
struct SweepOptions {
  std::size_t n_min = 1;
  std::size_t n_max = 6;
  std::size_t queries_min = 1;
  std::size_t queries_max = 6;
  std::size_t workspace_max = 2;
  std::size_t trials = 1000;
  /// Fixed epsilon; drawn uniformly from [0.1, 1] per trial when unset.
  std::optional<double> eps;
  std::uint64_t seed = 0;
  bool keep_records = false;
};

/// Random programs, oracles and timed patches: checks the safe hybrid bound
/// distance <= 2 sqrt(T mass) on every trial, and tallies how often the
/// stated epsilon form (distance <= eps whenever mass <= eps^2 / T) fails.
ExperimentReport hybrid_sweep(const SweepOptions& options);

/// Random programs and oracles: checks |S| <= 2T^2/eps^2 and, for every
/// y outside S, that flipping A at y moves the final state by at most
/// sqrt(2) eps.
ExperimentReport heavy_set_sweep(const SweepOptions& options);

}  // namespace qql
