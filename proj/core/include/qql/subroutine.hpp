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
#include <span>
#include <vector>

#include "qql/oracle.hpp"
#include "qql/program.hpp"

namespace qql {

/// Qubit budget for boosted programs: k copies of the base register plus
/// the vote qubit must fit.
inline constexpr std::size_t kQubitBudget = 22;

/// Steps in reverse order, unitaries replaced by their adjoints. Oracle
/// calls are kept as they are: a Boolean query is its own inverse.
QueryProgram reverse_program(const QueryProgram& p);

/// p ; CNOT(answer_bit -> fresh qubit) ; reverse(p).
/// Layout: [query | workspace | saved answer].
QueryProgram make_tidy(const QueryProgram& p, std::size_t answer_bit);

struct TidyReport {
  /// Probability that `p` alone leaves the expected value on its answer qubit.
  double base_success = 0.0;
  /// Squared magnitude of |input>|expected> after the tidy program.
  double tidiness = 0.0;
  /// base_success^2.
  double bound = 0.0;
};

/// Runs `p` and make_tidy(p, answer_bit) from |input> (input over p's own
/// qubits; the saved-answer qubit starts at 0).
TidyReport tidiness(const QueryProgram& p, std::size_t answer_bit,
                    const Oracle& a, std::uint64_t input, bool expected_answer);

/// Query-free single-qubit program (n = 0, workspace = 1) whose qubit 0
/// reads 1 with probability p0 after one real rotation.
QueryProgram coin_program(double p0);

/// Probability that `qubit` reads `value` when `s` is measured.
double qubit_probability(const StateVector& s, std::size_t qubit, bool value);

/// Probability that the majority of k independent trials, each correct with
/// probability p0, is correct. k must be odd.
double majority_success(double p0, std::size_t k);

/// Runs k copies of `p` on disjoint registers and writes the majority of
/// their answer qubits into one fresh qubit, the last one of the result.
///
/// Copy c occupies qubits [c w, (c + 1) w) with w = p.num_qubits(); copy 0
/// is the original layout. The program starts by fanning copy 0's register
/// out to the other copies with CNOTs, so a basis input for `p` (padded
/// with zeros) is replicated into every copy. Requires odd k and
/// k w + 1 <= kQubitBudget.
QueryProgram boost_program(const QueryProgram& p, std::size_t k,
                           std::size_t answer_bit);

/// Smallest odd k with majority_success(p0, k) >= 1 - eps. Requires
/// 0 < eps <= 1 - p0 and p0 > 1/2.
std::size_t required_repetitions(double eps, double p0 = 2.0 / 3.0);

/// required_repetitions over a list of epsilons, with the smallest b such
/// that k <= b ln(1/eps) for every entry.
struct RepetitionScaling {
  std::vector<double> eps;
  std::vector<std::size_t> repetitions;
  double b = 0.0;
};

RepetitionScaling repetition_scaling(std::span<const double> eps,
                                     double p0 = 2.0 / 3.0);

}  // namespace qql
