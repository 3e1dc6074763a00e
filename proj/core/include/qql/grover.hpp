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
#include <string>
#include <vector>

#include "qql/oracle.hpp"
#include "qql/program.hpp"
#include "qql/statevector.hpp"

namespace qql {

/// Inversion about the average, 2|psi0><psi0| - I, on `reg`.
StateVector diffusion(const StateVector& s, std::span<const std::size_t> reg);

/// [H on all n qubits; (phase query; diffusion) x k], no workspace.
QueryProgram grover_program(std::size_t n, std::size_t k);

/// Probability of observing the marked string after k rounds from the
/// uniform superposition. `a` must be a Boolean oracle with exactly one
/// marked string of length n.
double grover_search(std::size_t n, const Oracle& a, std::size_t k);

/// Simulated Grover run for k = 0..kmax against a single marked string.
///
/// `found[k]` is the probability of observing the marked string.
/// `separation[k]` is 1 - |<psi0|psi_k>|^2, the success of testing whether
/// the state still agrees with the uniform superposition psi0; this is the
/// quantity that grows like 4k^2/2^n. `distance[k]` is ||psi0 - psi_k||,
/// which grows like 2k/sqrt(2^n).
struct GroverSchedule {
  std::size_t n = 0;
  std::uint64_t marked = 0;
  std::vector<double> found;
  std::vector<double> separation;
  std::vector<double> separation_approx;
  std::vector<double> distance;
  std::vector<double> distance_approx;

  std::size_t kmax() const { return found.empty() ? 0 : found.size() - 1; }
  /// Columns: k, success_exact, success_approx_4k2N, distance_exact,
  /// distance_approx_2kSqrtN, found_exact.
  std::string to_csv() const;
};

/// The marked string defaults to 1^n; the curve does not depend on it.
GroverSchedule success_curve(std::size_t n, std::size_t kmax);
GroverSchedule success_curve(std::size_t n, std::size_t kmax,
                             std::uint64_t marked);

/// Iteration count in [0, ceil(pi/4 * 2^(n/2))] maximizing the simulated
/// probability of observing the marked string; ties go to the smaller k.
std::size_t optimal_iterations(std::size_t n);

}  // namespace qql
