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
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "qql/oracle.hpp"
#include "qql/random.hpp"
#include "qql/statevector.hpp"

namespace qql {

enum class GateKind { h_all, diffusion, x, cx, matrix, majority };
enum class QueryMode { bit, phase };

std::string_view to_string(GateKind gate);
std::string_view to_string(QueryMode mode);

/// Oracle-independent unitary. `qubits` are absolute indices: the layer for
/// h_all and diffusion, {qubit} for x, {control, target} for cx, the
/// targets of `op` for matrix gates, and {inputs..., target} for majority,
/// which XORs the majority of an odd number of inputs into the target.
struct UnitaryStep {
  GateKind gate;
  std::vector<std::size_t> qubits;
  std::optional<UnitaryOp> op;
};

/// One oracle call. Bit mode XORs the answer into `target`; phase mode
/// multiplies |x> by (-1)^answer.
struct QueryStep {
  QueryMode mode;
  std::vector<std::size_t> query_register;
  std::size_t target = 0;
  std::size_t output_bit = 0;
};

using Step = std::variant<UnitaryStep, QueryStep>;

/// Unitaries interleaved with oracle calls over an (n + workspace)-qubit
/// register laid out as [query register | workspace]. Query steps address
/// qubits 0..n-1 unless they name another n-qubit register explicitly.
class QueryProgram {
 public:
  QueryProgram(std::size_t n, std::size_t workspace);

  std::size_t n() const { return n_; }
  std::size_t workspace() const { return workspace_; }
  std::size_t num_qubits() const { return n_ + workspace_; }
  std::span<const Step> steps() const { return steps_; }
  /// T, the number of oracle calls.
  std::size_t num_queries() const { return num_queries_; }
  std::vector<std::size_t> query_register() const;

  // Builders. Each validates indices against the layout and throws
  // std::invalid_argument on a bad step. An empty qubit list means the
  // default query register.
  QueryProgram& h_all(std::vector<std::size_t> qubits = {});
  QueryProgram& diffusion(std::vector<std::size_t> qubits = {});
  QueryProgram& x(std::size_t qubit);
  QueryProgram& cx(std::size_t control, std::size_t target);
  QueryProgram& unitary(UnitaryOp op);
  QueryProgram& majority(std::vector<std::size_t> inputs, std::size_t target);
  QueryProgram& phase_query(std::vector<std::size_t> reg = {},
                            std::size_t output_bit = 0);
  QueryProgram& bit_query(std::size_t target, std::vector<std::size_t> reg = {},
                          std::size_t output_bit = 0);
  QueryProgram& append(Step step);

  /// Appends every step of `other`, which must have the same n and no more
  /// qubits than this program.
  QueryProgram& append(const QueryProgram& other);

  /// Same steps on a register with `extra` more workspace qubits.
  QueryProgram widened(std::size_t extra) const;

 private:
  std::size_t n_;
  std::size_t workspace_;
  std::size_t num_queries_ = 0;
  std::vector<Step> steps_;
};

/// Applies one unitary step to `s`.
void apply_step(StateVector& s, const UnitaryStep& step);

/// Query magnitudes per oracle call: magnitudes[i][y] is the probability
/// mass of configurations whose query register holds y just before call i.
struct QueryTrace {
  std::size_t n = 0;
  std::vector<std::vector<double>> magnitudes;
  std::vector<StateVector> snapshots;

  std::size_t num_queries() const { return magnitudes.size(); }
  /// sum_i q[i][y].
  double total_for(std::uint64_t y) const;
  /// sum_{i,y} q[i][y].
  double total() const;
};

struct RunResult {
  StateVector final_state;
  QueryTrace trace;
};

/// Set F of (call index, string) pairs whose Boolean answers are pinned.
/// The pinned answers need not come from any single oracle.
class TimedPatch {
 public:
  using Key = std::pair<std::size_t, std::uint64_t>;

  /// Pins the answer of call `step` on string `point`. Re-pinning the same
  /// pair with a different answer throws.
  void set(std::size_t step, std::uint64_t point, bool answer);
  std::optional<bool> answer(std::size_t step, std::uint64_t point) const;

  const std::map<Key, bool>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  std::map<Key, bool> entries_;
};

/// Executes `p` against `a` from the basis state |input>.
RunResult run(const QueryProgram& p, const Oracle& a, std::uint64_t input);
RunResult run(const QueryProgram& p, const Oracle& a,
              const StateVector& initial);

/// As run(), but each call i answers a pinned (i, y) with its pinned value.
StateVector run_patched(const QueryProgram& p, const Oracle& a,
                        const TimedPatch& f, std::uint64_t input);
RunResult run_patched_traced(const QueryProgram& p, const Oracle& a,
                             const TimedPatch& f, const StateVector& initial);

/// Sum of trace magnitudes over the pairs in `f`.
double patch_mass(const QueryTrace& trace, const TimedPatch& f);

/// Pins, at call i, every string where the answer of `per_call[i]` differs
/// from the answer of `a` (the read bit is the call's own output_bit).
TimedPatch patch_towards(const QueryProgram& p, const Oracle& a,
                         std::span<const Oracle> per_call);

/// Pins every call on `point` to the answers of `a_point`.
TimedPatch patch_point(const QueryProgram& p, const Oracle& a,
                       const Oracle& a_point, std::uint64_t point);

struct HybridReport {
  std::size_t num_queries = 0;
  /// sum over F of the unperturbed query magnitudes.
  double mass = 0.0;
  double distance = 0.0;
  /// 2 sqrt(T * mass): the per-call perturbation has operator norm at most
  /// 2 on the pinned subspace, and Cauchy-Schwarz sums T calls.
  double bound = 0.0;
  /// Smallest eps with mass <= eps^2 / T, i.e. sqrt(T * mass).
  double stated_epsilon = 0.0;
  bool holds = false;
  bool stated_holds = false;
};

HybridReport hybrid_check(const QueryProgram& p, const Oracle& a,
                          const TimedPatch& f, std::uint64_t input);

/// Strings y with sum_i q[i][y] >= eps^2 / (2T), ascending. Empty if T = 0.
std::vector<std::uint64_t> heavy_set(const QueryTrace& trace, double eps);

/// 2 T^2 / eps^2.
double heavy_set_limit(std::size_t num_queries, double eps);

struct RandomProgramOptions {
  std::size_t n = 3;
  std::size_t workspace = 1;
  std::size_t queries = 3;
  /// Unitary steps drawn before each call and after the last one.
  std::size_t max_gates_between = 2;
};

/// Random program over the full gate vocabulary: the register starts with
/// a Hadamard layer, and each call is a phase query or (if workspace > 0) a
/// bit query into a random workspace qubit.
QueryProgram random_program(const RandomProgramOptions& options, Rng& rng);

}  // namespace qql
