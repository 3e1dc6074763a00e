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

#include <vector>

#include <benchmark/benchmark.h>

#include "qql/qql.hpp"

namespace {

void BM_ApplySingleQubit(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  qql::Rng rng(1);
  qql::StateVector s = qql::random_state(m, rng);
  const qql::UnitaryOp u = qql::random_unitary({m / 2}, rng);
  for (auto _ : state) {
    qql::apply_in_place(s, u);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(s.dimension()));
}
BENCHMARK(BM_ApplySingleQubit)->DenseRange(10, 22, 4);

void BM_ApplyTwoQubit(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  qql::Rng rng(2);
  qql::StateVector s = qql::random_state(m, rng);
  const qql::UnitaryOp u = qql::random_unitary({0, m - 1}, rng);
  for (auto _ : state) {
    qql::apply_in_place(s, u);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(s.dimension()));
}
BENCHMARK(BM_ApplyTwoQubit)->DenseRange(10, 22, 4);

void BM_PhaseQuery(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  qql::StateVector s = qql::StateVector::uniform(n);
  const qql::Oracle a = qql::sample_oracle(n, qql::OracleKind::boolean, 3);
  const auto answers = a.answer_bits();
  std::vector<std::size_t> reg(n);
  for (std::size_t i = 0; i < n; ++i) {
    reg[i] = i;
  }
  for (auto _ : state) {
    qql::phase_query_in_place(s, answers, reg);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(s.dimension()));
}
BENCHMARK(BM_PhaseQuery)->DenseRange(10, 20, 5);

void BM_GroverOptimal(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::size_t k = qql::optimal_iterations(n);
  const qql::Oracle a = qql::Oracle::marking(n, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qql::grover_search(n, a, k));
  }
}
BENCHMARK(BM_GroverOptimal)->DenseRange(6, 14, 4)->Unit(benchmark::kMillisecond);

void BM_RunRandomProgram(benchmark::State& state) {
  qql::Rng rng(4);
  const qql::QueryProgram p = qql::random_program({6, 2, 6, 3}, rng);
  const qql::Oracle a = qql::sample_oracle(6, qql::OracleKind::length_preserving, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qql::run(p, a, 0).final_state.norm());
  }
}
BENCHMARK(BM_RunRandomProgram);

}  // namespace

BENCHMARK_MAIN();
