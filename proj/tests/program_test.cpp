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

#include "qql/program.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "qql/oracle.hpp"
#include "qql/random.hpp"

namespace qql {
namespace {

TEST(QueryProgram, CountsQueriesAndLayout) {
  QueryProgram p(3, 2);
  p.h_all().phase_query().diffusion().bit_query(3).x(4).cx(3, 4);
  EXPECT_EQ(p.num_queries(), 2U);
  EXPECT_EQ(p.num_qubits(), 5U);
  EXPECT_EQ(p.query_register(), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(p.steps().size(), 6U);
}

TEST(QueryProgram, RejectsInvalidSteps) {
  QueryProgram p(2, 1);
  EXPECT_THROW(p.x(3), std::invalid_argument);
  EXPECT_THROW(p.cx(1, 1), std::invalid_argument);
  EXPECT_THROW(p.bit_query(0), std::invalid_argument);
  EXPECT_THROW(p.bit_query(2, {0, 1}, 2), std::invalid_argument);
  EXPECT_THROW(p.majority({0, 1}, 2), std::invalid_argument);
  EXPECT_THROW(p.unitary(UnitaryOp::hadamard(5)), std::invalid_argument);
  EXPECT_EQ(p.num_queries(), 0U);
  QueryProgram other(3, 0);
  EXPECT_THROW(p.append(other), std::invalid_argument);
}

TEST(QueryProgram, WidenedKeepsSteps) {
  QueryProgram p(2, 0);
  p.h_all().phase_query();
  const QueryProgram w = p.widened(2);
  EXPECT_EQ(w.num_qubits(), 4U);
  EXPECT_EQ(w.num_queries(), 1U);
  const RunResult a = run(p, Oracle::marking(2, 1), 0);
  const RunResult b = run(w, Oracle::marking(2, 1), 0);
  for (std::uint64_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(std::abs(a.final_state[i] - b.final_state[i << 2]), 0.0, 1e-15);
  }
}

TEST(QueryProgram, MajorityGate) {
  QueryProgram p(0, 4);
  p.majority({0, 1, 2}, 3);
  for (std::uint64_t in = 0; in < 8; ++in) {
    const RunResult r = run(p, Oracle::zero(0), in << 1);
    const bool maj = __builtin_popcountll(in) >= 2;
    EXPECT_EQ(std::norm(r.final_state[(in << 1) | (maj ? 1 : 0)]), 1.0);
  }
}

TEST(Run, TraceRecordsMagnitudesBeforeEachCall) {
  const std::size_t n = 3;
  QueryProgram p(n, 0);
  p.h_all().phase_query().phase_query();
  const RunResult r = run(p, Oracle::marking(n, 2), 0);
  ASSERT_EQ(r.trace.num_queries(), 2U);
  for (const auto& row : r.trace.magnitudes) {
    for (double q : row) {
      EXPECT_NEAR(q, 1.0 / 8.0, 1e-15);
    }
  }
  EXPECT_NEAR(r.trace.total(), 2.0, 1e-12);
  EXPECT_NEAR(r.trace.total_for(5), 0.25, 1e-15);
  EXPECT_EQ(r.trace.snapshots.size(), 2U);
}

TEST(Run, MagnitudesSumToOnePerCall) {
  Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const QueryProgram p = random_program({3, 2, 4, 3}, rng);
    const Oracle a = sample_oracle(3, OracleKind::length_preserving, rng);
    const RunResult r = run(p, a, rng.below(32));
    EXPECT_NEAR(r.final_state.norm(), 1.0, 1e-12);
    for (const auto& row : r.trace.magnitudes) {
      double sum = 0.0;
      for (double q : row) {
        EXPECT_GE(q, 0.0);
        sum += q;
      }
      EXPECT_NEAR(sum, 1.0, 1e-12);
    }
  }
}

TEST(Run, RejectsMismatchedOracle) {
  QueryProgram p(2, 0);
  p.phase_query();
  EXPECT_THROW(run(p, Oracle::zero(3), 0), std::invalid_argument);
}

TEST(TimedPatch, ConflictsAreRejected) {
  TimedPatch f;
  f.set(0, 3, true);
  f.set(0, 3, true);
  EXPECT_THROW(f.set(0, 3, false), std::invalid_argument);
  EXPECT_EQ(f.size(), 1U);
  EXPECT_EQ(f.answer(0, 3), true);
  EXPECT_FALSE(f.answer(1, 3).has_value());
}

TEST(TimedPatch, EmptyPatchChangesNothing) {
  Rng rng(3);
  const QueryProgram p = random_program({3, 1, 3, 2}, rng);
  const Oracle a = sample_oracle(3, OracleKind::boolean, rng);
  const StateVector s = run(p, a, 5).final_state;
  EXPECT_LT(euclidean_distance(run_patched(p, a, TimedPatch{}, 5), s), 1e-15);
  const HybridReport h = hybrid_check(p, a, TimedPatch{}, 5);
  EXPECT_EQ(h.mass, 0.0);
  EXPECT_TRUE(h.holds);
}

TEST(TimedPatch, PatchTowardsEqualsRunningTheOtherOracle) {
  Rng rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const QueryProgram p = random_program({3, 2, 3, 2}, rng);
    const Oracle a = sample_oracle(3, OracleKind::length_preserving, rng);
    const Oracle b = sample_oracle(3, OracleKind::length_preserving, rng);
    const std::vector<Oracle> per_call(p.num_queries(), b);
    const TimedPatch f = patch_towards(p, a, per_call);
    const std::uint64_t in = rng.below(32);
    EXPECT_LT(euclidean_distance(run_patched(p, a, f, in), run(p, b, in).final_state),
              1e-12);
  }
}

TEST(Hybrid, PhaseFlipAttainsTheBound) {
  const std::size_t n = 3;
  QueryProgram p(n, 0);
  p.h_all().phase_query();
  TimedPatch f;
  f.set(0, 0, true);
  const HybridReport h = hybrid_check(p, Oracle::zero(n), f, 0);
  EXPECT_NEAR(h.mass, 1.0 / 8.0, 1e-15);
  EXPECT_NEAR(h.distance, 2.0 / std::sqrt(8.0), 1e-12);
  EXPECT_NEAR(h.bound, h.distance, 1e-6);
  EXPECT_TRUE(h.holds);
  EXPECT_FALSE(h.stated_holds);
}

TEST(Hybrid, BoundHoldsOnRandomInstances) {
  Rng rng(1234);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.below(4);
    const QueryProgram p =
        random_program({n, rng.below(3), 1 + rng.below(5), 3}, rng);
    const Oracle a = sample_oracle(n, OracleKind::length_preserving, rng);
    TimedPatch f;
    for (std::size_t i = 0; i < p.num_queries(); ++i) {
      for (std::uint64_t y = 0; y < a.domain_size(); ++y) {
        if (rng.uniform() < 0.3) {
          f.set(i, y, rng.coin());
        }
      }
    }
    const HybridReport h = hybrid_check(p, a, f, rng.below(std::uint64_t{1} << p.num_qubits()));
    EXPECT_LE(h.distance, 2.0 * std::sqrt(static_cast<double>(p.num_queries()) * h.mass) + 1e-9);
  }
}

TEST(HeavySet, ThresholdAndLimit) {
  QueryTrace t;
  t.n = 2;
  t.magnitudes = {{0.7, 0.2, 0.05, 0.05}, {0.2, 0.7, 0.05, 0.05}};
  // eps^2 / 2T = 0.5 / 4 = 0.125.
  const auto s = heavy_set(t, std::sqrt(0.5));
  EXPECT_EQ(s, (std::vector<std::uint64_t>{0, 1}));
  EXPECT_NEAR(heavy_set_limit(2, std::sqrt(0.5)), 16.0, 1e-12);
  EXPECT_THROW(heavy_set(t, 0.0), std::invalid_argument);
  QueryTrace empty;
  empty.n = 2;
  EXPECT_TRUE(heavy_set(empty, 0.1).empty());
}

TEST(HeavySet, UniformTraceSitsOnThreshold) {
  // T calls of the uniform state put mass T/2^n on every string; with
  // eps^2/2T equal to that value all strings are heavy.
  const std::size_t n = 3;
  const std::size_t t = 2;
  QueryProgram p(n, 0);
  p.h_all().phase_query().phase_query();
  const RunResult r = run(p, Oracle::zero(n), 0);
  const double eps = std::sqrt(2.0 * t * (t / 8.0));
  EXPECT_EQ(heavy_set(r.trace, eps).size(), 8U);
}

TEST(PatchPoint, PinsOnlyTheGivenString) {
  QueryProgram p(2, 1);
  p.h_all().bit_query(2).bit_query(2, {}, 1);
  const Oracle a(2, OracleKind::length_preserving, {0, 0, 0, 0});
  const Oracle b(2, OracleKind::length_preserving, {0, 0, 0b10, 0});
  const TimedPatch f = patch_point(p, a, b, 2);
  ASSERT_EQ(f.size(), 1U);
  EXPECT_EQ(f.answer(0, 2), true);
}

TEST(RandomProgram, SeededAndShaped) {
  Rng r1(8);
  Rng r2(8);
  const QueryProgram a = random_program({4, 2, 5, 3}, r1);
  const QueryProgram b = random_program({4, 2, 5, 3}, r2);
  EXPECT_EQ(a.num_queries(), 5U);
  EXPECT_EQ(a.num_qubits(), 6U);
  const RunResult ra = run(a, Oracle::marking(4, 3), 0);
  const RunResult rb = run(b, Oracle::marking(4, 3), 0);
  EXPECT_EQ(euclidean_distance(ra.final_state, rb.final_state), 0.0);
}

}  // namespace
}  // namespace qql
