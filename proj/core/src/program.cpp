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

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qql {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

RunResult run_impl(const QueryProgram& p, const Oracle& a,
                   const TimedPatch* f, const StateVector& initial) {
  if (a.n() != p.n()) {
    throw std::invalid_argument("oracle input length " + std::to_string(a.n()) +
                                " does not match program n = " +
                                std::to_string(p.n()));
  }
  if (initial.num_qubits() != p.num_qubits()) {
    throw std::invalid_argument("initial state has " +
                                std::to_string(initial.num_qubits()) +
                                " qubits, program needs " +
                                std::to_string(p.num_qubits()));
  }
  if (f != nullptr) {
    for (const auto& [key, answer] : f->entries()) {
      if (key.first >= p.num_queries() || key.second >= a.domain_size()) {
        throw std::invalid_argument("timed patch entry (" +
                                    std::to_string(key.first) + ", " +
                                    std::to_string(key.second) +
                                    ") outside the program's calls or domain");
      }
    }
  }

  StateVector state = initial;
  QueryTrace trace;
  trace.n = p.n();
  std::map<std::size_t, std::vector<std::uint8_t>> answers_by_bit;
  std::size_t call = 0;
  for (const Step& step : p.steps()) {
    std::visit(
        Overloaded{
            [&](const UnitaryStep& u) { apply_step(state, u); },
            [&](const QueryStep& q) {
              auto it = answers_by_bit.find(q.output_bit);
              if (it == answers_by_bit.end()) {
                it = answers_by_bit
                         .emplace(q.output_bit, a.answer_bits(q.output_bit))
                         .first;
              }
              std::vector<double> mags(a.domain_size(), 0.0);
              const auto amps = state.amplitudes();
              const std::size_t m = state.num_qubits();
              if (const auto shift =
                      contiguous_register_shift(m, q.query_register)) {
                const std::uint64_t mask = a.domain_size() - 1;
                for (std::uint64_t i = 0; i < amps.size(); ++i) {
                  mags[(i >> *shift) & mask] += std::norm(amps[i]);
                }
              } else {
                for (std::uint64_t i = 0; i < amps.size(); ++i) {
                  mags[extract_register(i, m, q.query_register)] +=
                      std::norm(amps[i]);
                }
              }
              trace.magnitudes.push_back(std::move(mags));
              trace.snapshots.push_back(state);

              std::span<const std::uint8_t> answers = it->second;
              std::vector<std::uint8_t> pinned;
              if (f != nullptr) {
                auto lo = f->entries().lower_bound({call, 0});
                auto hi = f->entries().lower_bound({call + 1, 0});
                if (lo != hi) {
                  pinned.assign(answers.begin(), answers.end());
                  for (auto e = lo; e != hi; ++e) {
                    pinned[e->first.second] = e->second ? 1 : 0;
                  }
                  answers = pinned;
                }
              }
              if (q.mode == QueryMode::phase) {
                phase_query_in_place(state, answers, q.query_register);
              } else {
                bit_query_in_place(state, answers, q.query_register, q.target);
              }
              ++call;
            },
        },
        step);
  }
  return RunResult{std::move(state), std::move(trace)};
}

}  // namespace

std::string_view to_string(GateKind gate) {
  switch (gate) {
    case GateKind::h_all:
      return "h_all";
    case GateKind::diffusion:
      return "diffusion";
    case GateKind::x:
      return "x";
    case GateKind::cx:
      return "cx";
    case GateKind::matrix:
      return "matrix";
    case GateKind::majority:
      return "majority";
  }
  return "unknown";
}

std::string_view to_string(QueryMode mode) {
  return mode == QueryMode::bit ? "bit" : "phase";
}

QueryProgram::QueryProgram(std::size_t n, std::size_t workspace)
    : n_(n), workspace_(workspace) {
  if (n + workspace > kMaxQubits) {
    throw std::invalid_argument("program needs " +
                                std::to_string(n + workspace) +
                                " qubits, more than the limit of " +
                                std::to_string(kMaxQubits));
  }
}

std::vector<std::size_t> QueryProgram::query_register() const {
  std::vector<std::size_t> reg(n_);
  std::iota(reg.begin(), reg.end(), std::size_t{0});
  return reg;
}

QueryProgram& QueryProgram::h_all(std::vector<std::size_t> qubits) {
  return append(UnitaryStep{GateKind::h_all, std::move(qubits), std::nullopt});
}

QueryProgram& QueryProgram::diffusion(std::vector<std::size_t> qubits) {
  return append(
      UnitaryStep{GateKind::diffusion, std::move(qubits), std::nullopt});
}

QueryProgram& QueryProgram::x(std::size_t qubit) {
  return append(UnitaryStep{GateKind::x, {qubit}, std::nullopt});
}

QueryProgram& QueryProgram::cx(std::size_t control, std::size_t target) {
  return append(UnitaryStep{GateKind::cx, {control, target}, std::nullopt});
}

QueryProgram& QueryProgram::unitary(UnitaryOp op) {
  std::vector<std::size_t> qubits(op.targets().begin(), op.targets().end());
  return append(UnitaryStep{GateKind::matrix, std::move(qubits), std::move(op)});
}

QueryProgram& QueryProgram::majority(std::vector<std::size_t> inputs,
                                     std::size_t target) {
  inputs.push_back(target);
  return append(UnitaryStep{GateKind::majority, std::move(inputs), std::nullopt});
}

QueryProgram& QueryProgram::phase_query(std::vector<std::size_t> reg,
                                        std::size_t output_bit) {
  return append(QueryStep{QueryMode::phase, std::move(reg), 0, output_bit});
}

QueryProgram& QueryProgram::bit_query(std::size_t target,
                                      std::vector<std::size_t> reg,
                                      std::size_t output_bit) {
  return append(QueryStep{QueryMode::bit, std::move(reg), target, output_bit});
}

QueryProgram& QueryProgram::append(Step step) {
  const std::size_t m = num_qubits();
  std::visit(
      Overloaded{
          [&](UnitaryStep& u) {
            switch (u.gate) {
              case GateKind::h_all:
              case GateKind::diffusion:
                if (u.qubits.empty()) {
                  u.qubits = query_register();
                }
                break;
              case GateKind::x:
                if (u.qubits.size() != 1) {
                  throw std::invalid_argument("x gate takes one qubit");
                }
                break;
              case GateKind::cx:
                if (u.qubits.size() != 2) {
                  throw std::invalid_argument("cx gate takes control and target");
                }
                break;
              case GateKind::matrix:
                if (!u.op) {
                  throw std::invalid_argument("matrix gate without a matrix");
                }
                u.qubits.assign(u.op->targets().begin(), u.op->targets().end());
                break;
              case GateKind::majority:
                if (u.qubits.size() < 2 || u.qubits.size() % 2 != 0) {
                  throw std::invalid_argument(
                      "majority gate takes an odd number of inputs and a target");
                }
                break;
            }
            if (u.gate != GateKind::matrix && u.op) {
              throw std::invalid_argument("only matrix gates carry a matrix");
            }
            check_qubits(m, u.qubits);
          },
          [&](QueryStep& q) {
            if (q.query_register.empty()) {
              q.query_register = query_register();
            }
            if (q.query_register.size() != n_) {
              throw std::invalid_argument(
                  "query register must have n = " + std::to_string(n_) +
                  " qubits");
            }
            check_qubits(m, q.query_register);
            if (n_ > 0 && q.output_bit >= n_) {
              throw std::invalid_argument("output bit out of range");
            }
            if (q.mode == QueryMode::bit) {
              if (q.target >= m) {
                throw std::invalid_argument("bit query target out of range");
              }
              if (std::find(q.query_register.begin(), q.query_register.end(),
                            q.target) != q.query_register.end()) {
                throw std::invalid_argument(
                    "bit query target overlaps the query register");
              }
            } else {
              q.target = 0;
            }
            ++num_queries_;
          },
      },
      step);
  steps_.push_back(std::move(step));
  return *this;
}

QueryProgram& QueryProgram::append(const QueryProgram& other) {
  if (other.n_ != n_ || other.num_qubits() > num_qubits()) {
    throw std::invalid_argument("appended program does not fit this layout");
  }
  for (const auto& step : other.steps_) {
    append(step);
  }
  return *this;
}

QueryProgram QueryProgram::widened(std::size_t extra) const {
  QueryProgram out(n_, workspace_ + extra);
  out.append(*this);
  return out;
}

void apply_step(StateVector& s, const UnitaryStep& step) {
  switch (step.gate) {
    case GateKind::h_all:
      hadamard_in_place(s, step.qubits);
      return;
    case GateKind::diffusion:
      reflect_about_uniform_in_place(s, step.qubits);
      return;
    case GateKind::x: {
      check_qubits(s.num_qubits(), step.qubits);
      const auto mask = qubit_mask(s.num_qubits(), step.qubits[0]);
      auto amps = s.amplitudes();
      for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if ((i & mask) == 0) {
          std::swap(amps[i], amps[i | mask]);
        }
      }
      return;
    }
    case GateKind::cx: {
      check_qubits(s.num_qubits(), step.qubits);
      const auto cmask = qubit_mask(s.num_qubits(), step.qubits[0]);
      const auto tmask = qubit_mask(s.num_qubits(), step.qubits[1]);
      auto amps = s.amplitudes();
      for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if ((i & cmask) != 0 && (i & tmask) == 0) {
          std::swap(amps[i], amps[i | tmask]);
        }
      }
      return;
    }
    case GateKind::matrix:
      apply_in_place(s, *step.op);
      return;
    case GateKind::majority: {
      check_qubits(s.num_qubits(), step.qubits);
      const std::size_t inputs = step.qubits.size() - 1;
      std::uint64_t input_bits = 0;
      for (std::size_t k = 0; k < inputs; ++k) {
        input_bits |= qubit_mask(s.num_qubits(), step.qubits[k]);
      }
      const auto tmask = qubit_mask(s.num_qubits(), step.qubits.back());
      auto amps = s.amplitudes();
      for (std::uint64_t i = 0; i < amps.size(); ++i) {
        const auto ones =
            static_cast<std::size_t>(std::popcount(i & input_bits));
        if ((i & tmask) == 0 && 2 * ones > inputs) {
          std::swap(amps[i], amps[i | tmask]);
        }
      }
      return;
    }
  }
}

double QueryTrace::total_for(std::uint64_t y) const {
  double sum = 0.0;
  for (const auto& row : magnitudes) {
    sum += row.at(y);
  }
  return sum;
}

double QueryTrace::total() const {
  double sum = 0.0;
  for (const auto& row : magnitudes) {
    sum += std::accumulate(row.begin(), row.end(), 0.0);
  }
  return sum;
}

void TimedPatch::set(std::size_t step, std::uint64_t point, bool answer) {
  auto [it, inserted] = entries_.emplace(Key{step, point}, answer);
  if (!inserted && it->second != answer) {
    throw std::invalid_argument("conflicting answers pinned for call " +
                                std::to_string(step) + ", string " +
                                std::to_string(point));
  }
}

std::optional<bool> TimedPatch::answer(std::size_t step,
                                       std::uint64_t point) const {
  auto it = entries_.find(Key{step, point});
  if (it == entries_.end()) {
    return std::nullopt;
  }
  return it->second;
}

RunResult run(const QueryProgram& p, const Oracle& a, std::uint64_t input) {
  return run_impl(p, a, nullptr, StateVector::basis(p.num_qubits(), input));
}

RunResult run(const QueryProgram& p, const Oracle& a,
              const StateVector& initial) {
  return run_impl(p, a, nullptr, initial);
}

StateVector run_patched(const QueryProgram& p, const Oracle& a,
                        const TimedPatch& f, std::uint64_t input) {
  return run_impl(p, a, &f, StateVector::basis(p.num_qubits(), input))
      .final_state;
}

RunResult run_patched_traced(const QueryProgram& p, const Oracle& a,
                             const TimedPatch& f, const StateVector& initial) {
  return run_impl(p, a, &f, initial);
}

double patch_mass(const QueryTrace& trace, const TimedPatch& f) {
  double mass = 0.0;
  for (const auto& [key, answer] : f.entries()) {
    mass += trace.magnitudes.at(key.first).at(key.second);
  }
  return mass;
}

namespace {

std::vector<const QueryStep*> query_steps(const QueryProgram& p) {
  std::vector<const QueryStep*> calls;
  for (const auto& step : p.steps()) {
    if (const auto* q = std::get_if<QueryStep>(&step)) {
      calls.push_back(q);
    }
  }
  return calls;
}

}  // namespace

TimedPatch patch_towards(const QueryProgram& p, const Oracle& a,
                         std::span<const Oracle> per_call) {
  const auto calls = query_steps(p);
  if (per_call.size() != calls.size()) {
    throw std::invalid_argument("patch_towards needs one oracle per call");
  }
  TimedPatch f;
  for (std::size_t i = 0; i < calls.size(); ++i) {
    if (per_call[i].n() != a.n()) {
      throw std::invalid_argument("per-call oracle has the wrong length");
    }
    for (std::uint64_t y = 0; y < a.domain_size(); ++y) {
      const bool target = per_call[i].answer_bit(y, calls[i]->output_bit);
      if (target != a.answer_bit(y, calls[i]->output_bit)) {
        f.set(i, y, target);
      }
    }
  }
  return f;
}

TimedPatch patch_point(const QueryProgram& p, const Oracle& a,
                       const Oracle& a_point, std::uint64_t point) {
  const auto calls = query_steps(p);
  TimedPatch f;
  for (std::size_t i = 0; i < calls.size(); ++i) {
    const bool target = a_point.answer_bit(point, calls[i]->output_bit);
    if (target != a.answer_bit(point, calls[i]->output_bit)) {
      f.set(i, point, target);
    }
  }
  return f;
}

HybridReport hybrid_check(const QueryProgram& p, const Oracle& a,
                          const TimedPatch& f, std::uint64_t input) {
  const StateVector initial = StateVector::basis(p.num_qubits(), input);
  const RunResult base = run_impl(p, a, nullptr, initial);
  const RunResult patched = run_impl(p, a, &f, initial);

  HybridReport r;
  r.num_queries = p.num_queries();
  r.mass = patch_mass(base.trace, f);
  r.distance = euclidean_distance(base.final_state, patched.final_state);
  const double t = static_cast<double>(r.num_queries);
  r.bound = 2.0 * std::sqrt(t * r.mass);
  r.stated_epsilon = std::sqrt(t * r.mass);
  r.holds = r.distance <= r.bound + kTolerance;
  r.stated_holds = r.distance <= r.stated_epsilon + kTolerance;
  return r;
}

std::vector<std::uint64_t> heavy_set(const QueryTrace& trace, double eps) {
  if (!(eps > 0.0)) {
    throw std::invalid_argument("heavy_set: eps must be positive");
  }
  std::vector<std::uint64_t> heavy;
  const std::size_t t = trace.num_queries();
  if (t == 0) {
    return heavy;
  }
  const double threshold = eps * eps / (2.0 * static_cast<double>(t));
  const std::uint64_t domain = std::uint64_t{1} << trace.n;
  for (std::uint64_t y = 0; y < domain; ++y) {
    // Relative slack so a magnitude sitting exactly on the threshold (as in
    // uniform traces) is not lost to rounding.
    if (trace.total_for(y) >= threshold * (1.0 - 1e-12)) {
      heavy.push_back(y);
    }
  }
  return heavy;
}

double heavy_set_limit(std::size_t num_queries, double eps) {
  const double t = static_cast<double>(num_queries);
  return 2.0 * t * t / (eps * eps);
}

QueryProgram random_program(const RandomProgramOptions& options, Rng& rng) {
  QueryProgram p(options.n, options.workspace);
  const std::size_t m = p.num_qubits();
  if (m == 0) {
    return p;
  }
  auto random_subset = [&] {
    std::vector<std::size_t> qubits;
    while (qubits.empty()) {
      for (std::size_t q = 0; q < m; ++q) {
        if (rng.coin()) {
          qubits.push_back(q);
        }
      }
    }
    return qubits;
  };
  auto random_gates = [&] {
    const auto count = rng.below(options.max_gates_between + 1);
    for (std::uint64_t g = 0; g < count; ++g) {
      switch (rng.below(5)) {
        case 0:
          p.h_all(random_subset());
          break;
        case 1:
          p.diffusion(random_subset());
          break;
        case 2:
          p.x(rng.below(m));
          break;
        case 3:
          if (m >= 2) {
            const auto c = rng.below(m);
            auto t = rng.below(m - 1);
            t += (t >= c) ? 1 : 0;
            p.cx(c, t);
            break;
          }
          [[fallthrough]];
        default: {
          std::vector<std::size_t> targets{rng.below(m)};
          if (m >= 2 && rng.coin()) {
            auto t = rng.below(m - 1);
            t += (t >= targets[0]) ? 1 : 0;
            targets.push_back(t);
          }
          p.unitary(random_unitary(std::move(targets), rng));
          break;
        }
      }
    }
  };

  p.h_all(p.query_register().empty() ? std::vector<std::size_t>{0}
                                     : p.query_register());
  for (std::size_t i = 0; i < options.queries; ++i) {
    random_gates();
    if (options.workspace > 0 && rng.coin()) {
      p.bit_query(options.n + rng.below(options.workspace));
    } else {
      p.phase_query();
    }
  }
  random_gates();
  return p;
}

}  // namespace qql
