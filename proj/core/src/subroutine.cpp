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

#include "qql/subroutine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <variant>

namespace qql {

namespace {

Step shifted(const Step& step, std::size_t offset) {
  if (const auto* u = std::get_if<UnitaryStep>(&step)) {
    UnitaryStep out = *u;
    for (auto& q : out.qubits) {
      q += offset;
    }
    if (out.op) {
      out.op = UnitaryOp(out.qubits, std::vector<Complex>(out.op->matrix().begin(),
                                                          out.op->matrix().end()));
    }
    return out;
  }
  QueryStep q = std::get<QueryStep>(step);
  for (auto& r : q.query_register) {
    r += offset;
  }
  if (q.mode == QueryMode::bit) {
    q.target += offset;
  }
  return q;
}

// log of C(k, j) p^j (1-p)^(k-j); p strictly inside (0, 1).
double log_term(std::size_t k, std::size_t j, double p) {
  const double kd = static_cast<double>(k);
  const double jd = static_cast<double>(j);
  return std::lgamma(kd + 1.0) - std::lgamma(jd + 1.0) -
         std::lgamma(kd - jd + 1.0) + jd * std::log(p) +
         (kd - jd) * std::log1p(-p);
}

// Probability that at most k/2 of k trials succeed.
double majority_failure(double p0, std::size_t k) {
  if (p0 <= 0.0) return 1.0;
  if (p0 >= 1.0) return 0.0;
  double sum = 0.0;
  for (std::size_t j = 0; 2 * j < k; ++j) {
    sum += std::exp(log_term(k, j, p0));
  }
  return sum;
}

void check_probability(double p0) {
  if (!(p0 >= 0.0 && p0 <= 1.0)) {
    throw std::invalid_argument("success probability must lie in [0, 1]");
  }
}

void check_odd(std::size_t k) {
  if (k == 0 || k % 2 == 0) {
    throw std::invalid_argument("majority vote needs an odd number of copies, got " +
                                std::to_string(k));
  }
}

}  // namespace

QueryProgram reverse_program(const QueryProgram& p) {
  QueryProgram out(p.n(), p.workspace());
  const auto steps = p.steps();
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    if (const auto* u = std::get_if<UnitaryStep>(&*it); u && u->op) {
      out.unitary(u->op->adjoint());
    } else {
      out.append(*it);
    }
  }
  return out;
}

QueryProgram make_tidy(const QueryProgram& p, std::size_t answer_bit) {
  if (answer_bit >= p.num_qubits()) {
    throw std::invalid_argument("answer qubit out of range");
  }
  QueryProgram out = p.widened(1);
  out.cx(answer_bit, p.num_qubits());
  out.append(reverse_program(p));
  return out;
}

QueryProgram coin_program(double p0) {
  check_probability(p0);
  QueryProgram p(0, 1);
  p.unitary(UnitaryOp::ry(0, 2.0 * std::asin(std::sqrt(p0))));
  return p;
}

double qubit_probability(const StateVector& s, std::size_t qubit, bool value) {
  if (qubit >= s.num_qubits()) {
    throw std::invalid_argument("qubit out of range");
  }
  const auto mask = qubit_mask(s.num_qubits(), qubit);
  double sum = 0.0;
  for (std::uint64_t i = 0; i < s.dimension(); ++i) {
    if (((i & mask) != 0) == value) {
      sum += std::norm(s[i]);
    }
  }
  return sum;
}

TidyReport tidiness(const QueryProgram& p, std::size_t answer_bit,
                    const Oracle& a, std::uint64_t input, bool expected_answer) {
  TidyReport r;
  r.base_success =
      qubit_probability(run(p, a, input).final_state, answer_bit, expected_answer);
  const QueryProgram tidy = make_tidy(p, answer_bit);
  const std::uint64_t clean = (input << 1) | (expected_answer ? 1U : 0U);
  const StateVector out = run(tidy, a, input << 1).final_state;
  r.tidiness = std::norm(out[clean]);
  r.bound = r.base_success * r.base_success;
  return r;
}

double majority_success(double p0, std::size_t k) {
  check_probability(p0);
  check_odd(k);
  if (p0 <= 0.0) return 0.0;
  if (p0 >= 1.0) return 1.0;
  double sum = 0.0;
  for (std::size_t j = k / 2 + 1; j <= k; ++j) {
    sum += std::exp(log_term(k, j, p0));
  }
  return std::min(sum, 1.0);
}

QueryProgram boost_program(const QueryProgram& p, std::size_t k,
                           std::size_t answer_bit) {
  check_odd(k);
  const std::size_t w = p.num_qubits();
  if (answer_bit >= w) {
    throw std::invalid_argument("answer qubit out of range");
  }
  if (k * w + 1 > kQubitBudget) {
    throw std::invalid_argument(
        "boosted program needs " + std::to_string(k * w + 1) +
        " qubits, over the budget of " + std::to_string(kQubitBudget));
  }
  QueryProgram out(p.n(), k * w + 1 - p.n());
  for (std::size_t c = 1; c < k; ++c) {
    for (std::size_t q = 0; q < w; ++q) {
      out.cx(q, c * w + q);
    }
  }
  for (std::size_t c = 0; c < k; ++c) {
    for (const auto& step : p.steps()) {
      out.append(shifted(step, c * w));
    }
  }
  std::vector<std::size_t> votes;
  for (std::size_t c = 0; c < k; ++c) {
    votes.push_back(c * w + answer_bit);
  }
  out.majority(std::move(votes), k * w);
  return out;
}

std::size_t required_repetitions(double eps, double p0) {
  check_probability(p0);
  if (!(p0 > 0.5)) {
    throw std::invalid_argument("boosting needs p0 > 1/2");
  }
  if (!(eps > 0.0) || eps > (1.0 - p0) * (1.0 + 1e-12)) {
    throw std::invalid_argument("required_repetitions needs 0 < eps <= 1 - p0");
  }
  for (std::size_t k = 1;; k += 2) {
    if (majority_failure(p0, k) <= eps * (1.0 + 1e-12)) {
      return k;
    }
    if (k > 10'000'000) {
      throw std::runtime_error("required_repetitions did not converge");
    }
  }
}

RepetitionScaling repetition_scaling(std::span<const double> eps, double p0) {
  RepetitionScaling s;
  for (double e : eps) {
    const std::size_t k = required_repetitions(e, p0);
    s.eps.push_back(e);
    s.repetitions.push_back(k);
    if (e < 1.0) {
      s.b = std::max(s.b, static_cast<double>(k) / std::log(1.0 / e));
    }
  }
  return s;
}

}  // namespace qql
