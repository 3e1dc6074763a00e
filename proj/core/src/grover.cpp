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

#include "qql/grover.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qql {

namespace {

std::uint64_t unique_marked(std::size_t n, const Oracle& a) {
  if (a.kind() != OracleKind::boolean || a.n() != n) {
    throw std::invalid_argument(
        "grover search needs a Boolean oracle on n-bit strings");
  }
  if (a.preimage_count(1) != 1) {
    throw std::invalid_argument("grover search needs exactly one marked string");
  }
  for (std::uint64_t x = 0; x < a.domain_size(); ++x) {
    if (a(x) == 1) {
      return x;
    }
  }
  return 0;
}

// Steps a register of n qubits through rounds of (phase query; diffusion),
// calling `visit(k, state)` before round k+1.
template <typename Visit>
void grover_rounds(std::size_t n, const Oracle& a, std::size_t k,
                   Visit&& visit) {
  const auto answers = a.answer_bits();
  std::vector<std::size_t> reg(n);
  for (std::size_t q = 0; q < n; ++q) {
    reg[q] = q;
  }
  StateVector state = StateVector::uniform(n);
  visit(std::size_t{0}, state);
  for (std::size_t round = 1; round <= k; ++round) {
    phase_query_in_place(state, answers, reg);
    reflect_about_uniform_in_place(state, reg);
    visit(round, state);
  }
}

}  // namespace

StateVector diffusion(const StateVector& s, std::span<const std::size_t> reg) {
  if (reg.empty()) {
    throw std::invalid_argument("diffusion needs a nonempty register");
  }
  StateVector out = s;
  reflect_about_uniform_in_place(out, reg);
  return out;
}

QueryProgram grover_program(std::size_t n, std::size_t k) {
  QueryProgram p(n, 0);
  p.h_all();
  for (std::size_t i = 0; i < k; ++i) {
    p.phase_query().diffusion();
  }
  return p;
}

double grover_search(std::size_t n, const Oracle& a, std::size_t k) {
  const std::uint64_t y = unique_marked(n, a);
  double found = 0.0;
  grover_rounds(n, a, k, [&](std::size_t round, const StateVector& s) {
    if (round == k) {
      found = std::norm(s[y]);
    }
  });
  return found;
}

GroverSchedule success_curve(std::size_t n, std::size_t kmax) {
  if (n == 0) {
    throw std::invalid_argument("success_curve needs n >= 1");
  }
  return success_curve(n, kmax, (std::uint64_t{1} << n) - 1);
}

GroverSchedule success_curve(std::size_t n, std::size_t kmax,
                             std::uint64_t marked) {
  const Oracle a = Oracle::marking(n, marked);
  const StateVector psi0 = StateVector::uniform(n);
  const double size = std::ldexp(1.0, static_cast<int>(n));

  GroverSchedule g;
  g.n = n;
  g.marked = marked;
  grover_rounds(n, a, kmax, [&](std::size_t k, const StateVector& s) {
    const double kd = static_cast<double>(k);
    g.found.push_back(std::norm(s[marked]));
    g.separation.push_back(1.0 - std::norm(inner_product(psi0, s)));
    g.separation_approx.push_back(4.0 * kd * kd / size);
    g.distance.push_back(euclidean_distance(psi0, s));
    g.distance_approx.push_back(2.0 * kd / std::sqrt(size));
  });
  return g;
}

std::string GroverSchedule::to_csv() const {
  std::ostringstream out;
  out.precision(17);
  out << "k,success_exact,success_approx_4k2N,distance_exact,"
         "distance_approx_2kSqrtN,found_exact\n";
  for (std::size_t k = 0; k < found.size(); ++k) {
    out << k << ',' << separation[k] << ',' << separation_approx[k] << ','
        << distance[k] << ',' << distance_approx[k] << ',' << found[k] << '\n';
  }
  return out.str();
}

std::size_t optimal_iterations(std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("optimal_iterations needs n >= 1");
  }
  const auto limit = static_cast<std::size_t>(std::ceil(
      std::numbers::pi / 4.0 * std::sqrt(std::ldexp(1.0, static_cast<int>(n)))));
  const GroverSchedule g = success_curve(n, limit);
  std::size_t best = 0;
  for (std::size_t k = 1; k < g.found.size(); ++k) {
    if (g.found[k] > g.found[best] + kTolerance) {
      best = k;
    }
  }
  return best;
}

}  // namespace qql
