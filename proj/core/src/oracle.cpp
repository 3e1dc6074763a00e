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

#include "qql/oracle.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace qql {

namespace {

std::size_t domain_for(std::size_t n) {
  if (n > kMaxQubits) {
    throw std::invalid_argument("oracle input length " + std::to_string(n) +
                                " exceeds " + std::to_string(kMaxQubits));
  }
  return std::size_t{1} << n;
}

bool is_bijection(std::span<const std::uint64_t> table) {
  std::vector<bool> hit(table.size(), false);
  for (auto v : table) {
    if (v >= table.size() || hit[v]) {
      return false;
    }
    hit[v] = true;
  }
  return true;
}

void check_register(const StateVector& s, std::size_t answers_size,
                    std::span<const std::size_t> reg) {
  check_qubits(s.num_qubits(), reg);
  if ((std::size_t{1} << reg.size()) != answers_size) {
    throw std::invalid_argument(
        "query register has " + std::to_string(reg.size()) +
        " qubits but the oracle domain has " + std::to_string(answers_size) +
        " strings");
  }
}

}  // namespace

std::string_view to_string(OracleKind kind) {
  switch (kind) {
    case OracleKind::boolean:
      return "boolean";
    case OracleKind::length_preserving:
      return "length_preserving";
    case OracleKind::permutation:
      return "permutation";
  }
  return "unknown";
}

OracleKind parse_oracle_kind(std::string_view name) {
  if (name == "boolean") return OracleKind::boolean;
  if (name == "length_preserving") return OracleKind::length_preserving;
  if (name == "permutation") return OracleKind::permutation;
  throw std::invalid_argument("unknown oracle kind '" + std::string(name) +
                              "'");
}

Oracle::Oracle(std::size_t n, OracleKind kind, std::vector<std::uint64_t> table)
    : n_(n), kind_(kind), table_(std::move(table)) {
  if (table_.size() != domain_for(n)) {
    throw std::invalid_argument("oracle table has " +
                                std::to_string(table_.size()) +
                                " entries, expected 2^" + std::to_string(n));
  }
  const std::uint64_t limit = std::uint64_t{1} << output_width();
  for (auto v : table_) {
    if (v >= limit) {
      throw std::invalid_argument("oracle answer " + std::to_string(v) +
                                  " wider than " +
                                  std::to_string(output_width()) + " bits");
    }
  }
  if (kind_ == OracleKind::permutation && !is_bijection(table_)) {
    throw std::invalid_argument("permutation oracle table is not a bijection");
  }
}

Oracle Oracle::zero(std::size_t n, OracleKind kind) {
  if (kind == OracleKind::permutation) {
    throw std::invalid_argument("the all-zero table is not a permutation");
  }
  return Oracle(n, kind, std::vector<std::uint64_t>(domain_for(n), 0));
}

Oracle Oracle::marking(std::size_t n, std::uint64_t marked) {
  std::vector<std::uint64_t> table(domain_for(n), 0);
  if (marked >= table.size()) {
    throw std::invalid_argument("marked string out of range");
  }
  table[marked] = 1;
  return Oracle(n, OracleKind::boolean, std::move(table));
}

Oracle Oracle::identity_permutation(std::size_t n) {
  std::vector<std::uint64_t> table(domain_for(n));
  std::iota(table.begin(), table.end(), std::uint64_t{0});
  return Oracle(n, OracleKind::permutation, std::move(table));
}

std::size_t Oracle::output_width() const {
  return kind_ == OracleKind::boolean ? 1 : n_;
}

bool Oracle::answer_bit(std::uint64_t x, std::size_t output_bit) const {
  const std::size_t width = output_width();
  if (output_bit >= width) {
    throw std::invalid_argument("output bit " + std::to_string(output_bit) +
                                " out of range for " + std::to_string(width) +
                                "-bit answers");
  }
  return ((table_.at(x) >> (width - 1 - output_bit)) & 1U) != 0;
}

std::vector<std::uint8_t> Oracle::answer_bits(std::size_t output_bit) const {
  std::vector<std::uint8_t> bits(table_.size());
  for (std::uint64_t x = 0; x < table_.size(); ++x) {
    bits[x] = answer_bit(x, output_bit) ? 1 : 0;
  }
  return bits;
}

std::size_t Oracle::preimage_count(std::uint64_t value) const {
  std::size_t count = 0;
  for (auto v : table_) {
    count += (v == value) ? 1 : 0;
  }
  return count;
}

Oracle patch(const Oracle& a, const OraclePatch& p) {
  if (p.point >= a.domain_size()) {
    throw std::invalid_argument("patch point out of range");
  }
  std::vector<std::uint64_t> table(a.table().begin(), a.table().end());
  table[p.point] = p.value;
  if (a.kind() == OracleKind::permutation && !is_bijection(table)) {
    throw std::invalid_argument(
        "patch would break the permutation; use transposition_chain");
  }
  return Oracle(a.n(), a.kind(), std::move(table));
}

std::vector<Oracle> transposition_chain(const Oracle& p0,
                                        std::span<const std::uint64_t> xs) {
  if (p0.kind() != OracleKind::permutation) {
    throw std::invalid_argument("transposition_chain needs a permutation");
  }
  if (xs.empty()) {
    throw std::invalid_argument("transposition_chain needs at least one point");
  }
  for (auto x : xs) {
    if (x >= p0.domain_size()) {
      throw std::invalid_argument("transposition point out of range");
    }
  }
  std::vector<Oracle> chain;
  chain.reserve(xs.size());
  chain.push_back(p0);
  std::vector<std::uint64_t> table(p0.table().begin(), p0.table().end());
  for (std::size_t i = 1; i < xs.size(); ++i) {
    std::swap(table[xs[i - 1]], table[xs[i]]);
    chain.emplace_back(p0.n(), OracleKind::permutation, table);
  }
  return chain;
}

Oracle sample_oracle(std::size_t n, OracleKind kind, Rng& rng) {
  const std::size_t size = domain_for(n);
  std::vector<std::uint64_t> table(size);
  switch (kind) {
    case OracleKind::boolean:
      for (auto& v : table) {
        v = rng.coin() ? 1 : 0;
      }
      break;
    case OracleKind::length_preserving:
      for (auto& v : table) {
        v = rng.below(size);
      }
      break;
    case OracleKind::permutation:
      std::iota(table.begin(), table.end(), std::uint64_t{0});
      rng.shuffle(std::span<std::uint64_t>(table));
      break;
  }
  return Oracle(n, kind, std::move(table));
}

Oracle sample_oracle(std::size_t n, OracleKind kind, std::uint64_t seed) {
  if (n == 0) {
    throw std::invalid_argument("sample_oracle: n must be at least 1");
  }
  Rng rng(seed);
  return sample_oracle(n, kind, rng);
}

std::uint64_t extract_register(std::uint64_t index, std::size_t num_qubits,
                               std::span<const std::size_t> reg) {
  std::uint64_t x = 0;
  for (std::size_t q : reg) {
    x = (x << 1) | ((index >> (num_qubits - 1 - q)) & 1U);
  }
  return x;
}

std::optional<std::size_t> contiguous_register_shift(
    std::size_t num_qubits, std::span<const std::size_t> reg) {
  if (reg.empty()) {
    return std::nullopt;
  }
  for (std::size_t i = 1; i < reg.size(); ++i) {
    if (reg[i] != reg[0] + i) {
      return std::nullopt;
    }
  }
  return num_qubits - reg[0] - reg.size();
}

namespace {

/// Calls f(index, x) for every basis index, x being the register value.
template <typename F>
void for_each_register_value(std::size_t num_qubits, std::uint64_t dimension,
                             std::span<const std::size_t> reg, F&& f) {
  if (const auto shift = contiguous_register_shift(num_qubits, reg)) {
    const std::uint64_t mask = (std::uint64_t{1} << reg.size()) - 1;
    for (std::uint64_t i = 0; i < dimension; ++i) {
      f(i, (i >> *shift) & mask);
    }
    return;
  }
  for (std::uint64_t i = 0; i < dimension; ++i) {
    f(i, extract_register(i, num_qubits, reg));
  }
}

}  // namespace

void bit_query_in_place(StateVector& s, std::span<const std::uint8_t> answers,
                        std::span<const std::size_t> query_register,
                        std::size_t target) {
  check_register(s, answers.size(), query_register);
  for (std::size_t q : query_register) {
    if (q == target) {
      throw std::invalid_argument("query target overlaps the query register");
    }
  }
  if (target >= s.num_qubits()) {
    throw std::invalid_argument("query target out of range");
  }
  const std::size_t m = s.num_qubits();
  const std::uint64_t tmask = qubit_mask(m, target);
  auto amps = s.amplitudes();
  for_each_register_value(m, amps.size(), query_register,
                          [&](std::uint64_t i, std::uint64_t x) {
                            if ((i & tmask) == 0 && answers[x]) {
                              std::swap(amps[i], amps[i | tmask]);
                            }
                          });
}

void phase_query_in_place(StateVector& s,
                          std::span<const std::uint8_t> answers,
                          std::span<const std::size_t> query_register) {
  check_register(s, answers.size(), query_register);
  const std::size_t m = s.num_qubits();
  auto amps = s.amplitudes();
  for_each_register_value(m, amps.size(), query_register,
                          [&](std::uint64_t i, std::uint64_t x) {
                            if (answers[x]) {
                              amps[i] = -amps[i];
                            }
                          });
}

StateVector bit_query(const StateVector& s, const Oracle& a,
                      std::span<const std::size_t> query_register,
                      std::size_t target, std::size_t output_bit) {
  StateVector out = s;
  bit_query_in_place(out, a.answer_bits(output_bit), query_register, target);
  return out;
}

StateVector phase_query(const StateVector& s, const Oracle& a,
                        std::span<const std::size_t> query_register,
                        std::size_t output_bit) {
  StateVector out = s;
  phase_query_in_place(out, a.answer_bits(output_bit), query_register);
  return out;
}

}  // namespace qql
