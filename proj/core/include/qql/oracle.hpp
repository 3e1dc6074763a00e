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
#include <string_view>
#include <vector>

#include "qql/random.hpp"
#include "qql/statevector.hpp"

namespace qql {

enum class OracleKind { boolean, length_preserving, permutation };

std::string_view to_string(OracleKind kind);
/// Parses "boolean", "length_preserving" or "permutation".
OracleKind parse_oracle_kind(std::string_view name);

/// Function table over n-bit strings.
///
/// Boolean oracles answer one bit per input. Length-preserving and
/// permutation oracles answer an n-bit string; a query reads one of its
/// bits, chosen by the caller as `output_bit` (0 is the most significant,
/// i.e. the first character of the bitstring).
class Oracle {
 public:
  /// Throws std::invalid_argument if the table has the wrong length, an
  /// entry is wider than the kind allows, or a permutation is not bijective.
  Oracle(std::size_t n, OracleKind kind, std::vector<std::uint64_t> table);

  /// Every answer zero. Not available for permutations.
  static Oracle zero(std::size_t n, OracleKind kind = OracleKind::boolean);
  /// Boolean oracle answering 1 exactly on `marked`.
  static Oracle marking(std::size_t n, std::uint64_t marked);
  static Oracle identity_permutation(std::size_t n);

  std::size_t n() const { return n_; }
  OracleKind kind() const { return kind_; }
  std::size_t domain_size() const { return table_.size(); }
  /// Width in bits of every answer: 1 for boolean, n otherwise.
  std::size_t output_width() const;
  std::span<const std::uint64_t> table() const { return table_; }

  std::uint64_t operator()(std::uint64_t x) const { return table_.at(x); }

  /// Boolean answer seen by a query that reads `output_bit` of A(x).
  bool answer_bit(std::uint64_t x, std::size_t output_bit = 0) const;

  /// Boolean answers for every input, as consumed by the query kernels.
  std::vector<std::uint8_t> answer_bits(std::size_t output_bit = 0) const;

  /// Number of inputs x with A(x) = value.
  std::size_t preimage_count(std::uint64_t value) const;

  friend bool operator==(const Oracle&, const Oracle&) = default;

 private:
  std::size_t n_;
  OracleKind kind_;
  std::vector<std::uint64_t> table_;
};

/// Replacement answer for one input string.
struct OraclePatch {
  std::uint64_t point;
  std::uint64_t value;
};

/// The oracle equal to `a` everywhere except `p.point`, where it answers
/// `p.value`. Throws if the point or value is out of range, or if `a` is a
/// permutation and the result would not be bijective.
Oracle patch(const Oracle& a, const OraclePatch& p);

/// pi_0 = p0 and pi_i = pi_{i-1} composed with the transposition
/// (xs[i-1], xs[i]), for i = 1 .. xs.size()-1. Returns xs.size() oracles.
/// The first point xs[0] only anchors the chain.
std::vector<Oracle> transposition_chain(const Oracle& p0,
                                        std::span<const std::uint64_t> xs);

/// Deterministic in (n, kind, seed). Boolean and length-preserving entries
/// are i.i.d. uniform; permutations are uniform (Fisher-Yates).
Oracle sample_oracle(std::size_t n, OracleKind kind, std::uint64_t seed);
Oracle sample_oracle(std::size_t n, OracleKind kind, Rng& rng);

/// |x>|b> -> |x>|b xor A(x)_bit>, x read from `query_register` (big-endian
/// in the listed order), b the `target` qubit.
StateVector bit_query(const StateVector& s, const Oracle& a,
                      std::span<const std::size_t> query_register,
                      std::size_t target, std::size_t output_bit = 0);

/// |x> -> (-1)^(A(x)_bit) |x>.
StateVector phase_query(const StateVector& s, const Oracle& a,
                        std::span<const std::size_t> query_register,
                        std::size_t output_bit = 0);

/// Kernels shared with the program runner. `answers[x]` is the Boolean
/// answer for register value x; any 0/1 table is a valid (unitary) query.
void bit_query_in_place(StateVector& s, std::span<const std::uint8_t> answers,
                        std::span<const std::size_t> query_register,
                        std::size_t target);
void phase_query_in_place(StateVector& s,
                          std::span<const std::uint8_t> answers,
                          std::span<const std::size_t> query_register);

/// Value of the register qubits inside a basis index, big-endian.
std::uint64_t extract_register(std::uint64_t index, std::size_t num_qubits,
                               std::span<const std::size_t> reg);

/// For a register of consecutive ascending qubits, the shift s with
/// extract_register(i, m, reg) == (i >> s) & (2^|reg| - 1); nullopt otherwise.
std::optional<std::size_t> contiguous_register_shift(
    std::size_t num_qubits, std::span<const std::size_t> reg);

}  // namespace qql
