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

// JSON forms used by the command-line tool.
//
//   state:   {"n": m, "re": [...], "im": [...]}
//   oracle:  {"n": 4, "kind": "permutation", "table": ["0110", ...]}
//   program: {"n": 3, "workspace": 1, "steps": [
//               {"kind": "unitary", "gate": "h_all"},
//               {"kind": "unitary", "gate": "matrix", "qubits": [0],
//                "matrix": [[re, im], ...]},
//               {"kind": "query", "mode": "bit", "target": 3}, ...]}
//
// Bitstrings are big-endian. Optional step members: "qubits" (gates;
// defaults to the query register for h_all and diffusion), "register" and
// "output_bit" (queries). Matrices are row-major lists of [re, im] pairs.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "qql/oracle.hpp"
#include "qql/program.hpp"
#include "qql/statevector.hpp"

namespace qql {

/// `width` characters of '0'/'1', most significant first.
std::string to_bitstring(std::uint64_t value, std::size_t width);
/// Inverse of to_bitstring; throws on other characters or a width mismatch.
std::uint64_t parse_bitstring(std::string_view bits, std::size_t width);

nlohmann::ordered_json state_to_json(const StateVector& s);
StateVector state_from_json(const nlohmann::json& j);

nlohmann::ordered_json oracle_to_json(const Oracle& a);
Oracle oracle_from_json(const nlohmann::json& j);

nlohmann::ordered_json program_to_json(const QueryProgram& p);
QueryProgram program_from_json(const nlohmann::json& j);

nlohmann::ordered_json trace_to_json(const QueryTrace& trace);

}  // namespace qql
