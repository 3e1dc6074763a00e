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

#include "qql/serialization.hpp"

#include <stdexcept>
#include <variant>
#include <vector>

namespace qql {

namespace {

const nlohmann::json& member(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("missing JSON member \"") + key +
                                "\"");
  }
  return j.at(key);
}

GateKind parse_gate(const std::string& name) {
  for (auto g : {GateKind::h_all, GateKind::diffusion, GateKind::x,
                 GateKind::cx, GateKind::matrix, GateKind::majority}) {
    if (name == to_string(g)) {
      return g;
    }
  }
  throw std::invalid_argument("unknown gate \"" + name + "\"");
}

}  // namespace

std::string to_bitstring(std::uint64_t value, std::size_t width) {
  std::string s(width, '0');
  for (std::size_t i = 0; i < width; ++i) {
    if ((value >> (width - 1 - i)) & 1U) {
      s[i] = '1';
    }
  }
  return s;
}

std::uint64_t parse_bitstring(std::string_view bits, std::size_t width) {
  if (bits.size() != width) {
    throw std::invalid_argument("bitstring \"" + std::string(bits) +
                                "\" does not have " + std::to_string(width) +
                                " bits");
  }
  std::uint64_t value = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("bitstring \"" + std::string(bits) +
                                  "\" contains a non-binary character");
    }
    value = (value << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return value;
}

nlohmann::ordered_json state_to_json(const StateVector& s) {
  std::vector<double> re;
  std::vector<double> im;
  re.reserve(s.dimension());
  im.reserve(s.dimension());
  for (const auto& a : s.amplitudes()) {
    re.push_back(a.real());
    im.push_back(a.imag());
  }
  return {{"n", s.num_qubits()}, {"re", re}, {"im", im}};
}

StateVector state_from_json(const nlohmann::json& j) {
  const auto n = member(j, "n").get<std::size_t>();
  const auto re = member(j, "re").get<std::vector<double>>();
  const auto im = member(j, "im").get<std::vector<double>>();
  if (re.size() != im.size()) {
    throw std::invalid_argument("state JSON: re and im differ in length");
  }
  std::vector<Complex> amps(re.size());
  for (std::size_t i = 0; i < amps.size(); ++i) {
    amps[i] = Complex{re[i], im[i]};
  }
  return StateVector(n, std::move(amps));
}

nlohmann::ordered_json oracle_to_json(const Oracle& a) {
  std::vector<std::string> table;
  table.reserve(a.domain_size());
  for (auto v : a.table()) {
    table.push_back(to_bitstring(v, a.output_width()));
  }
  return {{"n", a.n()}, {"kind", std::string(to_string(a.kind()))},
          {"table", table}};
}

Oracle oracle_from_json(const nlohmann::json& j) {
  const auto n = member(j, "n").get<std::size_t>();
  const auto kind = parse_oracle_kind(member(j, "kind").get<std::string>());
  const std::size_t width = kind == OracleKind::boolean ? 1 : n;
  std::vector<std::uint64_t> table;
  for (const auto& entry : member(j, "table")) {
    table.push_back(parse_bitstring(entry.get<std::string>(), width));
  }
  return Oracle(n, kind, std::move(table));
}

nlohmann::ordered_json program_to_json(const QueryProgram& p) {
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (const auto& step : p.steps()) {
    nlohmann::ordered_json s;
    if (const auto* u = std::get_if<UnitaryStep>(&step)) {
      s["kind"] = "unitary";
      s["gate"] = std::string(to_string(u->gate));
      s["qubits"] = u->qubits;
      if (u->op) {
        auto m = nlohmann::ordered_json::array();
        for (const auto& z : u->op->matrix()) {
          m.push_back({z.real(), z.imag()});
        }
        s["matrix"] = std::move(m);
      }
    } else {
      const auto& q = std::get<QueryStep>(step);
      s["kind"] = "query";
      s["mode"] = std::string(to_string(q.mode));
      if (q.mode == QueryMode::bit) {
        s["target"] = q.target;
      }
      s["register"] = q.query_register;
      s["output_bit"] = q.output_bit;
    }
    steps.push_back(std::move(s));
  }
  return {{"n", p.n()}, {"workspace", p.workspace()}, {"steps", steps}};
}

QueryProgram program_from_json(const nlohmann::json& j) {
  QueryProgram p(member(j, "n").get<std::size_t>(),
                 member(j, "workspace").get<std::size_t>());
  for (const auto& s : member(j, "steps")) {
    const auto kind = member(s, "kind").get<std::string>();
    if (kind == "unitary") {
      const GateKind gate = parse_gate(member(s, "gate").get<std::string>());
      std::vector<std::size_t> qubits;
      if (s.contains("qubits")) {
        qubits = s.at("qubits").get<std::vector<std::size_t>>();
      }
      if (gate == GateKind::matrix) {
        std::vector<Complex> m;
        for (const auto& z : member(s, "matrix")) {
          if (!z.is_array() || z.size() != 2) {
            throw std::invalid_argument("matrix entries must be [re, im]");
          }
          m.emplace_back(z[0].get<double>(), z[1].get<double>());
        }
        p.unitary(UnitaryOp(std::move(qubits), std::move(m)));
      } else {
        p.append(UnitaryStep{gate, std::move(qubits), std::nullopt});
      }
    } else if (kind == "query") {
      const auto mode_name = member(s, "mode").get<std::string>();
      QueryStep q;
      if (mode_name == "bit") {
        q.mode = QueryMode::bit;
        q.target = member(s, "target").get<std::size_t>();
      } else if (mode_name == "phase") {
        q.mode = QueryMode::phase;
      } else {
        throw std::invalid_argument("unknown query mode \"" + mode_name + "\"");
      }
      if (s.contains("register")) {
        q.query_register = s.at("register").get<std::vector<std::size_t>>();
      }
      q.output_bit = s.value("output_bit", std::size_t{0});
      p.append(std::move(q));
    } else {
      throw std::invalid_argument("unknown step kind \"" + kind + "\"");
    }
  }
  return p;
}

nlohmann::ordered_json trace_to_json(const QueryTrace& trace) {
  nlohmann::ordered_json calls = nlohmann::ordered_json::array();
  for (const auto& row : trace.magnitudes) {
    calls.push_back(row);
  }
  return {{"n", trace.n}, {"T", trace.num_queries()}, {"magnitudes", calls}};
}

}  // namespace qql
