// Copyright 2026 The dqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// RevLib `.real` reader and writer, restricted to the Toffoli / Fredkin
// subset. `.inputs`, `.outputs`, `.constants` and `.garbage` are accepted and
// dropped.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dqc/circuit.hpp"
#include "dqc/detail/text.hpp"
#include "dqc/error.hpp"

namespace dqc {

inline Circuit parse_real(std::string_view text) {
  const auto lines = detail::lines_of(text);

  std::optional<std::size_t> numvars;
  std::vector<std::string> names;
  std::unordered_map<std::string, Qubit> index_of;
  std::optional<Circuit> circuit;
  bool begun = false;
  bool ended = false;

  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    auto toks = detail::split_ws(lines[i]);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (ended) throw ParseError(lineno, "content after .end");

    const std::string head = detail::lower(toks[0]);
    if (head[0] == '.') {
      if (head == ".version" || head == ".inputs" || head == ".outputs" ||
          head == ".constants" || head == ".garbage") {
        continue;
      }
      if (head == ".numvars") {
        if (toks.size() != 2) throw ParseError(lineno, ".numvars expects one value");
        numvars = detail::parse_uint<std::size_t>(toks[1]);
        if (!numvars) throw ParseError(lineno, "bad .numvars value '" + toks[1] + "'");
      } else if (head == ".variables") {
        names.assign(toks.begin() + 1, toks.end());
        index_of.clear();
        for (std::size_t v = 0; v < names.size(); ++v) {
          if (!index_of.emplace(names[v], static_cast<Qubit>(v)).second)
            throw ParseError(lineno, "variable '" + names[v] + "' declared twice");
        }
      } else if (head == ".begin") {
        if (begun) throw ParseError(lineno, "duplicate .begin");
        if (!numvars) throw ParseError(lineno, ".begin before .numvars");
        if (names.size() != *numvars)
          throw ParseError(lineno, ".variables lists " + std::to_string(names.size()) +
                                       " names but .numvars is " + std::to_string(*numvars));
        circuit.emplace(*numvars);
        circuit->set_qubit_names(names);
        begun = true;
      } else if (head == ".end") {
        if (!begun) throw ParseError(lineno, ".end without .begin");
        ended = true;
      } else {
        throw ParseError(lineno, "unknown directive '" + toks[0] + "'");
      }
      continue;
    }

    if (!begun) throw ParseError(lineno, "gate before .begin");
    const char family = head[0];
    const auto arity = detail::parse_uint<std::size_t>(std::string_view(head).substr(1));
    if ((family != 't' && family != 'f') || !arity || *arity == 0)
      throw ParseError(lineno, "unknown gate '" + toks[0] + "'");
    if (family == 'f' && *arity != 3) throw ParseError(lineno, "only f3 is supported");
    if (toks.size() - 1 != *arity)
      throw ParseError(lineno, toks[0] + " expects " + std::to_string(*arity) + " operands");

    std::vector<Qubit> ops;
    for (std::size_t t = 1; t < toks.size(); ++t) {
      auto it = index_of.find(toks[t]);
      if (it == index_of.end()) throw ParseError(lineno, "undeclared variable '" + toks[t] + "'");
      if (std::find(ops.begin(), ops.end(), it->second) != ops.end())
        throw ParseError(lineno, "duplicate operand '" + toks[t] + "'");
      ops.push_back(it->second);
    }
    if (family == 'f') {
      circuit->append(Gate::fredkin(ops[0], ops[1], ops[2]));
    } else {
      const Qubit target = ops.back();
      ops.pop_back();
      circuit->append(Gate::mct(std::move(ops), target));
    }
  }

  if (!begun) throw ParseError(lines.size() + 1, "missing .begin");
  if (!ended) throw ParseError(lines.size() + 1, "missing .end");
  return std::move(*circuit);
}

namespace detail {

inline std::string default_qubit_name(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "x" + std::to_string(i);
}

}  // namespace detail

/// Throws SerializationError for any gate outside X / CNOT / Toffoli / MCT /
/// Fredkin.
inline std::string serialize_real(const Circuit& c) {
  std::vector<std::string> names = c.qubit_names();
  if (names.empty()) {
    for (std::size_t i = 0; i < c.n_qubits(); ++i) names.push_back(detail::default_qubit_name(i));
  }
  auto join = [&](auto&& fn) {
    std::string s;
    for (std::size_t i = 0; i < names.size(); ++i) s += " " + fn(i);
    return s;
  };

  std::string out;
  if (!c.name().empty()) out += "# " + c.name() + "\n";
  out += ".version 1.0\n";
  out += ".numvars " + std::to_string(c.n_qubits()) + "\n";
  out += ".variables" + join([&](std::size_t i) { return names[i]; }) + "\n";
  out += ".inputs" + join([&](std::size_t i) { return names[i]; }) + "\n";
  out += ".outputs" + join([&](std::size_t i) { return names[i]; }) + "\n";
  out += ".constants " + std::string(c.n_qubits(), '-') + "\n";
  out += ".garbage " + std::string(c.n_qubits(), '-') + "\n";
  out += ".begin\n";
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Gate& g = c[i];
    switch (g.kind) {
      case GateKind::X:
      case GateKind::CNOT:
      case GateKind::Toffoli:
      case GateKind::MCT: out += "t" + std::to_string(g.controls.size() + 1); break;
      case GateKind::Fredkin: out += "f3"; break;
      default:
        throw SerializationError("gate " + std::to_string(i) + " (" +
                                 std::string(kind_name(g.kind)) +
                                 ") is not representable in .real");
    }
    for (Qubit q : g.operands()) out += " " + names[q];
    out += "\n";
  }
  out += ".end\n";
  return out;
}

}  // namespace dqc
