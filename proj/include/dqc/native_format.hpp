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

// Native line-oriented circuit format (`.dqc`):
//
//   # comment
//   qubits 4
//   name qft4
//   h 0
//   rk 3 2          (phase order, qubit)
//   cnot 1 0        (control, target)
//   crk 2 1 0       (phase order, control, target)
//   toffoli 0 1 2
//   mct 0 1 2 3     (controls..., target)
//   fredkin 0 1 2   (control, swapped, swapped)

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dqc/circuit.hpp"
#include "dqc/detail/text.hpp"
#include "dqc/error.hpp"

namespace dqc {

namespace detail {

inline std::optional<GateKind> single_kind_from_mnemonic(std::string_view m) {
  if (m == "x") return GateKind::X;
  if (m == "y") return GateKind::Y;
  if (m == "z") return GateKind::Z;
  if (m == "h") return GateKind::H;
  if (m == "s") return GateKind::S;
  if (m == "sdg") return GateKind::Sdg;
  if (m == "t") return GateKind::T;
  if (m == "tdg") return GateKind::Tdg;
  if (m == "rk") return GateKind::Rk;
  if (m == "rkdg") return GateKind::RkDg;
  return std::nullopt;
}

inline std::string mnemonic(GateKind k) { return lower(std::string(kind_name(k))); }

}  // namespace detail

inline Circuit parse_native(std::string_view text) {
  std::optional<Circuit> circuit;
  std::string name;
  const auto lines = detail::lines_of(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    auto toks = detail::split_ws(lines[i]);
    if (toks.empty() || toks[0][0] == '#') continue;
    const std::string op = detail::lower(toks[0]);

    std::vector<unsigned long> args;
    if (op != "name") {
      for (std::size_t t = 1; t < toks.size(); ++t) {
        auto v = detail::parse_uint(toks[t]);
        if (!v) throw ParseError(lineno, "expected a non-negative integer, got '" + toks[t] + "'");
        args.push_back(*v);
      }
    }
    auto need = [&](std::size_t n) {
      if (args.size() != n)
        throw ParseError(lineno, op + " expects " + std::to_string(n) + " arguments");
    };
    auto q = [&](std::size_t i) { return static_cast<Qubit>(args[i]); };

    if (op == "qubits") {
      if (circuit) throw ParseError(lineno, "duplicate qubits line");
      need(1);
      circuit.emplace(args[0]);
      continue;
    }
    if (op == "name") {
      std::string_view rest = lines[i];
      rest.remove_prefix(rest.find_first_not_of(" \t") + toks[0].size());
      const auto first = rest.find_first_not_of(" \t");
      const auto last = rest.find_last_not_of(" \t");
      name = first == std::string_view::npos ? "" : std::string(rest.substr(first, last - first + 1));
      continue;
    }
    if (!circuit) throw ParseError(lineno, "gate before qubits line");

    try {
      if (auto kind = detail::single_kind_from_mnemonic(op)) {
        if (has_phase_order(*kind)) {
          need(2);
          circuit->append(Gate::single(*kind, q(1), static_cast<int>(args[0])));
        } else {
          need(1);
          circuit->append(Gate::single(*kind, q(0)));
        }
      } else if (op == "cnot") {
        need(2);
        circuit->append(Gate::cnot(q(0), q(1)));
      } else if (op == "crk") {
        need(3);
        circuit->append(Gate::controlled_rk(static_cast<int>(args[0]), q(1), q(2)));
      } else if (op == "toffoli") {
        need(3);
        circuit->append(Gate::toffoli(q(0), q(1), q(2)));
      } else if (op == "mct") {
        if (args.size() < 4) throw ParseError(lineno, "mct expects at least 3 controls");
        std::vector<Qubit> controls;
        for (std::size_t a = 0; a + 1 < args.size(); ++a) controls.push_back(q(a));
        circuit->append(Gate::mct(std::move(controls), q(args.size() - 1)));
      } else if (op == "fredkin") {
        need(3);
        circuit->append(Gate::fredkin(q(0), q(1), q(2)));
      } else {
        throw ParseError(lineno, "unknown gate '" + toks[0] + "'");
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, e.what());
    }
  }
  if (!circuit) throw ParseError(0, "missing qubits line");
  circuit->set_name(name);
  return std::move(*circuit);
}

inline std::string serialize_native(const Circuit& c) {
  std::string out = "qubits " + std::to_string(c.n_qubits()) + "\n";
  if (!c.name().empty()) out += "name " + c.name() + "\n";
  for (const Gate& g : c.gates()) {
    std::string line;
    switch (g.kind) {
      case GateKind::ControlledRk: line = "crk " + std::to_string(g.k); break;
      case GateKind::Rk:
      case GateKind::RkDg: line = detail::mnemonic(g.kind) + " " + std::to_string(g.k); break;
      default: line = detail::mnemonic(g.kind); break;
    }
    for (Qubit q : g.operands()) line += " " + std::to_string(q);
    out += line + "\n";
  }
  return out;
}

}  // namespace dqc
