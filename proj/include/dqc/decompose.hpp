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

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dqc/circuit.hpp"
#include "dqc/error.hpp"

namespace dqc {

namespace detail {

inline void emit_toffoli(std::vector<Gate>& out, Qubit c1, Qubit c2, Qubit t) {
  using K = GateKind;
  out.push_back(Gate::single(K::H, t));
  out.push_back(Gate::cnot(c2, t));
  out.push_back(Gate::single(K::Tdg, t));
  out.push_back(Gate::cnot(c1, t));
  out.push_back(Gate::single(K::T, t));
  out.push_back(Gate::cnot(c2, t));
  out.push_back(Gate::single(K::Tdg, t));
  out.push_back(Gate::cnot(c1, t));
  out.push_back(Gate::single(K::T, c2));
  out.push_back(Gate::single(K::T, t));
  out.push_back(Gate::single(K::H, t));
  out.push_back(Gate::cnot(c1, c2));
  out.push_back(Gate::single(K::T, c1));
  out.push_back(Gate::single(K::Tdg, c2));
  out.push_back(Gate::cnot(c1, c2));
}

inline std::optional<Qubit> lowest_idle(std::size_t n_qubits, const Gate& g) {
  for (Qubit q = 0; q < n_qubits; ++q) {
    if (!g.touches(q)) return q;
  }
  return std::nullopt;
}

// `index` is the gate's position in the input circuit, for error reporting.
inline void emit_basic(std::vector<Gate>& out, const Gate& g, std::size_t n_qubits,
                       std::size_t index) {
  switch (g.kind) {
    case GateKind::ControlledRk: {
      const Qubit c = g.controls[0];
      const Qubit t = g.target;
      out.push_back(Gate::single(GateKind::Rk, c, g.k + 1));
      out.push_back(Gate::single(GateKind::Rk, t, g.k + 1));
      out.push_back(Gate::cnot(c, t));
      out.push_back(Gate::single(GateKind::RkDg, t, g.k + 1));
      out.push_back(Gate::cnot(c, t));
      return;
    }
    case GateKind::Toffoli:
      emit_toffoli(out, g.controls[0], g.controls[1], g.target);
      return;
    case GateKind::Fredkin: {
      const Qubit c = g.controls[0];
      const Qubit a = g.target;
      const Qubit b = *g.swap_target;
      out.push_back(Gate::cnot(b, a));
      emit_toffoli(out, c, a, b);
      out.push_back(Gate::cnot(b, a));
      return;
    }
    case GateKind::MCT: {
      // One borrowed line `a` (state restored afterwards):
      //   C(c2, a -> t)  C(c1 -> a)  C(c2, a -> t)  C(c1 -> a)
      auto ancilla = lowest_idle(n_qubits, g);
      if (!ancilla)
        throw DecompositionError(index, "MCT with " + std::to_string(g.controls.size()) +
                                            " controls has no idle qubit to borrow");
      const std::size_t half = (g.controls.size() + 1) / 2;
      std::vector<Qubit> first(g.controls.begin(), g.controls.begin() + half);
      std::vector<Qubit> second(g.controls.begin() + half, g.controls.end());
      second.push_back(*ancilla);
      const Gate to_target = Gate::mct(second, g.target);
      const Gate to_ancilla = Gate::mct(first, *ancilla);
      for (int rep = 0; rep < 2; ++rep) {
        emit_basic(out, to_target, n_qubits, index);
        emit_basic(out, to_ancilla, n_qubits, index);
      }
      return;
    }
    default:
      out.push_back(g);
      return;
  }
}

}  // namespace detail

/// Rewrites every gate into CNOT plus single-qubit gates. Basic gates pass
/// through unchanged, so the result is a fixed point. Wire count is kept;
/// MCT gates borrow the lowest-index idle wire.
inline Circuit decompose_to_basic(const Circuit& c) {
  std::vector<Gate> out;
  out.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) detail::emit_basic(out, c[i], c.n_qubits(), i);

  Circuit result(c.n_qubits(), c.name());
  result.set_qubit_names(c.qubit_names());
  for (Gate& g : out) result.append(std::move(g));
  return result;
}

}  // namespace dqc
