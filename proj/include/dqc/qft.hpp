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
#include <stdexcept>
#include <string>

#include "dqc/circuit.hpp"

namespace dqc {

/// Textbook QFT without the final swap layer: H on each line followed by the
/// controlled-R_k ladder from every lower line. Controlled phases are emitted
/// as ControlledRk gates; run decompose_to_basic for the CNOT form.
inline Circuit generate_qft(std::size_t n) {
  if (n == 0) throw std::invalid_argument("QFT needs at least one qubit");
  Circuit c(n, "qft" + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i) {
    c.append(Gate::single(GateKind::H, static_cast<Qubit>(i)));
    for (std::size_t j = i + 1; j < n; ++j) {
      c.append(Gate::controlled_rk(static_cast<int>(j - i + 1), static_cast<Qubit>(j),
                                   static_cast<Qubit>(i)));
    }
  }
  return c;
}

}  // namespace dqc
