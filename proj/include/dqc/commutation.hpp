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

#include <stdexcept>
#include <string>

#include "dqc/circuit.hpp"

namespace dqc {

/// Symbolic commutation test for basic gates. Returns true only when the pair
/// is known to commute; every pair not covered below is treated as
/// non-commuting.
///
///   - disjoint operands
///   - CNOT / CNOT unless one's target is the other's control
///   - diagonal gate on a CNOT control, X on a CNOT target
///   - two diagonal gates, or two identical gates, on the same qubit
inline bool commutes(const Gate& g, const Gate& h) {
  if (!g.is_basic() || !h.is_basic())
    throw std::invalid_argument("commutes: only basic gates are supported");

  if (g.is_cnot() && h.is_cnot()) {
    // Disjoint pairs and shared controls / shared targets fall out here too.
    return g.target != h.controls[0] && h.target != g.controls[0];
  }
  if (g.is_cnot() || h.is_cnot()) {
    const Gate& cx = g.is_cnot() ? g : h;
    const Gate& u = g.is_cnot() ? h : g;
    if (u.target == cx.controls[0]) return is_diagonal_kind(u.kind);
    if (u.target == cx.target) return u.kind == GateKind::X;
    return true;
  }
  if (g.target != h.target) return true;
  return (is_diagonal_kind(g.kind) && is_diagonal_kind(h.kind)) || g == h;
}

}  // namespace dqc
