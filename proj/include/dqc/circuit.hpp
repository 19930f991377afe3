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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dqc {

/// Zero-based wire index, numbered top to bottom.
using Qubit = std::uint32_t;

enum class GateKind : std::uint8_t {
  // single-qubit
  X,
  Y,
  Z,
  H,
  S,
  Sdg,
  T,
  Tdg,
  Rk,    // diag(1, exp(2*pi*i / 2^k))
  RkDg,  // inverse of Rk
  // multi-qubit
  CNOT,
  ControlledRk,  // QFT building block; removed by decomposition
  Toffoli,
  MCT,  // three or more controls
  Fredkin,
};

constexpr bool is_single_qubit_kind(GateKind k) noexcept {
  return k <= GateKind::RkDg;
}

constexpr bool has_phase_order(GateKind k) noexcept {
  return k == GateKind::Rk || k == GateKind::RkDg || k == GateKind::ControlledRk;
}

/// Diagonal single-qubit gates. These commute with each other and with a CNOT
/// on its control line.
constexpr bool is_diagonal_kind(GateKind k) noexcept {
  switch (k) {
    case GateKind::Z:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::T:
    case GateKind::Tdg:
    case GateKind::Rk:
    case GateKind::RkDg:
      return true;
    default:
      return false;
  }
}

inline std::string_view kind_name(GateKind k) {
  switch (k) {
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::H: return "H";
    case GateKind::S: return "S";
    case GateKind::Sdg: return "Sdg";
    case GateKind::T: return "T";
    case GateKind::Tdg: return "Tdg";
    case GateKind::Rk: return "Rk";
    case GateKind::RkDg: return "RkDg";
    case GateKind::CNOT: return "CNOT";
    case GateKind::ControlledRk: return "ControlledRk";
    case GateKind::Toffoli: return "Toffoli";
    case GateKind::MCT: return "MCT";
    case GateKind::Fredkin: return "Fredkin";
  }
  return "?";
}

/// One circuit element. Its index is its position in the owning Circuit.
///
/// Operand conventions: single-qubit gates act on `target`; CNOT, Toffoli and
/// MCT flip `target` under `controls`; ControlledRk applies the phase to
/// `target` under its single control; Fredkin swaps `target` and
/// `swap_target` under its single control.
struct Gate {
  GateKind kind = GateKind::X;
  int k = 0;  // phase order, Rk / RkDg / ControlledRk only
  std::vector<Qubit> controls;
  Qubit target = 0;
  std::optional<Qubit> swap_target;

  static Gate single(GateKind kind, Qubit q, int k = 0) {
    if (!is_single_qubit_kind(kind)) throw std::invalid_argument("not a single-qubit kind");
    if (has_phase_order(kind) && k < 1) throw std::invalid_argument("phase order must be >= 1");
    return Gate{kind, has_phase_order(kind) ? k : 0, {}, q, std::nullopt};
  }
  static Gate cnot(Qubit control, Qubit target) {
    return Gate{GateKind::CNOT, 0, {control}, target, std::nullopt};
  }
  static Gate controlled_rk(int k, Qubit control, Qubit target) {
    if (k < 1) throw std::invalid_argument("phase order must be >= 1");
    return Gate{GateKind::ControlledRk, k, {control}, target, std::nullopt};
  }
  static Gate toffoli(Qubit c1, Qubit c2, Qubit target) {
    return Gate{GateKind::Toffoli, 0, {c1, c2}, target, std::nullopt};
  }
  /// Multiple-control Toffoli. Picks CNOT / Toffoli for one / two controls.
  static Gate mct(std::vector<Qubit> controls, Qubit target) {
    switch (controls.size()) {
      case 0: return single(GateKind::X, target);
      case 1: return cnot(controls[0], target);
      case 2: return toffoli(controls[0], controls[1], target);
      default: return Gate{GateKind::MCT, 0, std::move(controls), target, std::nullopt};
    }
  }
  static Gate fredkin(Qubit control, Qubit a, Qubit b) {
    return Gate{GateKind::Fredkin, 0, {control}, a, b};
  }

  bool is_single_qubit() const noexcept { return is_single_qubit_kind(kind); }
  bool is_cnot() const noexcept { return kind == GateKind::CNOT; }
  /// Member of the basic library: CNOT or a single-qubit gate.
  bool is_basic() const noexcept { return is_single_qubit() || is_cnot(); }

  /// Controls first, then target(s).
  std::vector<Qubit> operands() const {
    std::vector<Qubit> ops = controls;
    ops.push_back(target);
    if (swap_target) ops.push_back(*swap_target);
    return ops;
  }

  bool touches(Qubit q) const {
    return target == q || (swap_target && *swap_target == q) ||
           std::find(controls.begin(), controls.end(), q) != controls.end();
  }

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Ordered gate list over a fixed number of wires.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::size_t n_qubits, std::string name = {})
      : n_qubits_(n_qubits), name_(std::move(name)) {}

  /// Throws std::invalid_argument if an operand is out of range or repeated,
  /// or the operand count does not match the kind.
  void append(Gate g) {
    validate(g);
    gates_.push_back(std::move(g));
  }

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  std::size_t size() const noexcept { return gates_.size(); }
  bool empty() const noexcept { return gates_.empty(); }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  const Gate& operator[](std::size_t i) const { return gates_[i]; }

  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// Optional wire labels (kept from `.real` input). Empty means unnamed.
  const std::vector<std::string>& qubit_names() const noexcept { return qubit_names_; }
  void set_qubit_names(std::vector<std::string> names) {
    if (!names.empty() && names.size() != n_qubits_)
      throw std::invalid_argument("qubit name count does not match qubit count");
    qubit_names_ = std::move(names);
  }

  bool is_basic() const {
    return std::all_of(gates_.begin(), gates_.end(), [](const Gate& g) { return g.is_basic(); });
  }

  /// Structural equality: wire count and gate list. Labels are ignored.
  friend bool operator==(const Circuit& a, const Circuit& b) {
    return a.n_qubits_ == b.n_qubits_ && a.gates_ == b.gates_;
  }

 private:
  void validate(const Gate& g) const {
    std::size_t expected_controls = 0;
    switch (g.kind) {
      case GateKind::CNOT:
      case GateKind::ControlledRk:
      case GateKind::Fredkin: expected_controls = 1; break;
      case GateKind::Toffoli: expected_controls = 2; break;
      case GateKind::MCT:
        if (g.controls.size() < 3) throw std::invalid_argument("MCT needs at least 3 controls");
        expected_controls = g.controls.size();
        break;
      default: break;
    }
    if (g.controls.size() != expected_controls)
      throw std::invalid_argument(std::string(kind_name(g.kind)) + ": wrong control count");
    if (g.swap_target.has_value() != (g.kind == GateKind::Fredkin))
      throw std::invalid_argument("swap target is only valid on Fredkin gates");
    if (has_phase_order(g.kind) ? g.k < 1 : g.k != 0)
      throw std::invalid_argument(std::string(kind_name(g.kind)) + ": bad phase order");
    auto ops = g.operands();
    for (Qubit q : ops) {
      if (q >= n_qubits_)
        throw std::invalid_argument("qubit " + std::to_string(q) + " out of range");
    }
    std::sort(ops.begin(), ops.end());
    if (std::adjacent_find(ops.begin(), ops.end()) != ops.end())
      throw std::invalid_argument(std::string(kind_name(g.kind)) + ": repeated operand");
  }

  std::size_t n_qubits_ = 0;
  std::vector<Gate> gates_;
  std::string name_;
  std::vector<std::string> qubit_names_;
};

struct GateCounts {
  std::size_t total = 0;  // m_t
  std::size_t cnot = 0;
  std::size_t single_qubit = 0;
  std::map<std::string, std::size_t, std::less<>> by_kind;
};

inline GateCounts gate_counts(const Circuit& c) {
  GateCounts counts;
  counts.total = c.size();
  for (const Gate& g : c.gates()) {
    ++counts.by_kind[std::string(kind_name(g.kind))];
    if (g.is_cnot()) ++counts.cnot;
    if (g.is_single_qubit()) ++counts.single_qubit;
  }
  return counts;
}

}  // namespace dqc
