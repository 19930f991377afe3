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
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dqc/circuit.hpp"
#include "dqc/commutation.hpp"
#include "dqc/error.hpp"
#include "dqc/partition.hpp"

namespace dqc {

/// Execution side of every global gate, in circuit order. Bit 0 runs the gate
/// on A, bit 1 on B. Orders lexicographically.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::size_t m_g, Side fill = Side::A)
      : bits_(m_g, static_cast<std::uint8_t>(fill)) {}

  static Configuration from_string(std::string_view s) {
    Configuration c(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] != '0' && s[i] != '1')
        throw std::invalid_argument("configuration must be a 0/1 string, got '" +
                                    std::string(s) + "'");
      c.bits_[i] = static_cast<std::uint8_t>(s[i] - '0');
    }
    return c;
  }

  /// Gene i = bit (m_g - 1 - i) of `value`, so counting up enumerates
  /// configurations in lexicographic order.
  static Configuration from_integer(std::uint64_t value, std::size_t m_g) {
    Configuration c(m_g);
    for (std::size_t i = 0; i < m_g; ++i)
      c.bits_[i] = static_cast<std::uint8_t>((value >> (m_g - 1 - i)) & 1U);
    return c;
  }

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  Side operator[](std::size_t i) const { return static_cast<Side>(bits_[i]); }
  void set(std::size_t i, Side s) { bits_.at(i) = static_cast<std::uint8_t>(s); }
  void flip(std::size_t i) { bits_.at(i) ^= 1U; }

  Configuration complemented() const {
    Configuration c = *this;
    for (auto& b : c.bits_) b ^= 1U;
    return c;
  }

  std::string to_string() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = static_cast<char>('0' + bits_[i]);
    return s;
  }

  friend auto operator<=>(const Configuration&, const Configuration&) = default;
  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Whether each qubit currently sits in its home partition.
struct LocationState {
  std::vector<std::uint8_t> at_home;

  explicit LocationState(std::size_t n) : at_home(n, 1) {}

  bool is_home(Qubit q) const { return at_home[q] != 0; }
  void flip(Qubit q) { at_home[q] ^= 1U; }
  std::size_t migrated() const {
    return static_cast<std::size_t>(std::count(at_home.begin(), at_home.end(), 0));
  }
};

struct EvalOptions {
  bool return_home_at_end = true;
  bool lookahead = true;  // false: execute strictly in circuit order
};

enum class Direction : std::uint8_t { Away, Home };

struct TeleportEvent {
  std::optional<std::size_t> gate;  // nullopt: final return after the last gate
  Qubit qubit = 0;
  Direction direction = Direction::Away;

  friend bool operator==(const TeleportEvent&, const TeleportEvent&) = default;
};

struct CostReport {
  std::size_t teleportations = 0;
  std::vector<std::size_t> schedule;  // executed gate indices, in order
  std::vector<TeleportEvent> events;

  friend bool operator==(const CostReport&, const CostReport&) = default;
};

struct SiteRequirement {
  Qubit qubit;
  bool at_home;

  friend bool operator==(const SiteRequirement&, const SiteRequirement&) = default;
};

/// Where each operand of `g` has to be for it to run. Local gates run at home;
/// a global CNOT runs on `execution_side`, which pulls the operand homed on the
/// other side away from home. `execution_side` is ignored for local gates.
inline std::vector<SiteRequirement> required_sites(const Gate& g, const PartitionAssignment& p,
                                                   Side execution_side) {
  if (!g.is_basic()) throw std::invalid_argument("required_sites: gate is not basic");
  if (g.is_single_qubit()) return {{g.target, true}};
  const Qubit c = g.controls[0];
  if (!is_global(g, p)) return {{c, true}, {g.target, true}};
  return {{c, p.side(c) == execution_side}, {g.target, p.side(g.target) == execution_side}};
}

/// Replays a schedule and checks that every gate commuted with each
/// lower-indexed gate still pending when it ran.
inline bool respects_commutation(const Circuit& c, const std::vector<std::size_t>& schedule) {
  if (schedule.size() != c.size()) return false;
  std::vector<bool> done(c.size(), false);
  for (std::size_t g : schedule) {
    if (g >= c.size() || done[g]) return false;
    for (std::size_t j = 0; j < g; ++j)
      if (!done[j] && !commutes(c[j], c[g])) return false;
    done[g] = true;
  }
  return true;
}

/// Precomputed per-(circuit, partition) data for repeated cost evaluation.
/// Immutable after construction; evaluation only allocates per-call state, so
/// one model can be shared between threads.
class CostModel {
 public:
  static constexpr std::size_t kDefaultOracleCap = 14;

  CostModel(Circuit circuit, PartitionAssignment partition)
      : circuit_(std::move(circuit)), partition_(std::move(partition)) {
    if (!circuit_.is_basic())
      throw std::invalid_argument("cost evaluation needs a basic-library circuit; decompose first");
    classification_ = classify_gates(circuit_, partition_);

    const std::size_t m = circuit_.size();
    ordinal_.assign(m, -1);
    for (std::size_t k = 0; k < classification_.m_g(); ++k)
      ordinal_[classification_.global_indices[k]] = static_cast<std::int64_t>(k);

    // Only gates sharing a qubit can fail to commute.
    std::vector<std::vector<std::uint32_t>> on_qubit(circuit_.n_qubits());
    conflicts_after_.resize(m);
    blockers_.assign(m, 0);
    std::vector<std::size_t> seen(m, std::numeric_limits<std::size_t>::max());
    for (std::size_t i = 0; i < m; ++i) {
      for (Qubit q : circuit_[i].operands()) {
        for (std::uint32_t j : on_qubit[q]) {
          if (seen[j] == i) continue;
          seen[j] = i;
          if (!commutes(circuit_[j], circuit_[i])) {
            conflicts_after_[j].push_back(static_cast<std::uint32_t>(i));
            ++blockers_[i];
          }
        }
        on_qubit[q].push_back(static_cast<std::uint32_t>(i));
      }
    }
  }

  const Circuit& circuit() const noexcept { return circuit_; }
  const PartitionAssignment& partition() const noexcept { return partition_; }
  const GateClassification& classification() const noexcept { return classification_; }
  std::size_t m_g() const noexcept { return classification_.m_g(); }

  CostReport evaluate(const Configuration& cfg, const EvalOptions& opt = {}) const {
    return opt.lookahead ? run_greedy(cfg, opt, true) : run_linear(cfg, opt, true);
  }

  /// Teleportation count only; skips the trace.
  std::size_t teleportations(const Configuration& cfg, const EvalOptions& opt = {}) const {
    return (opt.lookahead ? run_greedy(cfg, opt, false) : run_linear(cfg, opt, false))
        .teleportations;
  }

  /// Exact minimum over every order reachable by executing available gates,
  /// by memoized search over (executed set, locations). Exponential; refuses
  /// circuits longer than `cap` gates.
  CostReport brute_force(const Configuration& cfg, const EvalOptions& opt = {},
                         std::size_t cap = kDefaultOracleCap) const;

 private:
  void check(const Configuration& cfg) const {
    if (cfg.size() != m_g())
      throw std::invalid_argument("configuration has " + std::to_string(cfg.size()) +
                                  " bits, circuit has " + std::to_string(m_g()) +
                                  " global gates");
  }

  Side execution_side(std::size_t gate, const Configuration& cfg) const {
    return ordinal_[gate] < 0 ? Side::A : cfg[static_cast<std::size_t>(ordinal_[gate])];
  }

  bool satisfied(std::size_t gate, const Configuration& cfg, const LocationState& loc) const {
    for (const auto& req : required_sites(circuit_[gate], partition_, execution_side(gate, cfg)))
      if (loc.is_home(req.qubit) != req.at_home) return false;
    return true;
  }

  void execute(std::size_t gate, const Configuration& cfg, LocationState& loc, CostReport& r,
               bool trace) const {
    for (const auto& req : required_sites(circuit_[gate], partition_, execution_side(gate, cfg))) {
      if (loc.is_home(req.qubit) == req.at_home) continue;
      loc.flip(req.qubit);
      ++r.teleportations;
      if (trace)
        r.events.push_back({gate, req.qubit, req.at_home ? Direction::Home : Direction::Away});
    }
    if (trace) r.schedule.push_back(gate);
  }

  void finish(const LocationState& loc, const EvalOptions& opt, CostReport& r, bool trace) const {
    if (!opt.return_home_at_end) return;
    for (Qubit q = 0; q < loc.at_home.size(); ++q) {
      if (loc.is_home(q)) continue;
      ++r.teleportations;
      if (trace) r.events.push_back({std::nullopt, q, Direction::Home});
    }
  }

  CostReport run_linear(const Configuration& cfg, const EvalOptions& opt, bool trace) const {
    check(cfg);
    CostReport r;
    LocationState loc(circuit_.n_qubits());
    for (std::size_t g = 0; g < circuit_.size(); ++g) execute(g, cfg, loc, r, trace);
    finish(loc, opt, r, trace);
    return r;
  }

  // Zero-cost available gates first (lowest index); otherwise the lowest
  // pending gate, which is always available, pays for its moves.
  CostReport run_greedy(const Configuration& cfg, const EvalOptions& opt, bool trace) const {
    check(cfg);
    CostReport r;
    LocationState loc(circuit_.n_qubits());
    std::vector<std::uint32_t> blockers = blockers_;
    std::set<std::uint32_t> available;
    for (std::uint32_t g = 0; g < circuit_.size(); ++g)
      if (blockers[g] == 0) available.insert(g);

    while (!available.empty()) {
      auto pick = std::find_if(available.begin(), available.end(),
                               [&](std::uint32_t g) { return satisfied(g, cfg, loc); });
      if (pick == available.end()) pick = available.begin();
      const std::uint32_t g = *pick;
      available.erase(pick);
      execute(g, cfg, loc, r, trace);
      for (std::uint32_t later : conflicts_after_[g])
        if (--blockers[later] == 0) available.insert(later);
    }
    finish(loc, opt, r, trace);
    return r;
  }

  Circuit circuit_;
  PartitionAssignment partition_;
  GateClassification classification_;
  std::vector<std::int64_t> ordinal_;  // gate index -> global ordinal, -1 if local
  std::vector<std::vector<std::uint32_t>> conflicts_after_;
  std::vector<std::uint32_t> blockers_;  // earlier non-commuting gates per gate
};

inline CostReport CostModel::brute_force(const Configuration& cfg, const EvalOptions& opt,
                                         std::size_t cap) const {
  check(cfg);
  const std::size_t m = circuit_.size();
  if (m > cap || m > 32)
    throw CapExceeded("brute-force oracle limited to " + std::to_string(std::min<std::size_t>(cap, 32)) +
                      " gates, circuit has " + std::to_string(m));

  // Compact the touched qubits into a location bitmask (bit set = away).
  std::vector<int> slot(circuit_.n_qubits(), -1);
  std::vector<Qubit> qubit_of;
  for (const Gate& g : circuit_.gates())
    for (Qubit q : g.operands())
      if (slot[q] < 0) {
        slot[q] = static_cast<int>(qubit_of.size());
        qubit_of.push_back(q);
      }

  if (qubit_of.size() > 32)
    throw CapExceeded("brute-force oracle limited to 32 distinct qubits");

  std::vector<std::uint32_t> earlier_conflicts(m, 0);
  for (std::size_t j = 0; j < m; ++j)
    for (std::uint32_t i : conflicts_after_[j]) earlier_conflicts[i] |= 1U << j;

  // Required away-mask and the mask of operands it constrains, per gate.
  std::vector<std::uint64_t> need_away(m, 0), care(m, 0);
  for (std::size_t g = 0; g < m; ++g)
    for (const auto& req : required_sites(circuit_[g], partition_, execution_side(g, cfg))) {
      const std::uint64_t bit = std::uint64_t{1} << slot[req.qubit];
      care[g] |= bit;
      if (!req.at_home) need_away[g] |= bit;
    }

  const std::uint32_t all = m == 32 ? UINT32_MAX : (1U << m) - 1;
  struct Entry {
    std::size_t cost;
    int choice;
  };
  std::unordered_map<std::uint64_t, Entry> memo;
  auto key_of = [](std::uint32_t done, std::uint32_t away) {
    return (std::uint64_t{done} << 32) | away;
  };

  auto solve = [&](auto&& self, std::uint32_t done, std::uint32_t away) -> std::size_t {
    if (done == all)
      return opt.return_home_at_end ? static_cast<std::size_t>(std::popcount(away)) : 0;
    const auto key = key_of(done, away);
    if (auto it = memo.find(key); it != memo.end()) return it->second.cost;
    Entry best{std::numeric_limits<std::size_t>::max(), -1};
    for (std::size_t g = 0; g < m; ++g) {
      if ((done >> g) & 1U) continue;
      if (earlier_conflicts[g] & ~done) continue;
      const auto next_away =
          static_cast<std::uint32_t>((away & ~care[g]) | need_away[g]);
      const std::size_t step = static_cast<std::size_t>(std::popcount((away ^ next_away)));
      const std::size_t total = step + self(self, done | (1U << g), next_away);
      if (total < best.cost) best = {total, static_cast<int>(g)};
    }
    memo.emplace(key, best);
    return best.cost;
  };

  CostReport r;
  solve(solve, 0, 0);
  std::uint32_t done = 0, away = 0;
  LocationState loc(circuit_.n_qubits());
  while (done != all) {
    const int g = memo.at(key_of(done, away)).choice;
    execute(static_cast<std::size_t>(g), cfg, loc, r, true);
    done |= 1U << g;
    away = static_cast<std::uint32_t>((away & ~care[g]) | need_away[g]);
  }
  finish(loc, opt, r, true);
  return r;
}

inline CostReport evaluate_cost(const Circuit& c, const PartitionAssignment& p,
                                const Configuration& cfg, EvalOptions opt = {}) {
  opt.lookahead = true;
  return CostModel(c, p).evaluate(cfg, opt);
}

inline CostReport evaluate_cost_linear(const Circuit& c, const PartitionAssignment& p,
                                       const Configuration& cfg, EvalOptions opt = {}) {
  opt.lookahead = false;
  return CostModel(c, p).evaluate(cfg, opt);
}

inline CostReport brute_force_min_cost(const Circuit& c, const PartitionAssignment& p,
                                       const Configuration& cfg, const EvalOptions& opt = {},
                                       std::size_t cap = CostModel::kDefaultOracleCap) {
  return CostModel(c, p).brute_force(cfg, opt, cap);
}

}  // namespace dqc
