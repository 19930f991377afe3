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
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "dqc/circuit.hpp"
#include "dqc/rng.hpp"

namespace dqc {

enum class Side : std::uint8_t { A = 0, B = 1 };

constexpr Side other(Side s) noexcept { return s == Side::A ? Side::B : Side::A; }
constexpr char side_char(Side s) noexcept { return s == Side::A ? 'A' : 'B'; }

/// Symmetric qubit coupling weights: w(u, v) counts CNOTs acting on {u, v}.
class InteractionGraph {
 public:
  using Weight = std::int64_t;

  explicit InteractionGraph(std::size_t n) : n_(n), w_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  Weight weight(std::size_t u, std::size_t v) const { return w_[u * n_ + v]; }

  void add_edge(std::size_t u, std::size_t v, Weight w = 1) {
    if (u >= n_ || v >= n_) throw std::out_of_range("node out of range");
    if (u == v) throw std::invalid_argument("self loops are not allowed");
    w_[u * n_ + v] += w;
    w_[v * n_ + u] += w;
  }

  Weight total_weight() const {
    Weight sum = 0;
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t v = u + 1; v < n_; ++v) sum += weight(u, v);
    return sum;
  }

 private:
  std::size_t n_;
  std::vector<Weight> w_;
};

/// Throws std::invalid_argument if `c` still holds non-basic gates.
inline InteractionGraph build_interaction_graph(const Circuit& c) {
  InteractionGraph g(c.n_qubits());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Gate& gate = c[i];
    if (!gate.is_basic())
      throw std::invalid_argument("gate " + std::to_string(i) + " (" +
                                  std::string(kind_name(gate.kind)) +
                                  ") is not in the basic library; decompose first");
    if (gate.is_cnot()) g.add_edge(gate.controls[0], gate.target);
  }
  return g;
}

/// Home side of every qubit. Side sizes differ by at most one.
class PartitionAssignment {
 public:
  PartitionAssignment() = default;

  static PartitionAssignment from_sides(std::vector<Side> sides) {
    const auto a = std::count(sides.begin(), sides.end(), Side::A);
    const auto b = static_cast<std::ptrdiff_t>(sides.size()) - a;
    if (a - b > 1 || b - a > 1)
      throw std::invalid_argument("unbalanced partition: " + std::to_string(a) + " vs " +
                                  std::to_string(b));
    PartitionAssignment p;
    p.sides_ = std::move(sides);
    return p;
  }

  std::size_t size() const noexcept { return sides_.size(); }
  Side side(Qubit q) const { return sides_.at(q); }
  const std::vector<Side>& sides() const noexcept { return sides_; }
  std::size_t count(Side s) const {
    return static_cast<std::size_t>(std::count(sides_.begin(), sides_.end(), s));
  }

  /// Same split with the A / B labels exchanged.
  PartitionAssignment swapped() const {
    PartitionAssignment p = *this;
    for (Side& s : p.sides_) s = other(s);
    return p;
  }

  std::string to_string() const {
    std::string s;
    for (Side side : sides_) s += side_char(side);
    return s;
  }

  friend bool operator==(const PartitionAssignment&, const PartitionAssignment&) = default;

 private:
  std::vector<Side> sides_;
};

/// First ceil(n/2) qubits on A, the rest on B.
inline PartitionAssignment contiguous_split(std::size_t n) {
  std::vector<Side> sides(n, Side::B);
  std::fill_n(sides.begin(), (n + 1) / 2, Side::A);
  return PartitionAssignment::from_sides(std::move(sides));
}

/// Uniformly random balanced split; A receives ceil(n/2) qubits.
inline PartitionAssignment seeded_balanced_split(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rng rng(seed);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.uniform_index(i)]);
  std::vector<Side> sides(n, Side::B);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) sides[perm[i]] = Side::A;
  return PartitionAssignment::from_sides(std::move(sides));
}

inline InteractionGraph::Weight cut_weight(const InteractionGraph& g,
                                           const PartitionAssignment& p) {
  if (p.size() != g.size()) throw std::invalid_argument("partition does not cover the graph");
  InteractionGraph::Weight cut = 0;
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = u + 1; v < g.size(); ++v)
      if (p.side(static_cast<Qubit>(u)) != p.side(static_cast<Qubit>(v))) cut += g.weight(u, v);
  return cut;
}

/// Relabels so that qubit 0 sits on side A.
inline PartitionAssignment canonicalize(const PartitionAssignment& p) {
  return p.size() > 0 && p.side(0) == Side::B ? p.swapped() : p;
}

/// Kernighan-Lin passes starting from `initial`. Each pass tentatively swaps
/// the best unlocked pair until one side is exhausted, then commits the prefix
/// with the largest positive cumulative gain. Stops after a pass with no
/// positive prefix, so the cut never exceeds that of `initial`. Gain ties go
/// to the lexicographically smallest (min, max) node pair.
inline PartitionAssignment kernighan_lin_refine(const InteractionGraph& g,
                                                PartitionAssignment initial) {
  using Weight = InteractionGraph::Weight;
  const std::size_t n = g.size();
  if (initial.size() != n) throw std::invalid_argument("partition does not cover the graph");
  std::vector<Side> side = initial.sides();

  while (true) {
    // D(v) = external - internal cost
    std::vector<Weight> d(n, 0);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        if (u != v) d[u] += side[u] != side[v] ? g.weight(u, v) : -g.weight(u, v);

    std::vector<bool> locked(n, false);
    std::vector<std::pair<std::size_t, std::size_t>> swaps;
    std::vector<Weight> gains;
    const std::size_t steps = std::min(initial.count(Side::A), initial.count(Side::B));

    for (std::size_t step = 0; step < steps; ++step) {
      Weight best = std::numeric_limits<Weight>::min();
      std::pair<std::size_t, std::size_t> best_key{n, n};
      std::size_t best_a = n, best_b = n;
      for (std::size_t a = 0; a < n; ++a) {
        if (locked[a] || side[a] != Side::A) continue;
        for (std::size_t b = 0; b < n; ++b) {
          if (locked[b] || side[b] != Side::B) continue;
          const Weight gain = d[a] + d[b] - 2 * g.weight(a, b);
          const std::pair<std::size_t, std::size_t> key{std::min(a, b), std::max(a, b)};
          if (gain > best || (gain == best && key < best_key)) {
            best = gain;
            best_key = key;
            best_a = a;
            best_b = b;
          }
        }
      }
      locked[best_a] = locked[best_b] = true;
      swaps.emplace_back(best_a, best_b);
      gains.push_back(best);
      for (std::size_t x = 0; x < n; ++x) {
        if (locked[x]) continue;
        const Weight wa = g.weight(x, best_a);
        const Weight wb = g.weight(x, best_b);
        d[x] += side[x] == Side::A ? 2 * wa - 2 * wb : 2 * wb - 2 * wa;
      }
    }

    Weight running = 0, best_total = 0;
    std::size_t best_k = 0;
    for (std::size_t k = 0; k < gains.size(); ++k) {
      running += gains[k];
      if (running > best_total) {
        best_total = running;
        best_k = k + 1;
      }
    }
    if (best_k == 0) break;
    for (std::size_t k = 0; k < best_k; ++k) {
      side[swaps[k].first] = Side::B;
      side[swaps[k].second] = Side::A;
    }
  }
  return PartitionAssignment::from_sides(std::move(side));
}

/// Balanced bipartition from a seeded random start, refined by K-L and
/// relabelled so that qubit 0 is on A.
inline PartitionAssignment kernighan_lin(const InteractionGraph& g, std::uint64_t seed) {
  if (g.size() < 2) throw std::invalid_argument("K-L needs at least two nodes");
  return canonicalize(kernighan_lin_refine(g, seeded_balanced_split(g.size(), seed)));
}

struct GateClassification {
  std::vector<std::size_t> global_indices;  // strictly increasing
  std::vector<std::size_t> local_indices;

  std::size_t m_g() const noexcept { return global_indices.size(); }
};

inline bool is_global(const Gate& g, const PartitionAssignment& p) {
  return g.is_cnot() && p.side(g.controls[0]) != p.side(g.target);
}

inline GateClassification classify_gates(const Circuit& c, const PartitionAssignment& p) {
  if (p.size() != c.n_qubits())
    throw std::invalid_argument("partition covers " + std::to_string(p.size()) +
                                " qubits, circuit has " + std::to_string(c.n_qubits()));
  GateClassification out;
  for (std::size_t i = 0; i < c.size(); ++i)
    (is_global(c[i], p) ? out.global_indices : out.local_indices).push_back(i);
  return out;
}

inline nlohmann::json partition_to_json(const PartitionAssignment& p) {
  nlohmann::json sides = nlohmann::json::array();
  for (Side s : p.sides()) sides.push_back(std::string(1, side_char(s)));
  return {{"n", p.size()}, {"side", sides}};
}

inline PartitionAssignment partition_from_json(const nlohmann::json& j) {
  const auto n = j.at("n").get<std::size_t>();
  const auto& arr = j.at("side");
  if (!arr.is_array() || arr.size() != n)
    throw std::invalid_argument("partition: \"side\" must list exactly n entries");
  std::vector<Side> sides;
  for (const auto& e : arr) {
    const auto s = e.get<std::string>();
    if (s == "A") sides.push_back(Side::A);
    else if (s == "B") sides.push_back(Side::B);
    else throw std::invalid_argument("partition: side must be \"A\" or \"B\", got \"" + s + "\"");
  }
  return PartitionAssignment::from_sides(std::move(sides));
}

}  // namespace dqc
