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

#include <gtest/gtest.h>

#include <set>

#include "test_support.hpp"

namespace dqc {
namespace {

PartitionAssignment sides(const std::string& s) {
  std::vector<Side> v;
  for (char ch : s) v.push_back(ch == 'A' ? Side::A : Side::B);
  return PartitionAssignment::from_sides(v);
}

Configuration cfg(const std::string& s) { return Configuration::from_string(s); }

// Qubits that some global gate forces away from home under `c`. Each one must
// leave and come back, so twice this count bounds the TC from below.
std::size_t forced_away(const Circuit& circuit, const PartitionAssignment& p,
                        const Configuration& c) {
  std::set<Qubit> away;
  std::size_t k = 0;
  for (const Gate& g : circuit.gates()) {
    if (!is_global(g, p)) continue;
    const Side exec = c[k++];
    for (Qubit q : g.operands())
      if (p.side(q) != exec) away.insert(q);
  }
  return away.size();
}

// Replays a report's events next to its schedule and checks every gate found
// its operands where it needed them.
bool schedule_is_consistent(const Circuit& circuit, const PartitionAssignment& p,
                            const Configuration& c, const CostReport& r) {
  std::vector<std::size_t> ordinal(circuit.size(), 0);
  for (std::size_t i = 0, k = 0; i < circuit.size(); ++i)
    if (is_global(circuit[i], p)) ordinal[i] = k++;
  std::vector<bool> home(circuit.n_qubits(), true);
  std::size_t e = 0;
  for (std::size_t g : r.schedule) {
    while (e < r.events.size() && r.events[e].gate == g) {
      home[r.events[e].qubit] = r.events[e].direction == Direction::Home;
      ++e;
    }
    const Gate& gate = circuit[g];
    for (Qubit q : gate.operands()) {
      const bool want_home = !is_global(gate, p) || p.side(q) == c[ordinal[g]];
      if (home[q] != want_home) return false;
    }
  }
  for (; e < r.events.size(); ++e) {
    if (r.events[e].gate.has_value()) return false;
    home[r.events[e].qubit] = true;
  }
  return e == r.events.size() && r.events.size() == r.teleportations;
}

// ---------------------------------------------------------------------------
// Commutation

TEST(Commutes, Examples) {
  EXPECT_TRUE(commutes(Gate::cnot(0, 1), Gate::cnot(0, 2)));   // shared control
  EXPECT_TRUE(commutes(Gate::cnot(0, 2), Gate::cnot(1, 2)));   // shared target
  EXPECT_FALSE(commutes(Gate::cnot(0, 1), Gate::cnot(1, 2)));  // target feeds control
  EXPECT_FALSE(commutes(Gate::cnot(0, 1), Gate::cnot(1, 0)));
  EXPECT_TRUE(commutes(Gate::cnot(0, 1), Gate::cnot(2, 3)));
  EXPECT_TRUE(commutes(Gate::single(GateKind::T, 0), Gate::cnot(0, 1)));
  EXPECT_FALSE(commutes(Gate::single(GateKind::H, 0), Gate::cnot(0, 1)));
  EXPECT_TRUE(commutes(Gate::single(GateKind::X, 1), Gate::cnot(0, 1)));
  EXPECT_FALSE(commutes(Gate::single(GateKind::Z, 1), Gate::cnot(0, 1)));
  EXPECT_TRUE(commutes(Gate::single(GateKind::S, 3), Gate::single(GateKind::T, 3)));
  EXPECT_FALSE(commutes(Gate::single(GateKind::H, 3), Gate::single(GateKind::T, 3)));
  EXPECT_TRUE(commutes(Gate::single(GateKind::H, 3), Gate::single(GateKind::H, 3)));
  EXPECT_TRUE(commutes(Gate::single(GateKind::H, 3), Gate::single(GateKind::X, 2)));
  EXPECT_THROW(commutes(Gate::toffoli(0, 1, 2), Gate::cnot(0, 1)), std::invalid_argument);
}

// Whenever the symbolic test says two gates commute, their matrices do.
TEST(Commutes, SoundAgainstMatrices) {
  Rng rng(17);
  int symbolic_true = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const Circuit c = testing::random_basic_circuit(rng, 3, 2);
    const bool sym = commutes(c[0], c[1]);
    EXPECT_EQ(sym, commutes(c[1], c[0]));
    if (sym) {
      ++symbolic_true;
      EXPECT_TRUE(testing::matrices_commute(c[0], c[1], 3)) << trial;
    }
  }
  EXPECT_GT(symbolic_true, 100);
}

// ---------------------------------------------------------------------------
// Site requirements

TEST(RequiredSites, Examples) {
  const auto p = sides("AABB");
  const std::vector<SiteRequirement> single{{1, true}};
  EXPECT_EQ(required_sites(Gate::single(GateKind::H, 1), p, Side::B), single);
  const std::vector<SiteRequirement> local{{0, true}, {1, true}};
  EXPECT_EQ(required_sites(Gate::cnot(0, 1), p, Side::B), local);
  const std::vector<SiteRequirement> on_a{{0, true}, {2, false}};
  EXPECT_EQ(required_sites(Gate::cnot(0, 2), p, Side::A), on_a);
  const std::vector<SiteRequirement> on_b{{0, false}, {2, true}};
  EXPECT_EQ(required_sites(Gate::cnot(0, 2), p, Side::B), on_b);
}

// ---------------------------------------------------------------------------
// Evaluator

TEST(Evaluate, NoGlobalGatesCostsNothing) {
  Circuit c(4);
  c.append(Gate::cnot(0, 1));
  c.append(Gate::single(GateKind::H, 2));
  c.append(Gate::cnot(3, 2));
  const auto r = evaluate_cost(c, sides("AABB"), Configuration{});
  EXPECT_EQ(r.teleportations, 0u);
  EXPECT_TRUE(r.events.empty());
  EXPECT_EQ(r.schedule, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Evaluate, SingleGlobalGate) {
  Circuit c(2);
  c.append(Gate::cnot(0, 1));
  const auto p = sides("AB");
  for (const char* s : {"0", "1"}) {
    const auto r = evaluate_cost(c, p, cfg(s));
    EXPECT_EQ(r.teleportations, 2u);
    ASSERT_EQ(r.events.size(), 2u);
    const Qubit mover = s[0] == '0' ? 1 : 0;
    EXPECT_EQ(r.events[0], (TeleportEvent{0, mover, Direction::Away}));
    EXPECT_EQ(r.events[1], (TeleportEvent{std::nullopt, mover, Direction::Home}));
  }
  EXPECT_EQ(evaluate_cost(c, p, cfg("0"), {.return_home_at_end = false}).teleportations, 1u);
}

// All CNOTs share line 0 as target. Running them on the side of the controls
// moves line 0 out once and back once.
TEST(Evaluate, ParityChainTwoTeleports) {
  const Circuit c = parse_real(testing::parity_chain_real(16));
  const auto p = sides("A" "AAAAAAAA" "BBBBBBBB");
  const CostModel model(c, p);
  ASSERT_EQ(model.m_g(), 8u);
  EXPECT_EQ(model.teleportations(cfg("11111111")), 2u);
  EXPECT_EQ(model.teleportations(cfg("00000000")), 16u);
  EXPECT_EQ(model.teleportations(cfg("11111111"), {.lookahead = false}), 2u);
}

// g0 = CNOT(0,2), g1 = T(0), g2 = CNOT(0,3), split AABB, both globals on B.
// In circuit order line 0 goes out, back for T, out again, and home: 4.
// T commutes with both CNOTs, so running it first leaves one round trip: 2.
TEST(Evaluate, LookaheadDefersLocalGate) {
  Circuit c(4);
  c.append(Gate::cnot(0, 2));
  c.append(Gate::single(GateKind::T, 0));
  c.append(Gate::cnot(0, 3));
  const auto p = sides("AABB");
  const auto linear = evaluate_cost_linear(c, p, cfg("11"));
  EXPECT_EQ(linear.teleportations, 4u);
  EXPECT_EQ(linear.schedule, (std::vector<std::size_t>{0, 1, 2}));
  const auto greedy = evaluate_cost(c, p, cfg("11"));
  EXPECT_EQ(greedy.teleportations, 2u);
  EXPECT_EQ(greedy.schedule, (std::vector<std::size_t>{1, 0, 2}));
  EXPECT_EQ(brute_force_min_cost(c, p, cfg("11")).teleportations, 2u);
}

// An H on the control blocks reordering: g0 = CNOT(0,2), g1 = H(0),
// g2 = CNOT(0,3) on B must pay for line 0 twice.
TEST(Evaluate, NonCommutingLocalGateForcesReturn) {
  Circuit c(4);
  c.append(Gate::cnot(0, 2));
  c.append(Gate::single(GateKind::H, 0));
  c.append(Gate::cnot(0, 3));
  const auto p = sides("AABB");
  EXPECT_EQ(evaluate_cost(c, p, cfg("11")).teleportations, 4u);
  EXPECT_EQ(brute_force_min_cost(c, p, cfg("11")).teleportations, 4u);
  // On A the targets move instead and nothing has to come back early.
  EXPECT_EQ(evaluate_cost(c, p, cfg("00")).teleportations, 4u);
  EXPECT_EQ(evaluate_cost(c, p, cfg("01")).teleportations, 4u);
}

TEST(Evaluate, WrongConfigurationLength) {
  Circuit c(2);
  c.append(Gate::cnot(0, 1));
  const CostModel model(c, sides("AB"));
  EXPECT_THROW(model.evaluate(cfg("01")), std::invalid_argument);
  EXPECT_THROW(model.evaluate(Configuration{}), std::invalid_argument);
  EXPECT_THROW(model.brute_force(cfg("")), std::invalid_argument);
}

TEST(Evaluate, RejectsNonBasicCircuit) {
  EXPECT_THROW(CostModel(generate_qft(3), contiguous_split(3)), std::invalid_argument);
}

TEST(BruteForce, CapExceeded) {
  Circuit c(2);
  for (int i = 0; i < 15; ++i) c.append(Gate::single(GateKind::H, 0));
  EXPECT_THROW(brute_force_min_cost(c, sides("AB"), Configuration{}), CapExceeded);
  EXPECT_NO_THROW(brute_force_min_cost(c, sides("AB"), Configuration{}, {}, 15));
}

TEST(Configuration, IntegerOrderIsLexicographic) {
  EXPECT_EQ(Configuration::from_integer(0b011, 3).to_string(), "011");
  EXPECT_EQ(Configuration::from_integer(0b100, 3)[0], Side::B);
  for (std::uint64_t v = 0; v + 1 < 16; ++v)
    EXPECT_LT(Configuration::from_integer(v, 4), Configuration::from_integer(v + 1, 4));
  EXPECT_THROW(Configuration::from_string("012"), std::invalid_argument);
  EXPECT_EQ(cfg("0110").complemented().to_string(), "1001");
}

// ---------------------------------------------------------------------------
// Properties over random small circuits

struct Sample {
  Circuit circuit;
  PartitionAssignment partition;
  Configuration config;
};

std::vector<Sample> samples(std::uint64_t seed, int count, std::size_t max_gates) {
  Rng rng(seed);
  std::vector<Sample> out;
  for (int i = 0; i < count; ++i) {
    const std::size_t n = 2 + rng.uniform_index(5);
    Circuit c = testing::random_basic_circuit(rng, n, 1 + rng.uniform_index(max_gates));
    auto p = seeded_balanced_split(n, rng.next());
    const auto m_g = classify_gates(c, p).m_g();
    out.push_back({std::move(c), std::move(p), testing::random_configuration(rng, m_g)});
  }
  return out;
}

TEST(CostProperties, OracleGreedyLinearOrdering) {
  for (const auto& s : samples(101, 300, 12)) {
    const CostModel model(s.circuit, s.partition);
    for (bool home : {true, false}) {
      const EvalOptions greedy{.return_home_at_end = home, .lookahead = true};
      const EvalOptions linear{.return_home_at_end = home, .lookahead = false};
      const auto g = model.evaluate(s.config, greedy);
      const auto l = model.evaluate(s.config, linear);
      const auto o = model.brute_force(s.config, greedy);
      EXPECT_LE(o.teleportations, g.teleportations);
      EXPECT_LE(g.teleportations, l.teleportations);
      EXPECT_TRUE(respects_commutation(s.circuit, g.schedule));
      EXPECT_TRUE(respects_commutation(s.circuit, o.schedule));
      EXPECT_TRUE(schedule_is_consistent(s.circuit, s.partition, s.config, g));
      EXPECT_TRUE(schedule_is_consistent(s.circuit, s.partition, s.config, l));
      EXPECT_TRUE(schedule_is_consistent(s.circuit, s.partition, s.config, o));
      EXPECT_EQ(model.teleportations(s.config, greedy), g.teleportations);
    }
  }
}

TEST(CostProperties, EvenAndBoundedBelow) {
  for (const auto& s : samples(202, 300, 30)) {
    const CostModel model(s.circuit, s.partition);
    const auto tc = model.teleportations(s.config);
    EXPECT_EQ(tc % 2, 0u);
    EXPECT_GE(tc, 2 * forced_away(s.circuit, s.partition, s.config));
    EXPECT_EQ(model.teleportations(s.config, {.lookahead = false}) % 2, 0u);
  }
}

// Swapping the side labels and complementing the configuration describes the
// same physical execution.
TEST(CostProperties, LabelSwapSymmetry) {
  for (const auto& s : samples(303, 300, 30)) {
    const auto a = evaluate_cost(s.circuit, s.partition, s.config);
    const auto b = evaluate_cost(s.circuit, s.partition.swapped(), s.config.complemented());
    EXPECT_EQ(a, b);
  }
}

TEST(CostProperties, Deterministic) {
  for (const auto& s : samples(404, 50, 30)) {
    const CostModel model(s.circuit, s.partition);
    EXPECT_EQ(model.evaluate(s.config), model.evaluate(s.config));
  }
}

}  // namespace
}  // namespace dqc
