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

#include <cmath>
#include <regex>
#include <set>

#include "test_support.hpp"

namespace dqc {
namespace {

Configuration cfg(const std::string& s) { return Configuration::from_string(s); }

CostModel qft4_model() {
  return CostModel(decompose_to_basic(generate_qft(4)), contiguous_split(4));
}

CostModel random_model(std::uint64_t seed, std::size_t n, std::size_t m) {
  Rng rng(seed);
  const Circuit c = testing::random_basic_circuit(rng, n, m);
  return CostModel(c, kernighan_lin(build_interaction_graph(c), seed));
}

bool non_increasing(const std::vector<std::size_t>& h) {
  return std::adjacent_find(h.begin(), h.end(), std::less<>()) == h.end();
}

// ---------------------------------------------------------------------------
// Operators

TEST(Crossover, FixedCutPoints) {
  const auto [x, y] = two_point_crossover_at(cfg("0000"), cfg("1111"), 1, 3);
  EXPECT_EQ(x.to_string(), "0110");
  EXPECT_EQ(y.to_string(), "1001");
  EXPECT_THROW(two_point_crossover_at(cfg("0000"), cfg("1111"), 2, 2), std::invalid_argument);
  EXPECT_THROW(two_point_crossover_at(cfg("0000"), cfg("1111"), 1, 5), std::invalid_argument);
  EXPECT_THROW(two_point_crossover_at(cfg("000"), cfg("1111"), 1, 2), std::invalid_argument);
}

// Every position keeps its pair of parent alleles, and the exchanged region
// is one contiguous block.
TEST(Crossover, PreservesAllelesPerPosition) {
  Rng rng(9);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t m = 2 + rng.uniform_index(20);
    const auto a = testing::random_configuration(rng, m);
    const auto b = testing::random_configuration(rng, m);
    const auto [x, y] = two_point_crossover(a, b, rng);
    std::string pattern;  // crossed (x) or kept (.) at positions where parents differ
    for (std::size_t i = 0; i < m; ++i) {
      const bool same = x[i] == a[i] && y[i] == b[i];
      const bool cross = x[i] == b[i] && y[i] == a[i];
      ASSERT_TRUE(same || cross);
      if (a[i] != b[i]) pattern += cross ? 'x' : '.';
    }
    EXPECT_TRUE(std::regex_match(pattern, std::regex(R"(\.*x*\.*)"))) << pattern;
  }
}

TEST(Mutate, FlipsExactlyOneGeneUniformly) {
  Rng rng(3);
  const auto base = cfg("01100101");
  std::vector<int> hits(base.size(), 0);
  const int draws = 80000;
  for (int i = 0; i < draws; ++i) {
    const auto x = mutate(base, rng);
    int diff = 0;
    for (std::size_t g = 0; g < base.size(); ++g)
      if (x[g] != base[g]) {
        ++diff;
        ++hits[g];
      }
    ASSERT_EQ(diff, 1);
  }
  const double expected = draws / 8.0;
  double chi2 = 0.0;
  for (int h : hits) chi2 += (h - expected) * (h - expected) / expected;
  EXPECT_LT(chi2, 24.3);  // 7 dof, p = 0.001
  EXPECT_THROW(mutate(Configuration{}, rng), std::invalid_argument);
}

TEST(Mutate, PerGeneRate) {
  Rng rng(4);
  const Configuration base(50);
  std::size_t flips = 0;
  const int draws = 2000;
  for (int i = 0; i < draws; ++i) {
    const auto x = mutate_per_gene(base, 0.1, rng);
    for (std::size_t g = 0; g < 50; ++g) flips += x[g] != base[g];
  }
  const double n = 50.0 * draws;
  const double sigma = std::sqrt(n * 0.1 * 0.9);
  EXPECT_NEAR(static_cast<double>(flips), n * 0.1, 4 * sigma);
  EXPECT_EQ(mutate_per_gene(base, 0.0, rng), base);
  EXPECT_EQ(mutate_per_gene(base, 1.0, rng), base.complemented());
}

// Fitness 1 / (1 + TC): TCs 0, 1, 3 give weights 1, 1/2, 1/4.
TEST(Roulette, ProportionalToFitness) {
  Population pop{{cfg("00"), 0}, {cfg("01"), 1}, {cfg("10"), 3}};
  const double w[] = {1.0, 0.5, 0.25};
  const double total = 1.75;
  Rng rng(11);
  const int draws = 70000;
  std::vector<int> hits(3, 0);
  for (int i = 0; i < draws; ++i) ++hits[roulette_select(pop, rng)];
  for (int i = 0; i < 3; ++i) {
    const double p = w[i] / total;
    const double sigma = std::sqrt(draws * p * (1 - p));
    EXPECT_NEAR(hits[i], draws * p, 3 * sigma) << i;
  }
  EXPECT_THROW(roulette_select(Population{}, rng), std::invalid_argument);
}

TEST(Elitism, Examples) {
  const Population parents{{cfg("000"), 5}, {cfg("001"), 1}, {cfg("010"), 2},
                           {cfg("011"), 9}, {cfg("100"), 4}};
  const Population offspring{{cfg("101"), 3}, {cfg("110"), 8}, {cfg("111"), 0},
                             {cfg("000"), 7}, {cfg("001"), 6}};
  EXPECT_EQ(elitist_replace(parents, offspring, 0.0).size(), 5u);
  for (std::size_t i = 0; i < 5; ++i)
    EXPECT_EQ(elitist_replace(parents, offspring, 0.0)[i].tc, offspring[i].tc);

  // round(0.4 * 5) = 2: parents with TC 1 and 2 replace offspring with TC 8 and 7.
  const auto mixed = elitist_replace(parents, offspring, 0.4);
  std::vector<std::size_t> tcs;
  for (const auto& c : mixed) tcs.push_back(c.tc);
  EXPECT_EQ(tcs, (std::vector<std::size_t>{3, 1, 0, 2, 6}));

  std::multiset<std::size_t> all, expect;
  for (const auto& c : elitist_replace(parents, offspring, 1.0)) all.insert(c.tc);
  for (const auto& c : parents) expect.insert(c.tc);
  EXPECT_EQ(all, expect);
  EXPECT_THROW(elitist_replace(parents, Population(2), 0.4), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// Exhaustive search

// The global CNOTs of the 4-qubit QFT on a contiguous split join each of
// {0, 1} to each of {2, 3}. Some operand of every global gate must travel, so
// the travelling set covers K_{2,2}: at least two qubits, each out and back.
TEST(Exhaustive, Qft4ReachesCoverBound) {
  const auto model = qft4_model();
  ASSERT_EQ(model.m_g(), 8u);
  const auto r = exhaustive_search(model);
  EXPECT_EQ(r.best_tc, 4u);
  EXPECT_EQ(r.evaluations, 256u);
  EXPECT_EQ(r.best_config.to_string(), "00000000");
  EXPECT_EQ(r.method, "exhaustive");
  EXPECT_TRUE(r.history.empty());
}

// Ties resolve to the lexicographically smallest configuration.
TEST(Exhaustive, MatchesDirectEnumeration) {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const auto model = random_model(seed, 5, 20);
    if (model.m_g() > 12) continue;
    std::size_t best = SIZE_MAX;
    Configuration arg;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << model.m_g()); ++x) {
      const auto c = Configuration::from_integer(x, model.m_g());
      const auto tc = model.teleportations(c);
      if (tc < best || (tc == best && c < arg)) {
        best = tc;
        arg = c;
      }
    }
    for (unsigned threads : {1u, 3u}) {
      const auto r = exhaustive_search(model, {}, std::nullopt, threads);
      EXPECT_EQ(r.best_tc, best);
      EXPECT_EQ(r.best_config, arg);
    }
  }
}

TEST(Exhaustive, CapExceeded) {
  EXPECT_THROW(exhaustive_search(qft4_model(), {}, 7), CapExceeded);
  EXPECT_NO_THROW(exhaustive_search(qft4_model(), {}, 8));
}

TEST(Exhaustive, NoGlobalGates) {
  Circuit c(2);
  c.append(Gate::single(GateKind::H, 0));
  const auto r = exhaustive_search(CostModel(c, contiguous_split(2)));
  EXPECT_EQ(r.best_tc, 0u);
  EXPECT_EQ(r.evaluations, 1u);
  EXPECT_TRUE(r.best_config.empty());
}

// ---------------------------------------------------------------------------
// Genetic algorithm

TEST(Ga, DefaultsAndValidation) {
  GAParams p;
  EXPECT_EQ(p.resolved_pop_size(8), 4u);
  EXPECT_EQ(p.resolved_pop_size(9), 5u);
  EXPECT_EQ(p.resolved_pop_size(1), 2u);
  p.p_m = 1.5;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p.p_m = 0.1;
  p.pop_size = 1;
  EXPECT_THROW(p.validate(), std::invalid_argument);
}

TEST(Ga, BookkeepingAndMonotoneHistory) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto model = random_model(seed + 100, 7, 60);
    for (MutationMode mode : {MutationMode::PerGene, MutationMode::SingleGene}) {
      GAParams p;
      p.seed = seed;
      p.mutation = mode;
      const auto r = ga_optimize(model, p);
      if (model.m_g() == 0) continue;
      EXPECT_EQ(r.evaluations, r.pop_size * (r.generations + 1));
      EXPECT_EQ(r.history.size(), r.generations + 1);
      EXPECT_TRUE(non_increasing(r.history));
      EXPECT_EQ(r.history.back(), r.best_tc);
      EXPECT_EQ(model.teleportations(r.best_config), r.best_tc);
      if (model.m_g() <= 16) {
        EXPECT_GE(r.best_tc, exhaustive_search(model).best_tc);
      }
      EXPECT_GE(r.generations, p.stall_generations);
    }
  }
}

TEST(Ga, DeterministicAcrossThreadCounts) {
  const auto model = random_model(77, 8, 80);
  GAParams p;
  p.seed = 1234;
  p.threads = 1;
  const auto a = ga_optimize(model, p);
  p.threads = 4;
  const auto b = ga_optimize(model, p);
  EXPECT_EQ(a.best_config, b.best_config);
  EXPECT_EQ(a.history, b.history);
  EXPECT_EQ(a.evaluations, b.evaluations);
}

TEST(Ga, MaxGenerationsBound) {
  GAParams p;
  p.max_generations = 3;
  p.stall_generations = 100;
  const auto r = ga_optimize(qft4_model(), p);
  EXPECT_EQ(r.generations, 3u);
  EXPECT_EQ(r.evaluations, 16u);
}

TEST(Ga, NoGlobalGates) {
  Circuit local(4);
  local.append(Gate::cnot(0, 1));
  const auto z = ga_optimize(CostModel(local, contiguous_split(4)));
  EXPECT_EQ(z.m_g, 0u);
  EXPECT_EQ(z.best_tc, 0u);
  EXPECT_EQ(z.evaluations, 0u);
}

TEST(OptimizerJson, Fields) {
  GAParams p;
  p.seed = 5;
  const auto j = to_json(ga_optimize(qft4_model(), p));
  EXPECT_EQ(j.at("method"), "ga");
  EXPECT_EQ(j.at("seed"), 5);
  EXPECT_EQ(j.at("m_g"), 8);
  EXPECT_EQ(j.at("pop_size"), 4);
  EXPECT_EQ(j.at("offspring_policy"), "generational");
  EXPECT_EQ(j.at("best_config").get<std::string>().size(), 8u);
  EXPECT_FALSE(to_json(exhaustive_search(qft4_model())).contains("pop_size"));
}

// ---------------------------------------------------------------------------
// Random search

TEST(RandomSearch, Bookkeeping) {
  const auto model = qft4_model();
  const auto r = random_search(model, 500, 8);
  EXPECT_EQ(r.evaluations, 500u);
  EXPECT_EQ(r.history.size(), 500u);
  EXPECT_TRUE(non_increasing(r.history));
  EXPECT_EQ(r.history.back(), r.best_tc);
  EXPECT_EQ(model.teleportations(r.best_config), r.best_tc);
  EXPECT_EQ(random_search(model, 500, 8, {}, 1).best_config,
            random_search(model, 500, 8, {}, 3).best_config);
  EXPECT_THROW(random_search(model, 0, 8), std::invalid_argument);
}

}  // namespace
}  // namespace dqc
