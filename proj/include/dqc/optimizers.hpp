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

// Searches over global-gate configurations: exhaustive enumeration, a genetic
// algorithm, and a budget-matched random search.

#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "dqc/cost.hpp"
#include "dqc/detail/parallel.hpp"
#include "dqc/detail/text.hpp"
#include "dqc/error.hpp"
#include "dqc/rng.hpp"

namespace dqc {

inline constexpr std::size_t kDefaultExhaustiveCap = 26;

/// Exhaustive-search limit on m_g; DQC_EXHAUSTIVE_CAP overrides the default.
inline std::size_t exhaustive_cap() {
  if (const char* env = std::getenv("DQC_EXHAUSTIVE_CAP")) {
    if (auto v = detail::parse_uint<std::size_t>(env)) return std::min<std::size_t>(*v, 63);
  }
  return kDefaultExhaustiveCap;
}

/// How p_m is applied to an offspring. PerGene flips each gene independently
/// with probability p_m; SingleGene flips one random gene with probability p_m.
enum class MutationMode : std::uint8_t { PerGene, SingleGene };

struct GAParams {
  std::optional<std::size_t> pop_size;  // default ceil(m_g / 2), at least 2
  MutationMode mutation = MutationMode::PerGene;
  double p_m = 0.1;
  double p_c = 0.9;
  double p_r = 0.4;
  std::size_t max_generations = 1000;
  std::size_t stall_generations = 10;
  double stall_epsilon = 0.001;
  std::uint64_t seed = 0;
  unsigned threads = 0;  // fitness workers; 0 = hardware concurrency

  std::size_t resolved_pop_size(std::size_t m_g) const {
    return std::max<std::size_t>(2, pop_size.value_or((m_g + 1) / 2));
  }

  void validate() const {
    for (double p : {p_m, p_c, p_r})
      if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("GA probabilities must lie in [0, 1]");
    if (pop_size && *pop_size < 2) throw std::invalid_argument("GA population must be at least 2");
  }
};

struct Chromosome {
  Configuration genes;
  std::size_t tc = 0;
};

/// Lower TC first, then lexicographically smaller bits.
inline bool fitter(const Chromosome& a, const Chromosome& b) {
  return a.tc != b.tc ? a.tc < b.tc : a.genes < b.genes;
}

using Population = std::vector<Chromosome>;

struct OptimizerResult {
  std::string method;
  std::uint64_t seed = 0;
  std::size_t m_g = 0;
  Configuration best_config;
  std::size_t best_tc = 0;
  std::size_t evaluations = 0;
  std::size_t generations = 0;  // GA only
  std::size_t pop_size = 0;     // GA only
  std::string mutation;         // GA only: "per_gene" or "single_gene"
  double wall_time_s = 0.0;
  std::vector<std::size_t> history;
};

inline nlohmann::json to_json(const OptimizerResult& r) {
  nlohmann::json j = {{"method", r.method},
                      {"seed", r.seed},
                      {"m_g", r.m_g},
                      {"best_config", r.best_config.to_string()},
                      {"best_tc", r.best_tc},
                      {"evaluations", r.evaluations},
                      {"generations", r.generations},
                      {"wall_time_s", r.wall_time_s},
                      {"history", r.history}};
  if (r.method == "ga") {
    j["pop_size"] = r.pop_size;
    j["offspring_policy"] = "generational";
    j["mutation"] = r.mutation;
  }
  return j;
}

namespace detail {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline Configuration random_configuration(std::size_t m_g, Rng& rng) {
  Configuration c(m_g);
  for (std::size_t i = 0; i < m_g; ++i)
    if (rng.uniform_index(2) == 1) c.flip(i);
  return c;
}

inline void evaluate_all(const CostModel& model, const EvalOptions& opt, Population& pop,
                         unsigned threads) {
  parallel_for(pop.size(), threads,
               [&](std::size_t i) { pop[i].tc = model.teleportations(pop[i].genes, opt); });
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Exhaustive search

/// Evaluates all 2^m_g configurations. Ties go to the lexicographically
/// smallest bitstring. Throws CapExceeded above `cap` global gates.
inline OptimizerResult exhaustive_search(const CostModel& model, const EvalOptions& opt = {},
                                         std::optional<std::size_t> cap = std::nullopt,
                                         unsigned threads = 0) {
  detail::Stopwatch clock;
  const std::size_t m_g = model.m_g();
  const std::size_t limit = cap.value_or(exhaustive_cap());
  if (m_g > limit)
    throw CapExceeded("exhaustive search capped at m_g = " + std::to_string(limit) +
                      " (circuit has " + std::to_string(m_g) +
                      " global gates); use --method ga or raise DQC_EXHAUSTIVE_CAP");

  const std::uint64_t total = std::uint64_t{1} << m_g;
  const std::size_t chunks =
      static_cast<std::size_t>(std::min<std::uint64_t>(total, detail::resolve_threads(threads) * 8));
  std::vector<std::pair<std::size_t, std::uint64_t>> best(chunks, {SIZE_MAX, 0});
  detail::parallel_for(chunks, threads, [&](std::size_t chunk) {
    const std::uint64_t lo = total * chunk / chunks;
    const std::uint64_t hi = total * (chunk + 1) / chunks;
    for (std::uint64_t x = lo; x < hi; ++x) {
      const std::size_t tc = model.teleportations(Configuration::from_integer(x, m_g), opt);
      if (tc < best[chunk].first) best[chunk] = {tc, x};
    }
  });
  const auto winner = *std::min_element(best.begin(), best.end());

  OptimizerResult r;
  r.method = "exhaustive";
  r.m_g = m_g;
  r.best_config = Configuration::from_integer(winner.second, m_g);
  r.best_tc = winner.first;
  r.evaluations = static_cast<std::size_t>(total);
  r.wall_time_s = clock.seconds();
  return r;
}

// ---------------------------------------------------------------------------
// GA operators

/// Fitness-proportional pick with fitness 1 / (1 + TC).
inline std::size_t roulette_select(const Population& pop, Rng& rng) {
  if (pop.empty()) throw std::invalid_argument("roulette_select: empty population");
  double total = 0.0;
  for (const auto& c : pop) total += 1.0 / (1.0 + static_cast<double>(c.tc));
  const double r = rng.uniform01() * total;
  double acc = 0.0;
  for (std::size_t i = 0; i < pop.size(); ++i) {
    acc += 1.0 / (1.0 + static_cast<double>(pop[i].tc));
    if (r < acc) return i;
  }
  return pop.size() - 1;
}

/// Swaps the segment [lo, hi) between the parents.
inline std::pair<Configuration, Configuration> two_point_crossover_at(const Configuration& a,
                                                                      const Configuration& b,
                                                                      std::size_t lo,
                                                                      std::size_t hi) {
  if (a.size() != b.size()) throw std::invalid_argument("crossover: parent length mismatch");
  if (!(lo < hi && hi <= a.size())) throw std::invalid_argument("crossover: bad cut points");
  Configuration x = a, y = b;
  for (std::size_t i = lo; i < hi; ++i) {
    x.set(i, b[i]);
    y.set(i, a[i]);
  }
  return {std::move(x), std::move(y)};
}

/// Cut points 0 <= lo < hi <= m_g, uniform over all such pairs.
inline std::pair<Configuration, Configuration> two_point_crossover(const Configuration& a,
                                                                   const Configuration& b,
                                                                   Rng& rng) {
  if (a.size() != b.size()) throw std::invalid_argument("crossover: parent length mismatch");
  if (a.size() < 2) throw std::invalid_argument("crossover needs at least two genes");
  const std::size_t points = a.size() + 1;
  std::size_t lo, hi;
  do {
    lo = rng.uniform_index(points);
    hi = rng.uniform_index(points);
  } while (lo == hi);
  if (lo > hi) std::swap(lo, hi);
  return two_point_crossover_at(a, b, lo, hi);
}

/// Flips exactly one uniformly chosen gene.
inline Configuration mutate(Configuration x, Rng& rng) {
  if (x.empty()) throw std::invalid_argument("mutate: empty configuration");
  x.flip(rng.uniform_index(x.size()));
  return x;
}

/// Flips each gene independently with probability `p`.
inline Configuration mutate_per_gene(Configuration x, double p, Rng& rng) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (rng.bernoulli(p)) x.flip(i);
  return x;
}

/// The round(p_r * size) fittest parents replace the same number of least fit
/// offspring. Offspring keep their order otherwise.
inline Population elitist_replace(const Population& parents, Population offspring, double p_r) {
  if (parents.size() != offspring.size())
    throw std::invalid_argument("elitist_replace: population size mismatch");
  const auto elite = std::min<std::size_t>(
      parents.size(), static_cast<std::size_t>(std::lround(p_r * static_cast<double>(parents.size()))));
  if (elite == 0) return offspring;

  std::vector<std::size_t> by_parent(parents.size()), by_child(offspring.size());
  for (std::size_t i = 0; i < parents.size(); ++i) by_parent[i] = by_child[i] = i;
  std::stable_sort(by_parent.begin(), by_parent.end(),
                   [&](std::size_t x, std::size_t y) { return fitter(parents[x], parents[y]); });
  std::stable_sort(by_child.begin(), by_child.end(),
                   [&](std::size_t x, std::size_t y) { return fitter(offspring[y], offspring[x]); });
  for (std::size_t e = 0; e < elite; ++e) offspring[by_child[e]] = parents[by_parent[e]];
  return offspring;
}

// ---------------------------------------------------------------------------
// GA driver

/// Generational GA: each generation breeds pop_size offspring by roulette
/// selection, two-point crossover (p_c) and mutation (p_m, see MutationMode), then
/// applies elitist replacement (p_r). Stops after max_generations, or once the
/// best TC improved by less than stall_epsilon over stall_generations.
/// `history[g]` is the population's best TC after generation g (entry 0 is the
/// initial population). Fitness calls may run in parallel; every random draw
/// comes from one sequential stream, so results depend only on the seed.
inline OptimizerResult ga_optimize(const CostModel& model, const GAParams& params = {},
                                   const EvalOptions& opt = {}) {
  params.validate();
  detail::Stopwatch clock;
  const std::size_t m_g = model.m_g();

  OptimizerResult r;
  r.method = "ga";
  r.seed = params.seed;
  r.m_g = m_g;
  if (m_g == 0) {
    r.best_tc = model.teleportations(Configuration{}, opt);
    r.wall_time_s = clock.seconds();
    return r;
  }

  const std::size_t pop_size = params.resolved_pop_size(m_g);
  r.pop_size = pop_size;
  r.mutation = params.mutation == MutationMode::PerGene ? "per_gene" : "single_gene";
  Rng rng(params.seed);

  Population pop(pop_size);
  for (auto& c : pop) c.genes = detail::random_configuration(m_g, rng);
  detail::evaluate_all(model, opt, pop, params.threads);
  r.evaluations = pop_size;

  Chromosome best = *std::min_element(pop.begin(), pop.end(), fitter);
  r.history.push_back(best.tc);

  while (r.generations < params.max_generations) {
    Population offspring;
    offspring.reserve(pop_size + 1);
    while (offspring.size() < pop_size) {
      Configuration a = pop[roulette_select(pop, rng)].genes;
      Configuration b = pop[roulette_select(pop, rng)].genes;
      if (m_g >= 2 && rng.bernoulli(params.p_c)) std::tie(a, b) = two_point_crossover(a, b, rng);
      for (Configuration* child : {&a, &b}) {
        if (params.mutation == MutationMode::PerGene)
          *child = mutate_per_gene(std::move(*child), params.p_m, rng);
        else if (rng.bernoulli(params.p_m))
          *child = mutate(std::move(*child), rng);
        offspring.push_back({std::move(*child), 0});
      }
    }
    offspring.resize(pop_size);
    detail::evaluate_all(model, opt, offspring, params.threads);
    r.evaluations += pop_size;

    pop = elitist_replace(pop, std::move(offspring), params.p_r);
    ++r.generations;

    const Chromosome& gen_best = *std::min_element(pop.begin(), pop.end(), fitter);
    if (fitter(gen_best, best)) best = gen_best;
    r.history.push_back(gen_best.tc);

    if (r.generations >= params.stall_generations) {
      const auto before = static_cast<double>(
          *std::min_element(r.history.begin(), r.history.end() - static_cast<std::ptrdiff_t>(params.stall_generations)));
      if (before - static_cast<double>(best.tc) < params.stall_epsilon) break;
    }
  }

  r.best_config = best.genes;
  r.best_tc = best.tc;
  r.wall_time_s = clock.seconds();
  return r;
}

// ---------------------------------------------------------------------------
// Random search

/// Evaluates `budget` uniformly random configurations and keeps the running
/// minimum; `history[i]` is the minimum after i + 1 draws.
inline OptimizerResult random_search(const CostModel& model, std::size_t budget,
                                     std::uint64_t seed, const EvalOptions& opt = {},
                                     unsigned threads = 0) {
  if (budget == 0) throw std::invalid_argument("random search budget must be at least 1");
  detail::Stopwatch clock;
  const std::size_t m_g = model.m_g();
  Rng rng(seed);

  OptimizerResult r;
  r.method = "random";
  r.seed = seed;
  r.m_g = m_g;
  r.history.reserve(budget);

  constexpr std::size_t kBatch = 1024;
  Chromosome best{Configuration{}, SIZE_MAX};
  for (std::size_t done = 0; done < budget;) {
    Population batch(std::min(kBatch, budget - done));
    for (auto& c : batch) c.genes = detail::random_configuration(m_g, rng);
    detail::evaluate_all(model, opt, batch, threads);
    for (auto& c : batch) {
      if (c.tc < best.tc) best = c;
      r.history.push_back(best.tc);
    }
    done += batch.size();
  }

  r.best_config = best.genes;
  r.best_tc = best.tc;
  r.evaluations = budget;
  r.wall_time_s = clock.seconds();
  return r;
}

}  // namespace dqc
