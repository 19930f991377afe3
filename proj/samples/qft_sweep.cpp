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

// Sweeps QFT sizes: contiguous split, then GA and an equal-budget random
// search on each. Usage: qft_sweep [max_qubits] [seed]

#include <cstdio>
#include <cstdlib>

#include "dqc/dqc.hpp"

int main(int argc, char** argv) {
  const std::size_t max_n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 8;
  const std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 0;

  std::printf("%-6s %-6s %-8s %-8s %-8s %s\n", "n", "m_g", "tc_ga", "tc_rs", "gens", "evals");
  for (std::size_t n = 2; n <= max_n; n *= 2) {
    const dqc::Circuit c = dqc::decompose_to_basic(dqc::generate_qft(n));
    const dqc::CostModel model(c, dqc::contiguous_split(n));
    dqc::GAParams params;
    params.seed = seed;
    const auto ga = dqc::ga_optimize(model, params);
    const auto rs = dqc::random_search(model, ga.evaluations, seed);
    std::printf("%-6zu %-6zu %-8zu %-8zu %-8zu %zu\n", n, model.m_g(), ga.best_tc, rs.best_tc,
                ga.generations, ga.evaluations);
  }
  return 0;
}
