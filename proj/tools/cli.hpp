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

// Command-line front end. Kept separate from the library headers so that only
// the tool and its tests depend on CLI11.

#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dqc/dqc.hpp"

namespace dqc::cli {

namespace detail {

inline nlohmann::json report_to_json(const CostReport& r, const Configuration& cfg) {
  nlohmann::json events = nlohmann::json::array();
  for (const auto& e : r.events) {
    events.push_back({{"gate", e.gate ? nlohmann::json(*e.gate) : nlohmann::json("END")},
                      {"qubit", e.qubit},
                      {"direction", e.direction == Direction::Away ? "away" : "home"}});
  }
  return {{"config", cfg.to_string()},
          {"teleportations", r.teleportations},
          {"schedule", r.schedule},
          {"events", events}};
}

inline Circuit load_basic(const std::string& path) { return decompose_to_basic(load_circuit(path)); }

inline PartitionAssignment load_partition(const std::string& path) {
  try {
    return partition_from_json(nlohmann::json::parse(read_file(path)));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace detail

/// Runs one subcommand. `args` excludes the program name. Returns 0 on
/// success, 1 on a domain or I/O error, 2 on a usage error.
inline int cli_main(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Teleportation-cost optimization for two-node distributed quantum circuits", "dqc"};
  app.require_subcommand(1);

  // qft
  std::size_t qft_qubits = 0;
  std::string qft_out;
  auto* qft = app.add_subcommand("qft", "Generate an n-qubit QFT circuit");
  qft->add_option("--qubits", qft_qubits, "Number of qubits")->required();
  qft->add_option("--out", qft_out, "Output path (.dqc or .real)")->required();

  // decompose
  std::string dec_in, dec_out;
  auto* dec = app.add_subcommand("decompose", "Rewrite into CNOT + single-qubit gates");
  dec->add_option("input", dec_in, "Circuit file")->required();
  dec->add_option("--out", dec_out, "Output path")->required();

  // partition
  std::string part_in, part_out;
  std::uint64_t part_seed = 0;
  auto* part = app.add_subcommand("partition", "Kernighan-Lin bipartition of the qubits");
  part->add_option("input", part_in, "Circuit file")->required();
  part->add_option("--seed", part_seed, "Seed for the initial split");
  part->add_option("--out", part_out, "Partition JSON path")->required();

  // cost
  std::string cost_in, cost_part, cost_config;
  bool cost_no_return = false, cost_linear = false, cost_oracle = false, cost_json = false;
  auto* cost = app.add_subcommand("cost", "Teleportation cost of one configuration");
  cost->add_option("input", cost_in, "Circuit file")->required();
  cost->add_option("--partition", cost_part, "Partition JSON")->required();
  cost->add_option("--config", cost_config, "0/1 string, one bit per global gate")->required();
  cost->add_flag("--no-return-home", cost_no_return, "Do not bring migrated qubits home at the end");
  cost->add_flag("--linear", cost_linear, "Execute strictly in circuit order");
  cost->add_flag("--oracle", cost_oracle, "Exact minimum by exhaustive schedule search (small circuits)");
  cost->add_flag("--json", cost_json, "Print the full report as JSON");

  // optimize
  std::string opt_in, opt_part, opt_method, opt_report;
  std::uint64_t opt_seed = 0, opt_kl_seed = 0;
  std::optional<std::size_t> opt_pop, opt_maxgen, opt_budget;
  std::optional<double> opt_pm, opt_pc, opt_pr;
  std::string opt_mutation = "per-gene";
  unsigned opt_threads = 0;
  bool opt_no_return = false, opt_linear = false;
  auto* optimize = app.add_subcommand("optimize", "Search for the cheapest configuration");
  optimize->add_option("input", opt_in, "Circuit file")->required();
  optimize->add_option("--partition", opt_part, "Partition JSON (default: K-L with --kl-seed)");
  optimize->add_option("--method", opt_method, "exhaustive | ga | random")
      ->required()
      ->check(CLI::IsMember({"exhaustive", "ga", "random"}));
  optimize->add_option("--seed", opt_seed, "Optimizer seed");
  optimize->add_option("--kl-seed", opt_kl_seed, "K-L seed when no partition is given");
  optimize->add_option("--ga-pop", opt_pop, "Population size (default ceil(m_g/2))");
  optimize->add_option("--ga-pm", opt_pm, "Mutation probability");
  optimize->add_option("--ga-pc", opt_pc, "Crossover probability");
  optimize->add_option("--ga-pr", opt_pr, "Elite replacement fraction");
  optimize->add_option("--ga-maxgen", opt_maxgen, "Generation limit");
  optimize->add_option("--ga-mutation", opt_mutation, "per-gene | single-gene")
      ->check(CLI::IsMember({"per-gene", "single-gene"}));
  optimize->add_option("--budget", opt_budget, "Random-search evaluations (default pop x maxgen)");
  optimize->add_option("--threads", opt_threads, "Fitness worker threads (0 = all cores)");
  optimize->add_flag("--no-return-home", opt_no_return, "Do not bring migrated qubits home at the end");
  optimize->add_flag("--linear", opt_linear, "Execute strictly in circuit order");
  optimize->add_option("--report", opt_report, "Report JSON path")->required();

  // bench
  std::string bench_suite, bench_methods = "exhaustive,ga,random", bench_csv, bench_plot,
                           bench_json, bench_qft;
  std::size_t bench_seeds = 10;
  std::uint64_t bench_kl_seed = 0;
  unsigned bench_threads = 0;
  auto* bench = app.add_subcommand("bench", "Run the comparison suite");
  bench->add_option("--suite", bench_suite, "Directory of .real / .dqc circuits");
  bench->add_option("--qft", bench_qft, "Comma-separated QFT sizes to append, e.g. 4,8");
  bench->add_option("--methods", bench_methods, "Comma-separated subset of exhaustive,ga,random");
  bench->add_option("--seeds", bench_seeds, "Number of optimizer seeds (0..N-1)");
  bench->add_option("--kl-seed", bench_kl_seed, "K-L seed");
  bench->add_option("--threads", bench_threads, "Fitness worker threads (0 = all cores)");
  bench->add_option("--csv", bench_csv, "Summary CSV path")->required();
  bench->add_option("--json", bench_json, "Summary JSON path");
  bench->add_option("--plotdata", bench_plot, "Directory for plot series");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (qft->parsed()) {
      save_circuit(generate_qft(qft_qubits), qft_out);
    } else if (dec->parsed()) {
      save_circuit(decompose_to_basic(load_circuit(dec_in)), dec_out);
    } else if (part->parsed()) {
      const Circuit c = detail::load_basic(part_in);
      const auto graph = build_interaction_graph(c);
      const auto p = kernighan_lin(graph, part_seed);
      write_file(part_out, partition_to_json(p).dump() + "\n");
      out << "sides " << p.to_string() << " cut " << cut_weight(graph, p) << " m_g "
          << classify_gates(c, p).m_g() << "\n";
    } else if (cost->parsed()) {
      const CostModel model(detail::load_basic(cost_in), detail::load_partition(cost_part));
      const auto cfg = Configuration::from_string(cost_config);
      const EvalOptions eval{!cost_no_return, !cost_linear};
      const CostReport r = cost_oracle ? model.brute_force(cfg, eval) : model.evaluate(cfg, eval);
      if (cost_json) out << detail::report_to_json(r, cfg).dump(2) << "\n";
      else out << "tc " << r.teleportations << "\n";
    } else if (optimize->parsed()) {
      const Circuit c = detail::load_basic(opt_in);
      const auto p = opt_part.empty() ? kernighan_lin(build_interaction_graph(c), opt_kl_seed)
                                      : detail::load_partition(opt_part);
      const CostModel model(c, p);
      const EvalOptions eval{!opt_no_return, !opt_linear};
      GAParams ga;
      ga.seed = opt_seed;
      ga.threads = opt_threads;
      ga.pop_size = opt_pop;
      if (opt_pm) ga.p_m = *opt_pm;
      if (opt_pc) ga.p_c = *opt_pc;
      if (opt_pr) ga.p_r = *opt_pr;
      if (opt_maxgen) ga.max_generations = *opt_maxgen;
      ga.mutation = opt_mutation == "single-gene" ? MutationMode::SingleGene : MutationMode::PerGene;

      OptimizerResult r;
      if (opt_method == "exhaustive") {
        r = exhaustive_search(model, eval, std::nullopt, opt_threads);
      } else if (opt_method == "ga") {
        r = ga_optimize(model, ga, eval);
      } else {
        const std::size_t budget =
            opt_budget.value_or(ga.resolved_pop_size(model.m_g()) * ga.max_generations);
        r = random_search(model, budget, opt_seed, eval, opt_threads);
      }
      auto j = to_json(r);
      j["partition"] = partition_to_json(p);
      if (opt_part.empty()) j["kl_seed"] = opt_kl_seed;
      write_file(opt_report, j.dump(2) + "\n");
      out << "best_tc " << r.best_tc << " config " << r.best_config.to_string() << "\n";
    } else if (bench->parsed()) {
      RunConfig rc;
      if (!bench_suite.empty()) rc.inputs = load_suite(bench_suite);
      for (const auto& n : detail::split_list(bench_qft)) {
        const auto size = dqc::detail::parse_uint<std::size_t>(n);
        if (!size) throw std::invalid_argument("bad QFT size '" + n + "'");
        rc.inputs.push_back({"qft" + n, generate_qft(*size)});
      }
      for (const auto& m : detail::split_list(bench_methods)) rc.methods.insert(parse_method(m));
      for (std::uint64_t s = 0; s < bench_seeds; ++s) rc.seeds.push_back(s);
      rc.kl_seed = bench_kl_seed;
      rc.ga.threads = bench_threads;

      const BenchResult result = run_benchmark_suite(rc);
      const std::filesystem::path csv_path(bench_csv);
      if (csv_path.has_parent_path()) std::filesystem::create_directories(csv_path.parent_path());
      emit_reports(result.rows, ReportFormat::Csv, bench_csv);
      write_file(csv_path.parent_path() / (csv_path.stem().string() + "_seeds.csv"),
                 seed_records_to_csv(result.seed_records));
      if (!bench_json.empty()) emit_reports(result.rows, ReportFormat::Json, bench_json);
      if (!bench_plot.empty()) emit_reports(result.rows, ReportFormat::PlotData, bench_plot);
      out << rows_to_csv(result.rows);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace dqc::cli
