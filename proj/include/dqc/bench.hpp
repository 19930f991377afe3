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

// Benchmark harness: decompose -> K-L partition -> classify -> optimize, with
// per-seed results folded into one row per circuit by median.

#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dqc/cost.hpp"
#include "dqc/decompose.hpp"
#include "dqc/io.hpp"
#include "dqc/optimizers.hpp"
#include "dqc/partition.hpp"

namespace dqc {

enum class Method : std::uint8_t { Exhaustive, GA, Random };

inline std::string method_name(Method m) {
  switch (m) {
    case Method::Exhaustive: return "exhaustive";
    case Method::GA: return "ga";
    case Method::Random: return "random";
  }
  return "?";
}

inline Method parse_method(const std::string& s) {
  if (s == "exhaustive") return Method::Exhaustive;
  if (s == "ga") return Method::GA;
  if (s == "random" || s == "rs") return Method::Random;
  throw std::invalid_argument("unknown method '" + s + "' (expected exhaustive, ga or random)");
}

struct BenchRow {
  std::string circuit;
  std::size_t n_qubits = 0;
  std::size_t m_g = 0;
  std::optional<double> tc_exhaustive;  // absent when over the cap
  std::optional<double> tc_ga;
  std::optional<double> tc_rs;
  std::optional<double> time_exhaustive_s;
  std::optional<double> time_ga_s;
  std::optional<double> tc_improvement_vs_rs_percent;
  std::optional<double> speedup_vs_exhaustive;
  std::uint64_t kl_seed = 0;
};

/// One optimizer run, kept next to the aggregated rows.
struct SeedRecord {
  std::string circuit;
  std::string method;
  std::uint64_t seed = 0;
  std::size_t best_tc = 0;
  std::size_t evaluations = 0;
  std::size_t generations = 0;
  double wall_time_s = 0.0;
  std::string best_config;
};

struct BenchInput {
  std::string name;
  Circuit circuit;
};

struct RunConfig {
  std::vector<BenchInput> inputs;
  std::vector<std::uint64_t> seeds;
  std::set<Method> methods;
  EvalOptions eval;
  GAParams ga;
  std::uint64_t kl_seed = 0;
  std::optional<std::size_t> exhaustive_cap;  // default: exhaustive_cap()

  void validate() const {
    if (methods.empty()) throw std::invalid_argument("benchmark needs at least one method");
    if (seeds.empty()) throw std::invalid_argument("benchmark needs at least one seed");
  }
};

struct BenchResult {
  std::vector<BenchRow> rows;
  std::vector<SeedRecord> seed_records;
};

/// `.real` and `.dqc` files of a directory, sorted by file name.
inline std::vector<BenchInput> load_suite(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw IoError("not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const auto ext = entry.path().extension();
    if (entry.is_regular_file() && (ext == ".real" || ext == ".dqc")) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<BenchInput> inputs;
  for (const auto& f : files) inputs.push_back({f.filename().string(), load_circuit(f)});
  return inputs;
}

namespace detail {

inline double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

inline std::string format_fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

/// Integers print bare; medians of an even seed count may end in .5.
inline std::string format_tc(double v) {
  return v == static_cast<double>(static_cast<std::int64_t>(v))
             ? std::to_string(static_cast<std::int64_t>(v))
             : format_fixed(v, 1);
}

inline std::string cell(const std::optional<double>& v, std::string (*fmt)(double)) {
  return v ? fmt(*v) : "";
}

}  // namespace detail

inline BenchResult run_benchmark_suite(const RunConfig& rc) {
  rc.validate();
  BenchResult result;
  const std::size_t cap = rc.exhaustive_cap.value_or(exhaustive_cap());

  for (const auto& input : rc.inputs) {
    const Circuit basic = decompose_to_basic(input.circuit);
    const auto partition = kernighan_lin(build_interaction_graph(basic), rc.kl_seed);
    const CostModel model(basic, partition);

    BenchRow row;
    row.circuit = input.name;
    row.n_qubits = basic.n_qubits();
    row.m_g = model.m_g();
    row.kl_seed = rc.kl_seed;

    auto record = [&](const OptimizerResult& r) {
      result.seed_records.push_back({input.name, r.method, r.seed, r.best_tc, r.evaluations,
                                     r.generations, r.wall_time_s, r.best_config.to_string()});
    };

    if (rc.methods.count(Method::Exhaustive) && row.m_g <= cap) {
      const auto r = exhaustive_search(model, rc.eval, cap, rc.ga.threads);
      record(r);
      row.tc_exhaustive = static_cast<double>(r.best_tc);
      row.time_exhaustive_s = r.wall_time_s;
    }

    std::vector<double> ga_tc, ga_time, rs_tc;
    for (std::uint64_t seed : rc.seeds) {
      std::size_t budget = rc.ga.resolved_pop_size(row.m_g) * rc.ga.max_generations;
      if (rc.methods.count(Method::GA)) {
        GAParams params = rc.ga;
        params.seed = seed;
        const auto r = ga_optimize(model, params, rc.eval);
        record(r);
        ga_tc.push_back(static_cast<double>(r.best_tc));
        ga_time.push_back(r.wall_time_s);
        // Random search gets population size x generations of the paired run.
        budget = r.pop_size * r.generations;
      }
      if (rc.methods.count(Method::Random)) {
        const auto r = random_search(model, std::max<std::size_t>(budget, 1), seed, rc.eval,
                                     rc.ga.threads);
        record(r);
        rs_tc.push_back(static_cast<double>(r.best_tc));
      }
    }
    if (!ga_tc.empty()) {
      row.tc_ga = detail::median(ga_tc);
      row.time_ga_s = detail::median(ga_time);
    }
    if (!rs_tc.empty()) row.tc_rs = detail::median(rs_tc);
    if (row.tc_ga && row.tc_rs && *row.tc_rs > 0)
      row.tc_improvement_vs_rs_percent = 100.0 * (*row.tc_rs - *row.tc_ga) / *row.tc_rs;
    if (row.time_exhaustive_s && row.time_ga_s && *row.time_ga_s > 0)
      row.speedup_vs_exhaustive = *row.time_exhaustive_s / *row.time_ga_s;
    result.rows.push_back(std::move(row));
  }
  return result;
}

inline const char* kBenchCsvHeader =
    "circuit,n_qubits,m_g,tc_exhaustive,tc_ga,tc_rs,time_exhaustive_s,time_ga_s,"
    "tc_improvement_vs_rs_percent,speedup_vs_exhaustive,kl_seed";

inline std::string rows_to_csv(const std::vector<BenchRow>& rows) {
  auto fixed2 = [](double v) { return detail::format_fixed(v, 2); };
  auto fixed6 = [](double v) { return detail::format_fixed(v, 6); };
  std::string out = std::string(kBenchCsvHeader) + "\n";
  for (const auto& r : rows) {
    out += r.circuit + "," + std::to_string(r.n_qubits) + "," + std::to_string(r.m_g) + "," +
           detail::cell(r.tc_exhaustive, detail::format_tc) + "," +
           detail::cell(r.tc_ga, detail::format_tc) + "," +
           detail::cell(r.tc_rs, detail::format_tc) + "," +
           detail::cell(r.time_exhaustive_s, fixed6) + "," + detail::cell(r.time_ga_s, fixed6) +
           "," + detail::cell(r.tc_improvement_vs_rs_percent, fixed2) + "," +
           detail::cell(r.speedup_vs_exhaustive, fixed2) + "," + std::to_string(r.kl_seed) + "\n";
  }
  return out;
}

inline std::string seed_records_to_csv(const std::vector<SeedRecord>& records) {
  std::string out = "circuit,method,seed,best_tc,evaluations,generations,wall_time_s,best_config\n";
  for (const auto& r : records) {
    out += r.circuit + "," + r.method + "," + std::to_string(r.seed) + "," +
           std::to_string(r.best_tc) + "," + std::to_string(r.evaluations) + "," +
           std::to_string(r.generations) + "," + detail::format_fixed(r.wall_time_s, 6) + "," +
           r.best_config + "\n";
  }
  return out;
}

inline nlohmann::json rows_to_json(const std::vector<BenchRow>& rows) {
  auto opt = [](const std::optional<double>& v) -> nlohmann::json {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    arr.push_back({{"circuit", r.circuit},
                   {"n_qubits", r.n_qubits},
                   {"m_g", r.m_g},
                   {"tc_exhaustive", opt(r.tc_exhaustive)},
                   {"tc_ga", opt(r.tc_ga)},
                   {"tc_rs", opt(r.tc_rs)},
                   {"time_exhaustive_s", opt(r.time_exhaustive_s)},
                   {"time_ga_s", opt(r.time_ga_s)},
                   {"tc_improvement_vs_rs_percent", opt(r.tc_improvement_vs_rs_percent)},
                   {"speedup_vs_exhaustive", opt(r.speedup_vs_exhaustive)},
                   {"kl_seed", r.kl_seed}});
  }
  return arr;
}

/// Two whitespace-separated series sorted by m_g: speedup.dat and
/// tc_improvement.dat. Rows without the value are skipped.
inline void write_plotdata(const std::vector<BenchRow>& rows, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());

  auto series = [&](const char* file, const char* column,
                    std::optional<double> BenchRow::*field) {
    std::vector<const BenchRow*> sorted;
    for (const auto& r : rows)
      if (r.*field) sorted.push_back(&r);
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const BenchRow* a, const BenchRow* b) { return a->m_g < b->m_g; });
    std::string out = std::string("# m_g ") + column + " circuit\n";
    for (const BenchRow* r : sorted)
      out += std::to_string(r->m_g) + " " + detail::format_fixed(*(r->*field), 4) + " " +
             r->circuit + "\n";
    write_file(dir / file, out);
  };
  series("speedup.dat", "speedup_vs_exhaustive", &BenchRow::speedup_vs_exhaustive);
  series("tc_improvement.dat", "tc_improvement_vs_rs_percent",
         &BenchRow::tc_improvement_vs_rs_percent);
}

enum class ReportFormat : std::uint8_t { Csv, Json, PlotData };

/// For PlotData `path` is a directory; otherwise a file.
inline void emit_reports(const std::vector<BenchRow>& rows, ReportFormat format,
                         const std::filesystem::path& path) {
  switch (format) {
    case ReportFormat::Csv: write_file(path, rows_to_csv(rows)); break;
    case ReportFormat::Json: write_file(path, rows_to_json(rows).dump(2) + "\n"); break;
    case ReportFormat::PlotData: write_plotdata(rows, path); break;
  }
}

}  // namespace dqc
