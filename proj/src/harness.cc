// Copyright 2026 The Coverlife Authors
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

#include "coverlife/harness.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "coverlife/gk.h"
#include "coverlife/instance_gen.h"
#include "coverlife/instance_io.h"
#include "coverlife/splitmix.h"

namespace coverlife {
namespace {

std::string FormatFixed(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

// Shortest form used in file names, e.g. 0.002 or 1.
std::string FormatShort(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", value);
  return buf;
}

std::vector<int> Range(int first, int last, int step) {
  std::vector<int> out;
  for (int v = first; v <= last; v += step) out.push_back(v);
  return out;
}

const std::vector<double>& DefaultWGrid() {
  static const std::vector<double> grid = {1.0, 0.5, 0.25, 0.025, 0.01, 0.002};
  return grid;
}

}  // namespace

std::string_view AlgorithmName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kHef:
      return "hef";
    case Algorithm::kCardei:
      return "cardei";
    case Algorithm::kBgop:
      return "bgop";
    case Algorithm::kGk:
      return "gk";
  }
  return "unknown";
}

std::optional<Algorithm> ParseAlgorithm(std::string_view name) {
  if (name == "hef") return Algorithm::kHef;
  if (name == "cardei") return Algorithm::kCardei;
  if (name == "bgop") return Algorithm::kBgop;
  if (name == "gk") return Algorithm::kGk;
  return std::nullopt;
}

ExperimentSpec ExperimentSpec::Default(int id) {
  ExperimentSpec spec;
  spec.id = id;
  switch (id) {
    case 1:
      // Granularity sweep for the critical-target greedy and HEF.
      spec.algorithms = {Algorithm::kCardei, Algorithm::kHef};
      spec.w_grid = DefaultWGrid();
      spec.sensor_counts = {150};
      spec.target_counts = Range(20, 90, 10);
      break;
    case 2:
      // GK against the greedy heuristics at two fixed (eps, w) pairs.
      spec.algorithms = {Algorithm::kCardei, Algorithm::kHef, Algorithm::kGk};
      spec.w_grid = {0.002, 0.01};
      spec.gk_epsilon = {{0.002, 0.104}, {0.01, 0.25}};
      spec.sensor_counts = {150};
      spec.target_counts = Range(20, 90, 10);
      break;
    case 3:
      spec.algorithms = {Algorithm::kCardei, Algorithm::kBgop, Algorithm::kHef};
      spec.w_grid = {1.0};
      spec.sensor_counts = {150};
      spec.target_counts = Range(20, 90, 10);
      break;
    case 4:
      spec.algorithms = {Algorithm::kCardei, Algorithm::kBgop, Algorithm::kHef};
      spec.w_grid = {1.0};
      spec.sensor_counts = Range(20, 150, 10);
      spec.target_counts = {25};
      break;
    default:
      throw std::invalid_argument("experiment id must be 1..4, got " +
                                  std::to_string(id));
  }
  return spec;
}

void ExperimentSpec::Validate() const {
  if (algorithms.empty()) throw std::invalid_argument("no algorithms");
  if (w_grid.empty()) throw std::invalid_argument("empty w grid");
  if (sensor_counts.empty() || target_counts.empty()) {
    throw std::invalid_argument("empty sensor or target grid");
  }
  if (replications < 1)
    throw std::invalid_argument("replications must be >= 1");
  for (double w : w_grid) {
    if (!(w > 0.0 && w <= 1.0)) throw std::invalid_argument("w outside (0, 1]");
  }
}

double SpreadPercent(double min_value, double max_value, double mean) {
  return (max_value - min_value) / mean * 100.0;
}

std::uint64_t CellSeed(std::uint64_t base_seed, int sensor_index,
                       int target_index, int replication) {
  std::uint64_t seed = MixSeed(base_seed);
  seed = MixSeed(seed ^ static_cast<std::uint64_t>(sensor_index));
  seed = MixSeed(seed ^ static_cast<std::uint64_t>(target_index));
  return MixSeed(seed ^ static_cast<std::uint64_t>(replication));
}

RunRecord RunOne(const CoverageMatrix& matrix, std::span<const double> battery,
                 Algorithm algorithm, double w, std::optional<double> epsilon,
                 bool record_timing) {
  RunRecord record;
  record.algorithm = std::string(AlgorithmName(algorithm));
  record.w = w;
  record.n_sensors = matrix.num_sensors();
  record.n_targets = matrix.num_targets();

  const auto start = std::chrono::steady_clock::now();
  SolveResult result;
  if (algorithm == Algorithm::kGk) {
    const double eps =
        epsilon ? *epsilon : EpsilonForW(w, matrix.num_sensors());
    record.epsilon = eps;
    result = RunGk(matrix, battery, GkConfig{.epsilon = eps});
  } else {
    GreedyConfig config;
    config.w = w;
    config.generator = algorithm == Algorithm::kHef      ? Generator::kHef
                       : algorithm == Algorithm::kCardei ? Generator::kCardei
                                                         : Generator::kBgop;
    result = RunGreedy(matrix, battery, config);
  }
  const auto stop = std::chrono::steady_clock::now();

  const ValidationReport report =
      ValidateSchedule(matrix, battery, result.schedule);
  if (!report.pass) {
    throw std::logic_error(record.algorithm + " at w=" + FormatShort(w) +
                           " produced an invalid schedule:\n" +
                           report.Describe());
  }
  record.lifetime = report.total_lifetime;
  record.upper_bound = UpperBound(matrix, battery);
  record.gap_pct =
      100.0 * (record.upper_bound - record.lifetime) / record.upper_bound;
  record.covers_generated = result.covers_generated;
  record.runtime_ms =
      record_timing
          ? std::chrono::duration<double, std::milli>(stop - start).count()
          : 0.0;
  return record;
}

ExperimentResult RunExperiment(const ExperimentSpec& spec) {
  spec.Validate();
  struct Task {
    int sensor_index;
    int target_index;
    int replication;
  };
  std::vector<Task> tasks;
  for (int si = 0; si < static_cast<int>(spec.sensor_counts.size()); ++si) {
    for (int ti = 0; ti < static_cast<int>(spec.target_counts.size()); ++ti) {
      for (int r = 0; r < spec.replications; ++r) tasks.push_back({si, ti, r});
    }
  }
  const size_t runs_per_task = spec.algorithms.size() * spec.w_grid.size();
  // task_records[t][a * |w| + k] holds algorithm a at w_grid[k].
  std::vector<std::vector<RunRecord>> task_records(tasks.size());

  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (size_t t = next++; t < tasks.size(); t = next++) {
      try {
        const Task& task = tasks[t];
        GenConfig gen;
        gen.num_sensors = spec.sensor_counts[task.sensor_index];
        gen.num_targets = spec.target_counts[task.target_index];
        gen.sensor_area = spec.sensor_area;
        gen.target_area = spec.target_area;
        gen.range = spec.range;
        gen.max_resamples = spec.max_resamples;
        gen.seed = CellSeed(spec.base_seed, task.sensor_index,
                            task.target_index, task.replication);
        const Instance instance = Generate(gen);
        const CoverageMatrix matrix = BuildCoverageMatrix(instance);
        std::vector<RunRecord>& out = task_records[t];
        out.reserve(runs_per_task);
        for (Algorithm algorithm : spec.algorithms) {
          for (double w : spec.w_grid) {
            std::optional<double> epsilon;
            if (algorithm == Algorithm::kGk) {
              auto it = spec.gk_epsilon.find(w);
              if (it != spec.gk_epsilon.end()) epsilon = it->second;
            }
            out.push_back(RunOne(matrix, instance.battery, algorithm, w,
                                 epsilon, spec.record_timing));
            out.back().seed = gen.seed;
          }
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = tasks.size();
      }
    }
  };

  const int threads = std::max(
      1, std::min<int>(spec.threads > 0 ? spec.threads : DefaultThreadCount(),
                       static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (std::thread& thread : pool) thread.join();
  if (failure) std::rethrow_exception(failure);

  ExperimentResult result;
  result.records.reserve(tasks.size() * runs_per_task);
  const int reps = spec.replications;
  const int num_targets = static_cast<int>(spec.target_counts.size());
  for (int si = 0; si < static_cast<int>(spec.sensor_counts.size()); ++si) {
    for (int ti = 0; ti < num_targets; ++ti) {
      for (size_t run = 0; run < runs_per_task; ++run) {
        for (int r = 0; r < reps; ++r) {
          const size_t t =
              (static_cast<size_t>(si) * num_targets + ti) * reps + r;
          result.records.push_back(task_records[t][run]);
        }
      }
    }
  }
  result.cells = AggregateCells(result.records);
  result.table = BuildTable(result.cells, spec.w_grid);
  return result;
}

std::vector<CellAggregate> AggregateCells(
    const std::vector<RunRecord>& records) {
  // Cells keep the order in which they first appear in `records`.
  std::vector<CellAggregate> cells;
  std::map<std::tuple<std::string, double, int, int>, size_t> index;
  for (const RunRecord& r : records) {
    const auto key =
        std::make_tuple(r.algorithm, r.w, r.n_sensors, r.n_targets);
    auto [it, inserted] = index.try_emplace(key, cells.size());
    if (inserted) {
      CellAggregate cell;
      cell.algorithm = r.algorithm;
      cell.w = r.w;
      cell.n_sensors = r.n_sensors;
      cell.n_targets = r.n_targets;
      cell.min_lifetime = r.lifetime;
      cell.max_lifetime = r.lifetime;
      cells.push_back(cell);
    }
    CellAggregate& cell = cells[it->second];
    ++cell.count;
    cell.mean_lifetime += r.lifetime;
    cell.mean_upper_bound += r.upper_bound;
    cell.mean_gap_pct += r.gap_pct;
    cell.min_lifetime = std::min(cell.min_lifetime, r.lifetime);
    cell.max_lifetime = std::max(cell.max_lifetime, r.lifetime);
  }
  for (CellAggregate& cell : cells) {
    cell.mean_lifetime /= cell.count;
    cell.mean_upper_bound /= cell.count;
    cell.mean_gap_pct /= cell.count;
  }
  return cells;
}

std::vector<TableRow> BuildTable(const std::vector<CellAggregate>& cells,
                                 const std::vector<double>& w_grid) {
  std::vector<TableRow> table;
  std::map<std::tuple<std::string, int, int>, size_t> index;
  for (const CellAggregate& cell : cells) {
    const auto key =
        std::make_tuple(cell.algorithm, cell.n_sensors, cell.n_targets);
    auto [it, inserted] = index.try_emplace(key, table.size());
    if (inserted) {
      TableRow row;
      row.algorithm = cell.algorithm;
      row.n_sensors = cell.n_sensors;
      row.n_targets = cell.n_targets;
      row.mean_by_w.assign(w_grid.size(), 0.0);
      table.push_back(std::move(row));
    }
    const auto w_it = std::find(w_grid.begin(), w_grid.end(), cell.w);
    if (w_it == w_grid.end()) continue;
    table[it->second].mean_by_w[w_it - w_grid.begin()] = cell.mean_lifetime;
  }
  for (TableRow& row : table) {
    row.min_mean =
        *std::min_element(row.mean_by_w.begin(), row.mean_by_w.end());
    row.max_mean =
        *std::max_element(row.mean_by_w.begin(), row.mean_by_w.end());
    for (double v : row.mean_by_w) row.row_mean += v;
    row.row_mean /= static_cast<double>(row.mean_by_w.size());
    row.spread_pct = SpreadPercent(row.min_mean, row.max_mean, row.row_mean);
  }
  return table;
}

std::string RecordsToCsv(const std::vector<RunRecord>& records) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const RunRecord& r : records) {
    out += r.algorithm;
    out += ',' + FormatFixed(r.w);
    out += ',' + (r.epsilon ? FormatFixed(*r.epsilon) : std::string());
    out += ',' + std::to_string(r.n_sensors);
    out += ',' + std::to_string(r.n_targets);
    out += ',' + std::to_string(r.seed);
    out += ',' + FormatFixed(r.lifetime);
    out += ',' + FormatFixed(r.upper_bound);
    out += ',' + FormatFixed(r.gap_pct);
    out += ',' + std::to_string(r.covers_generated);
    out += ',' + FormatFixed(r.runtime_ms);
    out += '\n';
  }
  return out;
}

void EmitCsv(const std::vector<RunRecord>& records,
             const std::filesystem::path& path) {
  WriteFile(path, RecordsToCsv(records));
}

std::string TableToCsv(const std::vector<TableRow>& table,
                       const std::vector<double>& w_grid) {
  std::string out = "algorithm,n_sensors,n_targets";
  for (double w : w_grid) out += ",w=" + FormatShort(w);
  out += ",A,B,C\n";
  for (const TableRow& row : table) {
    out += row.algorithm + ',' + std::to_string(row.n_sensors) + ',' +
           std::to_string(row.n_targets);
    for (double v : row.mean_by_w) out += ',' + FormatFixed(v);
    out += ',' + FormatFixed(row.min_mean) + ',' + FormatFixed(row.max_mean) +
           ',' + FormatFixed(row.spread_pct) + '\n';
  }
  return out;
}

std::vector<std::filesystem::path> EmitPlotData(
    const std::vector<CellAggregate>& cells, const std::string& prefix,
    const std::filesystem::path& directory) {
  std::set<int> sensor_values;
  std::set<int> target_values;
  for (const CellAggregate& c : cells) {
    sensor_values.insert(c.n_sensors);
    target_values.insert(c.n_targets);
  }
  if (sensor_values.size() > 1 && target_values.size() > 1) {
    throw std::invalid_argument(
        "plot data needs a single varying grid dimension");
  }
  const bool x_is_sensors = sensor_values.size() > 1;
  auto x_of = [&](const CellAggregate& c) {
    return x_is_sensors ? c.n_sensors : c.n_targets;
  };

  // Series in order of first appearance; points sorted by x.
  std::vector<std::pair<std::string, std::map<int, double>>> series;
  std::map<std::pair<std::string, double>, size_t> series_index;
  std::map<int, double> upper_bound;
  for (const CellAggregate& c : cells) {
    auto [it, inserted] =
        series_index.try_emplace({c.algorithm, c.w}, series.size());
    if (inserted) {
      series.emplace_back(
          prefix + "_" + c.algorithm + "_" + FormatShort(c.w) + ".dat",
          std::map<int, double>{});
    }
    series[it->second].second[x_of(c)] = c.mean_lifetime;
    // Every algorithm sees the same instances, so any cell gives the bound.
    upper_bound.try_emplace(x_of(c), c.mean_upper_bound);
  }
  series.emplace_back(prefix + "_upperbound.dat", std::move(upper_bound));

  std::vector<std::filesystem::path> written;
  for (const auto& [name, points] : series) {
    std::string body;
    for (const auto& [x, y] : points) {
      body += std::to_string(x) + ' ' + FormatFixed(y) + '\n';
    }
    written.push_back(directory / name);
    WriteFile(written.back(), body);
  }
  return written;
}

int DefaultThreadCount() {
  if (const char* env = std::getenv("COVERLIFE_THREADS")) {
    const int parsed = std::atoi(env);
    if (parsed > 0) return parsed;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace coverlife
