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

#ifndef COVERLIFE_HARNESS_H_
#define COVERLIFE_HARNESS_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coverlife/greedy.h"
#include "coverlife/model.h"

// Benchmark driver: sweeps sensor/target counts, generates seeded random
// instances, runs every algorithm at every granularity w and writes result
// rows plus plot-ready aggregates.

namespace coverlife {

enum class Algorithm { kHef, kCardei, kBgop, kGk };

std::string_view AlgorithmName(Algorithm algorithm);
std::optional<Algorithm> ParseAlgorithm(std::string_view name);

struct ExperimentSpec {
  int id = 1;
  std::vector<Algorithm> algorithms;
  std::vector<double> w_grid;
  // GK runs at w use gk_epsilon[w] when present, EpsilonForW(w, n) otherwise.
  std::map<double, double> gk_epsilon;
  std::vector<int> sensor_counts;
  std::vector<int> target_counts;
  int replications = 15;
  std::uint64_t base_seed = 0;

  // Instance geometry, forwarded to GenConfig.
  double sensor_area = 1000.0;
  double target_area = 800.0;
  double range = 70.0;
  int max_resamples = 1000;

  // When false every runtime is reported as 0 so output is byte-stable.
  bool record_timing = true;
  // 0 selects COVERLIFE_THREADS, or the hardware concurrency if unset.
  int threads = 0;

  // Defaults for experiments 1-4. Throws std::invalid_argument otherwise.
  static ExperimentSpec Default(int id);
  void Validate() const;
};

struct RunRecord {
  std::string algorithm;
  double w = 0.0;
  std::optional<double> epsilon;
  int n_sensors = 0;
  int n_targets = 0;
  std::uint64_t seed = 0;
  double lifetime = 0.0;
  double upper_bound = 0.0;
  double gap_pct = 0.0;
  int covers_generated = 0;
  double runtime_ms = 0.0;
};

// Statistics over the replications of one (algorithm, w, n, m) cell.
struct CellAggregate {
  std::string algorithm;
  double w = 0.0;
  int n_sensors = 0;
  int n_targets = 0;
  int count = 0;
  double mean_lifetime = 0.0;
  double min_lifetime = 0.0;
  double max_lifetime = 0.0;
  double mean_upper_bound = 0.0;
  double mean_gap_pct = 0.0;
};

// One row of a "lifetime by w" table: the mean lifetime at each w, the
// smallest (A) and largest (B) of those means, and the spread
// C = (B - A) / mean * 100 where mean averages the row's w columns.
struct TableRow {
  std::string algorithm;
  int n_sensors = 0;
  int n_targets = 0;
  std::vector<double> mean_by_w;
  double min_mean = 0.0;
  double max_mean = 0.0;
  double row_mean = 0.0;
  double spread_pct = 0.0;
};

struct ExperimentResult {
  std::vector<RunRecord> records;
  std::vector<CellAggregate> cells;
  std::vector<TableRow> table;
};

double SpreadPercent(double min_value, double max_value, double mean);

// Seed of the instance at grid position (sensor_index, target_index,
// replication), derived by chaining SplitMix64 steps.
std::uint64_t CellSeed(std::uint64_t base_seed, int sensor_index,
                       int target_index, int replication);

// Runs one algorithm on one instance and fills a record (seed left 0).
// Throws std::logic_error if the produced schedule fails validation.
RunRecord RunOne(const CoverageMatrix& matrix, std::span<const double> battery,
                 Algorithm algorithm, double w, std::optional<double> epsilon,
                 bool record_timing);

// Records come back ordered by sensor count, target count, algorithm, w and
// replication, independent of the thread count. Propagates GenerationFailed.
ExperimentResult RunExperiment(const ExperimentSpec& spec);

std::vector<CellAggregate> AggregateCells(
    const std::vector<RunRecord>& records);
std::vector<TableRow> BuildTable(const std::vector<CellAggregate>& cells,
                                 const std::vector<double>& w_grid);

inline constexpr std::string_view kCsvHeader =
    "algorithm,w,epsilon,n_sensors,n_targets,seed,lifetime,upper_bound,"
    "gap_pct,covers_generated,runtime_ms";

std::string RecordsToCsv(const std::vector<RunRecord>& records);
void EmitCsv(const std::vector<RunRecord>& records,
             const std::filesystem::path& path);

std::string TableToCsv(const std::vector<TableRow>& table,
                       const std::vector<double>& w_grid);

// Writes "<prefix>_<algorithm>_<w>.dat" per (algorithm, w) series and
// "<prefix>_upperbound.dat", each holding "x y" lines where x is the varying
// grid dimension (targets, or sensors when only those vary). Returns the
// written paths.
std::vector<std::filesystem::path> EmitPlotData(
    const std::vector<CellAggregate>& cells, const std::string& prefix,
    const std::filesystem::path& directory);

// Thread count from COVERLIFE_THREADS, else hardware concurrency (>= 1).
int DefaultThreadCount();

}  // namespace coverlife

#endif  // COVERLIFE_HARNESS_H_
