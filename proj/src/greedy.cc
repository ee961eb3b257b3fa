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

#include "coverlife/greedy.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace coverlife {
namespace {

// Bookkeeping for one cover under construction.
class PartialCover {
 public:
  explicit PartialCover(const CoverageMatrix& matrix)
      : matrix_(matrix), covered_(matrix.num_targets(), false) {}

  bool Complete() const { return num_covered_ == matrix_.num_targets(); }
  bool IsCovered(TargetIndex j) const { return covered_[j]; }

  int UncoveredCount(SensorIndex i) const {
    int count = 0;
    for (TargetIndex j : matrix_.TargetsOf(i)) count += covered_[j] ? 0 : 1;
    return count;
  }
  bool TouchesCovered(SensorIndex i) const {
    for (TargetIndex j : matrix_.TargetsOf(i)) {
      if (covered_[j]) return true;
    }
    return false;
  }

  std::vector<TargetIndex> Uncovered() const {
    std::vector<TargetIndex> out;
    for (TargetIndex j = 0; j < matrix_.num_targets(); ++j) {
      if (!covered_[j]) out.push_back(j);
    }
    return out;
  }

  void Add(SensorIndex i) {
    members_.push_back(i);
    for (TargetIndex j : matrix_.TargetsOf(i)) {
      if (!covered_[j]) {
        covered_[j] = true;
        ++num_covered_;
      }
    }
  }

  SensorCover Finish() const {
    return MinimalizeCover(matrix_, SensorCover(members_));
  }

 private:
  const CoverageMatrix& matrix_;
  std::vector<bool> covered_;
  int num_covered_ = 0;
  std::vector<SensorIndex> members_;
};

// Every target must keep at least one live covering sensor, otherwise the
// network is exhausted.
bool LiveSensorsCoverAll(const CoverageMatrix& matrix,
                         const std::vector<bool>& live) {
  for (TargetIndex j = 0; j < matrix.num_targets(); ++j) {
    const auto sensors = matrix.SensorsOf(j);
    if (std::none_of(sensors.begin(), sensors.end(),
                     [&](SensorIndex i) { return live[i]; })) {
      return false;
    }
  }
  return true;
}

// Residuals with dead sensors zeroed, so battery-weighted coverage sums only
// count sensors that can still be used.
std::vector<double> LiveResidual(std::span<const double> residual,
                                 const std::vector<bool>& live) {
  std::vector<double> out(residual.begin(), residual.end());
  for (size_t i = 0; i < out.size(); ++i) {
    if (!live[i]) out[i] = 0.0;
  }
  return out;
}

// Ordering used by the critical-target generators: more uncovered targets,
// then higher residual, then lower index.
struct Candidate {
  SensorIndex sensor = -1;
  int rank = 0;  // lower is better; BGOP class, 0 otherwise
  int uncovered = 0;
  double residual = 0.0;

  bool BetterThan(const Candidate& other) const {
    if (other.sensor < 0) return true;
    if (rank != other.rank) return rank < other.rank;
    if (uncovered != other.uncovered) return uncovered > other.uncovered;
    if (residual != other.residual) return residual > other.residual;
    return sensor < other.sensor;
  }
};

}  // namespace

std::string_view GeneratorName(Generator generator) {
  switch (generator) {
    case Generator::kHef:
      return "hef";
    case Generator::kCardei:
      return "cardei";
    case Generator::kBgop:
      return "bgop";
  }
  return "unknown";
}

std::optional<Generator> ParseGenerator(std::string_view name) {
  if (name == "hef") return Generator::kHef;
  if (name == "cardei") return Generator::kCardei;
  if (name == "bgop") return Generator::kBgop;
  return std::nullopt;
}

void GreedyConfig::Validate() const {
  if (!(w > 0.0 && w <= 1.0)) {
    throw std::invalid_argument("w must lie in (0, 1], got " +
                                std::to_string(w));
  }
  if (!(tolerance >= 0.0)) {
    throw std::invalid_argument("tolerance must be non-negative");
  }
}

std::optional<SensorCover> HefGenerateCover(const CoverageMatrix& matrix,
                                            std::span<const double> residual,
                                            const std::vector<bool>& live) {
  if (!LiveSensorsCoverAll(matrix, live)) return std::nullopt;
  PartialCover partial(matrix);
  while (!partial.Complete()) {
    SensorIndex best = -1;
    for (SensorIndex i = 0; i < matrix.num_sensors(); ++i) {
      if (!live[i] || partial.UncoveredCount(i) == 0) continue;
      if (best < 0 || residual[i] > residual[best]) best = i;
    }
    partial.Add(best);
  }
  return partial.Finish();
}

std::optional<SensorCover> CardeiGenerateCover(const CoverageMatrix& matrix,
                                               std::span<const double> residual,
                                               const std::vector<bool>& live) {
  if (!LiveSensorsCoverAll(matrix, live)) return std::nullopt;
  const std::vector<double> live_residual = LiveResidual(residual, live);
  PartialCover partial(matrix);
  while (!partial.Complete()) {
    const std::vector<TargetIndex> uncovered = partial.Uncovered();
    const TargetIndex critical =
        CriticalTarget(matrix, live_residual, uncovered);
    Candidate best;
    for (SensorIndex i : matrix.SensorsOf(critical)) {
      if (!live[i]) continue;
      const Candidate c{i, 0, partial.UncoveredCount(i), residual[i]};
      if (c.BetterThan(best)) best = c;
    }
    partial.Add(best.sensor);
  }
  return partial.Finish();
}

std::optional<SensorCover> BgopGenerateCover(const CoverageMatrix& matrix,
                                             std::span<const double> residual,
                                             const std::vector<bool>& live) {
  if (!LiveSensorsCoverAll(matrix, live)) return std::nullopt;
  const std::vector<double> live_residual = LiveResidual(residual, live);
  PartialCover partial(matrix);
  std::vector<bool> critical(matrix.num_targets(), false);
  while (!partial.Complete()) {
    // Coverage sums are compared with kTolerance so that targets whose sums
    // differ only by rounding are all treated as critical.
    double min_sum = std::numeric_limits<double>::infinity();
    std::vector<double> sums(matrix.num_targets(), 0.0);
    for (TargetIndex j = 0; j < matrix.num_targets(); ++j) {
      if (partial.IsCovered(j)) continue;
      for (SensorIndex i : matrix.SensorsOf(j)) sums[j] += live_residual[i];
      min_sum = std::min(min_sum, sums[j]);
    }
    for (TargetIndex j = 0; j < matrix.num_targets(); ++j) {
      critical[j] = !partial.IsCovered(j) && sums[j] <= min_sum + kTolerance;
    }

    Candidate best;
    for (SensorIndex i = 0; i < matrix.num_sensors(); ++i) {
      if (!live[i]) continue;
      const int uncovered = partial.UncoveredCount(i);
      if (uncovered == 0) continue;
      const auto targets = matrix.TargetsOf(i);
      const bool hits_critical =
          std::any_of(targets.begin(), targets.end(),
                      [&](TargetIndex j) { return critical[j]; });
      const bool redundant = partial.TouchesCovered(i);
      int sensor_class;
      if (hits_critical && !redundant) {
        sensor_class = 0;  // Best
      } else if (hits_critical) {
        sensor_class = 1;  // Good
      } else if (!redundant) {
        sensor_class = 2;  // Ok
      } else {
        sensor_class = 3;  // Poor
      }
      const Candidate c{i, sensor_class, uncovered, residual[i]};
      if (c.BetterThan(best)) best = c;
    }
    partial.Add(best.sensor);
  }
  return partial.Finish();
}

std::optional<SensorCover> GenerateCover(Generator generator,
                                         const CoverageMatrix& matrix,
                                         std::span<const double> residual,
                                         const std::vector<bool>& live) {
  switch (generator) {
    case Generator::kHef:
      return HefGenerateCover(matrix, residual, live);
    case Generator::kCardei:
      return CardeiGenerateCover(matrix, residual, live);
    case Generator::kBgop:
      return BgopGenerateCover(matrix, residual, live);
  }
  return std::nullopt;
}

SolveResult RunGreedy(const CoverageMatrix& matrix,
                      std::span<const double> battery,
                      const GreedyConfig& config) {
  config.Validate();
  const int n = matrix.num_sensors();
  if (static_cast<int>(battery.size()) != n) {
    throw std::invalid_argument("battery length does not match sensor count");
  }
  SolveResult result;
  result.residual.assign(battery.begin(), battery.end());
  std::vector<bool> live(n);
  double max_battery = 0.0;
  for (SensorIndex i = 0; i < n; ++i) {
    live[i] = battery[i] > config.tolerance;
    max_battery = std::max(max_battery, battery[i]);
  }

  // Each round either drains a member or charges every member a full w.
  const long long max_rounds =
      static_cast<long long>(n) *
          static_cast<long long>(std::ceil(max_battery / config.w)) +
      n + 1;
  std::vector<ScheduleEntry>& entries = result.schedule.entries;
  for (long long round = 0;; ++round) {
    if (round > max_rounds) {
      throw std::logic_error("greedy loop exceeded its round bound");
    }
    std::optional<SensorCover> cover =
        GenerateCover(config.generator, matrix, result.residual, live);
    if (!cover) break;
    ++result.covers_generated;
    const double lifetime =
        std::min(config.w, MaxLifetime(*cover, result.residual));
    for (SensorIndex i : cover->members()) {
      result.residual[i] -= lifetime;
      if (result.residual[i] <= config.tolerance) live[i] = false;
    }
    if (!entries.empty() && entries.back().cover == *cover) {
      entries.back().lifetime += lifetime;
    } else {
      entries.push_back({std::move(*cover), lifetime});
    }
  }
  return result;
}

}  // namespace coverlife
