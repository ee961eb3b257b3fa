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

#include "coverlife/model.h"

#include <algorithm>
#include <cassert>
#include <limits>
#include <sstream>
#include <utility>

namespace coverlife {

InfeasibleInstance::InfeasibleInstance(TargetIndex target)
    : std::runtime_error("target " + std::to_string(target) +
                         " is covered by no sensor"),
      target_(target) {}

void Instance::Validate() const {
  if (sensors.empty()) throw std::invalid_argument("instance has no sensors");
  if (targets.empty()) throw std::invalid_argument("instance has no targets");
  if (battery.size() != sensors.size()) {
    throw std::invalid_argument(
        "battery length " + std::to_string(battery.size()) +
        " does not match sensor count " + std::to_string(sensors.size()));
  }
  if (!(range > 0.0)) throw std::invalid_argument("range must be positive");
  for (size_t i = 0; i < battery.size(); ++i) {
    if (!(battery[i] >= 0.0)) {
      throw std::invalid_argument("battery of sensor " + std::to_string(i) +
                                  " is negative");
    }
  }
}

CoverageMatrix::CoverageMatrix(
    int num_targets, const std::vector<std::vector<TargetIndex>>& rows)
    : num_sensors_(static_cast<int>(rows.size())),
      num_targets_(num_targets),
      bits_(rows.size() * static_cast<size_t>(num_targets), 0),
      sensor_targets_(rows.size()),
      target_sensors_(num_targets) {
  if (num_sensors_ < 1 || num_targets_ < 1) {
    throw std::invalid_argument(
        "coverage matrix needs at least one row and column");
  }
  for (SensorIndex i = 0; i < num_sensors_; ++i) {
    for (TargetIndex j : rows[i]) {
      if (j < 0 || j >= num_targets_) {
        throw std::invalid_argument("target index out of range");
      }
      bits_[static_cast<size_t>(i) * num_targets_ + j] = 1;
    }
  }
  for (SensorIndex i = 0; i < num_sensors_; ++i) {
    for (TargetIndex j = 0; j < num_targets_; ++j) {
      if (Covers(i, j)) {
        sensor_targets_[i].push_back(j);
        target_sensors_[j].push_back(i);
      }
    }
  }
  for (TargetIndex j = 0; j < num_targets_; ++j) {
    if (target_sensors_[j].empty()) throw InfeasibleInstance(j);
  }
}

SensorCover::SensorCover(std::vector<SensorIndex> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SensorCover::Contains(SensorIndex sensor) const {
  return std::binary_search(members_.begin(), members_.end(), sensor);
}

std::string ValidationReport::Describe() const {
  std::ostringstream out;
  for (size_t p = 0; p < entry_is_cover.size(); ++p) {
    if (!entry_is_cover[p]) out << "entry " << p << " is not a cover\n";
    if (!entry_lifetime_positive[p]) {
      out << "entry " << p << " has non-positive lifetime\n";
    }
  }
  for (size_t i = 0; i < within_battery.size(); ++i) {
    if (!within_battery[i]) {
      out << "sensor " << i << " used for " << usage[i]
          << " beyond its battery\n";
    }
  }
  return out.str();
}

CoverageMatrix BuildCoverageMatrix(const Instance& instance) {
  instance.Validate();
  const double range_sq = instance.range * instance.range;
  std::vector<std::vector<TargetIndex>> rows(instance.sensors.size());
  for (size_t i = 0; i < instance.sensors.size(); ++i) {
    const Point& s = instance.sensors[i];
    for (size_t j = 0; j < instance.targets.size(); ++j) {
      const double dx = instance.targets[j].x - s.x;
      const double dy = instance.targets[j].y - s.y;
      if (dx * dx + dy * dy < range_sq) {
        rows[i].push_back(static_cast<TargetIndex>(j));
      }
    }
  }
  return CoverageMatrix(instance.num_targets(), rows);
}

bool IsCover(const CoverageMatrix& matrix,
             std::span<const SensorIndex> sensors) {
  std::vector<bool> hit(matrix.num_targets(), false);
  int remaining = matrix.num_targets();
  for (SensorIndex i : sensors) {
    if (i < 0 || i >= matrix.num_sensors()) return false;
    for (TargetIndex j : matrix.TargetsOf(i)) {
      if (!hit[j]) {
        hit[j] = true;
        --remaining;
      }
    }
  }
  return remaining == 0;
}

bool IsMinimalCover(const CoverageMatrix& matrix, const SensorCover& cover) {
  if (!IsCover(matrix, cover)) return false;
  std::vector<SensorIndex> rest;
  for (size_t k = 0; k < cover.size(); ++k) {
    rest = cover.members();
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
    if (IsCover(matrix, rest)) return false;
  }
  return true;
}

SensorCover MinimalizeCover(const CoverageMatrix& matrix,
                            const SensorCover& cover) {
  assert(IsCover(matrix, cover));
  // multiplicity[j] counts members covering target j.
  std::vector<int> multiplicity(matrix.num_targets(), 0);
  for (SensorIndex i : cover.members()) {
    for (TargetIndex j : matrix.TargetsOf(i)) ++multiplicity[j];
  }
  std::vector<SensorIndex> kept;
  kept.reserve(cover.size());
  for (SensorIndex i : cover.members()) {
    const auto targets = matrix.TargetsOf(i);
    const bool redundant =
        std::all_of(targets.begin(), targets.end(),
                    [&](TargetIndex j) { return multiplicity[j] > 1; });
    if (redundant) {
      for (TargetIndex j : targets) --multiplicity[j];
    } else {
      kept.push_back(i);
    }
  }
  return SensorCover(std::move(kept));
}

double MaxLifetime(const SensorCover& cover, std::span<const double> residual) {
  assert(!cover.empty());
  double lifetime = std::numeric_limits<double>::infinity();
  for (SensorIndex i : cover.members())
    lifetime = std::min(lifetime, residual[i]);
  return lifetime;
}

namespace {

double WeightedCoverage(const CoverageMatrix& matrix,
                        std::span<const double> battery, TargetIndex target) {
  double sum = 0.0;
  for (SensorIndex i : matrix.SensorsOf(target)) sum += battery[i];
  return sum;
}

}  // namespace

TargetIndex CriticalTarget(const CoverageMatrix& matrix,
                           std::span<const double> residual,
                           std::span<const TargetIndex> candidates) {
  assert(!candidates.empty());
  TargetIndex best = -1;
  double best_sum = std::numeric_limits<double>::infinity();
  for (TargetIndex j : candidates) {
    const double sum = WeightedCoverage(matrix, residual, j);
    if (sum < best_sum || (sum == best_sum && j < best)) {
      best = j;
      best_sum = sum;
    }
  }
  return best;
}

double UpperBound(const CoverageMatrix& matrix,
                  std::span<const double> battery) {
  double bound = std::numeric_limits<double>::infinity();
  for (TargetIndex j = 0; j < matrix.num_targets(); ++j) {
    bound = std::min(bound, WeightedCoverage(matrix, battery, j));
  }
  return bound;
}

double TotalLifetime(const Schedule& schedule) {
  double total = 0.0;
  for (const ScheduleEntry& entry : schedule.entries) total += entry.lifetime;
  return total;
}

ValidationReport ValidateSchedule(const CoverageMatrix& matrix,
                                  std::span<const double> battery,
                                  const Schedule& schedule, double tolerance) {
  ValidationReport report;
  const int n = matrix.num_sensors();
  report.usage.assign(n, 0.0);
  report.within_battery.assign(n, true);
  for (const ScheduleEntry& entry : schedule.entries) {
    const bool is_cover = IsCover(matrix, entry.cover);
    const bool positive = entry.lifetime > 0.0;
    report.entry_is_cover.push_back(is_cover);
    report.entry_lifetime_positive.push_back(positive);
    report.pass = report.pass && is_cover && positive;
    report.total_lifetime += entry.lifetime;
    for (SensorIndex i : entry.cover.members()) {
      if (i >= 0 && i < n) report.usage[i] += entry.lifetime;
    }
  }
  for (SensorIndex i = 0; i < n; ++i) {
    const double limit =
        i < static_cast<int>(battery.size()) ? battery[i] : 0.0;
    if (report.usage[i] > limit + tolerance) {
      report.within_battery[i] = false;
      report.pass = false;
    }
  }
  return report;
}

}  // namespace coverlife
