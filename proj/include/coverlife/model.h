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

#ifndef COVERLIFE_MODEL_H_
#define COVERLIFE_MODEL_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

// Core types for the target coverage lifetime problem: sensors with finite
// batteries must keep every target monitored for as long as possible by
// activating a sequence of sensor covers.

namespace coverlife {

using SensorIndex = int;
using TargetIndex = int;

// Absolute tolerance used for every battery/usage comparison.
inline constexpr double kTolerance = 1e-9;

// Thrown when some target is covered by no sensor.
class InfeasibleInstance : public std::runtime_error {
 public:
  explicit InfeasibleInstance(TargetIndex target);
  TargetIndex target() const { return target_; }

 private:
  TargetIndex target_;
};

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

// Problem input. Coordinates and range are in meters; batteries are in
// normalized time units (1.0 is a fresh sensor).
struct Instance {
  std::vector<Point> sensors;
  std::vector<Point> targets;
  double range = 0.0;
  std::vector<double> battery;

  int num_sensors() const { return static_cast<int>(sensors.size()); }
  int num_targets() const { return static_cast<int>(targets.size()); }

  // Throws std::invalid_argument if sizes, range or batteries are invalid.
  void Validate() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Boolean n x m sensor-target incidence. Construction rejects matrices with
// an all-false column, so every CoverageMatrix admits at least one cover.
class CoverageMatrix {
 public:
  // `rows[i]` lists the targets covered by sensor i.
  CoverageMatrix(int num_targets,
                 const std::vector<std::vector<TargetIndex>>& rows);

  int num_sensors() const { return num_sensors_; }
  int num_targets() const { return num_targets_; }

  bool Covers(SensorIndex sensor, TargetIndex target) const {
    return bits_[static_cast<size_t>(sensor) * num_targets_ + target] != 0;
  }
  // Sorted ascending.
  std::span<const TargetIndex> TargetsOf(SensorIndex sensor) const {
    return sensor_targets_[sensor];
  }
  std::span<const SensorIndex> SensorsOf(TargetIndex target) const {
    return target_sensors_[target];
  }

  friend bool operator==(const CoverageMatrix& a, const CoverageMatrix& b) {
    return a.num_targets_ == b.num_targets_ && a.bits_ == b.bits_;
  }

 private:
  int num_sensors_;
  int num_targets_;
  std::vector<std::uint8_t> bits_;
  std::vector<std::vector<TargetIndex>> sensor_targets_;
  std::vector<std::vector<SensorIndex>> target_sensors_;
};

// A set of sensors, kept sorted and duplicate-free.
class SensorCover {
 public:
  SensorCover() = default;
  explicit SensorCover(std::vector<SensorIndex> members);

  const std::vector<SensorIndex>& members() const { return members_; }
  size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool Contains(SensorIndex sensor) const;

  friend auto operator<=>(const SensorCover&, const SensorCover&) = default;

 private:
  std::vector<SensorIndex> members_;
};

struct ScheduleEntry {
  SensorCover cover;
  double lifetime = 0.0;

  friend bool operator==(const ScheduleEntry&, const ScheduleEntry&) = default;
};

// Covers activated one after another; network lifetime is the sum of the
// entry lifetimes.
struct Schedule {
  std::vector<ScheduleEntry> entries;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

struct ValidationReport {
  std::vector<bool> entry_is_cover;
  std::vector<bool> entry_lifetime_positive;
  std::vector<double> usage;
  std::vector<bool> within_battery;
  double total_lifetime = 0.0;
  bool pass = true;

  // Human readable list of violations, empty when `pass`.
  std::string Describe() const;
};

// Sensor i covers target j iff their squared distance is strictly below
// range^2. Throws InfeasibleInstance when a target has no covering sensor.
CoverageMatrix BuildCoverageMatrix(const Instance& instance);

// True iff the union of the rows in `sensors` hits every column.
bool IsCover(const CoverageMatrix& matrix,
             std::span<const SensorIndex> sensors);
inline bool IsCover(const CoverageMatrix& matrix, const SensorCover& cover) {
  return IsCover(matrix, std::span<const SensorIndex>(cover.members()));
}

// True iff `cover` is a cover and dropping any single member breaks it.
bool IsMinimalCover(const CoverageMatrix& matrix, const SensorCover& cover);

// Drops redundant members, trying removals in ascending sensor index.
// Requires IsCover(matrix, cover).
SensorCover MinimalizeCover(const CoverageMatrix& matrix,
                            const SensorCover& cover);

// Smallest residual battery among the members of a non-empty cover.
double MaxLifetime(const SensorCover& cover, std::span<const double> residual);

// Candidate target minimizing the battery-weighted count of its covering
// sensors. Ties go to the lowest target index.
TargetIndex CriticalTarget(const CoverageMatrix& matrix,
                           std::span<const double> residual,
                           std::span<const TargetIndex> candidates);

// Battery-weighted coverage of the critical target; no schedule can last
// longer than this.
double UpperBound(const CoverageMatrix& matrix,
                  std::span<const double> battery);

double TotalLifetime(const Schedule& schedule);

// Checks every entry is a positive-lifetime cover and every sensor's
// cumulative usage stays within its battery plus `tolerance`.
ValidationReport ValidateSchedule(const CoverageMatrix& matrix,
                                  std::span<const double> battery,
                                  const Schedule& schedule,
                                  double tolerance = kTolerance);

}  // namespace coverlife

#endif  // COVERLIFE_MODEL_H_
