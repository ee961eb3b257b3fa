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

#include "coverlife/instance_gen.h"

#include <algorithm>
#include <string>

#include "coverlife/splitmix.h"

namespace coverlife {

void GenConfig::Validate() const {
  if (num_sensors < 1) throw std::invalid_argument("num_sensors must be >= 1");
  if (num_targets < 1) throw std::invalid_argument("num_targets must be >= 1");
  if (!(range > 0.0)) throw std::invalid_argument("range must be positive");
  if (!(target_area > 0.0) || !(target_area <= sensor_area)) {
    throw std::invalid_argument(
        "target_area must be positive and at most sensor_area");
  }
  if (max_resamples < 0) {
    throw std::invalid_argument("max_resamples must be non-negative");
  }
}

Instance Generate(const GenConfig& config) {
  config.Validate();
  SplitMix64 rng(config.seed);
  Instance instance;
  instance.range = config.range;
  instance.sensors.reserve(config.num_sensors);
  for (int i = 0; i < config.num_sensors; ++i) {
    const double x = rng.NextUniform() * config.sensor_area;
    const double y = rng.NextUniform() * config.sensor_area;
    instance.sensors.push_back({x, y});
  }
  instance.battery.assign(config.num_sensors, 1.0);

  const double offset = (config.sensor_area - config.target_area) / 2.0;
  const double range_sq = config.range * config.range;
  auto covered = [&](const Point& t) {
    return std::any_of(instance.sensors.begin(), instance.sensors.end(),
                       [&](const Point& s) {
                         const double dx = t.x - s.x;
                         const double dy = t.y - s.y;
                         return dx * dx + dy * dy < range_sq;
                       });
  };
  instance.targets.reserve(config.num_targets);
  for (int j = 0; j < config.num_targets; ++j) {
    Point target;
    int draws = 0;
    do {
      if (draws++ > config.max_resamples) {
        throw GenerationFailed(
            "target " + std::to_string(j) + " uncovered after " +
            std::to_string(config.max_resamples) + " redraws (seed " +
            std::to_string(config.seed) + ")");
      }
      target.x = offset + rng.NextUniform() * config.target_area;
      target.y = offset + rng.NextUniform() * config.target_area;
    } while (!covered(target));
    instance.targets.push_back(target);
  }
  return instance;
}

}  // namespace coverlife
