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

#ifndef COVERLIFE_INSTANCE_GEN_H_
#define COVERLIFE_INSTANCE_GEN_H_

#include <cstdint>
#include <stdexcept>

#include "coverlife/model.h"

namespace coverlife {

class GenerationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GenConfig {
  int num_sensors = 150;
  int num_targets = 20;
  // Sensors are deployed over [0, sensor_area)^2; targets over the centered
  // target_area x target_area square.
  double sensor_area = 1000.0;
  double target_area = 800.0;
  double range = 70.0;
  std::uint64_t seed = 0;
  // Redraws allowed per target before giving up.
  int max_resamples = 1000;

  // Throws std::invalid_argument.
  void Validate() const;
};

// Draws sensors (x then y, in index order) and then targets from a
// SplitMix64 stream seeded with `config.seed`. A target no sensor covers is
// redrawn in place from the continuing stream, so sensor positions never
// depend on the target count. All batteries are 1.
//
// Throws GenerationFailed if some target is still uncovered after
// `max_resamples` redraws.
Instance Generate(const GenConfig& config);

}  // namespace coverlife

#endif  // COVERLIFE_INSTANCE_GEN_H_
