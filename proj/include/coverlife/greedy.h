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

#ifndef COVERLIFE_GREEDY_H_
#define COVERLIFE_GREEDY_H_

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "coverlife/model.h"

// Generic greedy scheduling: build a cover from the sensors that still have
// battery, run it for min(w, bottleneck residual), charge its members, and
// repeat until no cover can be formed. The cover generator decides the
// heuristic. With w = 1 this is the naive greedy scheme that drains every
// cover's bottleneck sensor at once.

namespace coverlife {

enum class Generator {
  kHef,     // highest residual battery first
  kCardei,  // critical target, then most uncovered targets
  kBgop,    // Best/Good/Ok/Poor sensor classes
};

std::string_view GeneratorName(Generator generator);
// Accepts "hef", "cardei", "bgop"; returns nullopt otherwise.
std::optional<Generator> ParseGenerator(std::string_view name);

struct GreedyConfig {
  // Per-activation lifetime cap, in (0, 1].
  double w = 1.0;
  Generator generator = Generator::kHef;
  double tolerance = kTolerance;

  // Throws std::invalid_argument.
  void Validate() const;
};

struct SolveResult {
  Schedule schedule;
  // Number of covers produced, counting repeats merged into one entry.
  int covers_generated = 0;
  std::vector<double> residual;
};

// `live[i]` marks sensors that may still be activated. Each generator
// returns a minimal cover made of live sensors, or nullopt when some target
// has no live covering sensor.

// Repeatedly adds the live sensor with the largest residual battery among
// those covering an uncovered target (ties: lowest index), then minimalizes.
std::optional<SensorCover> HefGenerateCover(const CoverageMatrix& matrix,
                                            std::span<const double> residual,
                                            const std::vector<bool>& live);

// Reconstruction of the critical-target greedy: repeatedly takes the
// uncovered target with the least live battery-weighted coverage and adds
// the live sensor covering it that covers the most uncovered targets
// (ties: higher residual, then lowest index). Minimalized at the end.
std::optional<SensorCover> CardeiGenerateCover(const CoverageMatrix& matrix,
                                               std::span<const double> residual,
                                               const std::vector<bool>& live);

// Reconstruction of the Best/Good/Ok/Poor heuristic. The critical targets
// are the uncovered targets attaining the minimum live battery-weighted
// coverage. Every live sensor covering an uncovered target falls in one
// class:
//   Best: covers a critical target and no already-covered target,
//   Good: covers a critical target,
//   Ok:   covers no already-covered target,
//   Poor: everything else.
// The first non-empty class wins; inside it the sensor covering the most
// uncovered targets is taken (ties: higher residual, then lowest index).
// Minimalized at the end.
std::optional<SensorCover> BgopGenerateCover(const CoverageMatrix& matrix,
                                             std::span<const double> residual,
                                             const std::vector<bool>& live);

std::optional<SensorCover> GenerateCover(Generator generator,
                                         const CoverageMatrix& matrix,
                                         std::span<const double> residual,
                                         const std::vector<bool>& live);

// Runs the greedy loop. Consecutive activations of the same cover are merged
// into one schedule entry. Sensors whose residual drops to `tolerance` or
// below leave the live set.
SolveResult RunGreedy(const CoverageMatrix& matrix,
                      std::span<const double> battery,
                      const GreedyConfig& config);

}  // namespace coverlife

#endif  // COVERLIFE_GREEDY_H_
