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

#include "coverlife/gk.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

namespace coverlife {

void GkConfig::Validate() const {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("epsilon must be positive, got " +
                                std::to_string(epsilon));
  }
  if (!(tolerance >= 0.0)) {
    throw std::invalid_argument("tolerance must be non-negative");
  }
}

double WForEpsilon(double epsilon, int n) {
  const double base = (1.0 + epsilon) * n;
  if (!(epsilon > 0.0) || !(base > 1.0)) {
    throw std::domain_error("w(epsilon) needs epsilon > 0 and (1+eps) n > 1");
  }
  return epsilon * std::log1p(epsilon) / std::log(base);
}

double EpsilonForW(double w, int n) {
  constexpr double kLow = 1e-9;
  constexpr double kHigh = 10.0;
  if (n < 1) throw std::domain_error("n must be >= 1");
  if (!(w > 0.0) || w > WForEpsilon(kHigh, n) || w < WForEpsilon(kLow, n)) {
    throw NoSolution("no epsilon in (1e-9, 10] maps to w = " +
                     std::to_string(w));
  }
  double lo = kLow;
  double hi = kHigh;
  // Bisect until the bracket stops shrinking.
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (WForEpsilon(mid, n) < w) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double f_lo = std::abs(WForEpsilon(lo, n) - w);
  const double f_hi = std::abs(WForEpsilon(hi, n) - w);
  return f_lo <= f_hi ? lo : hi;
}

std::optional<SensorCover> MinCostCover(const CoverageMatrix& matrix,
                                        std::span<const double> costs) {
  const int n = matrix.num_sensors();
  std::vector<bool> covered(matrix.num_targets(), false);
  int remaining = matrix.num_targets();
  std::vector<SensorIndex> chosen;
  while (remaining > 0) {
    SensorIndex best = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (SensorIndex i = 0; i < n; ++i) {
      if (!std::isfinite(costs[i])) continue;
      int fresh = 0;
      for (TargetIndex j : matrix.TargetsOf(i)) fresh += covered[j] ? 0 : 1;
      if (fresh == 0) continue;
      const double ratio = costs[i] / fresh;
      if (ratio < best_ratio) {
        best_ratio = ratio;
        best = i;
      }
    }
    if (best < 0) return std::nullopt;
    chosen.push_back(best);
    for (TargetIndex j : matrix.TargetsOf(best)) {
      if (!covered[j]) {
        covered[j] = true;
        --remaining;
      }
    }
  }
  return MinimalizeCover(matrix, SensorCover(std::move(chosen)));
}

SolveResult RunGk(const CoverageMatrix& matrix, std::span<const double> battery,
                  const GkConfig& config) {
  config.Validate();
  const int n = matrix.num_sensors();
  if (static_cast<int>(battery.size()) != n) {
    throw std::invalid_argument("battery length does not match sensor count");
  }
  SolveResult result;
  result.residual.assign(battery.begin(), battery.end());
  const double max_battery = *std::max_element(battery.begin(), battery.end());
  if (!(max_battery > config.tolerance)) return result;

  const double eps = config.epsilon;
  const double log_step = std::log1p(eps);
  const double log_delta = log_step - std::log((1.0 + eps) * n) / eps;
  // Lengths are tracked divided by delta, so the stopping threshold
  // "length < 1" becomes "scaled length < 1 / delta".
  const double threshold = std::exp(-log_delta);
  if (!std::isfinite(threshold)) {
    throw std::invalid_argument("epsilon " + std::to_string(eps) +
                                " is too small for double precision lengths");
  }
  const double scale = (log_step - log_delta) / log_step;
  const long long max_iterations =
      static_cast<long long>(n) * static_cast<long long>(std::ceil(scale)) + 1;

  std::vector<double> capacity(n);
  std::vector<double> length(n);
  for (SensorIndex i = 0; i < n; ++i) {
    capacity[i] = battery[i] / max_battery;
    length[i] = capacity[i] > config.tolerance
                    ? 1.0 / capacity[i]
                    : std::numeric_limits<double>::infinity();
  }

  std::map<SensorCover, size_t> entry_of;
  std::vector<ScheduleEntry> raw;
  for (long long iter = 0; iter < max_iterations; ++iter) {
    std::optional<SensorCover> cover = MinCostCover(matrix, length);
    if (!cover) break;
    double cover_length = 0.0;
    double bottleneck = std::numeric_limits<double>::infinity();
    for (SensorIndex i : cover->members()) {
      cover_length += length[i];
      bottleneck = std::min(bottleneck, capacity[i]);
    }
    if (cover_length >= threshold) break;
    ++result.covers_generated;
    for (SensorIndex i : cover->members()) {
      length[i] *= 1.0 + eps * bottleneck / capacity[i];
    }
    auto [it, inserted] = entry_of.try_emplace(*cover, raw.size());
    if (inserted) raw.push_back({std::move(*cover), 0.0});
    raw[it->second].lifetime += bottleneck;
  }

  for (ScheduleEntry& entry : raw) {
    entry.lifetime = entry.lifetime / scale * max_battery;
    for (SensorIndex i : entry.cover.members()) {
      result.residual[i] -= entry.lifetime;
    }
  }
  result.schedule.entries = std::move(raw);
  return result;
}

}  // namespace coverlife
