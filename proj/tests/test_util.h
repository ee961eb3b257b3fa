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

#ifndef COVERLIFE_TESTS_TEST_UTIL_H_
#define COVERLIFE_TESTS_TEST_UTIL_H_

// Fixtures and brute-force oracles shared by the unit and acceptance tests.
// Nothing here calls into the code paths it is used to check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "coverlife/instance_gen.h"
#include "coverlife/model.h"
#include "coverlife/splitmix.h"

namespace coverlife::testing {

// s0:{t0,t1}, s1:{t1,t2}, s2:{t0,t2}; every target is covered twice.
inline CoverageMatrix TriangleMatrix() {
  return CoverageMatrix(3, {{0, 1}, {1, 2}, {0, 2}});
}

// Geometric realization of the triangle: targets at the midpoints of an
// equilateral triangle of side 100 whose corners hold the sensors, range 60.
inline Instance TriangleInstance() {
  const double h = 100.0 * std::sqrt(3.0) / 2.0;
  Instance instance;
  instance.sensors = {{0.0, 0.0}, {100.0, 0.0}, {50.0, h}};
  // Midpoints of s0-s2, s0-s1 and s1-s2, matching TriangleMatrix.
  instance.targets = {{25.0, h / 2}, {50.0, 0.0}, {75.0, h / 2}};
  instance.range = 60.0;
  instance.battery = {1.0, 1.0, 1.0};
  return instance;
}

// Random dense bit matrix with every column non-empty.
struct RandomBits {
  int n = 0;
  int m = 0;
  std::vector<std::vector<bool>> bits;  // bits[i][j]

  CoverageMatrix ToMatrix() const {
    std::vector<std::vector<TargetIndex>> rows(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < m; ++j) {
        if (bits[i][j]) rows[i].push_back(j);
      }
    }
    return CoverageMatrix(m, rows);
  }
};

inline RandomBits MakeRandomBits(SplitMix64& rng, int n, int m,
                                 double density) {
  RandomBits r{n, m, std::vector<std::vector<bool>>(n, std::vector<bool>(m))};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) r.bits[i][j] = rng.NextUniform() < density;
  }
  for (int j = 0; j < m; ++j) {
    bool any = false;
    for (int i = 0; i < n; ++i) any = any || r.bits[i][j];
    if (!any) r.bits[rng.Next() % n][j] = true;
  }
  return r;
}

// Column scan over the raw bits.
inline bool BruteIsCover(const RandomBits& r, std::uint32_t mask) {
  for (int j = 0; j < r.m; ++j) {
    bool hit = false;
    for (int i = 0; i < r.n; ++i) {
      if ((mask >> i & 1u) && r.bits[i][j]) hit = true;
    }
    if (!hit) return false;
  }
  return true;
}

// All minimal covers by scanning every subset.
inline std::vector<SensorCover> BruteMinimalCovers(const RandomBits& r) {
  std::vector<SensorCover> out;
  for (std::uint32_t mask = 1; mask < (1u << r.n); ++mask) {
    if (!BruteIsCover(r, mask)) continue;
    bool minimal = true;
    for (int i = 0; i < r.n && minimal; ++i) {
      if ((mask >> i & 1u) && BruteIsCover(r, mask & ~(1u << i))) {
        minimal = false;
      }
    }
    if (!minimal) continue;
    std::vector<SensorIndex> members;
    for (int i = 0; i < r.n; ++i) {
      if (mask >> i & 1u) members.push_back(i);
    }
    out.emplace_back(members);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Optimum of max sum x s.t. A x <= b, x >= 0 by enumerating vertices: every
// choice of k tight constraints among the n battery rows and k sign rows is
// solved with Gaussian elimination and kept if feasible. Exponential; meant
// for k <= 5 columns.
inline double VertexEnumerationOptimum(const std::vector<SensorCover>& covers,
                                       const std::vector<double>& battery) {
  const int k = static_cast<int>(covers.size());
  const int n = static_cast<int>(battery.size());
  // Constraint rows: first n battery rows (a . x <= b), then k rows -x <= 0.
  std::vector<std::vector<double>> a(n + k, std::vector<double>(k, 0.0));
  std::vector<double> b(n + k, 0.0);
  for (int p = 0; p < k; ++p) {
    for (SensorIndex i : covers[p].members()) a[i][p] = 1.0;
  }
  for (int i = 0; i < n; ++i) b[i] = battery[i];
  for (int p = 0; p < k; ++p) a[n + p][p] = -1.0;

  const int rows = n + k;
  double best = -std::numeric_limits<double>::infinity();
  std::vector<int> pick(k);
  // Iterate over k-subsets of rows via bitmask.
  for (std::uint32_t mask = 0; mask < (1u << rows); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    int c = 0;
    for (int r = 0; r < rows; ++r) {
      if (mask >> r & 1u) pick[c++] = r;
    }
    std::vector<std::vector<double>> sys(k, std::vector<double>(k + 1));
    for (int r = 0; r < k; ++r) {
      for (int col = 0; col < k; ++col) sys[r][col] = a[pick[r]][col];
      sys[r][k] = b[pick[r]];
    }
    bool singular = false;
    for (int col = 0; col < k && !singular; ++col) {
      int piv = col;
      for (int r = col + 1; r < k; ++r) {
        if (std::abs(sys[r][col]) > std::abs(sys[piv][col])) piv = r;
      }
      if (std::abs(sys[piv][col]) < 1e-12) {
        singular = true;
        break;
      }
      std::swap(sys[piv], sys[col]);
      for (int r = 0; r < k; ++r) {
        if (r == col) continue;
        const double f = sys[r][col] / sys[col][col];
        for (int cc = col; cc <= k; ++cc) sys[r][cc] -= f * sys[col][cc];
      }
    }
    if (singular) continue;
    std::vector<double> x(k);
    for (int r = 0; r < k; ++r) x[r] = sys[r][k] / sys[r][r];
    bool feasible = true;
    for (int r = 0; r < rows && feasible; ++r) {
      double lhs = 0.0;
      for (int col = 0; col < k; ++col) lhs += a[r][col] * x[col];
      if (lhs > b[r] + 1e-9) feasible = false;
    }
    if (!feasible) continue;
    double objective = 0.0;
    for (double v : x) objective += v;
    best = std::max(best, objective);
  }
  return best;
}

// Small random geometric instance where every target has at least
// `min_coverage` covering sensors. Seeds are tried in sequence from `seed`.
inline Instance SmallDenseInstance(std::uint64_t seed, int n, int m,
                                   int min_coverage) {
  for (std::uint64_t s = seed;; ++s) {
    GenConfig config;
    config.num_sensors = n;
    config.num_targets = m;
    config.sensor_area = 100.0;
    config.target_area = 60.0;
    config.range = 45.0;
    config.seed = s;
    Instance instance = Generate(config);
    const CoverageMatrix matrix = BuildCoverageMatrix(instance);
    bool ok = true;
    for (int j = 0; j < m; ++j) {
      ok = ok && static_cast<int>(matrix.SensorsOf(j).size()) >= min_coverage;
    }
    if (ok) return instance;
  }
}

}  // namespace coverlife::testing

#endif  // COVERLIFE_TESTS_TEST_UTIL_H_
