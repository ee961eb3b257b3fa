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

#ifndef COVERLIFE_EXACT_ORACLE_H_
#define COVERLIFE_EXACT_ORACLE_H_

#include <span>
#include <stdexcept>
#include <vector>

#include "coverlife/model.h"

// Exact optimum for small instances: materialize every minimal cover as an
// LP column and solve the packing LP with a dense simplex.

namespace coverlife {

inline constexpr size_t kDefaultCoverLimit = 100000;

class TooManyCovers : public std::runtime_error {
 public:
  explicit TooManyCovers(size_t limit);
  size_t limit() const { return limit_; }

 private:
  size_t limit_;
};

// Every minimal cover of the matrix, sorted lexicographically.
struct CoverSet {
  std::vector<SensorCover> covers;
};

struct LpSolution {
  double objective = 0.0;
  // weights[p] is the lifetime of covers[p].
  std::vector<double> weights;
};

// Depth-first search branching on the lowest-index uncovered target.
// Branches where an earlier pick has become redundant are pruned.
// Throws TooManyCovers once more than `limit` covers are found.
CoverSet EnumerateMinimalCovers(const CoverageMatrix& matrix,
                                size_t limit = kDefaultCoverLimit);

// Solves max sum x_p s.t. sum_{p ∋ i} x_p <= battery[i], x >= 0 over the
// given columns with Bland's rule. Weights are clamped at zero and checked
// against the constraints (1e-7) before returning; a failed check throws
// std::runtime_error.
LpSolution LpOptimalLifetime(std::span<const SensorCover> covers,
                             std::span<const double> battery);
inline LpSolution LpOptimalLifetime(const CoverSet& covers,
                                    std::span<const double> battery) {
  return LpOptimalLifetime(std::span<const SensorCover>(covers.covers),
                           battery);
}

LpSolution ExactOptimum(const CoverageMatrix& matrix,
                        std::span<const double> battery,
                        size_t limit = kDefaultCoverLimit);

}  // namespace coverlife

#endif  // COVERLIFE_EXACT_ORACLE_H_
