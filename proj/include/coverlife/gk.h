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

#ifndef COVERLIFE_GK_H_
#define COVERLIFE_GK_H_

#include <optional>
#include <span>
#include <stdexcept>

#include "coverlife/greedy.h"
#include "coverlife/model.h"

// Garg-Koenemann style multiplicative-weights approximation of the cover
// packing LP  max sum_p x_p  s.t.  sum_{p ∋ i} x_p <= b_i,  x >= 0.

namespace coverlife {

class NoSolution : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GkConfig {
  // Accuracy parameter, > 0. Values >= 1 are allowed so that large w values
  // still have a corresponding epsilon.
  double epsilon = 0.1;
  double tolerance = kTolerance;

  void Validate() const;
};

// Granularity w that a run with accuracy `epsilon` on `n` sensors
// corresponds to: w = eps * ln(1 + eps) / ln((1 + eps) * n). This equals
// the factor that scales raw GK lifetimes back into feasibility.
// Throws std::domain_error if (1 + eps) * n <= 1.
double WForEpsilon(double epsilon, int n);

// Inverse of WForEpsilon by bisection on (1e-9, 10]. Result reproduces `w`
// to within 1e-10. Throws NoSolution when w lies outside the bracket's range.
double EpsilonForW(double w, int n);

// Greedy weighted set cover: repeatedly adds the sensor minimizing
// cost / (number of still uncovered targets it covers), ties to the lower
// index, then minimalizes. Sensors with infinite cost are never used;
// returns nullopt if the finite-cost sensors cannot cover every target.
std::optional<SensorCover> MinCostCover(const CoverageMatrix& matrix,
                                        std::span<const double> costs);

// Lengths start at delta / b_i with delta = (1+eps) * ((1+eps) n)^(-1/eps).
// While the cheapest cover found is shorter than 1, it receives its
// bottleneck battery as raw lifetime and its members' lengths grow by
// (1 + eps * delta_x / b_i). Raw lifetimes are finally divided by
// log_{1+eps}((1+eps)/delta). Batteries are normalized by their maximum
// first so the scaling bound holds for any battery vector.
SolveResult RunGk(const CoverageMatrix& matrix, std::span<const double> battery,
                  const GkConfig& config);

}  // namespace coverlife

#endif  // COVERLIFE_GK_H_
