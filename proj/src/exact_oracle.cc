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

#include "coverlife/exact_oracle.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace coverlife {

TooManyCovers::TooManyCovers(size_t limit)
    : std::runtime_error("more than " + std::to_string(limit) +
                         " minimal covers"),
      limit_(limit) {}

namespace {

class CoverEnumerator {
 public:
  CoverEnumerator(const CoverageMatrix& matrix, size_t limit)
      : matrix_(matrix),
        limit_(limit),
        multiplicity_(matrix.num_targets(), 0) {}

  std::set<SensorCover> Run() {
    Search();
    return std::move(found_);
  }

 private:
  void Search() {
    TargetIndex next = -1;
    for (TargetIndex j = 0; j < matrix_.num_targets(); ++j) {
      if (multiplicity_[j] == 0) {
        next = j;
        break;
      }
    }
    if (next < 0) {
      found_.insert(SensorCover(chosen_));
      if (found_.size() > limit_) throw TooManyCovers(limit_);
      return;
    }
    for (SensorIndex i : matrix_.SensorsOf(next)) {
      Push(i);
      if (AllChosenHavePrivateTarget()) Search();
      Pop(i);
    }
  }

  void Push(SensorIndex i) {
    chosen_.push_back(i);
    for (TargetIndex j : matrix_.TargetsOf(i)) ++multiplicity_[j];
  }
  void Pop(SensorIndex i) {
    chosen_.pop_back();
    for (TargetIndex j : matrix_.TargetsOf(i)) --multiplicity_[j];
  }

  // A member without a target of its own stays redundant in every
  // extension, so no minimal cover lies below this node.
  bool AllChosenHavePrivateTarget() const {
    for (SensorIndex i : chosen_) {
      const auto targets = matrix_.TargetsOf(i);
      if (std::none_of(targets.begin(), targets.end(),
                       [&](TargetIndex j) { return multiplicity_[j] == 1; })) {
        return false;
      }
    }
    return true;
  }

  const CoverageMatrix& matrix_;
  size_t limit_;
  std::vector<int> multiplicity_;
  std::vector<SensorIndex> chosen_;
  std::set<SensorCover> found_;
};

// Dense tableau for max c^T x s.t. A x <= b, x >= 0 with b >= 0, started
// from the all-slack basis.
class DenseSimplex {
 public:
  static constexpr double kPivotEps = 1e-11;

  DenseSimplex(int rows, int structural_cols)
      : rows_(rows),
        cols_(structural_cols + rows),
        structural_(structural_cols),
        tableau_(static_cast<size_t>(rows) * cols_, 0.0),
        rhs_(rows, 0.0),
        reduced_cost_(cols_, 0.0),
        basis_(rows) {
    for (int r = 0; r < rows_; ++r) {
      At(r, structural_ + r) = 1.0;
      basis_[r] = structural_ + r;
    }
  }

  double& At(int r, int c) {
    return tableau_[static_cast<size_t>(r) * cols_ + c];
  }
  double At(int r, int c) const {
    return tableau_[static_cast<size_t>(r) * cols_ + c];
  }
  void SetRhs(int r, double value) { rhs_[r] = value; }
  void SetObjective(int c, double value) { reduced_cost_[c] = value; }

  // Returns the structural part of an optimal vertex.
  std::vector<double> Solve() {
    const long long max_pivots = 1000000LL + 50LL * cols_;
    for (long long pivots = 0;; ++pivots) {
      if (pivots > max_pivots) {
        throw std::runtime_error("simplex exceeded its pivot budget");
      }
      // Bland: lowest-index improving column.
      int entering = -1;
      for (int c = 0; c < cols_; ++c) {
        if (reduced_cost_[c] > kPivotEps) {
          entering = c;
          break;
        }
      }
      if (entering < 0) break;
      // Bland: among minimal ratios, the lowest-index basic variable leaves.
      int leaving = -1;
      double best_ratio = 0.0;
      for (int r = 0; r < rows_; ++r) {
        const double a = At(r, entering);
        if (a <= kPivotEps) continue;
        const double ratio = rhs_[r] / a;
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leaving])) {
          leaving = r;
          best_ratio = ratio;
        }
      }
      if (leaving < 0) throw std::runtime_error("packing LP is unbounded");
      Pivot(leaving, entering);
    }
    std::vector<double> x(structural_, 0.0);
    for (int r = 0; r < rows_; ++r) {
      if (basis_[r] < structural_) x[basis_[r]] = rhs_[r];
    }
    return x;
  }

 private:
  void Pivot(int row, int col) {
    const double inv = 1.0 / At(row, col);
    for (int c = 0; c < cols_; ++c) At(row, c) *= inv;
    rhs_[row] *= inv;
    At(row, col) = 1.0;
    for (int r = 0; r < rows_; ++r) {
      if (r == row) continue;
      const double factor = At(r, col);
      if (factor == 0.0) continue;
      for (int c = 0; c < cols_; ++c) At(r, c) -= factor * At(row, c);
      rhs_[r] -= factor * rhs_[row];
      At(r, col) = 0.0;
    }
    const double factor = reduced_cost_[col];
    for (int c = 0; c < cols_; ++c) reduced_cost_[c] -= factor * At(row, c);
    reduced_cost_[col] = 0.0;
    basis_[row] = col;
  }

  int rows_;
  int cols_;
  int structural_;
  std::vector<double> tableau_;
  std::vector<double> rhs_;
  std::vector<double> reduced_cost_;
  std::vector<int> basis_;
};

}  // namespace

CoverSet EnumerateMinimalCovers(const CoverageMatrix& matrix, size_t limit) {
  std::set<SensorCover> found = CoverEnumerator(matrix, limit).Run();
  return CoverSet{{found.begin(), found.end()}};
}

LpSolution LpOptimalLifetime(std::span<const SensorCover> covers,
                             std::span<const double> battery) {
  const int rows = static_cast<int>(battery.size());
  const int cols = static_cast<int>(covers.size());
  DenseSimplex simplex(rows, cols);
  for (int r = 0; r < rows; ++r) simplex.SetRhs(r, battery[r]);
  for (int p = 0; p < cols; ++p) {
    simplex.SetObjective(p, 1.0);
    for (SensorIndex i : covers[p].members()) {
      if (i < 0 || i >= rows) {
        throw std::invalid_argument("cover references unknown sensor");
      }
      simplex.At(i, p) = 1.0;
    }
  }

  LpSolution solution;
  solution.weights = simplex.Solve();
  std::vector<double> usage(rows, 0.0);
  for (int p = 0; p < cols; ++p) {
    double& x = solution.weights[p];
    x = std::max(x, 0.0);
    solution.objective += x;
    for (SensorIndex i : covers[p].members()) usage[i] += x;
  }
  for (int r = 0; r < rows; ++r) {
    if (usage[r] > battery[r] + 1e-7) {
      throw std::runtime_error("simplex solution violates battery of sensor " +
                               std::to_string(r));
    }
  }
  return solution;
}

LpSolution ExactOptimum(const CoverageMatrix& matrix,
                        std::span<const double> battery, size_t limit) {
  const CoverSet covers = EnumerateMinimalCovers(matrix, limit);
  return LpOptimalLifetime(covers, battery);
}

}  // namespace coverlife
