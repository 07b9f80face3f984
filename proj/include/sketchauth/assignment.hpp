// Copyright 2026 The Sketchauth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SKETCHAUTH_ASSIGNMENT_HPP
#define SKETCHAUTH_ASSIGNMENT_HPP

#include <cstddef>
#include <optional>
#include <vector>

namespace sketchauth {

// Dense row-major score matrix.
class ScoreMatrix {
 public:
  ScoreMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  double& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
  double operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

 private:
  size_t rows_;
  size_t cols_;
  std::vector<double> data_;
};

struct Assignment {
  // row_to_col[r] is the column matched to row r, if any.
  std::vector<std::optional<size_t>> row_to_col;
  // Sum of matched scores, accumulated in ascending row order.
  double total = 0;
};

// Side length up to which the subset dynamic program is used.
inline constexpr size_t kExactAssignmentLimit = 12;

// One-to-one partial assignment maximizing the total of nonnegative scores.
// When either side has at most kExactAssignmentLimit entries a subset dynamic
// program over that side finds the optimum; its total is the largest
// row-ordered sum over all assignments, bit for bit. Larger problems use the
// Hungarian method, which is also optimal but may differ in the last ulp.
Assignment SolveMaxAssignment(const ScoreMatrix& scores);

}  // namespace sketchauth

#endif  // SKETCHAUTH_ASSIGNMENT_HPP
