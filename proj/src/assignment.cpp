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

#include "sketchauth/assignment.hpp"

#include <limits>

namespace sketchauth {
namespace {

constexpr double kUnreachable = -std::numeric_limits<double>::infinity();

ScoreMatrix Transposed(const ScoreMatrix& m) {
  ScoreMatrix t(m.cols(), m.rows());
  for (size_t r = 0; r < m.rows(); ++r) {
    for (size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
  }
  return t;
}

Assignment Flip(const Assignment& a, size_t original_rows) {
  Assignment out;
  out.row_to_col.assign(original_rows, std::nullopt);
  for (size_t c = 0; c < a.row_to_col.size(); ++c) {
    if (a.row_to_col[c]) out.row_to_col[*a.row_to_col[c]] = c;
  }
  return out;
}

double RowOrderedTotal(const ScoreMatrix& m, const Assignment& a) {
  double total = 0;
  for (size_t r = 0; r < a.row_to_col.size(); ++r) {
    if (a.row_to_col[r]) total += m(r, *a.row_to_col[r]);
  }
  return total;
}

// Subset DP with the column set as the mask; cols <= kExactAssignmentLimit.
Assignment SolveBySubsets(const ScoreMatrix& m) {
  const size_t rows = m.rows();
  const size_t cols = m.cols();
  const size_t masks = size_t{1} << cols;
  std::vector<double> best(masks, kUnreachable);
  best[0] = 0;
  // choice[r * masks + mask]: column taken by row r to reach `mask`, or -1.
  std::vector<int> choice(rows * masks, -1);
  for (size_t r = 0; r < rows; ++r) {
    std::vector<double> next = best;  // row r left unmatched
    for (size_t mask = 0; mask < masks; ++mask) {
      for (size_t c = 0; c < cols; ++c) {
        const size_t bit = size_t{1} << c;
        if (!(mask & bit) || best[mask ^ bit] == kUnreachable) continue;
        const double value = best[mask ^ bit] + m(r, c);
        if (value > next[mask]) {
          next[mask] = value;
          choice[r * masks + mask] = static_cast<int>(c);
        }
      }
    }
    best = std::move(next);
  }
  size_t final_mask = 0;
  for (size_t mask = 1; mask < masks; ++mask) {
    if (best[mask] > best[final_mask]) final_mask = mask;
  }
  Assignment out;
  out.row_to_col.assign(rows, std::nullopt);
  out.total = best[final_mask];
  size_t mask = final_mask;
  for (size_t r = rows; r-- > 0;) {
    const int c = choice[r * masks + mask];
    if (c >= 0) {
      out.row_to_col[r] = static_cast<size_t>(c);
      mask ^= size_t{1} << c;
    }
  }
  return out;
}

// Kuhn-Munkres with potentials on a rows <= cols matrix, maximizing.
Assignment SolveHungarian(const ScoreMatrix& m) {
  const size_t n = m.rows();
  const size_t k = m.cols();
  const double inf = std::numeric_limits<double>::infinity();
  // 1-based arrays; column 0 is the virtual start.
  std::vector<double> u(n + 1, 0), v(k + 1, 0);
  std::vector<size_t> owner(k + 1, 0), way(k + 1, 0);
  for (size_t i = 1; i <= n; ++i) {
    owner[0] = i;
    size_t j0 = 0;
    std::vector<double> minv(k + 1, inf);
    std::vector<bool> used(k + 1, false);
    do {
      used[j0] = true;
      const size_t i0 = owner[j0];
      double delta = inf;
      size_t j1 = 0;
      for (size_t j = 1; j <= k; ++j) {
        if (used[j]) continue;
        const double cur = -m(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (size_t j = 0; j <= k; ++j) {
        if (used[j]) {
          u[owner[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (owner[j0] != 0);
    do {
      const size_t j1 = way[j0];
      owner[j0] = owner[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  Assignment out;
  out.row_to_col.assign(n, std::nullopt);
  for (size_t j = 1; j <= k; ++j) {
    if (owner[j] != 0) out.row_to_col[owner[j] - 1] = j - 1;
  }
  return out;
}

}  // namespace

Assignment SolveMaxAssignment(const ScoreMatrix& scores) {
  if (scores.rows() == 0 || scores.cols() == 0) {
    Assignment empty;
    empty.row_to_col.assign(scores.rows(), std::nullopt);
    return empty;
  }
  if (scores.cols() <= kExactAssignmentLimit) return SolveBySubsets(scores);
  if (scores.rows() <= kExactAssignmentLimit) {
    Assignment a = Flip(SolveBySubsets(Transposed(scores)), scores.rows());
    a.total = RowOrderedTotal(scores, a);
    return a;
  }
  Assignment a = scores.rows() <= scores.cols()
                     ? SolveHungarian(scores)
                     : Flip(SolveHungarian(Transposed(scores)), scores.rows());
  a.total = RowOrderedTotal(scores, a);
  return a;
}

}  // namespace sketchauth
