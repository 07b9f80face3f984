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

#ifndef SKETCHAUTH_MERGE_HPP
#define SKETCHAUTH_MERGE_HPP

#include "sketchauth/geometry.hpp"

namespace sketchauth {

enum class Closure { kOpen, kClosed };

// Thresholds are in normalized-canvas units and both inclusive.
struct MergeConfig {
  double eps_closed = 6.0;
  double eps_merge = 6.0;

  void Validate() const;

  friend bool operator==(const MergeConfig&, const MergeConfig&) = default;
};

Closure ClassifyStroke(const Stroke& stroke, double eps_closed);
inline Closure ClassifyStroke(const Stroke& stroke, const MergeConfig& cfg) {
  return ClassifyStroke(stroke, cfg.eps_closed);
}

// Joins broken open strokes until no pair of open-stroke endpoints (on distinct
// strokes) lies within eps_merge. Each round joins the globally closest pair;
// equal distances go to the lexicographically smallest
// (stroke, endpoint, stroke, endpoint) key, with endpoint 0 the start and 1 the
// end. The joined stroke takes the lower index. Joined ends are made adjacent
// by reversing at most one stroke: a's end to b's start gives a + b, b's end to
// a's start gives b + a, two starts give reverse(a) + b and two ends give
// a + reverse(b). One of the two junction points is dropped when they are
// closer than 1e-6. Strokes never merge with themselves, and closed
// strokes (including ones closed by an earlier join) never participate.
Sketch MergeStrokes(const Sketch& sketch, const MergeConfig& cfg = {});

}  // namespace sketchauth

#endif  // SKETCHAUTH_MERGE_HPP
