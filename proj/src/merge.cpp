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

#include "sketchauth/merge.hpp"

#include <algorithm>
#include <optional>
#include <tuple>

#include "sketchauth/error.hpp"

namespace sketchauth {
namespace {

constexpr double kJunctionEpsilon = 1e-6;

const Point& Endpoint(const Stroke& s, int end) {
  return end == 0 ? s.points.front() : s.points.back();
}

struct Candidate {
  double distance;
  size_t a;
  int end_a;
  size_t b;
  int end_b;

  auto Key() const { return std::tie(distance, a, end_a, b, end_b); }
};

std::optional<Candidate> ClosestPair(const std::vector<Stroke>& strokes,
                                     const MergeConfig& cfg) {
  std::vector<bool> open(strokes.size());
  for (size_t i = 0; i < strokes.size(); ++i) {
    open[i] = ClassifyStroke(strokes[i], cfg) == Closure::kOpen;
  }
  std::optional<Candidate> best;
  for (size_t a = 0; a < strokes.size(); ++a) {
    if (!open[a]) continue;
    for (size_t b = a + 1; b < strokes.size(); ++b) {
      if (!open[b]) continue;
      for (int ea = 0; ea < 2; ++ea) {
        for (int eb = 0; eb < 2; ++eb) {
          const Candidate c{
              Distance(Endpoint(strokes[a], ea), Endpoint(strokes[b], eb)), a,
              ea, b, eb};
          if (c.distance > cfg.eps_merge) continue;
          if (!best || c.Key() < best->Key()) best = c;
        }
      }
    }
  }
  return best;
}

// `first` ends at the junction and `second` starts at it.
Stroke Concatenate(Stroke first, const Stroke& second) {
  auto from = second.points.begin();
  if (Distance(first.points.back(), *from) < kJunctionEpsilon) ++from;
  first.points.insert(first.points.end(), from, second.points.end());
  return first;
}

Stroke Reversed(Stroke s) {
  std::reverse(s.points.begin(), s.points.end());
  return s;
}

}  // namespace

void MergeConfig::Validate() const {
  if (!(eps_closed > 0) || !(eps_merge > 0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "merge thresholds must be positive");
  }
}

Closure ClassifyStroke(const Stroke& stroke, double eps_closed) {
  if (stroke.points.size() < 2) return Closure::kOpen;
  return Distance(stroke.points.front(), stroke.points.back()) <= eps_closed
             ? Closure::kClosed
             : Closure::kOpen;
}

Sketch MergeStrokes(const Sketch& sketch, const MergeConfig& cfg) {
  cfg.Validate();
  Sketch out = sketch;
  std::vector<Stroke>& strokes = out.strokes;
  while (auto c = ClosestPair(strokes, cfg)) {
    const Stroke& a = strokes[c->a];
    const Stroke& b = strokes[c->b];
    Stroke joined;
    if (c->end_a == 1 && c->end_b == 0) {
      joined = Concatenate(a, b);
    } else if (c->end_a == 0 && c->end_b == 0) {
      joined = Concatenate(Reversed(a), b);
    } else if (c->end_a == 1 && c->end_b == 1) {
      joined = Concatenate(a, Reversed(b));
    } else {
      joined = Concatenate(b, a);
    }
    strokes[c->a] = std::move(joined);
    strokes.erase(strokes.begin() + static_cast<long>(c->b));
  }
  return out;
}

}  // namespace sketchauth
