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

#include "sketchauth/geometry.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "sketchauth/error.hpp"

namespace sketchauth {
namespace {

bool IsFinite(const Point& p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// Timestamps are all-or-none within a stroke, nonnegative and non-decreasing.
bool TimestampsUsable(const std::vector<Point>& points) {
  double last = 0;
  for (const Point& p : points) {
    if (!p.t || !std::isfinite(*p.t) || *p.t < 0 || *p.t < last) return false;
    last = *p.t;
  }
  return true;
}

}  // namespace

Sketch ValidateSketch(const Sketch& raw) {
  if (!(raw.canvas.width >= CanvasSpec::kMinSide) ||
      !(raw.canvas.height >= CanvasSpec::kMinSide)) {
    throw Error(ErrorCode::kInvalidArgument,
                "canvas must be at least 16x16, got " +
                    std::to_string(raw.canvas.width) + "x" +
                    std::to_string(raw.canvas.height));
  }
  Sketch out;
  out.canvas = raw.canvas;
  for (const Stroke& stroke : raw.strokes) {
    Stroke kept;
    kept.points.reserve(stroke.points.size());
    for (const Point& p : stroke.points) {
      if (!IsFinite(p)) continue;
      kept.points.push_back(
          Point{std::clamp(p.x, 0.0, raw.canvas.width),
                std::clamp(p.y, 0.0, raw.canvas.height), p.t});
    }
    if (kept.points.size() < 2) continue;
    if (!TimestampsUsable(kept.points)) {
      for (Point& p : kept.points) p.t.reset();
    }
    out.strokes.push_back(std::move(kept));
  }
  if (out.strokes.empty()) {
    throw Error(ErrorCode::kEmptySketch, "sketch has no stroke with 2+ points");
  }
  return out;
}

Box BoundingBox(std::span<const Point> points) {
  Box box{std::numeric_limits<double>::infinity(),
          std::numeric_limits<double>::infinity(),
          -std::numeric_limits<double>::infinity(),
          -std::numeric_limits<double>::infinity()};
  for (const Point& p : points) {
    box.min_x = std::min(box.min_x, p.x);
    box.min_y = std::min(box.min_y, p.y);
    box.max_x = std::max(box.max_x, p.x);
    box.max_y = std::max(box.max_y, p.y);
  }
  return box;
}

Box BoundingBox(const Sketch& sketch) {
  Box box = BoundingBox(std::span<const Point>{});
  for (const Stroke& s : sketch.strokes) {
    Box b = BoundingBox(s.points);
    box.min_x = std::min(box.min_x, b.min_x);
    box.min_y = std::min(box.min_y, b.min_y);
    box.max_x = std::max(box.max_x, b.max_x);
    box.max_y = std::max(box.max_y, b.max_y);
  }
  return box;
}

double ArcLength(std::span<const Point> points) {
  double total = 0;
  for (size_t i = 1; i < points.size(); ++i) {
    total += Distance(points[i - 1], points[i]);
  }
  return total;
}

Stroke ResampleStroke(const Stroke& stroke, int n) {
  if (n < 2) {
    throw Error(ErrorCode::kInvalidArgument, "resample count must be >= 2");
  }
  const std::vector<Point>& in = stroke.points;
  if (in.size() < 2) {
    throw Error(ErrorCode::kDegenerateStroke, "stroke has fewer than 2 points");
  }
  // Cumulative arc length at every input vertex.
  std::vector<double> cumulative(in.size(), 0.0);
  for (size_t i = 1; i < in.size(); ++i) {
    cumulative[i] = cumulative[i - 1] + Distance(in[i - 1], in[i]);
  }
  const double total = cumulative.back();
  if (!(total > 0)) {
    throw Error(ErrorCode::kDegenerateStroke, "stroke has zero arc length");
  }
  const bool timed = std::all_of(in.begin(), in.end(),
                                 [](const Point& p) { return p.t.has_value(); });

  Stroke out;
  out.points.reserve(static_cast<size_t>(n));
  out.points.push_back(in.front());
  size_t seg = 1;
  for (int k = 1; k < n - 1; ++k) {
    const double target = total * k / (n - 1);
    while (seg < in.size() - 1 && cumulative[seg] < target) ++seg;
    const double seg_len = cumulative[seg] - cumulative[seg - 1];
    const double u = seg_len > 0 ? (target - cumulative[seg - 1]) / seg_len : 0;
    const Point& a = in[seg - 1];
    const Point& b = in[seg];
    Point p{a.x + u * (b.x - a.x), a.y + u * (b.y - a.y), std::nullopt};
    if (timed) p.t = *a.t + u * (*b.t - *a.t);
    out.points.push_back(p);
  }
  out.points.push_back(in.back());
  return out;
}

}  // namespace sketchauth
