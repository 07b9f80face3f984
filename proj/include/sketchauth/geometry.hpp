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

// Points, strokes and sketches on a fixed drawing canvas.
//
// Everything here is a plain value type. Coordinates are real-valued canvas
// units; smoothing and normalization produce sub-pixel positions even when the
// digitizer reports integers.

#ifndef SKETCHAUTH_GEOMETRY_HPP
#define SKETCHAUTH_GEOMETRY_HPP

#include <cmath>
#include <optional>
#include <span>
#include <vector>

namespace sketchauth {

struct Point {
  double x = 0;
  double y = 0;
  // Milliseconds since stroke start. Carried through but never used for
  // matching.
  std::optional<double> t;

  friend bool operator==(const Point&, const Point&) = default;
};

inline double Distance(const Point& a, const Point& b) {
  return std::hypot(b.x - a.x, b.y - a.y);
}

struct Stroke {
  std::vector<Point> points;

  friend bool operator==(const Stroke&, const Stroke&) = default;
};

struct CanvasSpec {
  static constexpr double kMinSide = 16;

  double width = 240;
  double height = 320;

  double Diagonal() const { return std::hypot(width, height); }

  friend bool operator==(const CanvasSpec&, const CanvasSpec&) = default;
};

struct Sketch {
  std::vector<Stroke> strokes;
  CanvasSpec canvas;

  friend bool operator==(const Sketch&, const Sketch&) = default;
};

struct Box {
  double min_x = 0;
  double min_y = 0;
  double max_x = 0;
  double max_y = 0;

  double Width() const { return max_x - min_x; }
  double Height() const { return max_y - min_y; }

  friend bool operator==(const Box&, const Box&) = default;
};

// Returns a sketch satisfying all Sketch invariants. Points outside the canvas
// are clamped to its boundary, non-finite points are removed, and strokes left
// with fewer than two points are dropped. Timestamps that are negative or
// decreasing are discarded for the whole stroke.
//
// Throws Error(kEmptySketch) if no stroke survives, and
// Error(kInvalidArgument) if the canvas is smaller than 16x16.
Sketch ValidateSketch(const Sketch& raw);

// Tight axis-aligned box over every point. Requires at least one point.
Box BoundingBox(const Sketch& sketch);
Box BoundingBox(std::span<const Point> points);

double ArcLength(std::span<const Point> points);
inline double ArcLength(const Stroke& stroke) { return ArcLength(stroke.points); }

// `n` points equally spaced by arc length. The first and last input points are
// reproduced exactly. Timestamps are interpolated when every input point has
// one.
//
// Throws Error(kDegenerateStroke) if the stroke has zero length and
// Error(kInvalidArgument) if n < 2.
Stroke ResampleStroke(const Stroke& stroke, int n);

}  // namespace sketchauth

#endif  // SKETCHAUTH_GEOMETRY_HPP
