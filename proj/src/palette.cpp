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

#include "sketchauth/palette.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace sketchauth {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCx = 120;
constexpr double kCy = 160;
// Digitizer sample spacing along a glyph, in pixels.
constexpr double kSpacing = 3.0;

// Densifies a polyline so consecutive samples are at most kSpacing apart.
Stroke Polyline(std::initializer_list<std::pair<double, double>> corners) {
  Stroke s;
  std::vector<std::pair<double, double>> c(corners);
  s.points.push_back(Point{c.front().first, c.front().second, std::nullopt});
  for (size_t i = 1; i < c.size(); ++i) {
    const double dx = c[i].first - c[i - 1].first;
    const double dy = c[i].second - c[i - 1].second;
    const int steps = std::max(1, static_cast<int>(std::ceil(std::hypot(dx, dy) / kSpacing)));
    for (int k = 1; k <= steps; ++k) {
      const double u = static_cast<double>(k) / steps;
      s.points.push_back(
          Point{c[i - 1].first + u * dx, c[i - 1].second + u * dy, std::nullopt});
    }
  }
  return s;
}

// Inserts samples so consecutive points are at most kSpacing apart.
Stroke Densify(const Stroke& in) {
  Stroke s;
  s.points.push_back(in.points.front());
  for (size_t i = 1; i < in.points.size(); ++i) {
    const Point& a = in.points[i - 1];
    const Point& b = in.points[i];
    const int steps =
        std::max(1, static_cast<int>(std::ceil(Distance(a, b) / kSpacing)));
    for (int k = 1; k <= steps; ++k) {
      const double u = static_cast<double>(k) / steps;
      s.points.push_back(Point{a.x + u * (b.x - a.x), a.y + u * (b.y - a.y), std::nullopt});
    }
  }
  return s;
}

// Ellipse arc from angle a0 to a1 (radians, canvas orientation).
Stroke Arc(double cx, double cy, double rx, double ry, double a0, double a1) {
  const double length = std::abs(a1 - a0) * 0.5 * (rx + ry);
  const int steps = std::max(2, static_cast<int>(std::ceil(length / kSpacing)));
  Stroke s;
  for (int k = 0; k <= steps; ++k) {
    const double a = a0 + (a1 - a0) * k / steps;
    s.points.push_back(Point{cx + rx * std::cos(a), cy + ry * std::sin(a), std::nullopt});
  }
  return s;
}

Sketch Glyph(std::vector<Stroke> strokes) {
  return Sketch{std::move(strokes), CanvasSpec{}};
}

Sketch Circle() { return Glyph({Arc(kCx, kCy, 80, 80, -kPi / 2, 1.5 * kPi)}); }

Sketch Triangle() {
  return Glyph({Polyline({{kCx, 90}, {40, 230}, {200, 230}, {kCx, 90}})});
}

Sketch Square() {
  return Glyph({Polyline({{45, 85}, {45, 235}, {195, 235}, {195, 85}, {45, 85}})});
}

Sketch Diamond() {
  return Glyph({Polyline({{kCx, 70}, {35, 160}, {kCx, 250}, {205, 160}, {kCx, 70}})});
}

Sketch Star() {
  Stroke s;
  std::vector<std::pair<double, double>> corners;
  for (int k = 0; k <= 5; ++k) {
    const double a = -kPi / 2 + k * 4 * kPi / 5;
    corners.push_back({kCx + 85 * std::cos(a), kCy + 85 * std::sin(a)});
  }
  s = Polyline({corners[0], corners[1], corners[2], corners[3], corners[4], corners[5]});
  return Glyph({s});
}

Sketch Plus() {
  return Glyph({Polyline({{kCx, 80}, {kCx, 240}}), Polyline({{40, kCy}, {200, kCy}})});
}

Sketch Cross() {
  return Glyph({Polyline({{50, 90}, {190, 230}}), Polyline({{190, 90}, {50, 230}})});
}

Sketch House() {
  return Glyph({Polyline({{55, 150}, {55, 245}, {185, 245}, {185, 150}, {55, 150}}),
                Polyline({{45, 150}, {kCx, 75}, {195, 150}, {45, 150}})});
}

Sketch Arrow() {
  return Glyph({Polyline({{35, kCy}, {195, kCy}}),
                Polyline({{150, 115}, {205, kCy}, {150, 205}})});
}

Sketch Heart() {
  Stroke s = Arc(85, 125, 38, 38, 0, -kPi);  // left lobe, drawn leftwards
  Stroke tail = Polyline({{47, 125}, {kCx, 235}, {193, 125}});
  s.points.insert(s.points.end(), tail.points.begin() + 1, tail.points.end());
  Stroke right = Arc(155, 125, 38, 38, 0, -kPi);
  for (size_t i = 1; i < right.points.size(); ++i) s.points.push_back(right.points[i]);
  return Glyph({s});
}

Sketch Moon() {
  // Outer rim down the left side, then the inner rim back up.
  Stroke s = Arc(kCx, kCy, 80, 80, -kPi / 2, -1.5 * kPi);
  Stroke inner = Arc(kCx, kCy, 40, 80, kPi / 2, 1.5 * kPi);
  s.points.insert(s.points.end(), inner.points.begin() + 1, inner.points.end());
  return Glyph({s});
}

Sketch Lightning() {
  return Glyph({Polyline({{150, 70}, {80, 165}, {155, 160}, {90, 255}})});
}

Sketch Spiral() {
  Stroke s;
  const double turns = 2.5;
  const int steps = 300;
  for (int k = 0; k <= steps; ++k) {
    const double u = static_cast<double>(k) / steps;
    const double a = u * turns * 2 * kPi;
    const double r = 8 + 75 * u;
    s.points.push_back(Point{kCx + r * std::cos(a), kCy + r * std::sin(a), std::nullopt});
  }
  return Glyph({s});
}

Sketch Wave() {
  Stroke s;
  const int steps = 120;
  for (int k = 0; k <= steps; ++k) {
    const double u = static_cast<double>(k) / steps;
    s.points.push_back(
        Point{35 + 170 * u, kCy + 45 * std::sin(u * 4 * kPi), std::nullopt});
  }
  return Glyph({s});
}

Sketch Smiley() {
  return Glyph({Arc(kCx, kCy, 80, 80, -kPi / 2, 1.5 * kPi),
                Polyline({{92, 120}, {92, 145}}),
                Polyline({{148, 120}, {148, 145}}),
                Arc(kCx, 175, 45, 30, 0.15 * kPi, 0.85 * kPi)});
}

Sketch ShadedBox() {
  // Outline, then one back-and-forth scribble filling it.
  std::vector<std::pair<double, double>> scribble;
  for (int k = 0; 112 + 2.5 * k <= 208; ++k) {
    const double y = 112 + 2.5 * k;
    if (k % 2 == 0) {
      scribble.push_back({72, y});
      scribble.push_back({168, y});
    } else {
      scribble.push_back({168, y});
      scribble.push_back({72, y});
    }
  }
  Stroke fill;
  for (const auto& [x, y] : scribble) fill.points.push_back(Point{x, y, std::nullopt});
  return Glyph({Polyline({{60, 100}, {60, 220}, {180, 220}, {180, 100}, {60, 100}}),
                Densify(fill)});
}

}  // namespace

ObjectPalette::ObjectPalette(std::vector<PaletteObject> objects)
    : objects_(std::move(objects)) {
  std::set<std::string_view> seen;
  for (const PaletteObject& o : objects_) {
    if (!seen.insert(o.id).second) {
      throw std::invalid_argument("duplicate palette object id: " + o.id);
    }
  }
}

const PaletteObject* ObjectPalette::Find(std::string_view id) const {
  for (const PaletteObject& o : objects_) {
    if (o.id == id) return &o;
  }
  return nullptr;
}

const ObjectPalette& BuiltinPalette() {
  static const ObjectPalette palette({
      {"circle", "Circle", Circle()},
      {"triangle", "Triangle", Triangle()},
      {"square", "Square", Square()},
      {"diamond", "Diamond", Diamond()},
      {"star", "Star", Star()},
      {"plus", "Plus sign", Plus()},
      {"cross", "Cross", Cross()},
      {"house", "House", House()},
      {"arrow", "Arrow", Arrow()},
      {"heart", "Heart", Heart()},
      {"moon", "Crescent moon", Moon()},
      {"lightning", "Lightning bolt", Lightning()},
      {"spiral", "Spiral", Spiral()},
      {"wave", "Wave", Wave()},
      {"smiley", "Smiley face", Smiley()},
      {"shaded_box", "Shaded box", ShadedBox()},
  });
  return palette;
}

}  // namespace sketchauth
