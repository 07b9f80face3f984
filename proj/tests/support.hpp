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

// Generators and independent reference implementations shared by the unit
// tests and the acceptance runner. Nothing here calls into the code it checks.

#ifndef SKETCHAUTH_TESTS_SUPPORT_HPP
#define SKETCHAUTH_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "sketchauth/geometry.hpp"
#include "sketchauth/record.hpp"

namespace sketchauth::testing {

inline Point P(double x, double y) { return Point{x, y, std::nullopt}; }

inline Stroke Line(double x0, double y0, double x1, double y1, int n = 2) {
  Stroke s;
  for (int i = 0; i < n; ++i) {
    const double u = static_cast<double>(i) / (n - 1);
    s.points.push_back(P(x0 + u * (x1 - x0), y0 + u * (y1 - y0)));
  }
  return s;
}

inline Sketch OneStroke(Stroke s, CanvasSpec canvas = {}) {
  return Sketch{{std::move(s)}, canvas};
}

// Plain polyline length, summed front to back.
inline double PolylineLength(const std::vector<Point>& pts) {
  double total = 0;
  for (size_t i = 1; i < pts.size(); ++i) {
    total += std::sqrt((pts[i].x - pts[i - 1].x) * (pts[i].x - pts[i - 1].x) +
                       (pts[i].y - pts[i - 1].y) * (pts[i].y - pts[i - 1].y));
  }
  return total;
}

// Point at arc length `s` along the polyline, found by walking segments.
inline Point WalkTo(const std::vector<Point>& pts, double s) {
  double done = 0;
  for (size_t i = 1; i < pts.size(); ++i) {
    const double seg = std::hypot(pts[i].x - pts[i - 1].x, pts[i].y - pts[i - 1].y);
    if (done + seg >= s && seg > 0) {
      const double u = (s - done) / seg;
      return P(pts[i - 1].x + u * (pts[i].x - pts[i - 1].x),
               pts[i - 1].y + u * (pts[i].y - pts[i - 1].y));
    }
    done += seg;
  }
  return pts.back();
}

// Random open polyline inside [lo, hi]^2.
inline Stroke RandomPolyline(std::mt19937_64& rng, int points, double lo = 10,
                             double hi = 110) {
  std::uniform_real_distribution<double> u(lo, hi);
  Stroke s;
  for (int i = 0; i < points; ++i) s.points.push_back(P(u(rng), u(rng)));
  return s;
}

inline Sketch RandomSketch(std::mt19937_64& rng, int max_strokes, int max_points,
                           CanvasSpec canvas = {}) {
  std::uniform_int_distribution<int> ns(1, max_strokes), np(2, max_points);
  Sketch sk{{}, canvas};
  const int n = ns(rng);
  for (int i = 0; i < n; ++i) {
    sk.strokes.push_back(RandomPolyline(rng, np(rng), 10, std::min(canvas.width, canvas.height) - 10));
  }
  return sk;
}

// Adds per-point Gaussian noise of `sigma_norm` normalized units (the drawing's
// longer side maps to 112 units after normalization).
inline Sketch Jitter(const Sketch& s, double sigma_norm, std::mt19937_64& rng) {
  double min_x = 1e300, min_y = 1e300, max_x = -1e300, max_y = -1e300;
  for (const Stroke& st : s.strokes) {
    for (const Point& p : st.points) {
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, p.y);
      max_y = std::max(max_y, p.y);
    }
  }
  const double extent = std::max(max_x - min_x, max_y - min_y);
  std::normal_distribution<double> n(0, sigma_norm * extent / 112.0);
  Sketch out = s;
  for (Stroke& st : out.strokes) {
    for (Point& p : st.points) {
      p.x += n(rng);
      p.y += n(rng);
    }
  }
  return out;
}

// Strokes whose endpoints sit near a few shared hubs, so merges happen.
inline Sketch HubSketch(std::mt19937_64& rng, int strokes, double noise) {
  std::uniform_real_distribution<double> u(10, 118), n(-noise, noise);
  std::uniform_int_distribution<int> pts(2, 6);
  std::vector<Point> hubs;
  for (int i = 0; i < 4; ++i) hubs.push_back(P(u(rng), u(rng)));
  std::uniform_int_distribution<size_t> pick(0, hubs.size() - 1);
  Sketch sk{{}, CanvasSpec{128, 128}};
  for (int s = 0; s < strokes; ++s) {
    const Point a = hubs[pick(rng)];
    Point b = hubs[pick(rng)];
    if (Distance(a, b) < 20) b = P(u(rng), u(rng));
    Stroke st;
    const int k = pts(rng);
    for (int i = 0; i < k; ++i) {
      const double t = static_cast<double>(i) / (k - 1);
      st.points.push_back(P(a.x + t * (b.x - a.x) + (i > 0 && i < k - 1 ? n(rng) * 3 : 0),
                            a.y + t * (b.y - a.y)));
    }
    st.points.front().x += n(rng);
    st.points.front().y += n(rng);
    st.points.back().x += n(rng);
    st.points.back().y += n(rng);
    sk.strokes.push_back(st);
  }
  return sk;
}

// Greedy-closest merge written from the rule alone: collect every candidate
// (distance, a, end_a, b, end_b) over distinct open strokes, sort, join the
// first, repeat.
inline std::vector<Stroke> MergeOracle(std::vector<Stroke> strokes, double eps_closed,
                                       double eps_merge) {
  const auto end_point = [](const Stroke& s, int e) {
    return e == 0 ? s.points.front() : s.points.back();
  };
  const auto dist = [](const Point& a, const Point& b) {
    return std::sqrt((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y));
  };
  for (;;) {
    std::vector<std::tuple<double, size_t, int, size_t, int>> cands;
    for (size_t a = 0; a < strokes.size(); ++a) {
      if (dist(strokes[a].points.front(), strokes[a].points.back()) <= eps_closed) continue;
      for (size_t b = a + 1; b < strokes.size(); ++b) {
        if (dist(strokes[b].points.front(), strokes[b].points.back()) <= eps_closed) continue;
        for (int ea = 0; ea < 2; ++ea) {
          for (int eb = 0; eb < 2; ++eb) {
            const double d = dist(end_point(strokes[a], ea), end_point(strokes[b], eb));
            if (d <= eps_merge) cands.emplace_back(d, a, ea, b, eb);
          }
        }
      }
    }
    if (cands.empty()) return strokes;
    std::sort(cands.begin(), cands.end());
    const auto [d, a, ea, b, eb] = cands.front();
    std::vector<Point> first = strokes[a].points, second = strokes[b].points;
    if (ea == 0 && eb == 1) std::swap(first, second);       // b + a
    if (ea == 0 && eb == 0) std::reverse(first.begin(), first.end());
    if (ea == 1 && eb == 1) std::reverse(second.begin(), second.end());
    size_t skip = dist(first.back(), second.front()) < 1e-6 ? 1 : 0;
    first.insert(first.end(), second.begin() + static_cast<long>(skip), second.end());
    strokes[a].points = first;
    strokes.erase(strokes.begin() + static_cast<long>(b));
  }
}

// Best row-ordered total over every partial one-to-one assignment, by
// enumerating all injections of the rows into columns-or-nothing.
inline double BruteForceAssignment(const std::vector<std::vector<double>>& s) {
  const size_t rows = s.size();
  const size_t cols = rows ? s[0].size() : 0;
  double best = 0;
  std::vector<int> pick(rows, -1);
  std::vector<bool> used(cols, false);
  const auto rec = [&](auto&& self, size_t r) -> void {
    if (r == rows) {
      double total = 0;
      for (size_t i = 0; i < rows; ++i) {
        if (pick[i] >= 0) total += s[i][static_cast<size_t>(pick[i])];
      }
      best = std::max(best, total);
      return;
    }
    pick[r] = -1;
    self(self, r + 1);
    for (size_t c = 0; c < cols; ++c) {
      if (used[c]) continue;
      used[c] = true;
      pick[r] = static_cast<int>(c);
      self(self, r + 1);
      used[c] = false;
    }
    pick[r] = -1;
  };
  rec(rec, 0);
  return best;
}

// Proper segment intersection count by the orientation test, every segment
// pair, half-open except the last segment of each stroke.
inline int BruteForceIntersections(const Stroke& a, const Stroke& b) {
  const auto orient = [](const Point& p, const Point& q, const Point& r) {
    const double v = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return (v > 0) - (v < 0);
  };
  const auto on_seg = [](const Point& p, const Point& q, const Point& r) {
    return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) &&
           std::min(p.y, q.y) <= r.y && r.y <= std::max(p.y, q.y);
  };
  int count = 0;
  for (size_t i = 0; i + 1 < a.points.size(); ++i) {
    for (size_t j = 0; j + 1 < b.points.size(); ++j) {
      const Point &p1 = a.points[i], &p2 = a.points[i + 1];
      const Point &q1 = b.points[j], &q2 = b.points[j + 1];
      const int o1 = orient(p1, p2, q1), o2 = orient(p1, p2, q2);
      const int o3 = orient(q1, q2, p1), o4 = orient(q1, q2, p2);
      bool hit = false;
      if (o1 != o2 && o3 != o4) hit = true;
      if (o1 == 0 && on_seg(p1, p2, q1)) hit = true;
      if (o2 == 0 && on_seg(p1, p2, q2)) hit = true;
      if (o3 == 0 && on_seg(q1, q2, p1)) hit = true;
      if (o4 == 0 && on_seg(q1, q2, p2)) hit = true;
      if (!hit) continue;
      // Half-open: a crossing exactly at a segment's far end belongs to the
      // next segment, unless this is the stroke's last segment.
      const bool last_a = i + 2 == a.points.size();
      const bool last_b = j + 2 == b.points.size();
      if (!last_a && orient(q1, q2, p2) == 0 && on_seg(q1, q2, p2)) continue;
      if (!last_b && orient(p1, p2, q2) == 0 && on_seg(p1, p2, q2)) continue;
      ++count;
    }
  }
  return count;
}

// Record with random contents in every field, including awkward doubles, for
// serialization round trips.
inline UserRecord RandomRecord(std::mt19937_64& rng, const std::string& username) {
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  std::uniform_int_distribution<int> small(0, 6);
  std::uniform_int_distribution<int> byte(0, 255);
  const double awkward[] = {0.1, 1.0 / 3, 1e-300, 4.9e-324, 123456789.123456789, -0.0,
                            std::numbers::pi};
  const auto value = [&] {
    return small(rng) == 0 ? awkward[static_cast<size_t>(small(rng))] : u(rng);
  };
  UserRecord r;
  r.username = username;
  r.created_at = static_cast<std::int64_t>(rng() >> 2);
  r.password.iterations = static_cast<std::uint32_t>(1 + rng() % 200000);
  for (int i = 0; i < 16; ++i) r.password.salt.push_back(static_cast<std::uint8_t>(byte(rng)));
  for (int i = 0; i < 32; ++i) r.password.digest.push_back(static_cast<std::uint8_t>(byte(rng)));
  const int n = 3 + small(rng) % 3;
  for (int t = 0; t < n; ++t) {
    Template tpl;
    tpl.object_id = "obj" + std::to_string(small(rng));
    const size_t k = 1 + static_cast<size_t>(small(rng));
    for (size_t i = 0; i < k; ++i) {
      StrokeFeatures f;
      f.arc_length = value();
      for (double& h : f.direction_histogram) h = value();
      f.total_turning = value();
      f.net_turning = value();
      f.centroid = P(value(), value());
      f.bbox_aspect = value();
      f.closure = small(rng) % 2 ? Closure::kClosed : Closure::kOpen;
      tpl.features.strokes.push_back(f);
      Stroke st;
      const bool timed = small(rng) % 2;
      for (int j = 0; j < 2 + small(rng); ++j) {
        Point p = P(value(), value());
        if (timed) p.t = value();
        st.points.push_back(p);
      }
      tpl.sketch.strokes.push_back(st);
    }
    for (size_t i = 0; i < k * (k - 1) / 2; ++i) {
      tpl.features.bistrokes.push_back(
          BiStrokeFeatures{value(), value(), value(), small(rng)});
    }
    for (int h = 0; h < small(rng) % 3; ++h) {
      tpl.features.hyper_strokes.push_back(
          HyperStrokeFeatures{value(), value(), P(value(), value()), 1 + small(rng)});
    }
    for (size_t i = 0; i < k; i += 2) tpl.features.free_strokes.push_back(i);
    tpl.sketch.canvas = CanvasSpec{128, 128};
    r.templates.push_back(std::move(tpl));
  }
  return r;
}

// Temporary directory removed on scope exit.
class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("sketchauth-test-" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace sketchauth::testing

#endif  // SKETCHAUTH_TESTS_SUPPORT_HPP
