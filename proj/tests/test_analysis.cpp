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


#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <set>

#include "doctest.h"
#include "sketchauth/analysis.hpp"
#include "sketchauth/error.hpp"
#include "sketchauth/pipeline.hpp"
#include "support.hpp"

using namespace sketchauth;
using namespace sketchauth::testing;
using std::numbers::pi;

namespace {

const CanvasSpec kNorm{128, 128};

// Length-weighted linear split of each heading between its two nearest bin
// centres, bin b centred on b * 45 degrees.
std::array<double, 8> OracleHistogram(const Stroke& s) {
  std::array<double, 8> h{};
  double total = 0;
  for (size_t i = 1; i < s.points.size(); ++i) {
    const double dx = s.points[i].x - s.points[i - 1].x;
    const double dy = s.points[i].y - s.points[i - 1].y;
    const double len = std::sqrt(dx * dx + dy * dy);
    if (len == 0) continue;
    double deg = std::atan2(dy, dx) * 180 / pi;
    if (deg < 0) deg += 360;
    const int lo = static_cast<int>(deg / 45) % 8;
    const double w = (deg - 45 * std::floor(deg / 45)) / 45;
    h[static_cast<size_t>(lo)] += len * (1 - w);
    h[static_cast<size_t>((lo + 1) % 8)] += len * w;
    total += len;
  }
  for (double& v : h) v /= total;
  return h;
}

// Parallel hatch lines filling [x0, x0+side] x [y0, y0+side].
std::vector<Stroke> Hatch(double x0, double y0, double side, int lines) {
  std::vector<Stroke> out;
  for (int i = 0; i < lines; ++i) {
    const double y = y0 + side * (i + 0.5) / lines;
    out.push_back(Line(x0, y, x0 + side, y, 11));
  }
  return out;
}

// Shaded-region grouping from the rule alone: per-cell ink by fine sampling,
// a cell is dense when it has ink and its 3x3 neighbourhood mean density
// reaches the threshold, regions are 8-connected dense cells plus a one-cell
// rim, and a stroke belongs to a region holding 60% of its ink.
std::vector<std::set<size_t>> OracleGroups(const Sketch& sk, const AnalysisConfig& cfg) {
  const int cols = static_cast<int>(std::ceil(sk.canvas.width / cfg.cell));
  const int rows = static_cast<int>(std::ceil(sk.canvas.height / cfg.cell));
  std::vector<std::map<int, double>> ink(sk.strokes.size());
  std::map<int, double> all;
  for (size_t s = 0; s < sk.strokes.size(); ++s) {
    const auto& p = sk.strokes[s].points;
    for (size_t i = 1; i < p.size(); ++i) {
      const double len = Distance(p[i - 1], p[i]);
      const int steps = std::max(1, static_cast<int>(len * 200));
      for (int k = 0; k < steps; ++k) {
        const double u = (k + 0.5) / steps;
        const int cx = std::clamp(static_cast<int>((p[i - 1].x + u * (p[i].x - p[i - 1].x)) / cfg.cell), 0, cols - 1);
        const int cy = std::clamp(static_cast<int>((p[i - 1].y + u * (p[i].y - p[i - 1].y)) / cfg.cell), 0, rows - 1);
        ink[s][cy * cols + cx] += len / steps;
        all[cy * cols + cx] += len / steps;
      }
    }
  }
  const auto at = [&](int x, int y) {
    auto it = all.find(y * cols + x);
    return it == all.end() ? 0.0 : it->second;
  };
  std::vector<int> label(static_cast<size_t>(cols * rows), -1);
  std::vector<bool> dense(label.size(), false);
  for (int y = 0; y < rows; ++y) {
    for (int x = 0; x < cols; ++x) {
      double sum = 0;
      int n = 0;
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
          if (x + dx < 0 || y + dy < 0 || x + dx >= cols || y + dy >= rows) continue;
          sum += at(x + dx, y + dy);
          ++n;
        }
      }
      dense[static_cast<size_t>(y * cols + x)] =
          at(x, y) > 0 && cfg.pen_width * sum / (n * cfg.cell * cfg.cell) >= cfg.density_threshold;
    }
  }
  int comps = 0;
  const auto fill = [&](auto&& self, int x, int y, int c) -> void {
    if (x < 0 || y < 0 || x >= cols || y >= rows) return;
    const size_t i = static_cast<size_t>(y * cols + x);
    if (!dense[i] || label[i] != -1) return;
    label[i] = c;
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dx = -1; dx <= 1; ++dx) self(self, x + dx, y + dy, c);
    }
  };
  for (int y = 0; y < rows; ++y) {
    for (int x = 0; x < cols; ++x) {
      if (dense[static_cast<size_t>(y * cols + x)] && label[static_cast<size_t>(y * cols + x)] == -1) {
        fill(fill, x, y, comps++);
      }
    }
  }
  std::vector<std::set<size_t>> groups;
  for (int c = 0; c < comps; ++c) {
    std::set<int> region;
    for (int y = 0; y < rows; ++y) {
      for (int x = 0; x < cols; ++x) {
        bool in = label[static_cast<size_t>(y * cols + x)] == c;
        int best = -1;
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            if (x + dx < 0 || y + dy < 0 || x + dx >= cols || y + dy >= rows) continue;
            const int l = label[static_cast<size_t>((y + dy) * cols + x + dx)];
            if (l != -1 && (best == -1 || l < best)) best = l;
          }
        }
        if (!dense[static_cast<size_t>(y * cols + x)] && best == c) in = true;
        if (in) region.insert(y * cols + x);
      }
    }
    std::set<size_t> members;
    for (size_t s = 0; s < sk.strokes.size(); ++s) {
      double inside = 0, total = 0;
      for (auto [cell, v] : ink[s]) {
        total += v;
        if (region.count(cell)) inside += v;
      }
      if (total > 0 && inside >= cfg.membership_fraction * total) members.insert(s);
    }
    if (!members.empty()) groups.push_back(members);
  }
  return groups;
}

std::vector<std::set<size_t>> Groups(const std::vector<HyperStroke>& hs) {
  std::vector<std::set<size_t>> out;
  for (const HyperStroke& h : hs) out.emplace_back(h.member_stroke_ids.begin(), h.member_stroke_ids.end());
  return out;
}

}  // namespace

TEST_CASE("horizontal segment features") {
  const StrokeFeatures f = ExtractStrokeFeatures(Line(10, 64, 90, 64, 9), kNorm);
  CHECK(f.direction_histogram[0] == doctest::Approx(1.0).epsilon(1e-12));
  for (size_t b = 1; b < 8; ++b) CHECK(f.direction_histogram[b] == 0);
  CHECK(f.total_turning == 0);
  CHECK(f.arc_length == doctest::Approx(80));
  CHECK(f.centroid.x == doctest::Approx(50.0 / 128));
  CHECK(f.centroid.y == doctest::Approx(0.5));
  CHECK(f.closure == Closure::kOpen);
}

TEST_CASE("square path features") {
  const Stroke open{{P(20, 20), P(60, 20), P(60, 60), P(20, 60), P(20, 40)}};
  const Stroke open_sq{{P(20, 20), P(60, 20), P(60, 60), P(20, 60)}};
  const Stroke closed{{P(20, 20), P(60, 20), P(60, 60), P(20, 60), P(20, 20)}};
  const StrokeFeatures fo = ExtractStrokeFeatures(open_sq, kNorm);
  const StrokeFeatures fc = ExtractStrokeFeatures(closed, kNorm);
  CHECK(fo.total_turning == doctest::Approx(pi).epsilon(1e-12));
  CHECK(ExtractStrokeFeatures(open, kNorm).total_turning == doctest::Approx(3 * pi / 2).epsilon(1e-12));
  CHECK(fc.total_turning == doctest::Approx(2 * pi).epsilon(1e-12));
  CHECK(fc.closure == Closure::kClosed);
  for (size_t b : {0u, 2u, 4u, 6u}) CHECK(fc.direction_histogram[b] == doctest::Approx(0.25));
  for (size_t b : {1u, 3u, 5u, 7u}) CHECK(fc.direction_histogram[b] == 0);
  CHECK(fc.bbox_aspect == doctest::Approx(0.5));
}

TEST_CASE("histograms match per-segment binning") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    const Stroke s = RandomPolyline(rng, 2 + trial % 20);
    const StrokeFeatures f = ExtractStrokeFeatures(s, kNorm);
    const auto h = OracleHistogram(s);
    double sum = 0;
    for (size_t b = 0; b < 8; ++b) {
      CHECK(std::abs(f.direction_histogram[b] - h[b]) <= 1e-12);
      CHECK(f.direction_histogram[b] >= 0);
      sum += f.direction_histogram[b];
    }
    CHECK(std::abs(sum - 1) <= 1e-9);
  }
}

TEST_CASE("histograms ignore scale and translation") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Stroke s = RandomPolyline(rng, 8);
    Stroke t = s;
    const double k = 0.25 + trial * 0.05;
    for (Point& p : t.points) p = P(k * p.x - 3.5, k * p.y + 11);
    const auto a = ExtractStrokeFeatures(s, kNorm).direction_histogram;
    const auto b = ExtractStrokeFeatures(t, kNorm).direction_histogram;
    for (size_t i = 0; i < 8; ++i) CHECK(std::abs(a[i] - b[i]) <= 1e-12);
  }
}

TEST_CASE("bistroke basics") {
  const Stroke s = Line(10, 10, 80, 40, 5);
  const BiStrokeFeatures same = ExtractBiStrokeFeatures(s, s, kNorm);
  CHECK(same.centroid_offset_distance == 0);
  CHECK(same.centroid_offset_angle == 0);
  CHECK(same.length_ratio == 1);

  const BiStrokeFeatures plus =
      ExtractBiStrokeFeatures(Line(20, 64, 108, 64, 7), Line(64, 20, 64, 108, 7), kNorm);
  CHECK(plus.intersection_count == 1);
  CHECK(plus.length_ratio == doctest::Approx(1));

  const BiStrokeFeatures right =
      ExtractBiStrokeFeatures(Line(0, 0, 10, 0), Line(50, 0, 70, 0), kNorm);
  CHECK(right.centroid_offset_angle == doctest::Approx(0));
  CHECK(right.length_ratio == doctest::Approx(0.5));
  CHECK(right.centroid_offset_distance == doctest::Approx(55 / kNorm.Diagonal()));
}

TEST_CASE("intersections match the orientation test") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> jitter(0.013, 0.37);
  for (int trial = 0; trial < 500; ++trial) {
    Stroke a = RandomPolyline(rng, 2 + trial % 9), b = RandomPolyline(rng, 2 + trial % 7);
    for (Point& p : a.points) p.x += jitter(rng);
    CHECK(CountIntersections(a, b) == BruteForceIntersections(a, b));
    CHECK(CountIntersections(a, b) == CountIntersections(b, a));
  }
}

TEST_CASE("intersection at a shared vertex counts once") {
  // b crosses a exactly through a's interior vertex.
  const Stroke a{{P(0, 0), P(10, 10), P(20, 0)}};
  const Stroke b = Line(10, 0, 10, 20);
  CHECK(CountIntersections(a, b) == 1);
  CHECK(BruteForceIntersections(a, b) == 1);
}

TEST_CASE("single thin circle has no shading") {
  Stroke circle;
  for (int k = 0; k <= 200; ++k) {
    circle.points.push_back(P(64 + 50 * std::cos(2 * pi * k / 200), 64 + 50 * std::sin(2 * pi * k / 200)));
  }
  CHECK(DetectShadedRegions(Sketch{{circle}, kNorm}).empty());
}

TEST_CASE("one hatched box gives one hyper-stroke") {
  const Sketch sk{Hatch(50, 50, 20, 10), kNorm};
  const auto hs = DetectShadedRegions(sk);
  REQUIRE(hs.size() == 1);
  CHECK(hs[0].member_stroke_ids == std::vector<size_t>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
  CHECK(hs[0].fill_density > 0.3);
  CHECK(hs[0].fill_density <= 1);
  CHECK(Groups(hs) == OracleGroups(sk, AnalysisConfig{}));
}

TEST_CASE("two hatched boxes far apart give two hyper-strokes") {
  std::vector<Stroke> strokes = Hatch(10, 10, 20, 10);
  for (const Stroke& s : Hatch(90, 90, 20, 10)) strokes.push_back(s);
  strokes.push_back(Line(10, 100, 60, 120, 5));  // a free stroke
  const Sketch sk{strokes, kNorm};
  const auto hs = DetectShadedRegions(sk);
  REQUIRE(hs.size() == 2);
  CHECK(hs[0].member_stroke_ids.size() == 10);
  CHECK(hs[1].member_stroke_ids.size() == 10);
  CHECK(Groups(hs) == OracleGroups(sk, AnalysisConfig{}));
  const Hierarchy h = BuildHierarchy(sk, hs);
  CHECK(h.free_strokes == std::vector<size_t>{20});
}

TEST_CASE("shading grouping matches the flood-fill oracle on random layouts") {
  std::mt19937_64 rng(64);
  std::uniform_real_distribution<double> pos(4, 96);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Stroke> strokes;
    for (int box = 0; box < 1 + trial % 3; ++box) {
      for (const Stroke& s : Hatch(pos(rng), pos(rng), 16 + trial % 10, 8 + trial % 6)) {
        strokes.push_back(s);
      }
    }
    for (int k = 0; k < trial % 4; ++k) strokes.push_back(RandomPolyline(rng, 4, 5, 123));
    const Sketch sk{strokes, kNorm};
    CHECK(Groups(DetectShadedRegions(sk)) == OracleGroups(sk, AnalysisConfig{}));
  }
}

TEST_CASE("hierarchy partition") {
  const Sketch three{{Line(0, 0, 9, 9), Line(20, 0, 29, 9), Line(40, 0, 49, 9)}, kNorm};
  CHECK(BuildHierarchy(three, {}).free_strokes == std::vector<size_t>{0, 1, 2});
  HyperStroke h;
  h.member_stroke_ids = {2, 1};
  const Hierarchy one = BuildHierarchy(three, {h});
  CHECK(one.free_strokes == std::vector<size_t>{0});
  CHECK(one.hyper_strokes[0].member_stroke_ids == std::vector<size_t>{1, 2});

  HyperStroke clash;
  clash.member_stroke_ids = {1};
  try {
    BuildHierarchy(three, {h, clash});
    FAIL("expected InconsistentPartition");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInconsistentPartition);
  }

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Stroke> strokes = Hatch(20 + trial, 30, 20, 6 + trial % 5);
    for (int k = 0; k < 1 + trial % 5; ++k) strokes.push_back(RandomPolyline(rng, 5, 5, 123));
    const Sketch sk{strokes, kNorm};
    const Hierarchy hh = BuildHierarchy(sk, DetectShadedRegions(sk));
    std::vector<int> seen(strokes.size(), 0);
    for (const HyperStroke& x : hh.hyper_strokes) {
      CHECK_FALSE(x.member_stroke_ids.empty());
      for (size_t s : x.member_stroke_ids) ++seen[s];
    }
    for (size_t s : hh.free_strokes) ++seen[s];
    for (int c : seen) CHECK(c == 1);
  }
}

TEST_CASE("pair counts and determinism") {
  const Sketch one{{Line(0, 0, 50, 50)}, kNorm};
  FeatureSet f1 = ExtractFeatures(one, BuildHierarchy(one, {}));
  CHECK(f1.strokes.size() == 1);
  CHECK(f1.bistrokes.empty());

  std::mt19937_64 rng(12);
  Sketch four{{}, kNorm};
  for (int k = 0; k < 4; ++k) four.strokes.push_back(RandomPolyline(rng, 6));
  const FeatureSet f4 = ExtractFeatures(four, BuildHierarchy(four, {}));
  CHECK(f4.bistrokes.size() == 6);
  CHECK(ExtractFeatures(four, BuildHierarchy(four, {})) == f4);
  CHECK(PairIndex(0, 1, 4) == 0);
  CHECK(PairIndex(2, 3, 4) == 5);
  CHECK(PairIndex(1, 2, 4) == 3);
}

TEST_CASE("reversing the stroke list permutes features") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 30; ++trial) {
    Sketch s{{}, kNorm};
    const size_t k = 2 + trial % 4;
    for (size_t i = 0; i < k; ++i) s.strokes.push_back(RandomPolyline(rng, 5));
    Sketch r = s;
    std::reverse(r.strokes.begin(), r.strokes.end());
    const FeatureSet fs = ExtractFeatures(s, BuildHierarchy(s, {}));
    const FeatureSet fr = ExtractFeatures(r, BuildHierarchy(r, {}));
    for (size_t i = 0; i < k; ++i) CHECK(fs.strokes[i] == fr.strokes[k - 1 - i]);
    for (size_t i = 0; i < k; ++i) {
      for (size_t j = i + 1; j < k; ++j) {
        const BiStrokeFeatures& a = fs.bistrokes[PairIndex(i, j, k)];
        const BiStrokeFeatures& b = fr.bistrokes[PairIndex(k - 1 - j, k - 1 - i, k)];
        CHECK(a.centroid_offset_distance == doctest::Approx(b.centroid_offset_distance).epsilon(1e-12));
        CHECK(a.length_ratio == b.length_ratio);
        CHECK(a.intersection_count == b.intersection_count);
        CHECK(std::abs(std::remainder(a.centroid_offset_angle - b.centroid_offset_angle - pi, 2 * pi)) <= 1e-9);
      }
    }
  }
}

TEST_CASE("analysis of a drawing is deterministic") {
  std::mt19937_64 rng(19);
  const Sketch s = RandomSketch(rng, 4, 10);
  CHECK(Analyze(s).features == Analyze(s).features);
}
