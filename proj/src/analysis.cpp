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

#include "sketchauth/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sketchauth/error.hpp"

namespace sketchauth {
namespace {

constexpr double kPi = std::numbers::pi;

double WrapAngle(double a) {
  a = std::remainder(a, 2 * kPi);
  return a;
}

double Cross(double ax, double ay, double bx, double by) {
  return ax * by - ay * bx;
}

// Ink length per grid cell, one layer per stroke.
class InkGrid {
 public:
  InkGrid(const Sketch& sketch, double cell)
      : cell_(cell),
        cols_(std::max(1, static_cast<int>(std::ceil(sketch.canvas.width / cell)))),
        rows_(std::max(1, static_cast<int>(std::ceil(sketch.canvas.height / cell)))),
        per_stroke_(sketch.strokes.size(),
                    std::vector<double>(static_cast<size_t>(cols_ * rows_), 0.0)) {
    for (size_t s = 0; s < sketch.strokes.size(); ++s) {
      const auto& pts = sketch.strokes[s].points;
      for (size_t i = 1; i < pts.size(); ++i) Deposit(s, pts[i - 1], pts[i]);
    }
  }

  int cols() const { return cols_; }
  int rows() const { return rows_; }
  size_t cells() const { return static_cast<size_t>(cols_ * rows_); }
  double cell() const { return cell_; }
  size_t strokes() const { return per_stroke_.size(); }
  double Ink(size_t stroke, size_t cell) const { return per_stroke_[stroke][cell]; }

  double TotalInk(size_t cell) const {
    double sum = 0;
    for (const auto& layer : per_stroke_) sum += layer[cell];
    return sum;
  }

 private:
  void Deposit(size_t stroke, const Point& a, const Point& b) {
    const double len = Distance(a, b);
    if (!(len > 0)) return;
    const int pieces = std::max(1, static_cast<int>(std::ceil(len / (cell_ / 8))));
    const double piece = len / pieces;
    for (int k = 0; k < pieces; ++k) {
      const double u = (k + 0.5) / pieces;
      const double x = a.x + u * (b.x - a.x);
      const double y = a.y + u * (b.y - a.y);
      const int cx = std::clamp(static_cast<int>(std::floor(x / cell_)), 0, cols_ - 1);
      const int cy = std::clamp(static_cast<int>(std::floor(y / cell_)), 0, rows_ - 1);
      per_stroke_[stroke][static_cast<size_t>(cy * cols_ + cx)] += piece;
    }
  }

  double cell_;
  int cols_;
  int rows_;
  std::vector<std::vector<double>> per_stroke_;
};

}  // namespace

void AnalysisConfig::Validate() const {
  if (!(cell > 0) || !(density_threshold > 0) || !(pen_width > 0) ||
      !(membership_fraction > 0) || !(membership_fraction <= 1)) {
    throw Error(ErrorCode::kInvalidArgument,
                "analysis: cell, density_threshold, pen_width must be positive "
                "and membership_fraction in (0, 1]");
  }
}

size_t PairIndex(size_t i, size_t j, size_t k) {
  // Pairs before row i: sum_{r < i} (k - 1 - r).
  return i * (2 * k - i - 1) / 2 + (j - i - 1);
}

std::vector<HyperStroke> DetectShadedRegions(const Sketch& sketch,
                                             const AnalysisConfig& cfg) {
  cfg.Validate();
  const InkGrid grid(sketch, cfg.cell);
  const int cols = grid.cols();
  const int rows = grid.rows();
  const auto index = [cols](int x, int y) { return static_cast<size_t>(y * cols + x); };

  std::vector<double> total(grid.cells());
  for (size_t c = 0; c < grid.cells(); ++c) total[c] = grid.TotalInk(c);

  std::vector<bool> dense(grid.cells(), false);
  const double cell_area = cfg.cell * cfg.cell;
  for (int y = 0; y < rows; ++y) {
    for (int x = 0; x < cols; ++x) {
      double ink = 0;
      int count = 0;
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
          const int nx = x + dx, ny = y + dy;
          if (nx < 0 || ny < 0 || nx >= cols || ny >= rows) continue;
          ink += total[index(nx, ny)];
          ++count;
        }
      }
      dense[index(x, y)] =
          total[index(x, y)] > 0 &&
          cfg.pen_width * ink / (count * cell_area) >= cfg.density_threshold;
    }
  }

  // 8-connected components of dense cells, labelled in scan order.
  constexpr int kNone = -1;
  std::vector<int> label(grid.cells(), kNone);
  int components = 0;
  std::vector<std::pair<int, int>> stack;
  for (int y = 0; y < rows; ++y) {
    for (int x = 0; x < cols; ++x) {
      if (!dense[index(x, y)] || label[index(x, y)] != kNone) continue;
      label[index(x, y)] = components;
      stack.push_back({x, y});
      while (!stack.empty()) {
        auto [cx, cy] = stack.back();
        stack.pop_back();
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            const int nx = cx + dx, ny = cy + dy;
            if (nx < 0 || ny < 0 || nx >= cols || ny >= rows) continue;
            const size_t n = index(nx, ny);
            if (dense[n] && label[n] == kNone) {
              label[n] = components;
              stack.push_back({nx, ny});
            }
          }
        }
      }
      ++components;
    }
  }
  if (components == 0) return {};

  // A region is its dense cells plus a one-cell rim, so strokes running along
  // the edge of a shaded patch still count as inside it.
  std::vector<int> region = label;
  for (int y = 0; y < rows; ++y) {
    for (int x = 0; x < cols; ++x) {
      if (dense[index(x, y)]) continue;
      int best = kNone;
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
          const int nx = x + dx, ny = y + dy;
          if (nx < 0 || ny < 0 || nx >= cols || ny >= rows) continue;
          const int l = label[index(nx, ny)];
          if (l != kNone && (best == kNone || l < best)) best = l;
        }
      }
      region[index(x, y)] = best;
    }
  }

  std::vector<HyperStroke> result;
  for (int comp = 0; comp < components; ++comp) {
    HyperStroke hs;
    double dense_ink = 0;
    int dense_cells = 0;
    hs.region_box = Box{1e300, 1e300, -1e300, -1e300};
    for (int y = 0; y < rows; ++y) {
      for (int x = 0; x < cols; ++x) {
        const size_t c = index(x, y);
        if (label[c] != comp) continue;
        dense_ink += total[c];
        ++dense_cells;
        hs.region_box.min_x = std::min(hs.region_box.min_x, x * cfg.cell);
        hs.region_box.min_y = std::min(hs.region_box.min_y, y * cfg.cell);
        hs.region_box.max_x = std::max(hs.region_box.max_x, (x + 1) * cfg.cell);
        hs.region_box.max_y = std::max(hs.region_box.max_y, (y + 1) * cfg.cell);
      }
    }
    for (size_t s = 0; s < grid.strokes(); ++s) {
      double inside = 0, length = 0;
      for (size_t c = 0; c < grid.cells(); ++c) {
        const double ink = grid.Ink(s, c);
        length += ink;
        if (region[c] == comp) inside += ink;
      }
      if (length > 0 && inside >= cfg.membership_fraction * length) {
        hs.member_stroke_ids.push_back(s);
      }
    }
    if (hs.member_stroke_ids.empty()) continue;
    hs.fill_density = std::min(
        1.0, cfg.pen_width * dense_ink / (dense_cells * cell_area));
    result.push_back(std::move(hs));
  }
  return result;
}

Hierarchy BuildHierarchy(const Sketch& sketch,
                         const std::vector<HyperStroke>& hyper) {
  const size_t k = sketch.strokes.size();
  std::vector<int> owner(k, -1);
  for (size_t h = 0; h < hyper.size(); ++h) {
    for (size_t s : hyper[h].member_stroke_ids) {
      if (s >= k) {
        throw Error(ErrorCode::kInconsistentPartition,
                    "hyper-stroke member " + std::to_string(s) + " out of range");
      }
      if (owner[s] != -1) {
        throw Error(ErrorCode::kInconsistentPartition,
                    "stroke " + std::to_string(s) +
                        " claimed by two hyper-strokes");
      }
      owner[s] = static_cast<int>(h);
    }
  }
  Hierarchy out;
  out.hyper_strokes = hyper;
  for (HyperStroke& h : out.hyper_strokes) {
    std::sort(h.member_stroke_ids.begin(), h.member_stroke_ids.end());
  }
  for (size_t s = 0; s < k; ++s) {
    if (owner[s] == -1) out.free_strokes.push_back(s);
  }
  return out;
}

StrokeFeatures ExtractStrokeFeatures(const Stroke& stroke,
                                     const CanvasSpec& canvas,
                                     double eps_closed) {
  StrokeFeatures f;
  const auto& pts = stroke.points;
  f.closure = ClassifyStroke(stroke, eps_closed);

  std::vector<double> headings;
  double cx = 0, cy = 0;
  for (size_t i = 1; i < pts.size(); ++i) {
    const double dx = pts[i].x - pts[i - 1].x;
    const double dy = pts[i].y - pts[i - 1].y;
    const double len = std::hypot(dx, dy);
    if (!(len > 0)) continue;
    f.arc_length += len;
    cx += len * 0.5 * (pts[i].x + pts[i - 1].x);
    cy += len * 0.5 * (pts[i].y + pts[i - 1].y);

    const double heading = std::atan2(dy, dx);
    headings.push_back(heading);
    double pos = heading / (kPi / 4);
    if (pos < 0) pos += kDirectionBins;
    const double lower = std::floor(pos);
    const double frac = pos - lower;
    const int bin = static_cast<int>(lower) % kDirectionBins;
    f.direction_histogram[static_cast<size_t>(bin)] += len * (1 - frac);
    f.direction_histogram[static_cast<size_t>((bin + 1) % kDirectionBins)] +=
        len * frac;
  }

  if (f.arc_length > 0) {
    for (double& h : f.direction_histogram) h /= f.arc_length;
    f.centroid = Point{cx / f.arc_length / canvas.width,
                       cy / f.arc_length / canvas.height, std::nullopt};
  } else {
    f.direction_histogram.fill(1.0 / kDirectionBins);
    if (!pts.empty()) {
      f.centroid = Point{pts.front().x / canvas.width,
                         pts.front().y / canvas.height, std::nullopt};
    }
  }

  for (size_t i = 1; i < headings.size(); ++i) {
    const double turn = WrapAngle(headings[i] - headings[i - 1]);
    f.total_turning += std::abs(turn);
    f.net_turning += turn;
  }
  if (f.closure == Closure::kClosed && headings.size() > 1) {
    f.total_turning += std::abs(WrapAngle(headings.front() - headings.back()));
  }

  if (!pts.empty()) {
    const Box box = BoundingBox(pts);
    const double extent = box.Width() + box.Height();
    f.bbox_aspect = extent > 0 ? box.Height() / extent : 0.5;
  }
  return f;
}

int CountIntersections(const Stroke& a, const Stroke& b) {
  const auto& pa = a.points;
  const auto& pb = b.points;
  int count = 0;
  for (size_t i = 1; i < pa.size(); ++i) {
    const double rx = pa[i].x - pa[i - 1].x;
    const double ry = pa[i].y - pa[i - 1].y;
    const bool last_a = i + 1 == pa.size();
    for (size_t j = 1; j < pb.size(); ++j) {
      const double sx = pb[j].x - pb[j - 1].x;
      const double sy = pb[j].y - pb[j - 1].y;
      const bool last_b = j + 1 == pb.size();
      const double qx = pb[j - 1].x - pa[i - 1].x;
      const double qy = pb[j - 1].y - pa[i - 1].y;
      const double denom = Cross(rx, ry, sx, sy);
      if (denom == 0) {
        // Parallel: only collinear overlaps count.
        if (Cross(qx, qy, rx, ry) != 0) continue;
        const double rr = rx * rx + ry * ry;
        if (rr == 0) continue;
        const double t0 = (qx * rx + qy * ry) / rr;
        const double t1 = t0 + (sx * rx + sy * ry) / rr;
        if (std::max(t0, t1) >= 0 && std::min(t0, t1) <= 1) ++count;
        continue;
      }
      const double t = Cross(qx, qy, sx, sy) / denom;
      const double u = Cross(qx, qy, rx, ry) / denom;
      const bool in_a = t >= 0 && (last_a ? t <= 1 : t < 1);
      const bool in_b = u >= 0 && (last_b ? u <= 1 : u < 1);
      if (in_a && in_b) ++count;
    }
  }
  return count;
}

BiStrokeFeatures ExtractBiStrokeFeatures(const Stroke& a, const Stroke& b,
                                         const CanvasSpec& canvas) {
  const StrokeFeatures fa = ExtractStrokeFeatures(a, canvas);
  const StrokeFeatures fb = ExtractStrokeFeatures(b, canvas);
  BiStrokeFeatures f;
  const double dx = (fb.centroid.x - fa.centroid.x) * canvas.width;
  const double dy = (fb.centroid.y - fa.centroid.y) * canvas.height;
  const double dist = std::hypot(dx, dy);
  f.centroid_offset_distance = dist / canvas.Diagonal();
  f.centroid_offset_angle = dist > 0 ? std::atan2(dy, dx) : 0.0;
  const double hi = std::max(fa.arc_length, fb.arc_length);
  f.length_ratio = hi > 0 ? std::min(fa.arc_length, fb.arc_length) / hi : 1.0;
  f.intersection_count = CountIntersections(a, b);
  return f;
}

FeatureSet ExtractFeatures(const Sketch& sketch, const Hierarchy& hierarchy,
                           double eps_closed) {
  FeatureSet fs;
  const size_t k = sketch.strokes.size();
  fs.strokes.reserve(k);
  for (const Stroke& s : sketch.strokes) {
    fs.strokes.push_back(ExtractStrokeFeatures(s, sketch.canvas, eps_closed));
  }
  fs.bistrokes.reserve(k * (k - 1) / 2);
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = i + 1; j < k; ++j) {
      fs.bistrokes.push_back(ExtractBiStrokeFeatures(
          sketch.strokes[i], sketch.strokes[j], sketch.canvas));
    }
  }
  const double canvas_area = sketch.canvas.width * sketch.canvas.height;
  for (const HyperStroke& h : hierarchy.hyper_strokes) {
    HyperStrokeFeatures hf;
    hf.area_fraction =
        h.region_box.Width() * h.region_box.Height() / canvas_area;
    hf.fill_density = h.fill_density;
    hf.centroid = Point{0.5 * (h.region_box.min_x + h.region_box.max_x) /
                            sketch.canvas.width,
                        0.5 * (h.region_box.min_y + h.region_box.max_y) /
                            sketch.canvas.height,
                        std::nullopt};
    hf.member_count = static_cast<int>(h.member_stroke_ids.size());
    fs.hyper_strokes.push_back(hf);
  }
  fs.free_strokes = hierarchy.free_strokes;
  return fs;
}

}  // namespace sketchauth
