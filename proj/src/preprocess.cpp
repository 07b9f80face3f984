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

#include "sketchauth/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sketchauth/error.hpp"

namespace sketchauth {
namespace {

// Value of the sequence at index i, continued past both ends by point
// reflection through the endpoint. Requires values.size() >= 2.
double Reflected(const std::vector<double>& values, long i) {
  const long last = static_cast<long>(values.size()) - 1;
  if (i < 0) return 2 * values.front() - Reflected(values, -i);
  if (i > last) return 2 * values.back() - Reflected(values, 2 * last - i);
  return values[static_cast<size_t>(i)];
}

double Median(std::vector<double> values) {
  const auto mid = values.begin() + static_cast<long>(values.size() / 2);
  std::nth_element(values.begin(), mid, values.end());
  if (values.size() % 2 == 1) return *mid;
  const double upper = *mid;
  const double lower = *std::max_element(values.begin(), mid);
  return 0.5 * (lower + upper);
}

}  // namespace

double GaussianWeight(double r, double sigma, int dimension) {
  if (!(sigma > 0)) {
    throw Error(ErrorCode::kInvalidSigma,
                "sigma must be positive, got " + std::to_string(sigma));
  }
  if (dimension != 1 && dimension != 2) {
    throw Error(ErrorCode::kInvalidArgument, "dimension must be 1 or 2");
  }
  const double variance = sigma * sigma;
  const double norm = dimension == 1
                          ? 1.0 / std::sqrt(2 * std::numbers::pi * variance)
                          : 1.0 / (2 * std::numbers::pi * variance);
  return norm * std::exp(-r * r / (2 * variance));
}

SmoothingKernel BuildKernel(double sigma, int radius) {
  if (!(sigma > 0)) {
    throw Error(ErrorCode::kInvalidSigma,
                "sigma must be positive, got " + std::to_string(sigma));
  }
  if (radius < 1) {
    throw Error(ErrorCode::kInvalidArgument, "kernel radius must be >= 1");
  }
  SmoothingKernel kernel{sigma, radius, 1, {}};
  kernel.weights.resize(static_cast<size_t>(2 * radius + 1));
  double sum = 0;
  for (int k = -radius; k <= radius; ++k) {
    const double w = GaussianWeight(k, sigma, 1);
    kernel.weights[static_cast<size_t>(k + radius)] = w;
    sum += w;
  }
  for (double& w : kernel.weights) w /= sum;
  // Force exact symmetry; the two halves are summed in different orders above.
  for (int k = 1; k <= radius; ++k) {
    kernel.weights[static_cast<size_t>(radius - k)] =
        kernel.weights[static_cast<size_t>(radius + k)];
  }
  return kernel;
}

Stroke SmoothStroke(const Stroke& stroke, const SmoothingKernel& kernel) {
  const size_t n = stroke.points.size();
  if (n < 3) return stroke;
  std::vector<double> xs(n), ys(n);
  for (size_t i = 0; i < n; ++i) {
    xs[i] = stroke.points[i].x;
    ys[i] = stroke.points[i].y;
  }
  Stroke out = stroke;
  for (size_t i = 1; i + 1 < n; ++i) {
    double sx = 0, sy = 0;
    for (int k = -kernel.radius; k <= kernel.radius; ++k) {
      const double w = kernel.weights[static_cast<size_t>(k + kernel.radius)];
      const long j = static_cast<long>(i) + k;
      sx += w * Reflected(xs, j);
      sy += w * Reflected(ys, j);
    }
    out.points[i].x = sx;
    out.points[i].y = sy;
  }
  return out;
}

Stroke RemoveWildPoints(const Stroke& stroke, double factor) {
  const std::vector<Point>& in = stroke.points;
  if (in.size() < 3) return stroke;
  std::vector<double> gaps;
  gaps.reserve(in.size() - 1);
  for (size_t i = 1; i < in.size(); ++i) {
    const double d = Distance(in[i - 1], in[i]);
    if (d > 0) gaps.push_back(d);
  }
  if (gaps.empty()) return stroke;
  const double limit = factor * Median(std::move(gaps));

  Stroke out;
  out.points.reserve(in.size());
  out.points.push_back(in.front());
  for (size_t i = 1; i + 1 < in.size(); ++i) {
    if (Distance(out.points.back(), in[i]) <= limit) out.points.push_back(in[i]);
  }
  out.points.push_back(in.back());
  return out;
}

void PreprocessConfig::Validate() const {
  if (!(sigma > 0)) {
    throw Error(ErrorCode::kInvalidSigma, "preprocess.sigma must be positive");
  }
  if (!(wild_point_factor > 1) || !(target_size > 0) || !(margin > 0) ||
      !(resample_spacing > 0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "preprocess: wild_point_factor must exceed 1 and "
                "target_size, margin, resample_spacing must be positive");
  }
  if (!(margin < target_size / 2)) {
    throw Error(ErrorCode::kInvalidArgument,
                "preprocess.margin must be below target_size / 2");
  }
}

Sketch NormalizeSize(const Sketch& sketch, const PreprocessConfig& config) {
  config.Validate();
  const Box box = BoundingBox(sketch);
  const double extent = std::max(box.Width(), box.Height());
  if (!(extent > 0)) {
    throw Error(ErrorCode::kDegenerateSketch,
                "bounding box collapses to a single point");
  }
  const double scale = (config.target_size - 2 * config.margin) / extent;
  const double cx = 0.5 * (box.min_x + box.max_x);
  const double cy = 0.5 * (box.min_y + box.max_y);
  const double half = 0.5 * config.target_size;

  Sketch out;
  out.canvas = CanvasSpec{config.target_size, config.target_size};
  out.strokes.reserve(sketch.strokes.size());
  for (const Stroke& s : sketch.strokes) {
    Stroke mapped = s;
    for (Point& p : mapped.points) {
      p.x = half + (p.x - cx) * scale;
      p.y = half + (p.y - cy) * scale;
    }
    out.strokes.push_back(std::move(mapped));
  }
  return out;
}

Sketch Preprocess(const Sketch& sketch, const PreprocessConfig& config) {
  config.Validate();
  const Sketch valid = ValidateSketch(sketch);

  Sketch filtered;
  filtered.canvas = valid.canvas;
  for (const Stroke& raw : valid.strokes) {
    Stroke f = RemoveWildPoints(raw, config.wild_point_factor);
    if (ArcLength(f) > 0) filtered.strokes.push_back(std::move(f));
  }
  if (filtered.strokes.empty()) {
    throw Error(ErrorCode::kDegenerateSketch, "every stroke has zero length");
  }
  const Box box = BoundingBox(filtered);
  const double extent = std::max(box.Width(), box.Height());
  if (!(extent > 0)) {
    throw Error(ErrorCode::kDegenerateSketch,
                "bounding box collapses to a single point");
  }
  // Sample spacing is measured on the normalized scale so a drawing and its
  // normalized copy resample to the same point count.
  const double scale = (config.target_size - 2 * config.margin) / extent;
  const double sigma_samples = config.sigma * scale / config.resample_spacing;
  const SmoothingKernel kernel = BuildKernel(
      sigma_samples, std::max(1, static_cast<int>(std::ceil(3 * sigma_samples))));

  Sketch cleaned;
  cleaned.canvas = valid.canvas;
  for (const Stroke& f : filtered.strokes) {
    const double length = ArcLength(f) * scale;
    const int n = std::max(
        2, static_cast<int>(std::ceil(length / config.resample_spacing - 1e-9)) + 1);
    cleaned.strokes.push_back(SmoothStroke(ResampleStroke(f, n), kernel));
  }
  return NormalizeSize(cleaned, config);
}

}  // namespace sketchauth
