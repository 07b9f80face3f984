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

// Stroke hierarchy, shaded-region simplification and the three feature
// families (hyper-stroke, stroke, bi-stroke) of a preprocessed, merged sketch.

#ifndef SKETCHAUTH_ANALYSIS_HPP
#define SKETCHAUTH_ANALYSIS_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "sketchauth/geometry.hpp"
#include "sketchauth/merge.hpp"

namespace sketchauth {

// Bumped whenever a feature definition changes; stored with every template.
inline constexpr int kFeatureVersion = 1;
inline constexpr int kDirectionBins = 8;

struct AnalysisConfig {
  // Grid cell side for shading detection, in normalized-canvas units.
  double cell = 4.0;
  // Ink coverage (length x pen width / area) over a cell's 3x3 neighbourhood
  // at or above which the cell counts as shaded.
  double density_threshold = 0.3;
  // Fraction of a stroke's length that must fall in one shaded region for the
  // stroke to join that region's hyper-stroke.
  double membership_fraction = 0.6;
  double pen_width = 1.0;

  void Validate() const;

  friend bool operator==(const AnalysisConfig&, const AnalysisConfig&) = default;
};

struct HyperStroke {
  std::vector<size_t> member_stroke_ids;  // ascending
  Box region_box;
  double fill_density = 0;

  friend bool operator==(const HyperStroke&, const HyperStroke&) = default;
};

struct Hierarchy {
  std::vector<HyperStroke> hyper_strokes;
  std::vector<size_t> free_strokes;  // ascending

  friend bool operator==(const Hierarchy&, const Hierarchy&) = default;
};

struct StrokeFeatures {
  double arc_length = 0;
  // Length-weighted heading histogram. Bin k is centred on heading k * pi / 4
  // (canvas coordinates, x right, y down); a heading between two centres
  // splits its weight linearly between them.
  std::array<double, kDirectionBins> direction_histogram{};
  double total_turning = 0;
  // Signed sum of heading changes along the stroke, without a closing turn so
  // it does not jump when a nearly closed stroke flips between open and
  // closed. Jitter mostly cancels here, unlike in total_turning.
  double net_turning = 0;
  // Arc-length-weighted centroid divided by canvas width and height.
  Point centroid;
  // height / (width + height) of the stroke's bounding box: 0 for a
  // horizontal stroke, 1 for a vertical one, 0.5 for a square box.
  double bbox_aspect = 0.5;
  Closure closure = Closure::kOpen;

  friend bool operator==(const StrokeFeatures&, const StrokeFeatures&) = default;
};

struct BiStrokeFeatures {
  // Centroid offset a -> b as a fraction of the canvas diagonal.
  double centroid_offset_distance = 0;
  // Heading of the offset a -> b; 0 when the centroids coincide.
  double centroid_offset_angle = 0;
  double length_ratio = 1;
  int intersection_count = 0;

  friend bool operator==(const BiStrokeFeatures&,
                         const BiStrokeFeatures&) = default;
};

struct HyperStrokeFeatures {
  double area_fraction = 0;
  double fill_density = 0;
  Point centroid;
  int member_count = 1;

  friend bool operator==(const HyperStrokeFeatures&,
                         const HyperStrokeFeatures&) = default;
};

struct FeatureSet {
  int feature_version = kFeatureVersion;
  std::vector<StrokeFeatures> strokes;
  // One entry per unordered pair (i, j), i < j, in lexicographic order; see
  // PairIndex.
  std::vector<BiStrokeFeatures> bistrokes;
  std::vector<HyperStrokeFeatures> hyper_strokes;
  std::vector<size_t> free_strokes;

  friend bool operator==(const FeatureSet&, const FeatureSet&) = default;
};

// Position of pair (i, j), i < j < k, in FeatureSet::bistrokes.
size_t PairIndex(size_t i, size_t j, size_t k);

std::vector<HyperStroke> DetectShadedRegions(const Sketch& sketch,
                                             const AnalysisConfig& cfg = {});

// Throws Error(kInconsistentPartition) if a stroke is claimed twice or a member
// index is out of range.
Hierarchy BuildHierarchy(const Sketch& sketch,
                         const std::vector<HyperStroke>& hyper);

StrokeFeatures ExtractStrokeFeatures(const Stroke& stroke,
                                     const CanvasSpec& canvas,
                                     double eps_closed = MergeConfig{}.eps_closed);

BiStrokeFeatures ExtractBiStrokeFeatures(const Stroke& a, const Stroke& b,
                                         const CanvasSpec& canvas);

// Number of (segment of a, segment of b) pairs that intersect. Segments are
// treated as half-open [p_i, p_i+1) except the last one of each stroke, so a
// crossing exactly at a shared vertex is counted once.
int CountIntersections(const Stroke& a, const Stroke& b);

FeatureSet ExtractFeatures(const Sketch& sketch, const Hierarchy& hierarchy,
                           double eps_closed = MergeConfig{}.eps_closed);

}  // namespace sketchauth

#endif  // SKETCHAUTH_ANALYSIS_HPP
