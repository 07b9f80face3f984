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

#include "sketchauth/matcher.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sketchauth/assignment.hpp"
#include "sketchauth/error.hpp"

namespace sketchauth {
namespace {

constexpr double kPi = std::numbers::pi;

// Every term is a ramp: no penalty up to `tolerance` (the spread of the same
// drawing redone by hand), full penalty from `saturation` on.
struct Term {
  double weight;
  double tolerance;
  double saturation;
};

// Stroke level. Histogram: half L1 distance. Length: relative difference.
// Winding: difference of |net turning| in units of pi. Centroid: distance over
// the unit-square diagonal. Aspect: absolute difference.
constexpr Term kHistogramTerm{0.35, 0.10, 0.35};
constexpr Term kLengthTerm{0.15, 0.08, 0.35};
constexpr Term kWindingTerm{0.20, 0.30, 1.00};
constexpr Term kCentroidTerm{0.15, 0.02, 0.08};
constexpr Term kAspectTerm{0.10, 0.05, 0.20};
constexpr double kClosureWeight = 0.05;

// Bi-stroke level. Offset: distance between centroid offset vectors in canvas
// diagonals. Ratio: absolute difference. Intersections: relative difference.
constexpr Term kOffsetTerm{0.5, 0.02, 0.10};
constexpr Term kRatioTerm{0.25, 0.05, 0.30};
constexpr Term kIntersectionTerm{0.25, 0.0, 1.0};

// Hyper level.
constexpr Term kAreaTerm{0.3, 0.01, 0.10};
constexpr Term kFillTerm{0.2, 0.05, 0.30};
constexpr Term kHyperCentroidTerm{0.3, 0.02, 0.10};
constexpr Term kMemberTerm{0.2, 0.0, 1.0};

double Penalty(const Term& term, double raw) {
  if (!(raw > term.tolerance)) return 0.0;
  return term.weight *
         std::min(1.0, (raw - term.tolerance) / (term.saturation - term.tolerance));
}

double Saturate(double x) { return std::clamp(x, 0.0, 1.0); }

double HistogramL1(const StrokeFeatures& a, const StrokeFeatures& b) {
  double sum = 0;
  for (size_t k = 0; k < kDirectionBins; ++k) {
    sum += std::abs(a.direction_histogram[k] - b.direction_histogram[k]);
  }
  return sum;
}

// L1 against b turned half a circle. Terms are added in mirrored pairs so
// swapping a and b gives a bit-identical sum.
double ReversedHistogramL1(const StrokeFeatures& a, const StrokeFeatures& b) {
  constexpr size_t kHalf = kDirectionBins / 2;
  double sum = 0;
  for (size_t k = 0; k < kHalf; ++k) {
    sum += std::abs(a.direction_histogram[k] - b.direction_histogram[k + kHalf]) +
           std::abs(a.direction_histogram[k + kHalf] - b.direction_histogram[k]);
  }
  return sum;
}

double RelativeDifference(double a, double b) {
  const double hi = std::max(std::abs(a), std::abs(b));
  return hi > 0 ? std::abs(a - b) / hi : 0.0;
}

double UnitSquareDistance(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y) / std::numbers::sqrt2;
}

// Offset vector of a relation, measured in canvas diagonals.
Point OffsetVector(const BiStrokeFeatures& f) {
  return Point{f.centroid_offset_distance * std::cos(f.centroid_offset_angle),
               f.centroid_offset_distance * std::sin(f.centroid_offset_angle),
               std::nullopt};
}

BiStrokeFeatures Reversed(BiStrokeFeatures f) {
  if (f.centroid_offset_distance > 0) {
    f.centroid_offset_angle = std::remainder(f.centroid_offset_angle + kPi, 2 * kPi);
  }
  return f;
}

// Level score with unmatched entries diluting the mean.
double CoverageScore(double matched_total, size_t matched, size_t count_a,
                     size_t count_b, double unmatched_penalty) {
  const size_t larger = std::max(count_a, count_b);
  if (larger == 0) return 1.0;
  const double denom = static_cast<double>(matched) +
                       unmatched_penalty * static_cast<double>(larger - matched);
  return denom > 0 ? Saturate(matched_total / denom) : 0.0;
}

double MatchHyperLevel(const FeatureSet& a, const FeatureSet& b,
                       const MatchConfig& cfg) {
  struct Pair {
    double distance;
    size_t i;
    size_t j;
  };
  std::vector<Pair> pairs;
  for (size_t i = 0; i < a.hyper_strokes.size(); ++i) {
    for (size_t j = 0; j < b.hyper_strokes.size(); ++j) {
      pairs.push_back(
          {1.0 - HyperStrokeSimilarity(a.hyper_strokes[i], b.hyper_strokes[j]), i, j});
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) {
    return std::tie(x.distance, x.i, x.j) < std::tie(y.distance, y.i, y.j);
  });
  std::vector<bool> used_a(a.hyper_strokes.size()), used_b(b.hyper_strokes.size());
  double total = 0;
  size_t matched = 0;
  for (const Pair& p : pairs) {
    if (used_a[p.i] || used_b[p.j]) continue;
    used_a[p.i] = used_b[p.j] = true;
    total += 1.0 - p.distance;
    ++matched;
  }
  return CoverageScore(total, matched, a.hyper_strokes.size(),
                       b.hyper_strokes.size(), cfg.unmatched_penalty);
}

}  // namespace

void MatchConfig::Validate() const {
  if (!(accept_threshold > 0) || !(accept_threshold < 1)) {
    throw Error(ErrorCode::kInvalidArgument,
                "matcher.accept_threshold must lie in (0, 1)");
  }
  if (!(w_hyper >= 0) || !(w_stroke >= 0) || !(w_bistroke >= 0) ||
      std::abs(w_hyper + w_stroke + w_bistroke - 1.0) > 1e-9) {
    throw Error(ErrorCode::kInvalidArgument,
                "matcher weights must be nonnegative and sum to 1");
  }
  if (!(unmatched_penalty >= 0) || !(unmatched_penalty <= 1)) {
    throw Error(ErrorCode::kInvalidArgument,
                "matcher.unmatched_penalty must lie in [0, 1]");
  }
}

double StrokeSimilarity(const StrokeFeatures& a, const StrokeFeatures& b) {
  const double histogram =
      0.5 * std::min(HistogramL1(a, b), ReversedHistogramL1(a, b));
  const double winding =
      std::abs(std::abs(a.net_turning) - std::abs(b.net_turning)) / kPi;
  const double distance =
      Penalty(kHistogramTerm, histogram) +
      Penalty(kLengthTerm, RelativeDifference(a.arc_length, b.arc_length)) +
      Penalty(kWindingTerm, winding) +
      Penalty(kCentroidTerm, UnitSquareDistance(a.centroid, b.centroid)) +
      Penalty(kAspectTerm, std::abs(a.bbox_aspect - b.bbox_aspect)) +
      (a.closure == b.closure ? 0.0 : kClosureWeight);
  return Saturate(1.0 - distance);
}

double BiStrokeSimilarity(const BiStrokeFeatures& a, const BiStrokeFeatures& b) {
  const Point oa = OffsetVector(a);
  const Point ob = OffsetVector(b);
  const int hi = std::max(a.intersection_count, b.intersection_count);
  const double distance =
      Penalty(kOffsetTerm, std::hypot(oa.x - ob.x, oa.y - ob.y)) +
      Penalty(kRatioTerm, std::abs(a.length_ratio - b.length_ratio)) +
      Penalty(kIntersectionTerm,
              hi > 0 ? std::abs(a.intersection_count - b.intersection_count) /
                           static_cast<double>(hi)
                     : 0.0);
  return Saturate(1.0 - distance);
}

double HyperStrokeSimilarity(const HyperStrokeFeatures& a,
                             const HyperStrokeFeatures& b) {
  const double distance =
      Penalty(kAreaTerm, std::abs(a.area_fraction - b.area_fraction)) +
      Penalty(kFillTerm, std::abs(a.fill_density - b.fill_density)) +
      Penalty(kHyperCentroidTerm, UnitSquareDistance(a.centroid, b.centroid)) +
      Penalty(kMemberTerm, RelativeDifference(a.member_count, b.member_count));
  return Saturate(1.0 - distance);
}

MatchReport MatchHierarchies(const FeatureSet& candidate,
                             const FeatureSet& templ, const MatchConfig& cfg) {
  cfg.Validate();
  if (candidate.feature_version != templ.feature_version) {
    throw Error(ErrorCode::kVersionMismatch,
                "feature version " + std::to_string(candidate.feature_version) +
                    " vs " + std::to_string(templ.feature_version));
  }
  MatchReport report;
  report.stroke_assignment.assign(candidate.strokes.size(), std::nullopt);

  // Hyper level.
  report.level_present[kHyperLevel] =
      !candidate.hyper_strokes.empty() || !templ.hyper_strokes.empty();
  report.level_scores[kHyperLevel] =
      report.level_present[kHyperLevel] ? MatchHyperLevel(candidate, templ, cfg) : 1.0;

  // Stroke level over free strokes.
  const auto& free_c = candidate.free_strokes;
  const auto& free_t = templ.free_strokes;
  ScoreMatrix scores(free_c.size(), free_t.size());
  for (size_t r = 0; r < free_c.size(); ++r) {
    for (size_t c = 0; c < free_t.size(); ++c) {
      scores(r, c) = StrokeSimilarity(candidate.strokes[free_c[r]],
                                      templ.strokes[free_t[c]]);
    }
  }
  const Assignment assignment = SolveMaxAssignment(scores);
  std::vector<std::pair<size_t, size_t>> matches;  // (candidate, template)
  for (size_t r = 0; r < free_c.size(); ++r) {
    if (!assignment.row_to_col[r]) continue;
    const size_t t = free_t[*assignment.row_to_col[r]];
    report.stroke_assignment[free_c[r]] = t;
    matches.push_back({free_c[r], t});
  }
  report.level_present[kStrokeLevel] = !free_c.empty() || !free_t.empty();
  report.level_scores[kStrokeLevel] =
      CoverageScore(assignment.total, matches.size(), free_c.size(),
                    free_t.size(), cfg.unmatched_penalty);

  // Bi-stroke level over pairs of matched strokes.
  const size_t pairs_c = free_c.size() * (free_c.size() - (free_c.empty() ? 0 : 1)) / 2;
  const size_t pairs_t = free_t.size() * (free_t.size() - (free_t.empty() ? 0 : 1)) / 2;
  double pair_total = 0;
  size_t pair_count = 0;
  const size_t kc = candidate.strokes.size();
  const size_t kt = templ.strokes.size();
  for (size_t x = 0; x < matches.size(); ++x) {
    for (size_t y = x + 1; y < matches.size(); ++y) {
      const auto [c1, t1] = matches[x];
      const auto [c2, t2] = matches[y];
      const BiStrokeFeatures& fc = candidate.bistrokes[PairIndex(c1, c2, kc)];
      const BiStrokeFeatures ft =
          t1 < t2 ? templ.bistrokes[PairIndex(t1, t2, kt)]
                  : Reversed(templ.bistrokes[PairIndex(t2, t1, kt)]);
      pair_total += BiStrokeSimilarity(fc, ft);
      ++pair_count;
    }
  }
  report.level_present[kBiStrokeLevel] = pairs_c + pairs_t > 0;
  report.level_scores[kBiStrokeLevel] =
      CoverageScore(pair_total, pair_count, pairs_c, pairs_t, cfg.unmatched_penalty);

  // Blend the present levels.
  const std::array<double, 3> weights{cfg.w_hyper, cfg.w_stroke, cfg.w_bistroke};
  std::array<double, 3> applied{};
  double weight_sum = 0;
  for (int l = 0; l < 3; ++l) {
    if (report.level_present[static_cast<size_t>(l)]) {
      applied[static_cast<size_t>(l)] = weights[static_cast<size_t>(l)];
      weight_sum += weights[static_cast<size_t>(l)];
    }
  }
  if (!(weight_sum > 0)) {
    weight_sum = 0;
    for (int l = 0; l < 3; ++l) {
      applied[static_cast<size_t>(l)] = report.level_present[static_cast<size_t>(l)] ? 1.0 : 0.0;
      weight_sum += applied[static_cast<size_t>(l)];
    }
  }
  double blended = 0;
  for (size_t l = 0; l < 3; ++l) {
    blended += applied[l] * report.level_scores[l];
    report.effective_weights[l] = weight_sum > 0 ? applied[l] / weight_sum : 0.0;
  }
  report.similarity = weight_sum > 0 ? Saturate(blended / weight_sum) : 0.0;
  report.decision = report.similarity >= cfg.accept_threshold ? Decision::kAccept
                                                              : Decision::kReject;
  return report;
}

std::vector<std::pair<size_t, double>> RankTemplates(
    const FeatureSet& candidate, const std::vector<FeatureSet>& templates,
    const MatchConfig& cfg) {
  if (templates.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no templates to rank");
  }
  std::vector<std::pair<size_t, double>> ranked;
  ranked.reserve(templates.size());
  for (size_t i = 0; i < templates.size(); ++i) {
    ranked.push_back({i, MatchHierarchies(candidate, templates[i], cfg).similarity});
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& x, const auto& y) { return x.second > y.second; });
  return ranked;
}

}  // namespace sketchauth
