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

// Top-down hierarchical similarity between two feature sets.
//
// Three levels are scored independently and blended:
//
//   hyper     shaded regions, paired greedily by feature distance
//   stroke    free strokes, paired by an optimal one-to-one assignment
//   bistroke  relations between every two matched strokes
//
// A level for which neither side has anything to compare drops out and its
// weight is shared proportionally by the remaining levels.

#ifndef SKETCHAUTH_MATCHER_HPP
#define SKETCHAUTH_MATCHER_HPP

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "sketchauth/analysis.hpp"

namespace sketchauth {

struct MatchConfig {
  double accept_threshold = 0.80;
  double w_hyper = 0.2;
  double w_stroke = 0.5;
  double w_bistroke = 0.3;
  // How much an unmatched stroke (or stroke pair, or hyper-stroke) dilutes its
  // level's score. 1 gives plain coverage: matched / max(count_a, count_b).
  double unmatched_penalty = 1.0;

  void Validate() const;

  friend bool operator==(const MatchConfig&, const MatchConfig&) = default;
};

enum class Decision { kAccept, kReject };

enum Level { kHyperLevel = 0, kStrokeLevel = 1, kBiStrokeLevel = 2 };

struct MatchReport {
  double similarity = 0;
  std::array<double, 3> level_scores{};
  // Weights actually applied after dropping empty levels; sum to 1.
  std::array<double, 3> effective_weights{};
  std::array<bool, 3> level_present{};
  // stroke_assignment[i]: template stroke matched to candidate stroke i.
  std::vector<std::optional<size_t>> stroke_assignment;
  Decision decision = Decision::kReject;
};

// In [0, 1]; 1 exactly for identical inputs and symmetric in its arguments.
// The direction histogram is compared against both drawing directions of `b`.
double StrokeSimilarity(const StrokeFeatures& a, const StrokeFeatures& b);

// Similarity of the relation (a1 -> a2) to the relation (b1 -> b2).
double BiStrokeSimilarity(const BiStrokeFeatures& a, const BiStrokeFeatures& b);

double HyperStrokeSimilarity(const HyperStrokeFeatures& a,
                             const HyperStrokeFeatures& b);

// Throws Error(kVersionMismatch) if the feature versions differ.
MatchReport MatchHierarchies(const FeatureSet& candidate,
                             const FeatureSet& templ,
                             const MatchConfig& cfg = {});

// (template index, similarity), best first; ties go to the lower index.
std::vector<std::pair<size_t, double>> RankTemplates(
    const FeatureSet& candidate, const std::vector<FeatureSet>& templates,
    const MatchConfig& cfg = {});

}  // namespace sketchauth

#endif  // SKETCHAUTH_MATCHER_HPP
