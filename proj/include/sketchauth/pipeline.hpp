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

#ifndef SKETCHAUTH_PIPELINE_HPP
#define SKETCHAUTH_PIPELINE_HPP

#include "sketchauth/analysis.hpp"
#include "sketchauth/matcher.hpp"
#include "sketchauth/merge.hpp"
#include "sketchauth/preprocess.hpp"

namespace sketchauth {

// Every tunable of the recognition pipeline, as read from the config file.
struct PipelineConfig {
  PreprocessConfig preprocess;
  MergeConfig merge;
  AnalysisConfig analysis;
  MatchConfig matcher;

  void Validate() const {
    preprocess.Validate();
    merge.Validate();
    analysis.Validate();
    matcher.Validate();
  }

  friend bool operator==(const PipelineConfig&, const PipelineConfig&) = default;
};

struct AnalyzedSketch {
  Sketch sketch;  // preprocessed and merged
  Hierarchy hierarchy;
  FeatureSet features;
};

// preprocess -> merge -> shading detection -> hierarchy -> features.
AnalyzedSketch Analyze(const Sketch& raw, const PipelineConfig& cfg = {});

// Features of a sketch that has already been preprocessed and merged.
FeatureSet ExtractFromNormalized(const Sketch& normalized,
                                 const PipelineConfig& cfg = {});

}  // namespace sketchauth

#endif  // SKETCHAUTH_PIPELINE_HPP
