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

#include "sketchauth/pipeline.hpp"

namespace sketchauth {

AnalyzedSketch Analyze(const Sketch& raw, const PipelineConfig& cfg) {
  AnalyzedSketch out;
  out.sketch = MergeStrokes(Preprocess(raw, cfg.preprocess), cfg.merge);
  out.hierarchy =
      BuildHierarchy(out.sketch, DetectShadedRegions(out.sketch, cfg.analysis));
  out.features = ExtractFeatures(out.sketch, out.hierarchy, cfg.merge.eps_closed);
  return out;
}

FeatureSet ExtractFromNormalized(const Sketch& normalized,
                                 const PipelineConfig& cfg) {
  const Hierarchy hierarchy =
      BuildHierarchy(normalized, DetectShadedRegions(normalized, cfg.analysis));
  return ExtractFeatures(normalized, hierarchy, cfg.merge.eps_closed);
}

}  // namespace sketchauth
