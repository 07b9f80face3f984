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

// Noise reduction and size normalization for raw drawings.

#ifndef SKETCHAUTH_PREPROCESS_HPP
#define SKETCHAUTH_PREPROCESS_HPP

#include <vector>

#include "sketchauth/geometry.hpp"

namespace sketchauth {

// Isotropic Gaussian density in `dimension` dimensions evaluated at distance
// `r` from the mean:
//
//   (1 / sqrt(2 pi sigma^2))^N * exp(-r^2 / (2 sigma^2))
//
// For N = 2 this is the planar blur kernel G(u, v) with r^2 = u^2 + v^2.
// Throws Error(kInvalidSigma) if sigma <= 0 and Error(kInvalidArgument) unless
// dimension is 1 or 2.
double GaussianWeight(double r, double sigma, int dimension);

// Discrete 1D kernel over integer sample offsets -radius..+radius.
struct SmoothingKernel {
  double sigma = 1;
  int radius = 1;
  int dimension = 1;
  // weights[radius + k] is the weight of offset k. Renormalized to sum to 1.
  std::vector<double> weights;
};

SmoothingKernel BuildKernel(double sigma, int radius);

// Convolves the x and y sequences with `kernel`. Beyond each end the sequence
// is continued by point reflection through the endpoint, so straight evenly
// spaced runs pass through unchanged and the endpoints stay where they were.
Stroke SmoothStroke(const Stroke& stroke, const SmoothingKernel& kernel);

// Drops interior points that jump more than `factor` times the median
// inter-point spacing away from the last kept point. Endpoints always survive.
Stroke RemoveWildPoints(const Stroke& stroke, double factor);

struct PreprocessConfig {
  // Smoothing standard deviation in canvas units along the stroke.
  double sigma = 12.0;
  double wild_point_factor = 5.0;
  double target_size = 128.0;
  double margin = 8.0;
  // One resampled point per this many units of arc length, measured after
  // scaling to the normalized size.
  double resample_spacing = 2.0;

  // Throws Error(kInvalidArgument) on a violated invariant.
  void Validate() const;

  friend bool operator==(const PreprocessConfig&,
                         const PreprocessConfig&) = default;
};

// Uniform scale plus translation placing the bounding box in the centered
// square of side target_size - 2 * margin on a target_size canvas. Throws
// Error(kDegenerateSketch) when the box collapses to a point.
Sketch NormalizeSize(const Sketch& sketch, const PreprocessConfig& config);

// validate -> wild-point removal -> resample -> smooth -> normalize.
// Zero-length strokes are dropped after validation; if nothing with extent is
// left the result is Error(kDegenerateSketch).
Sketch Preprocess(const Sketch& sketch, const PreprocessConfig& config = {});

}  // namespace sketchauth

#endif  // SKETCHAUTH_PREPROCESS_HPP
