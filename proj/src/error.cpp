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

#include "sketchauth/error.hpp"

namespace sketchauth {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptySketch: return "EmptySketch";
    case ErrorCode::kDegenerateStroke: return "DegenerateStroke";
    case ErrorCode::kDegenerateSketch: return "DegenerateSketch";
    case ErrorCode::kInvalidSigma: return "InvalidSigma";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInconsistentPartition: return "InconsistentPartition";
    case ErrorCode::kVersionMismatch: return "VersionMismatch";
    case ErrorCode::kUsernameTaken: return "UsernameTaken";
    case ErrorCode::kPolicyViolation: return "PolicyViolation";
    case ErrorCode::kTooFewObjects: return "TooFewObjects";
    case ErrorCode::kUnknownObject: return "UnknownObject";
    case ErrorCode::kEnrollmentMismatch: return "EnrollmentMismatch";
    case ErrorCode::kDrawingCountMismatch: return "DrawingCountMismatch";
    case ErrorCode::kSchema: return "SchemaError";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kOverflow: return "Overflow";
  }
  return "Unknown";
}

}  // namespace sketchauth
