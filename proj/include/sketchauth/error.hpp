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

#ifndef SKETCHAUTH_ERROR_HPP
#define SKETCHAUTH_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace sketchauth {

enum class ErrorCode {
  kEmptySketch,
  kDegenerateStroke,
  kDegenerateSketch,
  kInvalidSigma,
  kInvalidArgument,
  kInconsistentPartition,
  kVersionMismatch,
  kUsernameTaken,
  kPolicyViolation,
  kTooFewObjects,
  kUnknownObject,
  kEnrollmentMismatch,
  kDrawingCountMismatch,
  kSchema,
  kIo,
  kOverflow,
};

/// Stable identifier used in wire bodies and CLI messages.
std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sketchauth

#endif  // SKETCHAUTH_ERROR_HPP
