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

// Registration and authentication: a text password plus an ordered sequence
// of drawings of palette objects.

#ifndef SKETCHAUTH_AUTHENTICATOR_HPP
#define SKETCHAUTH_AUTHENTICATOR_HPP

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include "sketchauth/credentials.hpp"
#include "sketchauth/error.hpp"
#include "sketchauth/matcher.hpp"
#include "sketchauth/palette.hpp"
#include "sketchauth/pipeline.hpp"
#include "sketchauth/rate_limiter.hpp"
#include "sketchauth/record.hpp"
#include "sketchauth/storage.hpp"

namespace sketchauth {

struct AuthConfig {
  TextPasswordPolicy policy;
  std::uint32_t hash_iterations = kDefaultIterations;
  size_t min_objects = 3;
  // A drawing enrolled under an object must reach this similarity against the
  // palette's reference glyph for that object.
  double enrollment_threshold = 0.5;
  int max_failures = 5;
  std::chrono::seconds lockout{60};

  void Validate() const;

  friend bool operator==(const AuthConfig&, const AuthConfig&) = default;
};

struct AuthDecision {
  Decision outcome = Decision::kReject;
  // Filled only when the password was right and the drawing count matched.
  std::vector<MatchReport> per_object_reports;
  // Rejected without evaluation because of too many recent failures.
  bool locked_out = false;
  std::chrono::seconds retry_after{0};
};

// Usernames are 1 to 64 bytes without control characters.
bool ValidUsername(const std::string& username);

// Error(kPolicyViolation) with the individual rule failures.
class PolicyError : public Error {
 public:
  explicit PolicyError(std::vector<PolicyViolation> violations);
  const std::vector<PolicyViolation>& violations() const { return violations_; }

 private:
  std::vector<PolicyViolation> violations_;
};

// Error(kEnrollmentMismatch) naming the drawing that failed the glyph check.
class EnrollmentError : public Error {
 public:
  EnrollmentError(size_t index, std::string object_id, double similarity);
  size_t index() const { return index_; }
  const std::string& object_id() const { return object_id_; }
  double similarity() const { return similarity_; }

 private:
  size_t index_;
  std::string object_id_;
  double similarity_;
};

class Authenticator {
 public:
  Authenticator(UserStore& store, const ObjectPalette& palette,
                PipelineConfig pipeline = {}, AuthConfig auth = {},
                RateLimiter::NowFn now = [] { return RateLimiter::Clock::now(); });

  // Validates everything, then stores the record. Errors, in check order:
  // kInvalidArgument (username), kUsernameTaken, kPolicyViolation,
  // kTooFewObjects, kUnknownObject, kDrawingCountMismatch, sketch errors
  // (kEmptySketch, kDegenerateSketch, ...), kEnrollmentMismatch. A concurrent
  // registration of the same name can still lose with kUsernameTaken at the
  // final store step.
  UserRecord Register(const std::string& username, const std::string& password,
                      const std::vector<std::string>& selection,
                      const std::vector<Sketch>& drawings);

  // Never throws for bad credentials or unusable drawings: every failure is a
  // plain Reject. An unknown user or a wrong password still runs the drawing
  // comparison, against decoy templates in the first case.
  AuthDecision Authenticate(const std::string& username, const std::string& password,
                            const std::vector<Sketch>& drawings);

  const PipelineConfig& pipeline() const { return pipeline_; }
  const AuthConfig& auth() const { return auth_; }
  const ObjectPalette& palette() const { return palette_; }
  UserStore& store() { return store_; }

 private:
  // Per-drawing similarities against `templates` in order; a drawing that
  // cannot be analyzed scores 0.
  std::vector<MatchReport> Compare(const std::vector<Template>& templates,
                                   const std::vector<Sketch>& drawings) const;

  UserStore& store_;
  const ObjectPalette& palette_;
  PipelineConfig pipeline_;
  AuthConfig auth_;
  RateLimiter limiter_;
  std::vector<Template> decoys_;
  PasswordDigest decoy_digest_;
};

}  // namespace sketchauth

#endif  // SKETCHAUTH_AUTHENTICATOR_HPP
