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

#include "sketchauth/authenticator.hpp"

#include <chrono>
#include <cstdio>
#include <stdexcept>

namespace sketchauth {
namespace {

std::string JoinViolations(const std::vector<PolicyViolation>& v) {
  std::string out = "password policy violated:";
  for (PolicyViolation p : v) {
    out += ' ';
    out += PolicyViolationName(p);
  }
  return out;
}

std::string EnrollmentMessage(size_t index, const std::string& id, double sim) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", sim);
  return "drawing " + std::to_string(index) + " does not look like \"" + id +
         "\" (similarity " + buf + ")";
}

}  // namespace

PolicyError::PolicyError(std::vector<PolicyViolation> violations)
    : Error(ErrorCode::kPolicyViolation, JoinViolations(violations)),
      violations_(std::move(violations)) {}

EnrollmentError::EnrollmentError(size_t index, std::string object_id, double similarity)
    : Error(ErrorCode::kEnrollmentMismatch, EnrollmentMessage(index, object_id, similarity)),
      index_(index),
      object_id_(std::move(object_id)),
      similarity_(similarity) {}

void AuthConfig::Validate() const {
  if (policy.min_length < 1) {
    throw Error(ErrorCode::kInvalidArgument, "auth.min_password_length must be >= 1");
  }
  if (hash_iterations < 1) {
    throw Error(ErrorCode::kInvalidArgument, "auth.hash_iterations must be >= 1");
  }
  if (min_objects < 1) {
    throw Error(ErrorCode::kInvalidArgument, "auth.min_objects must be >= 1");
  }
  if (!(enrollment_threshold >= 0) || !(enrollment_threshold <= 1)) {
    throw Error(ErrorCode::kInvalidArgument, "auth.enrollment_threshold must lie in [0, 1]");
  }
  if (max_failures < 1) {
    throw Error(ErrorCode::kInvalidArgument, "auth.max_failures must be >= 1");
  }
  if (lockout.count() < 0) {
    throw Error(ErrorCode::kInvalidArgument, "auth.lockout_seconds must be >= 0");
  }
}

bool ValidUsername(const std::string& username) {
  if (username.empty() || username.size() > 64) return false;
  for (unsigned char c : username) {
    if (c < 0x20 || c == 0x7f) return false;
  }
  return true;
}

Authenticator::Authenticator(UserStore& store, const ObjectPalette& palette,
                             PipelineConfig pipeline, AuthConfig auth,
                             RateLimiter::NowFn now)
    : store_(store),
      palette_(palette),
      pipeline_(std::move(pipeline)),
      auth_(std::move(auth)),
      limiter_(auth_.max_failures, auth_.lockout, std::move(now)) {
  pipeline_.Validate();
  auth_.Validate();
  if (palette_.size() == 0) throw std::invalid_argument("empty object palette");
  for (const PaletteObject& o : palette_.objects()) {
    AnalyzedSketch a = Analyze(o.glyph, pipeline_);
    decoys_.push_back(Template{o.id, std::move(a.features), std::move(a.sketch)});
  }
  decoy_digest_ = HashPassword("", auth_.hash_iterations);
}

UserRecord Authenticator::Register(const std::string& username,
                                   const std::string& password,
                                   const std::vector<std::string>& selection,
                                   const std::vector<Sketch>& drawings) {
  if (!ValidUsername(username)) {
    throw Error(ErrorCode::kInvalidArgument,
                "username must be 1 to 64 bytes without control characters");
  }
  if (store_.Contains(username)) {
    throw Error(ErrorCode::kUsernameTaken, "username already registered");
  }
  if (auto v = ValidateTextPassword(password, auth_.policy); !v.empty()) {
    throw PolicyError(std::move(v));
  }
  if (selection.size() < auth_.min_objects) {
    throw Error(ErrorCode::kTooFewObjects, "select at least " +
                                               std::to_string(auth_.min_objects) +
                                               " objects");
  }
  std::vector<const Template*> references;
  for (const std::string& id : selection) {
    const Template* ref = nullptr;
    for (const Template& t : decoys_) {
      if (t.object_id == id) ref = &t;
    }
    if (ref == nullptr) throw Error(ErrorCode::kUnknownObject, "unknown object \"" + id + "\"");
    references.push_back(ref);
  }
  if (drawings.size() != selection.size()) {
    throw Error(ErrorCode::kDrawingCountMismatch,
                "expected " + std::to_string(selection.size()) + " drawings, got " +
                    std::to_string(drawings.size()));
  }

  UserRecord record;
  record.username = username;
  for (size_t i = 0; i < drawings.size(); ++i) {
    AnalyzedSketch a = Analyze(drawings[i], pipeline_);
    if (MatchHierarchies(a.features, a.features, pipeline_.matcher).similarity != 1.0) {
      throw std::logic_error("template does not match itself");
    }
    const double sim =
        MatchHierarchies(a.features, references[i]->features, pipeline_.matcher).similarity;
    if (sim < auth_.enrollment_threshold) throw EnrollmentError(i, selection[i], sim);
    record.templates.push_back(Template{selection[i], std::move(a.features), std::move(a.sketch)});
  }
  record.password = HashPassword(password, auth_.hash_iterations);
  record.created_at = std::chrono::duration_cast<std::chrono::seconds>(
                          std::chrono::system_clock::now().time_since_epoch())
                          .count();
  store_.Put(record, /*overwrite=*/false);
  return record;
}

std::vector<MatchReport> Authenticator::Compare(const std::vector<Template>& templates,
                                                const std::vector<Sketch>& drawings) const {
  std::vector<MatchReport> reports;
  const size_t n = std::min(templates.size(), drawings.size());
  for (size_t i = 0; i < n; ++i) {
    try {
      const FeatureSet f = Analyze(drawings[i], pipeline_).features;
      reports.push_back(MatchHierarchies(f, templates[i].features, pipeline_.matcher));
    } catch (const Error&) {
      reports.push_back(MatchReport{});
    }
  }
  return reports;
}

AuthDecision Authenticator::Authenticate(const std::string& username,
                                         const std::string& password,
                                         const std::vector<Sketch>& drawings) {
  AuthDecision decision;
  if (const auto wait = limiter_.RetryAfter(username); wait.count() > 0) {
    decision.locked_out = true;
    decision.retry_after = wait;
    return decision;
  }

  const std::optional<UserRecord> record =
      ValidUsername(username) ? store_.Get(username) : std::nullopt;
  const bool password_ok =
      VerifyPassword(password, record ? record->password : decoy_digest_) && record;

  std::vector<Template> decoys;
  if (!record) {
    for (size_t i = 0; i < std::max<size_t>(drawings.size(), 1); ++i) {
      decoys.push_back(decoys_[i % decoys_.size()]);
    }
  }
  const std::vector<Template>& templates = record ? record->templates : decoys;
  std::vector<MatchReport> reports = Compare(templates, drawings);

  bool graphical_ok = drawings.size() == templates.size();
  for (const MatchReport& r : reports) graphical_ok &= r.decision == Decision::kAccept;

  if (password_ok && graphical_ok) {
    decision.outcome = Decision::kAccept;
    limiter_.RecordSuccess(username);
  } else {
    limiter_.RecordFailure(username);
  }
  if (password_ok && drawings.size() == templates.size()) {
    decision.per_object_reports = std::move(reports);
  }
  return decision;
}

}  // namespace sketchauth
