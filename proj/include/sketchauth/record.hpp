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

#ifndef SKETCHAUTH_RECORD_HPP
#define SKETCHAUTH_RECORD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sketchauth/analysis.hpp"
#include "sketchauth/credentials.hpp"
#include "sketchauth/geometry.hpp"

namespace sketchauth {

// One enrolled drawing.
struct Template {
  std::string object_id;
  FeatureSet features;
  Sketch sketch;  // preprocessed and merged

  friend bool operator==(const Template&, const Template&) = default;
};

struct UserRecord {
  std::string username;
  PasswordDigest password;
  // In selection order; authentication compares drawing k with template k.
  std::vector<Template> templates;
  std::int64_t created_at = 0;  // seconds since the Unix epoch

  friend bool operator==(const UserRecord&, const UserRecord&) = default;
};

}  // namespace sketchauth

#endif  // SKETCHAUTH_RECORD_HPP
