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


#include "sketchauth/config.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "sketchauth/error.hpp"

namespace sketchauth {
namespace {

[[noreturn]] void Fail(const std::string& what) { throw Error(ErrorCode::kSchema, what); }

void CheckKeys(const Json& obj, std::initializer_list<std::string_view> known,
               const std::string& what) {
  if (!obj.is_object()) Fail(what + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (std::string_view k : known) ok |= key == k;
    if (!ok) Fail("unknown key \"" + key + "\" in " + what);
  }
}

const Json* Find(const Json& obj, const char* key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

std::int64_t WholeNumber(const Json& v, const std::string& what, std::int64_t lo,
                         std::int64_t hi) {
  if (!v.is_number_integer()) Fail(what + " must be an integer");
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(hi)) {
    Fail(what + " is out of range");
  }
  const auto i = v.get<std::int64_t>();
  if (i < lo || i > hi) Fail(what + " is out of range");
  return i;
}

}  // namespace

Config ConfigFromJson(const Json& doc) {
  CheckKeys(doc, {"preprocess", "merge", "analysis", "matcher", "auth", "service"}, "config");
  Config cfg;
  Json pipeline = Json::object();
  for (const char* key : {"preprocess", "merge", "analysis", "matcher"}) {
    if (const Json* v = Find(doc, key)) pipeline[key] = *v;
  }
  cfg.pipeline = PipelineConfigFromJson(pipeline);

  if (const Json* auth = Find(doc, "auth")) {
    CheckKeys(*auth, {"min_password_length", "require_character_classes", "hash_iterations",
                      "min_objects", "enrollment_threshold", "max_failures",
                      "lockout_seconds"},
              "auth");
    constexpr std::int64_t kIntMax = std::numeric_limits<int>::max();
    AuthConfig& a = cfg.auth;
    if (const Json* v = Find(*auth, "min_password_length")) {
      a.policy.min_length = static_cast<size_t>(WholeNumber(*v, "auth.min_password_length", 1, 4096));
    }
    if (const Json* v = Find(*auth, "require_character_classes")) {
      if (!v->is_boolean()) Fail("auth.require_character_classes must be true or false");
      a.policy.require_classes = v->get<bool>();
    }
    if (const Json* v = Find(*auth, "hash_iterations")) {
      a.hash_iterations = static_cast<std::uint32_t>(WholeNumber(*v, "auth.hash_iterations", 1, kIntMax));
    }
    if (const Json* v = Find(*auth, "min_objects")) {
      a.min_objects = static_cast<size_t>(WholeNumber(*v, "auth.min_objects", 1, 1024));
    }
    if (const Json* v = Find(*auth, "enrollment_threshold")) {
      if (!v->is_number()) Fail("auth.enrollment_threshold must be a number");
      a.enrollment_threshold = v->get<double>();
    }
    if (const Json* v = Find(*auth, "max_failures")) {
      a.max_failures = static_cast<int>(WholeNumber(*v, "auth.max_failures", 1, kIntMax));
    }
    if (const Json* v = Find(*auth, "lockout_seconds")) {
      a.lockout = std::chrono::seconds(WholeNumber(*v, "auth.lockout_seconds", 0, kIntMax));
    }
    try {
      a.Validate();
    } catch (const Error& e) {
      Fail(e.what());
    }
  }

  if (const Json* service = Find(doc, "service")) {
    CheckKeys(*service, {"token_ttl_seconds"}, "service");
    if (const Json* v = Find(*service, "token_ttl_seconds")) {
      cfg.service.token_ttl = std::chrono::seconds(
          WholeNumber(*v, "service.token_ttl_seconds", 1, std::numeric_limits<int>::max()));
    }
  }
  return cfg;
}

Json ConfigToJson(const Config& cfg) {
  Json doc = PipelineConfigToJson(cfg.pipeline);
  doc["auth"] = {{"min_password_length", cfg.auth.policy.min_length},
                 {"require_character_classes", cfg.auth.policy.require_classes},
                 {"hash_iterations", cfg.auth.hash_iterations},
                 {"min_objects", cfg.auth.min_objects},
                 {"enrollment_threshold", cfg.auth.enrollment_threshold},
                 {"max_failures", cfg.auth.max_failures},
                 {"lockout_seconds", cfg.auth.lockout.count()}};
  doc["service"] = {{"token_ttl_seconds", cfg.service.token_ttl.count()}};
  return doc;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  return text.str();
}

Config LoadConfig(const std::filesystem::path& path) {
  return ConfigFromJson(ParseJson(ReadFile(path)));
}

}  // namespace sketchauth
