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


#include <cstring>
#include <functional>
#include <set>
#include <random>

#include "doctest.h"
#include "sketchauth/config.hpp"
#include "sketchauth/credentials.hpp"
#include "sketchauth/error.hpp"
#include "sketchauth/json_io.hpp"
#include "sketchauth/palette.hpp"
#include "sketchauth/pipeline.hpp"
#include "support.hpp"

using namespace sketchauth;
using namespace sketchauth::testing;

namespace {

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::kIo;
}

bool SameBits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST_CASE("stroke document") {
  const Sketch s = SketchFromJson(ParseJson(
      R"({"canvas": {"w": 200, "h": 100}, "strokes": [[[1, 2], [3.5, 4]], [[0, 0, 10], [5, 5, 20]]]})"));
  CHECK(s.canvas == CanvasSpec{200, 100});
  REQUIRE(s.strokes.size() == 2);
  CHECK(s.strokes[0].points[1] == P(3.5, 4));
  CHECK(s.strokes[1].points[1].t == 20.0);
  CHECK(SketchFromJson(SketchToJson(s)) == s);

  const Sketch d = SketchFromJson(ParseJson(R"({"strokes": [[[1, 2], [3, 4]]]})"));
  CHECK(d.canvas == CanvasSpec{});
}

TEST_CASE("stroke document errors are schema errors") {
  for (const char* bad : {
           R"([])",
           R"({"strokes": 3})",
           R"({"strokes": [[[1]]]})",
           R"({"strokes": [[[1, 2, 3, 4]]]})",
           R"({"strokes": [[["a", 2]]]})",
           R"({"strokes": [[[1, 2, 0], [3, 4]]]})",
           R"({"strokes": [], "extra": 1})",
           R"({"canvas": {"w": 10}, "strokes": []})",
           R"({"canvas": {"w": 10, "h": 10, "d": 1}, "strokes": []})",
       }) {
    CAPTURE(bad);
    CHECK(CodeOf([&] { SketchFromJson(ParseJson(bad)); }) == ErrorCode::kSchema);
  }
  CHECK(CodeOf([] { ParseJson("{not json"); }) == ErrorCode::kSchema);
}

TEST_CASE("feature sets round trip") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 20; ++k) {
    const FeatureSet f = Analyze(RandomSketch(rng, 5, 10)).features;
    CHECK(FeatureSetFromJson(ParseJson(FeatureSetToJson(f).dump())) == f);
  }
  for (const PaletteObject& o : BuiltinPalette().objects()) {
    const FeatureSet f = Analyze(o.glyph).features;
    CHECK(FeatureSetFromJson(ParseJson(FeatureSetToJson(f).dump())) == f);
  }
}

TEST_CASE("feature set errors") {
  FeatureSet f = Analyze(BuiltinPalette().objects()[0].glyph).features;
  Json doc = FeatureSetToJson(f);
  doc["strokes"][0]["closure"] = "ajar";
  CHECK(CodeOf([&] { FeatureSetFromJson(doc); }) == ErrorCode::kSchema);
  doc = FeatureSetToJson(f);
  doc["bistrokes"].push_back(doc["bistrokes"].empty() ? Json::object() : doc["bistrokes"][0]);
  CHECK(CodeOf([&] { FeatureSetFromJson(doc); }) == ErrorCode::kSchema);
  doc = FeatureSetToJson(f);
  doc["mystery"] = true;
  CHECK(CodeOf([&] { FeatureSetFromJson(doc); }) == ErrorCode::kSchema);
}

TEST_CASE("user records round trip bit-exactly") {
  std::mt19937_64 rng(99);
  for (int k = 0; k < 100; ++k) {
    const UserRecord r = RandomRecord(rng, "user" + std::to_string(k));
    const std::string text = UserRecordToJson(r).dump();
    const UserRecord back = UserRecordFromJson(ParseJson(text));
    CHECK(back == r);
    CHECK(UserRecordToJson(back).dump() == text);
    for (size_t t = 0; t < r.templates.size(); ++t) {
      const auto& a = r.templates[t].features.strokes;
      const auto& b = back.templates[t].features.strokes;
      for (size_t i = 0; i < a.size(); ++i) {
        CHECK(SameBits(a[i].arc_length, b[i].arc_length));
        CHECK(SameBits(a[i].centroid.x, b[i].centroid.x));
      }
    }
  }
}

TEST_CASE("user record envelope") {
  std::mt19937_64 rng(1);
  const UserRecord r = RandomRecord(rng, "alice");
  Json doc = UserRecordToJson(r);
  CHECK(doc["format_version"] == kRecordFormatVersion);
  CHECK(doc["password"]["algorithm"] == "pbkdf2-sha256");
  CHECK(doc["password"]["salt"].get<std::string>().size() == 32);

  Json missing = doc;
  missing.erase("format_version");
  CHECK(CodeOf([&] { UserRecordFromJson(missing); }) == ErrorCode::kSchema);
  Json future = doc;
  future["format_version"] = kRecordFormatVersion + 1;
  CHECK(CodeOf([&] { UserRecordFromJson(future); }) == ErrorCode::kSchema);
  Json bad_salt = doc;
  bad_salt["password"]["salt"] = "xyz";
  CHECK(CodeOf([&] { UserRecordFromJson(bad_salt); }) == ErrorCode::kSchema);
}

TEST_CASE("palette document") {
  const Json doc = PaletteToJson(BuiltinPalette());
  REQUIRE(doc["objects"].size() >= 10);
  std::set<std::string> ids;
  for (const Json& o : doc["objects"]) {
    ids.insert(o["id"].get<std::string>());
    CHECK(o["name"].is_string());
    const Sketch glyph = SketchFromJson(o["glyph"]);
    CHECK(ValidateSketch(glyph) == glyph);
  }
  CHECK(ids.size() == doc["objects"].size());
}

TEST_CASE("config file") {
  const Config def = ConfigFromJson(Json::object());
  CHECK(def == Config{});
  CHECK(ConfigFromJson(ConfigToJson(def)) == def);

  const Config c = ConfigFromJson(ParseJson(R"({
    "preprocess": {"sigma": 8},
    "matcher": {"accept_threshold": 0.85},
    "auth": {"min_password_length": 8, "hash_iterations": 1000, "lockout_seconds": 30},
    "service": {"token_ttl_seconds": 60}
  })"));
  CHECK(c.pipeline.preprocess.sigma == 8);
  CHECK(c.pipeline.preprocess.margin == PreprocessConfig{}.margin);
  CHECK(c.pipeline.matcher.accept_threshold == 0.85);
  CHECK(c.auth.policy.min_length == 8);
  CHECK(c.auth.hash_iterations == 1000);
  CHECK(c.auth.lockout == std::chrono::seconds(30));
  CHECK(c.service.token_ttl == std::chrono::seconds(60));
  CHECK(ConfigFromJson(ConfigToJson(c)) == c);

  for (const char* bad : {
           R"({"preprocesss": {}})",
           R"({"preprocess": {"sigmaa": 1}})",
           R"({"preprocess": {"sigma": -1}})",
           R"({"matcher": {"w_stroke": 0.9}})",
           R"({"auth": {"min_objects": 0}})",
           R"({"auth": {"require_character_classes": "yes"}})",
           R"({"service": {"token_ttl_seconds": 1.5}})",
           R"([])",
       }) {
    CAPTURE(bad);
    CHECK(CodeOf([&] { ConfigFromJson(ParseJson(bad)); }) == ErrorCode::kSchema);
  }
}

TEST_CASE("documented examples re-encode byte for byte") {
  const std::string dir = SKETCHAUTH_DOCS_DIR;

  const std::string stroke = ReadFile(dir + "/stroke.json");
  const Sketch sk = SketchFromJson(ParseJson(stroke));
  CHECK(sk.strokes.size() == 2);
  CHECK(sk.strokes[0].points[1].t == 0.12);
  CHECK_FALSE(sk.strokes[1].points[0].t.has_value());
  CHECK(SketchToJson(sk).dump() + "\n" == stroke);

  const std::string record = ReadFile(dir + "/record.json");
  const UserRecord r = UserRecordFromJson(ParseJson(record));
  CHECK(r.username == "alice");
  CHECK(r.templates.at(0).object_id == "plus");
  CHECK(VerifyPassword("Abc123", r.password));
  CHECK_FALSE(VerifyPassword("Abc124", r.password));
  CHECK(UserRecordToJson(r).dump() + "\n" == record);

  const std::string config = ReadFile(dir + "/config.json");
  CHECK(ConfigFromJson(ParseJson(config)) == Config{});
  CHECK(ConfigToJson(Config{}).dump(2) + "\n" == config);
}
