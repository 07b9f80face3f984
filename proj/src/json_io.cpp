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

#include "sketchauth/json_io.hpp"

#include <cmath>
#include <initializer_list>
#include <limits>

#include "sketchauth/error.hpp"

namespace sketchauth {
namespace {

[[noreturn]] void Fail(const std::string& what) { throw Error(ErrorCode::kSchema, what); }

const Json& RequireObject(const Json& doc, const std::string& what) {
  if (!doc.is_object()) Fail(what + " must be an object");
  return doc;
}

const Json& RequireArray(const Json& doc, const std::string& what) {
  if (!doc.is_array()) Fail(what + " must be an array");
  return doc;
}

void RejectUnknownKeys(const Json& obj, std::initializer_list<std::string_view> known,
                       const std::string& what) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (std::string_view k : known) ok |= key == k;
    if (!ok) Fail("unknown key \"" + key + "\" in " + what);
  }
}

const Json& Field(const Json& obj, const char* key, const std::string& what) {
  auto it = obj.find(key);
  if (it == obj.end()) Fail(what + " is missing \"" + key + "\"");
  return *it;
}

double Number(const Json& v, const std::string& what) {
  if (!v.is_number()) Fail(what + " must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) Fail(what + " must be finite");
  return d;
}

template <typename Int>
Int Integer(const Json& v, const std::string& what) {
  if (!v.is_number_integer()) Fail(what + " must be an integer");
  if (v.is_number_unsigned()) {
    const auto u = v.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(std::numeric_limits<Int>::max())) {
      Fail(what + " is out of range");
    }
    return static_cast<Int>(u);
  }
  const auto i = v.get<std::int64_t>();
  if (i < static_cast<std::int64_t>(std::numeric_limits<Int>::min()) ||
      (i > 0 && static_cast<std::uint64_t>(i) >
                    static_cast<std::uint64_t>(std::numeric_limits<Int>::max()))) {
    Fail(what + " is out of range");
  }
  return static_cast<Int>(i);
}

std::string String(const Json& v, const std::string& what) {
  if (!v.is_string()) Fail(what + " must be a string");
  return v.get<std::string>();
}

Json PointToJson(const Point& p) { return Json::array({p.x, p.y}); }

Point PointFromJson(const Json& v, const std::string& what) {
  RequireArray(v, what);
  if (v.size() != 2) Fail(what + " must be [x, y]");
  return Point{Number(v[0], what + "[0]"), Number(v[1], what + "[1]"), std::nullopt};
}

const char* ClosureName(Closure c) { return c == Closure::kClosed ? "closed" : "open"; }

Closure ClosureFromJson(const Json& v, const std::string& what) {
  const std::string s = String(v, what);
  if (s == "open") return Closure::kOpen;
  if (s == "closed") return Closure::kClosed;
  Fail(what + " must be \"open\" or \"closed\"");
}

std::vector<size_t> IndexList(const Json& v, const std::string& what) {
  RequireArray(v, what);
  std::vector<size_t> out;
  for (const Json& e : v) out.push_back(Integer<size_t>(e, what + " entry"));
  return out;
}

}  // namespace

Json ParseJson(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    Fail(std::string("malformed JSON: ") + e.what());
  }
}

Json SketchToJson(const Sketch& sketch) {
  Json strokes = Json::array();
  for (const Stroke& s : sketch.strokes) {
    Json points = Json::array();
    for (const Point& p : s.points) {
      Json pt = Json::array({p.x, p.y});
      if (p.t) pt.push_back(*p.t);
      points.push_back(std::move(pt));
    }
    strokes.push_back(std::move(points));
  }
  return Json{{"canvas", {{"w", sketch.canvas.width}, {"h", sketch.canvas.height}}},
              {"strokes", std::move(strokes)}};
}

Sketch SketchFromJson(const Json& doc) {
  RequireObject(doc, "stroke document");
  RejectUnknownKeys(doc, {"canvas", "strokes"}, "stroke document");
  Sketch sketch;
  if (auto it = doc.find("canvas"); it != doc.end()) {
    RequireObject(*it, "canvas");
    RejectUnknownKeys(*it, {"w", "h"}, "canvas");
    sketch.canvas.width = Number(Field(*it, "w", "canvas"), "canvas.w");
    sketch.canvas.height = Number(Field(*it, "h", "canvas"), "canvas.h");
  }
  const Json& strokes = RequireArray(Field(doc, "strokes", "stroke document"), "strokes");
  for (size_t i = 0; i < strokes.size(); ++i) {
    const std::string where = "strokes[" + std::to_string(i) + "]";
    const Json& points = RequireArray(strokes[i], where);
    Stroke stroke;
    for (size_t j = 0; j < points.size(); ++j) {
      const std::string pw = where + "[" + std::to_string(j) + "]";
      const Json& pt = RequireArray(points[j], pw);
      if (pt.size() != 2 && pt.size() != 3) Fail(pw + " must be [x, y] or [x, y, t]");
      Point p{Number(pt[0], pw + ".x"), Number(pt[1], pw + ".y"), std::nullopt};
      if (pt.size() == 3) p.t = Number(pt[2], pw + ".t");
      if (j > 0 && p.t.has_value() != stroke.points.front().t.has_value()) {
        Fail(where + " mixes points with and without timestamps");
      }
      stroke.points.push_back(p);
    }
    sketch.strokes.push_back(std::move(stroke));
  }
  return sketch;
}

Json FeatureSetToJson(const FeatureSet& f) {
  Json strokes = Json::array();
  for (const StrokeFeatures& s : f.strokes) {
    strokes.push_back({{"arc_length", s.arc_length},
                       {"direction_histogram", s.direction_histogram},
                       {"total_turning", s.total_turning},
                       {"net_turning", s.net_turning},
                       {"centroid", PointToJson(s.centroid)},
                       {"bbox_aspect", s.bbox_aspect},
                       {"closure", ClosureName(s.closure)}});
  }
  Json bistrokes = Json::array();
  for (const BiStrokeFeatures& b : f.bistrokes) {
    bistrokes.push_back({{"centroid_offset_distance", b.centroid_offset_distance},
                         {"centroid_offset_angle", b.centroid_offset_angle},
                         {"length_ratio", b.length_ratio},
                         {"intersection_count", b.intersection_count}});
  }
  Json hyper = Json::array();
  for (const HyperStrokeFeatures& h : f.hyper_strokes) {
    hyper.push_back({{"area_fraction", h.area_fraction},
                     {"fill_density", h.fill_density},
                     {"centroid", PointToJson(h.centroid)},
                     {"member_count", h.member_count}});
  }
  return Json{{"feature_version", f.feature_version},
              {"strokes", std::move(strokes)},
              {"bistrokes", std::move(bistrokes)},
              {"hyper_strokes", std::move(hyper)},
              {"free_strokes", f.free_strokes}};
}

FeatureSet FeatureSetFromJson(const Json& doc) {
  RequireObject(doc, "features");
  RejectUnknownKeys(doc, {"feature_version", "strokes", "bistrokes", "hyper_strokes",
                          "free_strokes"},
                    "features");
  FeatureSet f;
  f.feature_version = Integer<int>(Field(doc, "feature_version", "features"),
                                   "feature_version");
  for (const Json& s : RequireArray(Field(doc, "strokes", "features"), "strokes")) {
    RequireObject(s, "stroke features");
    RejectUnknownKeys(s, {"arc_length", "direction_histogram", "total_turning",
                          "net_turning", "centroid", "bbox_aspect", "closure"},
                      "stroke features");
    StrokeFeatures sf;
    sf.arc_length = Number(Field(s, "arc_length", "stroke features"), "arc_length");
    const Json& hist = RequireArray(Field(s, "direction_histogram", "stroke features"),
                                    "direction_histogram");
    if (hist.size() != kDirectionBins) Fail("direction_histogram must have 8 bins");
    for (size_t k = 0; k < hist.size(); ++k) {
      sf.direction_histogram[k] = Number(hist[k], "direction_histogram bin");
    }
    sf.total_turning = Number(Field(s, "total_turning", "stroke features"), "total_turning");
    sf.net_turning = Number(Field(s, "net_turning", "stroke features"), "net_turning");
    sf.centroid = PointFromJson(Field(s, "centroid", "stroke features"), "centroid");
    sf.bbox_aspect = Number(Field(s, "bbox_aspect", "stroke features"), "bbox_aspect");
    sf.closure = ClosureFromJson(Field(s, "closure", "stroke features"), "closure");
    f.strokes.push_back(sf);
  }
  for (const Json& b : RequireArray(Field(doc, "bistrokes", "features"), "bistrokes")) {
    RequireObject(b, "bistroke features");
    RejectUnknownKeys(b, {"centroid_offset_distance", "centroid_offset_angle",
                          "length_ratio", "intersection_count"},
                      "bistroke features");
    BiStrokeFeatures bf;
    bf.centroid_offset_distance =
        Number(Field(b, "centroid_offset_distance", "bistroke"), "centroid_offset_distance");
    bf.centroid_offset_angle =
        Number(Field(b, "centroid_offset_angle", "bistroke"), "centroid_offset_angle");
    bf.length_ratio = Number(Field(b, "length_ratio", "bistroke"), "length_ratio");
    bf.intersection_count =
        Integer<int>(Field(b, "intersection_count", "bistroke"), "intersection_count");
    f.bistrokes.push_back(bf);
  }
  for (const Json& h : RequireArray(Field(doc, "hyper_strokes", "features"), "hyper_strokes")) {
    RequireObject(h, "hyper-stroke features");
    RejectUnknownKeys(h, {"area_fraction", "fill_density", "centroid", "member_count"},
                      "hyper-stroke features");
    HyperStrokeFeatures hf;
    hf.area_fraction = Number(Field(h, "area_fraction", "hyper-stroke"), "area_fraction");
    hf.fill_density = Number(Field(h, "fill_density", "hyper-stroke"), "fill_density");
    hf.centroid = PointFromJson(Field(h, "centroid", "hyper-stroke"), "centroid");
    hf.member_count = Integer<int>(Field(h, "member_count", "hyper-stroke"), "member_count");
    f.hyper_strokes.push_back(hf);
  }
  f.free_strokes = IndexList(Field(doc, "free_strokes", "features"), "free_strokes");
  const size_t k = f.strokes.size();
  if (f.bistrokes.size() != k * (k - (k > 0 ? 1 : 0)) / 2) {
    Fail("bistrokes must hold one entry per stroke pair");
  }
  for (size_t i : f.free_strokes) {
    if (i >= k) Fail("free_strokes index out of range");
  }
  return f;
}

Json DigestToJson(const PasswordDigest& d) {
  return Json{{"algorithm", d.algorithm},
              {"iterations", d.iterations},
              {"salt", HexEncode(d.salt)},
              {"digest", HexEncode(d.digest)}};
}

PasswordDigest DigestFromJson(const Json& doc) {
  RequireObject(doc, "password");
  RejectUnknownKeys(doc, {"algorithm", "iterations", "salt", "digest"}, "password");
  PasswordDigest d;
  d.algorithm = String(Field(doc, "algorithm", "password"), "algorithm");
  d.iterations = Integer<std::uint32_t>(Field(doc, "iterations", "password"), "iterations");
  d.salt = HexDecode(String(Field(doc, "salt", "password"), "salt"));
  d.digest = HexDecode(String(Field(doc, "digest", "password"), "digest"));
  return d;
}

Json UserRecordToJson(const UserRecord& r) {
  Json templates = Json::array();
  for (const Template& t : r.templates) {
    templates.push_back({{"object_id", t.object_id},
                         {"features", FeatureSetToJson(t.features)},
                         {"sketch", SketchToJson(t.sketch)}});
  }
  return Json{{"format_version", kRecordFormatVersion},
              {"username", r.username},
              {"created_at", r.created_at},
              {"password", DigestToJson(r.password)},
              {"templates", std::move(templates)}};
}

UserRecord UserRecordFromJson(const Json& doc) {
  RequireObject(doc, "user record");
  RejectUnknownKeys(doc, {"format_version", "username", "created_at", "password", "templates"},
                    "user record");
  const int version = Integer<int>(Field(doc, "format_version", "user record"), "format_version");
  if (version != kRecordFormatVersion) {
    Fail("unsupported record format_version " + std::to_string(version));
  }
  UserRecord r;
  r.username = String(Field(doc, "username", "user record"), "username");
  r.created_at = Integer<std::int64_t>(Field(doc, "created_at", "user record"), "created_at");
  r.password = DigestFromJson(Field(doc, "password", "user record"));
  for (const Json& t : RequireArray(Field(doc, "templates", "user record"), "templates")) {
    RequireObject(t, "template");
    RejectUnknownKeys(t, {"object_id", "features", "sketch"}, "template");
    r.templates.push_back(Template{String(Field(t, "object_id", "template"), "object_id"),
                                   FeatureSetFromJson(Field(t, "features", "template")),
                                   SketchFromJson(Field(t, "sketch", "template"))});
  }
  return r;
}

PipelineConfig PipelineConfigFromJson(const Json& doc, PipelineConfig cfg) {
  RequireObject(doc, "config");
  const auto number = [](const Json& section, const char* key, double& out,
                         const std::string& where) {
    if (auto it = section.find(key); it != section.end()) {
      out = Number(*it, where + "." + key);
    }
  };
  if (auto it = doc.find("preprocess"); it != doc.end()) {
    RequireObject(*it, "preprocess");
    RejectUnknownKeys(*it, {"sigma", "wild_point_factor", "target_size", "margin",
                            "resample_spacing"},
                      "preprocess");
    number(*it, "sigma", cfg.preprocess.sigma, "preprocess");
    number(*it, "wild_point_factor", cfg.preprocess.wild_point_factor, "preprocess");
    number(*it, "target_size", cfg.preprocess.target_size, "preprocess");
    number(*it, "margin", cfg.preprocess.margin, "preprocess");
    number(*it, "resample_spacing", cfg.preprocess.resample_spacing, "preprocess");
  }
  if (auto it = doc.find("merge"); it != doc.end()) {
    RequireObject(*it, "merge");
    RejectUnknownKeys(*it, {"eps_closed", "eps_merge"}, "merge");
    number(*it, "eps_closed", cfg.merge.eps_closed, "merge");
    number(*it, "eps_merge", cfg.merge.eps_merge, "merge");
  }
  if (auto it = doc.find("analysis"); it != doc.end()) {
    RequireObject(*it, "analysis");
    RejectUnknownKeys(*it, {"cell", "density_threshold", "membership_fraction", "pen_width"},
                      "analysis");
    number(*it, "cell", cfg.analysis.cell, "analysis");
    number(*it, "density_threshold", cfg.analysis.density_threshold, "analysis");
    number(*it, "membership_fraction", cfg.analysis.membership_fraction, "analysis");
    number(*it, "pen_width", cfg.analysis.pen_width, "analysis");
  }
  if (auto it = doc.find("matcher"); it != doc.end()) {
    RequireObject(*it, "matcher");
    RejectUnknownKeys(*it, {"accept_threshold", "w_hyper", "w_stroke", "w_bistroke",
                            "unmatched_penalty"},
                      "matcher");
    number(*it, "accept_threshold", cfg.matcher.accept_threshold, "matcher");
    number(*it, "w_hyper", cfg.matcher.w_hyper, "matcher");
    number(*it, "w_stroke", cfg.matcher.w_stroke, "matcher");
    number(*it, "w_bistroke", cfg.matcher.w_bistroke, "matcher");
    number(*it, "unmatched_penalty", cfg.matcher.unmatched_penalty, "matcher");
  }
  try {
    cfg.Validate();
  } catch (const Error& e) {
    Fail(e.what());
  }
  return cfg;
}

Json PipelineConfigToJson(const PipelineConfig& c) {
  return Json{
      {"preprocess",
       {{"sigma", c.preprocess.sigma},
        {"wild_point_factor", c.preprocess.wild_point_factor},
        {"target_size", c.preprocess.target_size},
        {"margin", c.preprocess.margin},
        {"resample_spacing", c.preprocess.resample_spacing}}},
      {"merge", {{"eps_closed", c.merge.eps_closed}, {"eps_merge", c.merge.eps_merge}}},
      {"analysis",
       {{"cell", c.analysis.cell},
        {"density_threshold", c.analysis.density_threshold},
        {"membership_fraction", c.analysis.membership_fraction},
        {"pen_width", c.analysis.pen_width}}},
      {"matcher",
       {{"accept_threshold", c.matcher.accept_threshold},
        {"w_hyper", c.matcher.w_hyper},
        {"w_stroke", c.matcher.w_stroke},
        {"w_bistroke", c.matcher.w_bistroke},
        {"unmatched_penalty", c.matcher.unmatched_penalty}}}};
}

Json PaletteToJson(const ObjectPalette& palette) {
  Json objects = Json::array();
  for (const PaletteObject& o : palette.objects()) {
    objects.push_back({{"id", o.id}, {"name", o.name}, {"glyph", SketchToJson(o.glyph)}});
  }
  return Json{{"objects", std::move(objects)}};
}

}  // namespace sketchauth
