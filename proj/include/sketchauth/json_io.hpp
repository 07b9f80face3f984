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

// Text encodings shared by the CLI, the service and the store.
//
// Stroke document:
//   {"canvas": {"w": 240, "h": 320}, "strokes": [[[x, y, t?], ...], ...]}
// "canvas" may be omitted (defaults to 240x320). Within a stroke either every
// point carries a timestamp or none does.
//
// Every parser throws Error(kSchema) on a malformed document, including
// unknown keys, so a typo in a config file never passes silently.

#ifndef SKETCHAUTH_JSON_IO_HPP
#define SKETCHAUTH_JSON_IO_HPP

#include <string>
#include <string_view>

#include "json.hpp"
#include "sketchauth/analysis.hpp"
#include "sketchauth/geometry.hpp"
#include "sketchauth/palette.hpp"
#include "sketchauth/pipeline.hpp"
#include "sketchauth/record.hpp"

namespace sketchauth {

using Json = nlohmann::json;

inline constexpr int kRecordFormatVersion = 1;

// Throws Error(kSchema) when the text is not well-formed JSON.
Json ParseJson(std::string_view text);

Json SketchToJson(const Sketch& sketch);
Sketch SketchFromJson(const Json& doc);

Json FeatureSetToJson(const FeatureSet& features);
FeatureSet FeatureSetFromJson(const Json& doc);

Json DigestToJson(const PasswordDigest& digest);
PasswordDigest DigestFromJson(const Json& doc);

// Envelope with a mandatory "format_version".
Json UserRecordToJson(const UserRecord& record);
UserRecord UserRecordFromJson(const Json& doc);

// Sections "preprocess", "merge", "analysis", "matcher"; every field
// optional. Fields absent from the document keep their value in `base`.
PipelineConfig PipelineConfigFromJson(const Json& doc, PipelineConfig base = {});
Json PipelineConfigToJson(const PipelineConfig& cfg);

// {"objects": [{"id", "name", "glyph": stroke document}, ...]}
Json PaletteToJson(const ObjectPalette& palette);

}  // namespace sketchauth

#endif  // SKETCHAUTH_JSON_IO_HPP
