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


// The shared config file: {"preprocess", "merge", "analysis", "matcher",
// "auth", "service"}, every section and field optional.

#ifndef SKETCHAUTH_CONFIG_HPP
#define SKETCHAUTH_CONFIG_HPP

#include <chrono>
#include <filesystem>

#include "sketchauth/authenticator.hpp"
#include "sketchauth/json_io.hpp"
#include "sketchauth/pipeline.hpp"

namespace sketchauth {

struct ServiceConfig {
  std::chrono::seconds token_ttl{300};

  friend bool operator==(const ServiceConfig&, const ServiceConfig&) = default;
};

struct Config {
  PipelineConfig pipeline;
  AuthConfig auth;
  ServiceConfig service;

  friend bool operator==(const Config&, const Config&) = default;
};

// Throws Error(kSchema) for unknown keys, wrong types or invalid values.
Config ConfigFromJson(const Json& doc);
Json ConfigToJson(const Config& cfg);

// Throws Error(kIo) when the file cannot be read.
Config LoadConfig(const std::filesystem::path& path);

// Whole file as a string. Throws Error(kIo).
std::string ReadFile(const std::filesystem::path& path);

}  // namespace sketchauth

#endif  // SKETCHAUTH_CONFIG_HPP
