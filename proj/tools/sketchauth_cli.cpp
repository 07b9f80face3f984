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

// sketchauth: offline enrollment, verification and matching, plus the HTTP
// service.
//
// Exit status: 0 success (verify: ACCEPT), 1 verify REJECT, 2 any error.

#include <csignal>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sketchauth/authenticator.hpp"
#include "sketchauth/config.hpp"
#include "sketchauth/credentials.hpp"
#include "sketchauth/error.hpp"
#include "sketchauth/json_io.hpp"
#include "sketchauth/palette.hpp"
#include "sketchauth/pipeline.hpp"
#include "sketchauth/service.hpp"
#include "sketchauth/storage.hpp"

namespace {

using namespace sketchauth;

constexpr int kExitReject = 1;
constexpr int kExitError = 2;

Service* g_service = nullptr;

void OnSignal(int) {
  if (g_service != nullptr) g_service->Stop();
}

Config ConfigOrDefault(const std::string& path) {
  return path.empty() ? Config{} : LoadConfig(path);
}

Sketch ReadSketch(const std::string& path) {
  try {
    return SketchFromJson(ParseJson(ReadFile(path)));
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

std::vector<Sketch> ReadSketches(const std::vector<std::string>& paths) {
  std::vector<Sketch> out;
  for (const std::string& p : paths) out.push_back(ReadSketch(p));
  return out;
}

// A JSON array of object ids, or {"selection": [...]}.
std::vector<std::string> ReadSelection(const std::string& path) {
  Json doc = ParseJson(ReadFile(path));
  if (doc.is_object()) {
    if (doc.size() != 1 || !doc.contains("selection")) {
      throw Error(ErrorCode::kSchema, path + ": expected {\"selection\": [...]}");
    }
    doc = doc["selection"];
  }
  if (!doc.is_array()) throw Error(ErrorCode::kSchema, path + ": selection must be an array");
  std::vector<std::string> ids;
  for (const Json& id : doc) {
    if (!id.is_string()) throw Error(ErrorCode::kSchema, path + ": object ids must be strings");
    ids.push_back(id.get<std::string>());
  }
  return ids;
}

// "-" reads the password from the first line of standard input.
std::string ResolvePassword(const std::string& arg) {
  if (arg != "-") return arg;
  std::string line;
  std::getline(std::cin, line);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

bool SplitAddr(const std::string& addr, std::string& host, int& port) {
  const auto colon = addr.rfind(':');
  if (colon == std::string::npos) return false;
  host = addr.substr(0, colon);
  try {
    size_t used = 0;
    port = std::stoi(addr.substr(colon + 1), &used);
    if (used != addr.size() - colon - 1) return false;
  } catch (const std::exception&) {
    return false;
  }
  return !host.empty() && port >= 0 && port < 65536;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graphical and textual two-factor authentication with sketches"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "Config file")->check(CLI::ExistingFile);

  std::string store_dir = "sketchauth-store";
  std::string username, password, selection_path, addr = "127.0.0.1:8080";
  std::vector<std::string> drawing_paths;
  std::string a_path, b_path;
  int n = 0;
  bool verbose = false;

  CLI::App* enroll = app.add_subcommand("enroll", "Register a user from drawing files");
  enroll->add_option("username", username)->required();
  enroll->add_option("password", password, "Text password, or - for stdin")->required();
  enroll->add_option("selection", selection_path, "JSON list of object ids")
      ->required()
      ->check(CLI::ExistingFile);
  enroll->add_option("drawings", drawing_paths, "Stroke files, in selection order")
      ->required()
      ->check(CLI::ExistingFile);
  enroll->add_option("--store", store_dir, "Store directory");

  CLI::App* verify = app.add_subcommand("verify", "Authenticate; exit 0 on ACCEPT, 1 on REJECT");
  verify->add_option("username", username)->required();
  verify->add_option("password", password, "Text password, or - for stdin")->required();
  verify->add_option("drawings", drawing_paths, "Stroke files, in order")
      ->required()
      ->check(CLI::ExistingFile);
  verify->add_option("--store", store_dir, "Store directory");
  verify->add_flag("-v,--verbose", verbose, "Print per-drawing similarities");

  CLI::App* match = app.add_subcommand("match", "Similarity of two stroke files");
  match->add_option("candidate", a_path)->required()->check(CLI::ExistingFile);
  match->add_option("template", b_path)->required()->check(CLI::ExistingFile);
  match->add_flag("-v,--verbose", verbose, "Print level scores");

  CLI::App* space = app.add_subcommand("space", "Password space 2^n - 1");
  space->add_option("n", n, "Number of selected objects")->required();

  CLI::App* palette = app.add_subcommand("palette", "Print the object palette");
  bool ids_only = false;
  palette->add_flag("--ids", ids_only, "Print only object ids and names");

  CLI::App* analyze = app.add_subcommand("analyze", "Print the features of a stroke file");
  analyze->add_option("drawing", a_path)->required()->check(CLI::ExistingFile);

  CLI::App* serve = app.add_subcommand("serve", "Run the HTTP service");
  serve->add_option("--addr", addr, "Listen address host:port (port 0 picks a free one)");
  serve->add_option("--store", store_dir, "Store directory");

  CLI11_PARSE(app, argc, argv);

  try {
    const Config cfg = ConfigOrDefault(config_path);

    if (*space) {
      std::cout << PasswordSpace(n) << "\n";
      return 0;
    }
    if (*palette) {
      if (ids_only) {
        for (const PaletteObject& o : BuiltinPalette().objects()) {
          std::cout << o.id << "\t" << o.name << "\n";
        }
      } else {
        std::cout << PaletteToJson(BuiltinPalette()).dump() << "\n";
      }
      return 0;
    }
    if (*match) {
      const FeatureSet a = Analyze(ReadSketch(a_path), cfg.pipeline).features;
      const FeatureSet b = Analyze(ReadSketch(b_path), cfg.pipeline).features;
      const MatchReport r = MatchHierarchies(a, b, cfg.pipeline.matcher);
      std::printf("%.4f\n", r.similarity);
      if (verbose) {
        static const char* kNames[] = {"hyper", "stroke", "bistroke"};
        for (int l = 0; l < 3; ++l) {
          if (!r.level_present[l]) continue;
          std::printf("%s %.4f weight %.4f\n", kNames[l], r.level_scores[l],
                      r.effective_weights[l]);
        }
        std::printf("%s\n", r.decision == Decision::kAccept ? "ACCEPT" : "REJECT");
      }
      return 0;
    }
    if (*analyze) {
      const AnalyzedSketch a = Analyze(ReadSketch(a_path), cfg.pipeline);
      std::cout << FeatureSetToJson(a.features).dump(2) << "\n";
      return 0;
    }

    UserStore store(store_dir);
    Authenticator auth(store, BuiltinPalette(), cfg.pipeline, cfg.auth);

    if (*enroll) {
      const std::vector<std::string> selection = ReadSelection(selection_path);
      const UserRecord r = auth.Register(username, ResolvePassword(password), selection,
                                         ReadSketches(drawing_paths));
      std::cout << "enrolled " << r.username << " with " << r.templates.size()
                << " drawings\n";
      return 0;
    }
    if (*verify) {
      const AuthDecision d =
          auth.Authenticate(username, ResolvePassword(password), ReadSketches(drawing_paths));
      if (verbose) {
        for (size_t i = 0; i < d.per_object_reports.size(); ++i) {
          std::printf("drawing %zu %.4f\n", i, d.per_object_reports[i].similarity);
        }
      }
      if (d.locked_out) {
        std::cerr << "locked out; retry after " << d.retry_after.count() << " s\n";
      }
      const bool ok = d.outcome == Decision::kAccept;
      std::cout << (ok ? "ACCEPT" : "REJECT") << "\n";
      return ok ? 0 : kExitReject;
    }
    if (*serve) {
      std::string host;
      int port = 0;
      if (!SplitAddr(addr, host, port)) {
        std::cerr << "sketchauth: --addr must be host:port\n";
        return kExitError;
      }
      Service service(auth, cfg.service);
      g_service = &service;
      std::signal(SIGINT, OnSignal);
      std::signal(SIGTERM, OnSignal);
      const int bound = service.Bind(host, port);
      if (bound < 0) {
        std::cerr << "sketchauth: cannot listen on " << addr << "\n";
        return kExitError;
      }
      std::cerr << "listening on " << host << ":" << bound << "\n";
      return service.Listen() ? 0 : kExitError;
    }
  } catch (const PolicyError& e) {
    std::cerr << "sketchauth: " << e.what() << "\n";
    return kExitError;
  } catch (const Error& e) {
    std::cerr << "sketchauth: " << ErrorCodeName(e.code()) << ": " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "sketchauth: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
