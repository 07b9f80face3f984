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


// Python module sketchauth._core. Documents cross the boundary as JSON text;
// the sketchauth package wraps these with json.loads / json.dumps.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <string>
#include <vector>

#include "sketchauth/authenticator.hpp"
#include "sketchauth/config.hpp"
#include "sketchauth/credentials.hpp"
#include "sketchauth/error.hpp"
#include "sketchauth/json_io.hpp"
#include "sketchauth/palette.hpp"
#include "sketchauth/pipeline.hpp"
#include "sketchauth/preprocess.hpp"
#include "sketchauth/storage.hpp"

namespace py = pybind11;
using namespace sketchauth;

namespace {

Config ParseConfig(const std::string& text) {
  return text.empty() ? Config{} : ConfigFromJson(ParseJson(text));
}

std::vector<Sketch> ParseSketches(const std::vector<std::string>& docs) {
  std::vector<Sketch> out;
  for (const std::string& d : docs) out.push_back(SketchFromJson(ParseJson(d)));
  return out;
}

std::string ReportJson(const MatchReport& r) {
  return Json{{"similarity", r.similarity},
              {"level_scores", r.level_scores},
              {"level_present", r.level_present},
              {"decision", r.decision == Decision::kAccept ? "accept" : "reject"}}
      .dump();
}

// Owns the store its Authenticator refers to.
class PyAuthenticator {
 public:
  PyAuthenticator(const std::string& store_dir, const std::string& config)
      : cfg_(ParseConfig(config)),
        store_(store_dir),
        auth_(store_, BuiltinPalette(), cfg_.pipeline, cfg_.auth) {}

  void Register(const std::string& username, const std::string& password,
                const std::vector<std::string>& selection,
                const std::vector<std::string>& drawings) {
    auth_.Register(username, password, selection, ParseSketches(drawings));
  }

  bool Authenticate(const std::string& username, const std::string& password,
                    const std::vector<std::string>& drawings) {
    return auth_.Authenticate(username, password, ParseSketches(drawings)).outcome ==
           Decision::kAccept;
  }

 private:
  Config cfg_;
  UserStore store_;
  Authenticator auth_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sketch-based two-factor authentication core";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error;
  error.call_once_and_store_result(
      [&m] { return py::exception<Error>(m, "SketchAuthError", PyExc_ValueError); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const std::string msg = std::string(ErrorCodeName(e.code())) + ": " + e.what();
      py::set_error(error.get_stored(), msg.c_str());
    }
  });

  m.def("gaussian_weight", &GaussianWeight, py::arg("r"), py::arg("sigma"),
        py::arg("dimension"));
  m.def("password_space", &PasswordSpace, py::arg("n"));
  m.def(
      "validate_text_password",
      [](const std::string& password, size_t min_length, bool require_classes) {
        std::vector<std::string> out;
        for (PolicyViolation v :
             ValidateTextPassword(password, TextPasswordPolicy{min_length, require_classes})) {
          out.emplace_back(PolicyViolationName(v));
        }
        return out;
      },
      py::arg("password"), py::arg("min_length") = 6, py::arg("require_classes") = true);
  m.def("palette_json", [] { return PaletteToJson(BuiltinPalette()).dump(); });
  m.def(
      "analyze_json",
      [](const std::string& doc, const std::string& config) {
        const Config cfg = ParseConfig(config);
        return FeatureSetToJson(Analyze(SketchFromJson(ParseJson(doc)), cfg.pipeline).features)
            .dump();
      },
      py::arg("doc"), py::arg("config") = "");
  m.def(
      "match_json",
      [](const std::string& candidate, const std::string& templ, const std::string& config) {
        const Config cfg = ParseConfig(config);
        const FeatureSet a = Analyze(SketchFromJson(ParseJson(candidate)), cfg.pipeline).features;
        const FeatureSet b = Analyze(SketchFromJson(ParseJson(templ)), cfg.pipeline).features;
        return ReportJson(MatchHierarchies(a, b, cfg.pipeline.matcher));
      },
      py::arg("candidate"), py::arg("template"), py::arg("config") = "");

  py::class_<PyAuthenticator>(m, "Authenticator")
      .def(py::init<const std::string&, const std::string&>(), py::arg("store_dir"),
           py::arg("config") = "")
      .def("register", &PyAuthenticator::Register, py::arg("username"), py::arg("password"),
           py::arg("selection"), py::arg("drawings"))
      .def("authenticate", &PyAuthenticator::Authenticate, py::arg("username"),
           py::arg("password"), py::arg("drawings"));
}
