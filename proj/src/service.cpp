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


#include "sketchauth/service.hpp"

#include <stdexcept>

#include "httplib.h"
#include "sketchauth/error.hpp"
#include "sketchauth/json_io.hpp"

namespace sketchauth {
namespace {

constexpr std::string_view kRejectBody = R"({"result":"reject"})";

HttpResponse JsonResponse(int status, const Json& body) {
  // Messages can echo request bytes; never let bad UTF-8 break the reply.
  return HttpResponse{status, body.dump(-1, ' ', false, Json::error_handler_t::replace), {}};
}

HttpResponse ErrorResponse(int status, std::string_view code, const std::string& message) {
  return JsonResponse(status, Json{{"error", code}, {"message", message}});
}

int RegisterStatus(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSchema: return 400;
    case ErrorCode::kUsernameTaken: return 409;
    case ErrorCode::kIo: return 500;
    default: return 422;
  }
}

const Json& Member(const Json& body, const char* key) {
  auto it = body.find(key);
  if (it == body.end()) {
    throw Error(ErrorCode::kSchema, std::string("request is missing \"") + key + "\"");
  }
  return *it;
}

std::string StringMember(const Json& body, const char* key) {
  const Json& v = Member(body, key);
  if (!v.is_string()) throw Error(ErrorCode::kSchema, std::string(key) + " must be a string");
  return v.get<std::string>();
}

std::vector<Sketch> Drawings(const Json& body) {
  const Json& v = Member(body, "drawings");
  if (!v.is_array()) throw Error(ErrorCode::kSchema, "drawings must be an array");
  std::vector<Sketch> out;
  for (const Json& d : v) out.push_back(SketchFromJson(d));
  return out;
}

Json ParseBody(std::string_view body, std::initializer_list<std::string_view> keys) {
  Json doc = ParseJson(body);
  if (!doc.is_object()) throw Error(ErrorCode::kSchema, "request body must be an object");
  for (const auto& [key, value] : doc.items()) {
    bool ok = false;
    for (std::string_view k : keys) ok |= key == k;
    if (!ok) throw Error(ErrorCode::kSchema, "unknown key \"" + key + "\" in request");
  }
  return doc;
}

}  // namespace

std::string_view RejectBody() { return kRejectBody; }

struct Service::Server {
  httplib::Server http;
};

Service::Service(Authenticator& auth, ServiceConfig cfg,
                 std::function<Clock::time_point()> now)
    : auth_(auth), cfg_(cfg), now_(std::move(now)), server_(std::make_unique<Server>()) {
  for (const PaletteObject& o : auth_.palette().objects()) {
    try {
      ValidateSketch(o.glyph);
    } catch (const Error& e) {
      throw std::runtime_error("palette glyph \"" + o.id + "\" is invalid: " + e.what());
    }
  }
  palette_body_ = PaletteToJson(auth_.palette()).dump();
}

Service::~Service() = default;

HttpResponse Service::Handle(std::string_view method, std::string_view path,
                             std::string_view body) {
  const bool get = method == "GET";
  const bool post = method == "POST";
  if (path == "/palette") {
    if (!get) return ErrorResponse(405, "MethodNotAllowed", "use GET");
    return Palette();
  }
  if (path == "/register" || path == "/authenticate") {
    if (!post) return ErrorResponse(405, "MethodNotAllowed", "use POST");
    if (body.size() > kMaxBodyBytes) {
      return ErrorResponse(413, "PayloadTooLarge", "request body too large");
    }
    return path == "/register" ? Register(body) : Authenticate(body);
  }
  return ErrorResponse(404, "NotFound", "no such route");
}

HttpResponse Service::Palette() const { return HttpResponse{200, palette_body_, {}}; }

HttpResponse Service::Register(std::string_view body) {
  try {
    const Json doc = ParseBody(body, {"username", "password", "selection", "drawings"});
    const std::string username = StringMember(doc, "username");
    const std::string password = StringMember(doc, "password");
    const Json& sel = Member(doc, "selection");
    if (!sel.is_array()) throw Error(ErrorCode::kSchema, "selection must be an array");
    std::vector<std::string> selection;
    for (const Json& id : sel) {
      if (!id.is_string()) throw Error(ErrorCode::kSchema, "selection entries must be strings");
      selection.push_back(id.get<std::string>());
    }
    const std::vector<Sketch> drawings = Drawings(doc);
    const UserRecord record = auth_.Register(username, password, selection, drawings);
    return JsonResponse(201, Json{{"status", "ok"},
                                  {"username", record.username},
                                  {"templates", record.templates.size()}});
  } catch (const PolicyError& e) {
    Json violations = Json::array();
    for (PolicyViolation v : e.violations()) violations.push_back(PolicyViolationName(v));
    return JsonResponse(422, Json{{"error", ErrorCodeName(e.code())},
                                  {"message", e.what()},
                                  {"violations", std::move(violations)}});
  } catch (const EnrollmentError& e) {
    return JsonResponse(422, Json{{"error", ErrorCodeName(e.code())},
                                  {"message", e.what()},
                                  {"index", e.index()},
                                  {"object_id", e.object_id()}});
  } catch (const Error& e) {
    return ErrorResponse(RegisterStatus(e.code()), ErrorCodeName(e.code()), e.what());
  } catch (const std::exception&) {
    return ErrorResponse(500, "InternalError", "registration failed");
  }
}

HttpResponse Service::Authenticate(std::string_view body) {
  std::string username, password;
  std::vector<Sketch> drawings;
  try {
    const Json doc = ParseBody(body, {"username", "password", "drawings"});
    username = StringMember(doc, "username");
    password = StringMember(doc, "password");
    drawings = Drawings(doc);
  } catch (const Error& e) {
    return ErrorResponse(400, ErrorCodeName(e.code()), e.what());
  }
  AuthDecision decision;
  try {
    decision = auth_.Authenticate(username, password, drawings);
  } catch (const std::exception&) {
    return ErrorResponse(500, "InternalError", "authentication unavailable");
  }
  if (decision.locked_out) {
    HttpResponse r = JsonResponse(
        429, Json{{"error", "RateLimited"}, {"retry_after", decision.retry_after.count()}});
    r.headers.emplace_back("Retry-After", std::to_string(decision.retry_after.count()));
    return r;
  }
  if (decision.outcome != Decision::kAccept) {
    return HttpResponse{401, std::string(kRejectBody), {}};
  }
  return JsonResponse(200, Json{{"result", "accept"},
                                {"token", IssueToken()},
                                {"expires_in", cfg_.token_ttl.count()}});
}

std::string Service::IssueToken() {
  std::string token = HexEncode(RandomBytes(32));
  const auto now = now_();
  std::lock_guard lock(tokens_mu_);
  std::erase_if(tokens_, [now](const auto& kv) { return kv.second <= now; });
  tokens_[token] = now + cfg_.token_ttl;
  return token;
}

bool Service::TokenValid(const std::string& token) {
  std::lock_guard lock(tokens_mu_);
  auto it = tokens_.find(token);
  return it != tokens_.end() && now_() < it->second;
}

int Service::Bind(const std::string& host, int port) {
  httplib::Server& http = server_->http;
  http.set_payload_max_length(kMaxBodyBytes);
  const auto bind = [this](const httplib::Request& req, httplib::Response& res) {
    HttpResponse r = Handle(req.method, req.path, req.body);
    res.status = r.status;
    for (auto& [k, v] : r.headers) res.set_header(k, v);
    res.set_content(r.body, "application/json");
  };
  // Every route and method goes through Handle so 404/405 bodies match.
  http.Get(".*", bind);
  http.Post(".*", bind);
  http.Put(".*", bind);
  http.Delete(".*", bind);
  http.Patch(".*", bind);
  if (port == 0) return http.bind_to_any_port(host);
  return http.bind_to_port(host, port) ? port : -1;
}

bool Service::Listen() { return server_->http.listen_after_bind(); }

bool Service::Serve(const std::string& host, int port) {
  return Bind(host, port) >= 0 && Listen();
}

void Service::Stop() { server_->http.stop(); }

}  // namespace sketchauth
