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


// HTTP front end. Routes:
//
//   GET  /palette       200 {"objects": [{"id", "name", "glyph"}, ...]}
//   POST /register      201 {"status": "ok", "username", "templates"}
//                       400 schema error, 409 UsernameTaken, 422 other
//                       registration errors; body {"error", "message", ...}
//   POST /authenticate  200 {"result": "accept", "token", "expires_in"}
//                       401 {"result": "reject"} for every failure cause
//                       429 {"error": "RateLimited", "retry_after"}
//
// Handle() is the whole protocol; Serve() only binds it to a socket.

#ifndef SKETCHAUTH_SERVICE_HPP
#define SKETCHAUTH_SERVICE_HPP

#include <chrono>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sketchauth/authenticator.hpp"
#include "sketchauth/config.hpp"

namespace sketchauth {

struct HttpResponse {
  int status = 200;
  std::string body;
  std::vector<std::pair<std::string, std::string>> headers;
};

// Request bodies larger than this are refused.
inline constexpr size_t kMaxBodyBytes = 4 << 20;

class Service {
 public:
  using Clock = std::chrono::steady_clock;

  // Throws std::runtime_error if a palette glyph fails sketch validation.
  Service(Authenticator& auth, ServiceConfig cfg = {},
          std::function<Clock::time_point()> now = [] { return Clock::now(); });
  ~Service();

  HttpResponse Handle(std::string_view method, std::string_view path,
                      std::string_view body);

  // True while the token has not expired.
  bool TokenValid(const std::string& token);

  // Binds the listening socket; port 0 picks a free one. Returns the bound
  // port, or -1 on failure.
  int Bind(const std::string& host, int port);
  // Serves on the bound socket until Stop().
  bool Listen();
  // Bind then Listen. Returns false if the address cannot be bound.
  bool Serve(const std::string& host, int port);
  void Stop();

 private:
  HttpResponse Palette() const;
  HttpResponse Register(std::string_view body);
  HttpResponse Authenticate(std::string_view body);
  std::string IssueToken();

  Authenticator& auth_;
  ServiceConfig cfg_;
  std::function<Clock::time_point()> now_;
  std::string palette_body_;
  std::mutex tokens_mu_;
  std::unordered_map<std::string, Clock::time_point> tokens_;
  struct Server;
  std::unique_ptr<Server> server_;
};

// The fixed body of every 401 from /authenticate.
std::string_view RejectBody();

}  // namespace sketchauth

#endif  // SKETCHAUTH_SERVICE_HPP
