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

#ifndef SKETCHAUTH_RATE_LIMITER_HPP
#define SKETCHAUTH_RATE_LIMITER_HPP

#include <chrono>
#include <functional>
#include <mutex>
#include <string>
#include <unordered_map>

namespace sketchauth {

// Per-username failure counter. After max_failures consecutive failures the
// name is locked for the lockout period; the counter restarts when the lock
// expires or on a success.
class RateLimiter {
 public:
  using Clock = std::chrono::steady_clock;
  using NowFn = std::function<Clock::time_point()>;

  RateLimiter(int max_failures = 5,
              std::chrono::seconds lockout = std::chrono::seconds(60),
              NowFn now = [] { return Clock::now(); });

  // Zero when not locked.
  std::chrono::seconds RetryAfter(const std::string& username);
  bool Locked(const std::string& username) { return RetryAfter(username).count() > 0; }

  void RecordFailure(const std::string& username);
  void RecordSuccess(const std::string& username);

 private:
  struct Entry {
    int failures = 0;
    Clock::time_point locked_until{};
  };

  // Drops an expired lock. Caller holds mu_.
  Entry& Refresh(const std::string& username, Clock::time_point now);

  int max_failures_;
  std::chrono::seconds lockout_;
  NowFn now_;
  std::mutex mu_;
  std::unordered_map<std::string, Entry> entries_;
};

}  // namespace sketchauth

#endif  // SKETCHAUTH_RATE_LIMITER_HPP
