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

#include "sketchauth/rate_limiter.hpp"

#include <stdexcept>

namespace sketchauth {

RateLimiter::RateLimiter(int max_failures, std::chrono::seconds lockout, NowFn now)
    : max_failures_(max_failures), lockout_(lockout), now_(std::move(now)) {
  if (max_failures < 1) throw std::invalid_argument("max_failures must be >= 1");
  if (lockout.count() < 0) throw std::invalid_argument("lockout must be >= 0");
}

RateLimiter::Entry& RateLimiter::Refresh(const std::string& username,
                                         Clock::time_point now) {
  Entry& e = entries_[username];
  if (e.failures >= max_failures_ && now >= e.locked_until) e = Entry{};
  return e;
}

std::chrono::seconds RateLimiter::RetryAfter(const std::string& username) {
  std::lock_guard lock(mu_);
  const auto now = now_();
  auto it = entries_.find(username);
  if (it == entries_.end()) return std::chrono::seconds(0);
  const Entry& e = Refresh(username, now);
  if (e.failures < max_failures_) return std::chrono::seconds(0);
  // Round up so a caller told "retry after N" is never still locked at N.
  const auto left = e.locked_until - now;
  return std::chrono::ceil<std::chrono::seconds>(left);
}

void RateLimiter::RecordFailure(const std::string& username) {
  std::lock_guard lock(mu_);
  const auto now = now_();
  Entry& e = Refresh(username, now);
  if (e.failures >= max_failures_) return;
  if (++e.failures == max_failures_) e.locked_until = now + lockout_;
}

void RateLimiter::RecordSuccess(const std::string& username) {
  std::lock_guard lock(mu_);
  entries_.erase(username);
}

}  // namespace sketchauth
