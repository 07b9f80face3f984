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

// Directory of user records, one JSON file per user.
//
// A record is written to a temporary file, flushed, and then published in a
// single step: link(2) when creating (fails if the name exists, so concurrent
// registrations of one username have exactly one winner, across processes
// too) or rename(2) when overwriting. Readers therefore see the old record or
// the new one, never a partial file.

#ifndef SKETCHAUTH_STORAGE_HPP
#define SKETCHAUTH_STORAGE_HPP

#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sketchauth/record.hpp"

namespace sketchauth {

class UserStore {
 public:
  // Creates the directory if needed. Throws Error(kIo) on failure.
  explicit UserStore(std::filesystem::path dir);

  // Throws Error(kUsernameTaken) if the user exists and !overwrite, and
  // Error(kIo) on any filesystem failure (disk full included).
  void Put(const UserRecord& record, bool overwrite = false);

  // Throws Error(kIo) on read failure and Error(kSchema) on a corrupt record.
  std::optional<UserRecord> Get(const std::string& username) const;

  bool Contains(const std::string& username) const;

  // Usernames in ascending byte order.
  std::vector<std::string> List() const;

  const std::filesystem::path& dir() const { return dir_; }

  // File that holds `username`'s record.
  std::filesystem::path PathFor(const std::string& username) const;

 private:
  std::mutex& LockFor(const std::string& username);

  std::filesystem::path dir_;
  std::mutex locks_mu_;
  std::unordered_map<std::string, std::unique_ptr<std::mutex>> locks_;
};

}  // namespace sketchauth

#endif  // SKETCHAUTH_STORAGE_HPP
