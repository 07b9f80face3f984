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

#include "sketchauth/storage.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cerrno>
#include <cstring>

#include "sketchauth/error.hpp"
#include "sketchauth/json_io.hpp"

namespace sketchauth {
namespace {

constexpr std::string_view kSuffix = ".json";
constexpr std::string_view kTempPrefix = ".tmp-";

[[noreturn]] void IoFail(const std::string& what) {
  throw Error(ErrorCode::kIo, what + ": " + std::strerror(errno));
}

// Usernames are arbitrary bytes; hex keeps file names portable.
std::string EncodeName(const std::string& username) {
  return HexEncode(std::vector<std::uint8_t>(username.begin(), username.end()));
}

void WriteAll(int fd, const std::string& data, const std::string& path) {
  size_t done = 0;
  while (done < data.size()) {
    const ssize_t n = ::write(fd, data.data() + done, data.size() - done);
    if (n < 0) {
      if (errno == EINTR) continue;
      IoFail("write " + path);
    }
    done += static_cast<size_t>(n);
  }
}

void SyncDir(const std::filesystem::path& dir) {
  const int fd = ::open(dir.c_str(), O_RDONLY | O_DIRECTORY);
  if (fd < 0) IoFail("open " + dir.string());
  const int rc = ::fsync(fd);
  ::close(fd);
  if (rc != 0) IoFail("fsync " + dir.string());
}

std::string TempName() {
  static std::atomic<unsigned long> counter{0};
  return std::string(kTempPrefix) + std::to_string(::getpid()) + "-" +
         std::to_string(counter.fetch_add(1)) + "-" + HexEncode(RandomBytes(4));
}

}  // namespace

UserStore::UserStore(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec || !std::filesystem::is_directory(dir_)) {
    throw Error(ErrorCode::kIo, "cannot create store directory " + dir_.string());
  }
}

std::filesystem::path UserStore::PathFor(const std::string& username) const {
  return dir_ / (EncodeName(username) + std::string(kSuffix));
}

std::mutex& UserStore::LockFor(const std::string& username) {
  std::lock_guard lock(locks_mu_);
  auto& slot = locks_[username];
  if (!slot) slot = std::make_unique<std::mutex>();
  return *slot;
}

void UserStore::Put(const UserRecord& record, bool overwrite) {
  if (record.username.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty username");
  }
  const std::string body = UserRecordToJson(record).dump() + "\n";
  std::lock_guard user_lock(LockFor(record.username));

  const std::filesystem::path final_path = PathFor(record.username);
  const std::filesystem::path temp_path = dir_ / TempName();
  const int fd = ::open(temp_path.c_str(), O_WRONLY | O_CREAT | O_EXCL | O_CLOEXEC, 0600);
  if (fd < 0) IoFail("create " + temp_path.string());
  try {
    WriteAll(fd, body, temp_path.string());
    if (::fsync(fd) != 0) IoFail("fsync " + temp_path.string());
  } catch (...) {
    ::close(fd);
    ::unlink(temp_path.c_str());
    throw;
  }
  if (::close(fd) != 0) {
    ::unlink(temp_path.c_str());
    IoFail("close " + temp_path.string());
  }

  if (overwrite) {
    if (::rename(temp_path.c_str(), final_path.c_str()) != 0) {
      const int saved = errno;
      ::unlink(temp_path.c_str());
      errno = saved;
      IoFail("rename to " + final_path.string());
    }
  } else {
    if (::link(temp_path.c_str(), final_path.c_str()) != 0) {
      const int saved = errno;
      ::unlink(temp_path.c_str());
      if (saved == EEXIST) {
        throw Error(ErrorCode::kUsernameTaken, "username already registered");
      }
      errno = saved;
      IoFail("link " + final_path.string());
    }
    ::unlink(temp_path.c_str());
  }
  SyncDir(dir_);
}

std::optional<UserRecord> UserStore::Get(const std::string& username) const {
  const std::filesystem::path path = PathFor(username);
  const int fd = ::open(path.c_str(), O_RDONLY | O_CLOEXEC);
  if (fd < 0) {
    if (errno == ENOENT) return std::nullopt;
    IoFail("open " + path.string());
  }
  std::string text;
  char buf[1 << 16];
  for (;;) {
    const ssize_t n = ::read(fd, buf, sizeof buf);
    if (n < 0) {
      if (errno == EINTR) continue;
      const int saved = errno;
      ::close(fd);
      errno = saved;
      IoFail("read " + path.string());
    }
    if (n == 0) break;
    text.append(buf, static_cast<size_t>(n));
  }
  ::close(fd);
  UserRecord record = UserRecordFromJson(ParseJson(text));
  if (record.username != username) {
    throw Error(ErrorCode::kSchema, "record file " + path.string() + " names another user");
  }
  return record;
}

bool UserStore::Contains(const std::string& username) const {
  return std::filesystem::exists(PathFor(username));
}

std::vector<std::string> UserStore::List() const {
  std::vector<std::string> names;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(dir_, ec)) {
    const std::string file = entry.path().filename().string();
    if (file.starts_with(kTempPrefix) || !file.ends_with(kSuffix)) continue;
    try {
      const auto bytes = HexDecode(file.substr(0, file.size() - kSuffix.size()));
      names.emplace_back(bytes.begin(), bytes.end());
    } catch (const Error&) {
      // Not one of ours.
    }
  }
  if (ec) throw Error(ErrorCode::kIo, "cannot list " + dir_.string() + ": " + ec.message());
  std::sort(names.begin(), names.end());
  return names;
}

}  // namespace sketchauth
