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


#include <atomic>
#include <fstream>
#include <random>
#include <thread>

#include "doctest.h"
#include "sketchauth/error.hpp"
#include "sketchauth/storage.hpp"
#include "support.hpp"

using namespace sketchauth;
using namespace sketchauth::testing;

TEST_CASE("put then get") {
  TempDir dir;
  UserStore store(dir.path());
  std::mt19937_64 rng(1);
  const UserRecord r = RandomRecord(rng, "alice");
  CHECK_FALSE(store.Get("alice").has_value());
  CHECK_FALSE(store.Contains("alice"));
  store.Put(r);
  CHECK(store.Contains("alice"));
  CHECK(store.Get("alice") == r);
  CHECK_FALSE(store.Get("bob").has_value());
}

TEST_CASE("duplicates need the overwrite flag") {
  TempDir dir;
  UserStore store(dir.path());
  std::mt19937_64 rng(2);
  const UserRecord first = RandomRecord(rng, "alice");
  const UserRecord second = RandomRecord(rng, "alice");
  store.Put(first);
  try {
    store.Put(second);
    FAIL("expected UsernameTaken");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kUsernameTaken);
  }
  CHECK(store.Get("alice") == first);
  store.Put(second, /*overwrite=*/true);
  CHECK(store.Get("alice") == second);
  // No temporary files are left behind.
  int files = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir.path())) {
    (void)e;
    ++files;
  }
  CHECK(files == 1);
}

TEST_CASE("records survive reopening") {
  TempDir dir;
  std::mt19937_64 rng(3);
  std::vector<UserRecord> records;
  {
    UserStore store(dir.path());
    for (int i = 0; i < 50; ++i) {
      records.push_back(RandomRecord(rng, "user-" + std::to_string(i)));
      store.Put(records.back());
    }
  }
  UserStore reopened(dir.path());
  for (const UserRecord& r : records) CHECK(reopened.Get(r.username) == r);
  std::vector<std::string> names;
  for (const UserRecord& r : records) names.push_back(r.username);
  std::sort(names.begin(), names.end());
  CHECK(reopened.List() == names);
}

TEST_CASE("odd usernames map to safe file names") {
  TempDir dir;
  UserStore store(dir.path());
  std::mt19937_64 rng(4);
  for (const std::string& name : std::vector<std::string>{"../etc/passwd", "a/b", "名前", ".tmp-1", "x y", std::string(64, 'z')}) {
    const UserRecord r = RandomRecord(rng, name);
    store.Put(r);
    CHECK(store.Get(name) == r);
    CHECK(store.PathFor(name).parent_path() == dir.path());
  }
  CHECK(store.List().size() == 6);
}

TEST_CASE("corrupt records are schema errors") {
  TempDir dir;
  UserStore store(dir.path());
  std::ofstream(store.PathFor("mallory")) << "{\"format_version\": 1";
  try {
    store.Get("mallory");
    FAIL("expected SchemaError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kSchema);
  }
  // A file renamed to another user's slot is refused.
  std::mt19937_64 rng(5);
  store.Put(RandomRecord(rng, "alice"));
  std::filesystem::copy_file(store.PathFor("alice"), store.PathFor("bob"));
  CHECK_THROWS_AS(store.Get("bob"), Error);
}

TEST_CASE("concurrent registrations of one name have one winner") {
  for (int round = 0; round < 10; ++round) {
    TempDir dir;
    UserStore a(dir.path()), b(dir.path());  // two handles, like two processes
    std::mt19937_64 rng(static_cast<unsigned>(round));
    std::vector<UserRecord> recs;
    for (int i = 0; i < 8; ++i) recs.push_back(RandomRecord(rng, "contested"));
    std::atomic<int> wins{0}, taken{0};
    std::vector<std::thread> threads;
    for (int i = 0; i < 8; ++i) {
      threads.emplace_back([&, i] {
        try {
          (i % 2 ? a : b).Put(recs[static_cast<size_t>(i)]);
          ++wins;
        } catch (const Error& e) {
          if (e.code() == ErrorCode::kUsernameTaken) ++taken;
        }
      });
    }
    for (auto& t : threads) t.join();
    CHECK(wins == 1);
    CHECK(taken == 7);
    const auto stored = a.Get("contested");
    REQUIRE(stored.has_value());
    CHECK(std::find(recs.begin(), recs.end(), *stored) != recs.end());
  }
}

TEST_CASE("readers see old or new during overwrites") {
  TempDir dir;
  UserStore store(dir.path());
  std::mt19937_64 rng(6);
  const UserRecord v1 = RandomRecord(rng, "alice"), v2 = RandomRecord(rng, "alice");
  store.Put(v1);
  std::atomic<bool> done{false};
  std::atomic<int> bad{0}, reads{0};
  std::thread reader([&] {
    while (!done) {
      const auto r = store.Get("alice");
      if (!r || (*r != v1 && *r != v2)) ++bad;
      ++reads;
    }
  });
  for (int i = 0; i < 100; ++i) store.Put(i % 2 ? v1 : v2, true);
  done = true;
  reader.join();
  CHECK(bad == 0);
  CHECK(reads > 0);
}
