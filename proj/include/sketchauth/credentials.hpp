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

// Text factor: password policy, salted digests, and the password-space count.

#ifndef SKETCHAUTH_CREDENTIALS_HPP
#define SKETCHAUTH_CREDENTIALS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sketchauth {

struct TextPasswordPolicy {
  size_t min_length = 6;
  // Require at least one digit, one lowercase and one uppercase letter.
  bool require_classes = true;

  friend bool operator==(const TextPasswordPolicy&,
                         const TextPasswordPolicy&) = default;
};

enum class PolicyViolation { kTooShort, kMissingDigit, kMissingLower, kMissingUpper };

std::string_view PolicyViolationName(PolicyViolation v);

// Empty when the password is acceptable. Length counts bytes; character
// classes are ASCII.
std::vector<PolicyViolation> ValidateTextPassword(std::string_view password,
                                                  const TextPasswordPolicy& policy = {});

// 2^n - 1. Throws Error(kInvalidArgument) for n < 1 and Error(kOverflow) when
// the count does not fit in 64 bits (n > 64).
std::uint64_t PasswordSpace(int n);

inline constexpr std::string_view kPbkdf2Sha256 = "pbkdf2-sha256";
inline constexpr size_t kSaltBytes = 16;
inline constexpr std::uint32_t kDefaultIterations = 100000;

// Algorithm tag and work factor travel with the digest so stored records can
// be migrated to new parameters.
struct PasswordDigest {
  std::string algorithm{kPbkdf2Sha256};
  std::uint32_t iterations = kDefaultIterations;
  std::vector<std::uint8_t> salt;
  std::vector<std::uint8_t> digest;

  friend bool operator==(const PasswordDigest&, const PasswordDigest&) = default;
};

// Fresh random salt.
PasswordDigest HashPassword(std::string_view password,
                            std::uint32_t iterations = kDefaultIterations);

PasswordDigest HashPassword(std::string_view password, std::uint32_t iterations,
                            std::vector<std::uint8_t> salt);

// Constant-time comparison. False for an unknown algorithm tag.
bool VerifyPassword(std::string_view password, const PasswordDigest& stored);

// Cryptographically random bytes.
std::vector<std::uint8_t> RandomBytes(size_t n);

std::string HexEncode(const std::vector<std::uint8_t>& bytes);
// Throws Error(kSchema) on odd length or a non-hex character.
std::vector<std::uint8_t> HexDecode(std::string_view hex);

}  // namespace sketchauth

#endif  // SKETCHAUTH_CREDENTIALS_HPP
