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

#include "sketchauth/credentials.hpp"

#include <openssl/crypto.h>
#include <openssl/evp.h>
#include <openssl/rand.h>

#include <limits>

#include "sketchauth/error.hpp"

namespace sketchauth {

std::string_view PolicyViolationName(PolicyViolation v) {
  switch (v) {
    case PolicyViolation::kTooShort: return "TooShort";
    case PolicyViolation::kMissingDigit: return "MissingDigit";
    case PolicyViolation::kMissingLower: return "MissingLower";
    case PolicyViolation::kMissingUpper: return "MissingUpper";
  }
  return "Unknown";
}

std::vector<PolicyViolation> ValidateTextPassword(std::string_view password,
                                                  const TextPasswordPolicy& policy) {
  std::vector<PolicyViolation> out;
  if (password.size() < policy.min_length) out.push_back(PolicyViolation::kTooShort);
  if (!policy.require_classes) return out;
  bool digit = false, lower = false, upper = false;
  for (char c : password) {
    digit |= c >= '0' && c <= '9';
    lower |= c >= 'a' && c <= 'z';
    upper |= c >= 'A' && c <= 'Z';
  }
  if (!digit) out.push_back(PolicyViolation::kMissingDigit);
  if (!lower) out.push_back(PolicyViolation::kMissingLower);
  if (!upper) out.push_back(PolicyViolation::kMissingUpper);
  return out;
}

std::uint64_t PasswordSpace(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "password_space needs n >= 1");
  if (n > 64) throw Error(ErrorCode::kOverflow, "password_space(n) exceeds 64 bits for n > 64");
  if (n == 64) return std::numeric_limits<std::uint64_t>::max();
  return (std::uint64_t{1} << n) - 1;
}

std::vector<std::uint8_t> RandomBytes(size_t n) {
  std::vector<std::uint8_t> out(n);
  if (n > 0 && RAND_bytes(out.data(), static_cast<int>(n)) != 1) {
    throw std::runtime_error("RAND_bytes failed");
  }
  return out;
}

PasswordDigest HashPassword(std::string_view password, std::uint32_t iterations) {
  return HashPassword(password, iterations, RandomBytes(kSaltBytes));
}

PasswordDigest HashPassword(std::string_view password, std::uint32_t iterations,
                            std::vector<std::uint8_t> salt) {
  if (iterations == 0 || iterations > static_cast<std::uint32_t>(std::numeric_limits<int>::max())) {
    throw Error(ErrorCode::kInvalidArgument, "iteration count out of range");
  }
  PasswordDigest d;
  d.iterations = iterations;
  d.salt = std::move(salt);
  d.digest.resize(32);
  if (PKCS5_PBKDF2_HMAC(password.data(), static_cast<int>(password.size()),
                        d.salt.data(), static_cast<int>(d.salt.size()),
                        static_cast<int>(iterations), EVP_sha256(),
                        static_cast<int>(d.digest.size()), d.digest.data()) != 1) {
    throw std::runtime_error("PKCS5_PBKDF2_HMAC failed");
  }
  return d;
}

bool VerifyPassword(std::string_view password, const PasswordDigest& stored) {
  if (stored.algorithm != kPbkdf2Sha256 || stored.digest.size() != 32 ||
      stored.iterations == 0) {
    return false;
  }
  const PasswordDigest fresh = HashPassword(password, stored.iterations, stored.salt);
  return CRYPTO_memcmp(fresh.digest.data(), stored.digest.data(), 32) == 0;
}

std::string HexEncode(const std::vector<std::uint8_t>& bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

std::vector<std::uint8_t> HexDecode(std::string_view hex) {
  if (hex.size() % 2 != 0) throw Error(ErrorCode::kSchema, "hex string of odd length");
  const auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw Error(ErrorCode::kSchema, "invalid hex character");
  };
  std::vector<std::uint8_t> out(hex.size() / 2);
  for (size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<std::uint8_t>(nibble(hex[2 * i]) << 4 | nibble(hex[2 * i + 1]));
  }
  return out;
}

}  // namespace sketchauth
