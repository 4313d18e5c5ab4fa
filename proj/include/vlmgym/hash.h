// Copyright 2026 The vlmgym Authors
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

#ifndef VLMGYM_HASH_H_
#define VLMGYM_HASH_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace vlmgym {

inline constexpr std::uint64_t kFnvOffsetBasis = 0xCBF29CE484222325ULL;
inline constexpr std::uint64_t kFnvPrime = 0x00000100000001B3ULL;

constexpr std::uint64_t Fnv1a64(std::span<const std::uint8_t> bytes,
                                std::uint64_t h = kFnvOffsetBasis) {
  for (std::uint8_t b : bytes) {
    h ^= b;
    h *= kFnvPrime;
  }
  return h;
}

constexpr std::uint64_t Fnv1a64(std::string_view text,
                                std::uint64_t h = kFnvOffsetBasis) {
  for (char c : text) {
    h ^= static_cast<std::uint8_t>(c);
    h *= kFnvPrime;
  }
  return h;
}

// Hex rendering used in logs and golden files.
std::string HashHex(std::uint64_t h);

}  // namespace vlmgym

#endif  // VLMGYM_HASH_H_
