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

#ifndef VLMGYM_RNG_H_
#define VLMGYM_RNG_H_

#include <cstdint>

namespace vlmgym {

// SplitMix64 (Steele, Lea & Flood 2014). The whole generator state is one
// 64-bit word, so it serializes as a single integer and copies with the
// GameState that owns it. All constants are listed in docs/determinism.md.
class Rng {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
  static constexpr std::uint64_t kMul1 = 0xBF58476D1CE4E5B9ULL;
  static constexpr std::uint64_t kMul2 = 0x94D049BB133111EBULL;

  constexpr Rng() = default;
  constexpr explicit Rng(std::uint64_t state) : state_(state) {}

  // Independent stream for a (seed, stream id) pair. Used to keep agent
  // randomness apart from environment randomness under the same seed.
  static constexpr Rng Derive(std::uint64_t seed, std::uint64_t stream) {
    return Rng(Mix(seed ^ Mix(stream + kGamma)));
  }

  static constexpr std::uint64_t Mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * kMul1;
    z = (z ^ (z >> 27)) * kMul2;
    return z ^ (z >> 31);
  }

  constexpr std::uint64_t Next() {
    state_ += kGamma;
    return Mix(state_);
  }

  // Unbiased draw from [0, bound). bound must be positive. Rejection keeps
  // the result identical on every platform.
  constexpr std::uint64_t Uniform(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = Next();
      if (r >= threshold) return r % bound;
    }
  }

  // Forks a child generator; the parent advances by one draw.
  constexpr Rng Split() { return Rng(Mix(Next() ^ kMul2)); }

  constexpr std::uint64_t state() const { return state_; }

  friend constexpr bool operator==(const Rng&, const Rng&) = default;

 private:
  std::uint64_t state_ = 0;
};

}  // namespace vlmgym

#endif  // VLMGYM_RNG_H_
