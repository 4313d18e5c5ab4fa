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


#ifndef VLMGYM_HARNESS_WARMUP_H_
#define VLMGYM_HARNESS_WARMUP_H_

#include "vlmgym/env.h"

namespace vlmgym {

// RNG stream ids under an episode seed.
inline constexpr std::uint64_t kAgentStream = 1;
inline constexpr std::uint64_t kWarmupStream = 2;
inline constexpr std::uint64_t kColdStartStream = 3;

enum class WarmupMode {
  ActionSpace,  // same distribution as RandomAgent
  ValidMoves,   // uniform over ValidMoves(state)
};

// 100 for 2048, 250 for the others.
int DefaultWarmupSteps(GameId game);

// Any action over the game's action space, uniform. 2048: a direction;
// pair games: an ordered pair of distinct cells.
GameAction SampleRandomAction(const GameState& state, Rng& rng);

// Reset then up to n_steps committed random actions; stops early at a
// terminal state or, in ValidMoves mode, when no move exists.
GameState WarmupRandom(GameId game, const DifficultyConfig& cfg, Seed seed,
                       int n_steps, WarmupMode mode = WarmupMode::ActionSpace);

}  // namespace vlmgym

#endif  // VLMGYM_HARNESS_WARMUP_H_
