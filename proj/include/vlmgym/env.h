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

#ifndef VLMGYM_ENV_H_
#define VLMGYM_ENV_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vlmgym/rng.h"
#include "vlmgym/types.h"

namespace vlmgym {

inline constexpr int kStateSchemaVersion = 1;

// Complete simulation state of one game. A plain value: copying it forks
// the game, RNG included, so copies can be stepped on separate threads.
struct GameState {
  GameId game = GameId::G2048;
  DifficultyConfig config;
  Seed seed = 0;  // reset seed, kept for render asset selection
  Board board;
  Rng rng;
  std::int64_t cumulative_score = 0;
  std::uint64_t step_count = 0;

  friend bool operator==(const GameState&, const GameState&) = default;
};

// Legal initial state, deterministic in (game, cfg, seed). Throws
// InvalidConfig.
GameState Reset(GameId game, const DifficultyConfig& cfg, Seed seed);
GameState Reset(GameId game, Seed seed);

// Pure: evaluates `action` on a copy of `state`. Any malformed or
// out-of-range action yields reward -1 and an unchanged successor.
std::pair<StepOutcome, GameState> PeekStep(const GameState& state,
                                           const GameAction& action);

// Advances `state` in place to the PeekStep successor.
StepOutcome CommitStep(GameState& state, const GameAction& action);

inline GameState Snapshot(const GameState& state) { return state; }
inline GameState Restore(const GameState& snapshot) { return snapshot; }

// 2048: no direction changes the board. Shisen-Sho: empty board or no valid
// pair. Swap: never.
bool IsTerminal(const GameState& state);

// Actions that score +1 from `state`, in a fixed order.
std::vector<GameAction> RewardingActions(const GameState& state);

// Actions that change the board: moving directions for 2048, rewarding
// actions elsewhere.
std::vector<GameAction> ValidMoves(const GameState& state);

// Canonical JSON document (fixed field order, integers only).
std::string SerializeState(const GameState& state);
GameState DeserializeState(const std::string& json);

// FNV-1a 64 over SerializeState.
std::uint64_t StateHash(const GameState& state);

}  // namespace vlmgym

#endif  // VLMGYM_ENV_H_
