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


#include "vlmgym/harness/warmup.h"

namespace vlmgym {

int DefaultWarmupSteps(GameId game) {
  return game == GameId::G2048 ? 100 : 250;
}

GameAction SampleRandomAction(const GameState& state, Rng& rng) {
  if (state.game == GameId::G2048) return kAllDirections[rng.Uniform(4)];
  const Board& b = state.board;
  const auto n = static_cast<std::uint64_t>(b.size());
  const std::uint64_t i = rng.Uniform(n);
  std::uint64_t j = rng.Uniform(n - 1);
  if (j >= i) ++j;
  const int cols = b.cols();
  return CoordPair{{static_cast<int>(i) / cols, static_cast<int>(i) % cols},
                   {static_cast<int>(j) / cols, static_cast<int>(j) % cols}};
}

GameState WarmupRandom(GameId game, const DifficultyConfig& cfg, Seed seed,
                       int n_steps, WarmupMode mode) {
  GameState state = Reset(game, cfg, seed);
  Rng rng = Rng::Derive(seed, kWarmupStream);
  for (int t = 0; t < n_steps && !IsTerminal(state); ++t) {
    if (mode == WarmupMode::ActionSpace) {
      CommitStep(state, SampleRandomAction(state, rng));
      continue;
    }
    const std::vector<GameAction> moves = ValidMoves(state);
    if (moves.empty()) break;
    CommitStep(state, moves[rng.Uniform(moves.size())]);
  }
  return state;
}

}  // namespace vlmgym
