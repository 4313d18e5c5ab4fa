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

#ifndef VLMGYM_GAME_2048_H_
#define VLMGYM_GAME_2048_H_

#include <cstdint>

#include "vlmgym/rng.h"
#include "vlmgym/types.h"

namespace vlmgym::g2048 {

struct SlideResult {
  Board board;
  std::int64_t merged_sum = 0;  // total value of tiles created by merges
  bool moved = false;
};

// Slides every tile toward `dir`. Equal neighbours merge once per move,
// the pair nearest the wall first.
SlideResult SlideMerge(const Board& board, Direction dir);

// Places a 2 (p = 0.9) or 4 (p = 0.1) in a uniformly chosen empty cell.
// Draw order: cell index, then value. No-op on a full board.
void SpawnTile(Board& board, Rng& rng);

// Empty 4x4 board with two spawned tiles.
Board NewBoard(Rng& rng);

bool CanMove(const Board& board);

// Applies one move. Reward +1 iff at least one merge happened; a tile spawns
// whenever the board moved.
StepOutcome Step(Board& board, Rng& rng, Direction dir);

}  // namespace vlmgym::g2048

#endif  // VLMGYM_GAME_2048_H_
