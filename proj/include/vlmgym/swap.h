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

#ifndef VLMGYM_SWAP_H_
#define VLMGYM_SWAP_H_

#include <vector>

#include "vlmgym/rng.h"
#include "vlmgym/types.h"

// Match-3 swap game.
//
// A step swaps two orthogonally adjacent tiles. If no run of three or more
// identical kinds appears the swap is reverted and scores -1 without
// touching the RNG. Otherwise every matched cell is cleared at once, each
// column falls, empty cells are refilled top-down (columns left to right)
// with uniform draws over the vocabulary, and the cycle repeats until the
// board is stable. A stable board with no productive swap is reshuffled.
namespace vlmgym::swap {

// Union of all horizontal and vertical runs of length >= 3, row-major.
std::vector<Coord> DetectMatches(const Board& board);

bool Adjacent(Coord a, Coord b);

// True when swapping the pair (adjacent, on-board) creates a match.
bool CreatesMatch(const Board& board, const CoordPair& pair);

// Productive swaps in row-major order; each listed once with first < second.
std::vector<CoordPair> ValidSwaps(const Board& board);

bool HasValidSwap(const Board& board);

// Fills the board row-major; a cell's kind is redrawn while it would close a
// run of three with its left or upper neighbours. The result has no matches,
// and is reshuffled if it has no productive swap.
Board GenerateBoard(const DifficultyConfig& cfg, Rng& rng);

// Fisher-Yates over all cells, retried until the board has no match and at
// least one productive swap. Falls back to regenerating the kinds when the
// multiset itself admits no such layout; after that the last match-free
// layout is kept.
void Shuffle(Board& board, int vocabulary, Rng& rng);

StepOutcome Step(Board& board, Rng& rng, const CoordPair& pair,
                 int vocabulary);

}  // namespace vlmgym::swap

#endif  // VLMGYM_SWAP_H_
