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

#ifndef VLMGYM_SHISENSHO_H_
#define VLMGYM_SHISENSHO_H_

#include <optional>
#include <vector>

#include "vlmgym/rng.h"
#include "vlmgym/types.h"

// Shisen-Sho pair matching. The CIFAR-10 variant uses these same functions;
// only the tile palette differs.
namespace vlmgym::shisensho {

// Corner points of a connecting path: start, each turn, end. A path with n
// turns has n + 2 points. Points may lie on the margin ring (row or col of
// -1, rows or cols) when the margin is enabled.
struct Path {
  std::vector<Coord> points;

  int turns() const { return static_cast<int>(points.size()) - 2; }
};

// Orthogonal path from a to b with at most two turns whose interior cells
// are empty. Prefers fewer turns. Returns nullopt when a == b, either end is
// off the board, or no such path exists.
std::optional<Path> FindPath(const Board& board, Coord a, Coord b,
                             bool outside_margin);

// Full board of `rows x cols` tiles. Kinds are drawn in pairs uniformly with
// replacement from the first `vocabulary` palette kinds, then shuffled into
// place with Fisher-Yates. Throws InvalidConfig on an odd cell count.
Board GenerateBoard(const DifficultyConfig& cfg, Rng& rng);

// True when a and b hold the same kind and a connecting path exists.
bool IsValidMatch(const Board& board, const CoordPair& pair,
                  bool outside_margin);

// All valid matches in row-major order of (first, second), first < second.
std::vector<CoordPair> ValidMatches(const Board& board, bool outside_margin);

bool HasValidMatch(const Board& board, bool outside_margin);

// Removes the pair on success. Never draws from an RNG.
StepOutcome Step(Board& board, const CoordPair& pair, bool outside_margin);

}  // namespace vlmgym::shisensho

#endif  // VLMGYM_SHISENSHO_H_
