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

#ifndef VLMGYM_PERCEPTION_H_
#define VLMGYM_PERCEPTION_H_

#include <string>
#include <string_view>

#include "vlmgym/env.h"
#include "vlmgym/types.h"

namespace vlmgym {

// Ground-truth board description, lines joined by '\n' without a trailing
// newline.
//
//   2048:        one line per row, cells separated by one space, 0 = empty
//                ("2 0 0 0").
//   tile games:  one line per occupied cell in row-major order,
//                "(row, col): Yellow square" or "(row, col): cat".
//
// A board with no tiles serializes to the empty string.
std::string SerializePerception(GameId game, const Board& board);
std::string SerializePerception(const GameState& state);

// Inverse of SerializePerception for a board of cfg's dimensions. Input is
// compared after per-line whitespace collapsing and case folding; anything
// else that deviates from the canonical form throws MalformedPerception
// pointing at the first offending line.
Board ParsePerception(std::string_view text, GameId game,
                      const DifficultyConfig& cfg);

}  // namespace vlmgym

#endif  // VLMGYM_PERCEPTION_H_
