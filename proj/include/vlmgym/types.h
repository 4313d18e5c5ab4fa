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

#ifndef VLMGYM_TYPES_H_
#define VLMGYM_TYPES_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace vlmgym {

enum class GameId : std::uint8_t { G2048, ShisenSho, ShisenShoCifar10, Swap };

inline constexpr std::array<GameId, 4> kAllGames = {
    GameId::G2048, GameId::ShisenSho, GameId::ShisenShoCifar10, GameId::Swap};

// Stable lowercase identifiers used on the command line and in JSON.
std::string_view GameName(GameId game);
std::optional<GameId> ParseGameName(std::string_view name);

// Games whose action is a pair of coordinates.
constexpr bool IsPairGame(GameId game) { return game != GameId::G2048; }

using Seed = std::uint64_t;

enum class PerceptionVariant : std::uint8_t { Glyph, ImageAsset };

struct DifficultyConfig {
  int board_rows = 8;
  int board_cols = 8;
  int tile_vocabulary_size = 36;
  PerceptionVariant perception_variant = PerceptionVariant::Glyph;
  // Shisen-Sho only: connecting paths may run through a one-cell empty
  // ring around the board.
  bool outside_margin = true;

  friend bool operator==(const DifficultyConfig&,
                         const DifficultyConfig&) = default;
};

DifficultyConfig DefaultConfig(GameId game);

// Throws InvalidConfig when cfg cannot be used with game.
void ValidateConfig(GameId game, const DifficultyConfig& cfg);

// Integer encoding is part of the wire format: "(0): Up" ... "(3): Left".
enum class Direction : std::uint8_t { Up = 0, Right = 1, Down = 2, Left = 3 };

inline constexpr std::array<Direction, 4> kAllDirections = {
    Direction::Up, Direction::Right, Direction::Down, Direction::Left};

std::string_view DirectionName(Direction d);

struct Coord {
  int row = 0;
  int col = 0;

  friend constexpr auto operator<=>(const Coord&, const Coord&) = default;
};

// Two board coordinates: a match for Shisen-Sho, a swap for Swap.
struct CoordPair {
  Coord first;
  Coord second;

  friend constexpr bool operator==(const CoordPair&,
                                   const CoordPair&) = default;
};

// Stand-in for an unparseable answer. Every game scores it -1 without
// touching the board.
struct NoAction {
  friend constexpr bool operator==(NoAction, NoAction) { return true; }
};

using GameAction = std::variant<NoAction, Direction, CoordPair>;

// Canonical answer text for an action: "2" or "(0, 1) (3, 1)".
std::string FormatAction(const GameAction& action);

struct StepOutcome {
  int game_reward = -1;  // always -1 or +1
  std::int64_t score_delta = 0;
  bool state_changed = false;
  bool terminal = false;

  friend bool operator==(const StepOutcome&, const StepOutcome&) = default;
};

// Row-major grid of unsigned cells. For 2048 a cell holds the tile value;
// for tile games 0 is empty and k + 1 is palette kind k.
class Board {
 public:
  Board() = default;
  Board(int rows, int cols) : rows_(rows), cols_(cols), cells_(rows * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int size() const { return rows_ * cols_; }

  bool Contains(Coord c) const {
    return c.row >= 0 && c.row < rows_ && c.col >= 0 && c.col < cols_;
  }
  std::uint32_t& at(int r, int c) { return cells_[r * cols_ + c]; }
  std::uint32_t at(int r, int c) const { return cells_[r * cols_ + c]; }
  std::uint32_t& at(Coord c) { return at(c.row, c.col); }
  std::uint32_t at(Coord c) const { return at(c.row, c.col); }

  std::vector<std::uint32_t>& cells() { return cells_; }
  const std::vector<std::uint32_t>& cells() const { return cells_; }

  int CountNonEmpty() const;

  friend bool operator==(const Board&, const Board&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint32_t> cells_;
};

}  // namespace vlmgym

#endif  // VLMGYM_TYPES_H_
