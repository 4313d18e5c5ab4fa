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

#include "vlmgym/types.h"

#include <algorithm>
#include <type_traits>

#include "vlmgym/errors.h"
#include "vlmgym/tiles.h"

namespace vlmgym {

std::string_view GameName(GameId game) {
  switch (game) {
    case GameId::G2048:
      return "2048";
    case GameId::ShisenSho:
      return "shisensho";
    case GameId::ShisenShoCifar10:
      return "shisensho-cifar10";
    case GameId::Swap:
      return "swap";
  }
  return "unknown";
}

std::optional<GameId> ParseGameName(std::string_view name) {
  for (GameId g : kAllGames) {
    if (GameName(g) == name) return g;
  }
  return std::nullopt;
}

DifficultyConfig DefaultConfig(GameId game) {
  DifficultyConfig cfg;
  switch (game) {
    case GameId::G2048:
      cfg.board_rows = 4;
      cfg.board_cols = 4;
      cfg.tile_vocabulary_size = 2;  // unused: tile values are unbounded
      cfg.outside_margin = false;
      break;
    case GameId::ShisenSho:
      cfg.tile_vocabulary_size = 36;
      break;
    case GameId::ShisenShoCifar10:
      cfg.tile_vocabulary_size = 10;
      cfg.perception_variant = PerceptionVariant::ImageAsset;
      break;
    case GameId::Swap:
      cfg.tile_vocabulary_size = 12;
      cfg.outside_margin = false;
      break;
  }
  return cfg;
}

void ValidateConfig(GameId game, const DifficultyConfig& cfg) {
  const std::string name(GameName(game));
  if (cfg.board_rows <= 0 || cfg.board_cols <= 0) {
    throw InvalidConfig(name + ": board dimensions must be positive");
  }
  const auto expected_variant = game == GameId::ShisenShoCifar10
                                    ? PerceptionVariant::ImageAsset
                                    : PerceptionVariant::Glyph;
  if (cfg.perception_variant != expected_variant) {
    throw InvalidConfig(name + ": perception variant does not match game");
  }
  switch (game) {
    case GameId::G2048:
      if (cfg.board_rows != 4 || cfg.board_cols != 4) {
        throw InvalidConfig("2048: only the 4x4 board is supported");
      }
      return;
    case GameId::ShisenSho:
    case GameId::ShisenShoCifar10:
      if ((cfg.board_rows * cfg.board_cols) % 2 != 0) {
        throw InvalidConfig(name + ": tile count must be even");
      }
      if (cfg.tile_vocabulary_size < 1 ||
          cfg.tile_vocabulary_size > PaletteSize(game)) {
        throw InvalidConfig(name + ": vocabulary size out of range");
      }
      return;
    case GameId::Swap:
      if (cfg.board_rows < 3 && cfg.board_cols < 3) {
        throw InvalidConfig("swap: no line of three fits on the board");
      }
      // With fewer than three kinds a cell can be left with no kind that
      // avoids an immediate run.
      if (cfg.tile_vocabulary_size < 3 ||
          cfg.tile_vocabulary_size > PaletteSize(game)) {
        throw InvalidConfig("swap: vocabulary size must be in [3, 12]");
      }
      return;
  }
}

std::string_view DirectionName(Direction d) {
  switch (d) {
    case Direction::Up:
      return "up";
    case Direction::Right:
      return "right";
    case Direction::Down:
      return "down";
    case Direction::Left:
      return "left";
  }
  return "?";
}

std::string FormatAction(const GameAction& action) {
  return std::visit(
      [](const auto& a) -> std::string {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, Direction>) {
          return std::to_string(static_cast<int>(a));
        } else if constexpr (std::is_same_v<T, CoordPair>) {
          return "(" + std::to_string(a.first.row) + ", " +
                 std::to_string(a.first.col) + ") (" +
                 std::to_string(a.second.row) + ", " +
                 std::to_string(a.second.col) + ")";
        } else {
          return "";
        }
      },
      action);
}

int Board::CountNonEmpty() const {
  return static_cast<int>(
      std::count_if(cells_.begin(), cells_.end(), [](auto v) { return v != 0; }));
}

}  // namespace vlmgym
