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

#include "vlmgym/perception.h"

#include <charconv>
#include <cstdint>
#include <optional>
#include <vector>

#include "vlmgym/errors.h"
#include "vlmgym/text_util.h"
#include "vlmgym/tiles.h"

namespace vlmgym {
namespace {

// Reads an unsigned decimal at `pos`; advances pos past it.
std::optional<std::uint32_t> ReadNumber(std::string_view line,
                                        std::size_t& pos) {
  std::size_t end = pos;
  while (end < line.size() && line[end] >= '0' && line[end] <= '9') ++end;
  if (end == pos) return std::nullopt;
  std::uint32_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(line.data() + pos, line.data() + end, value);
  if (ec != std::errc() || ptr != line.data() + end) return std::nullopt;
  pos = end;
  return value;
}

bool Expect(std::string_view line, std::size_t& pos, std::string_view lit) {
  if (line.substr(pos, lit.size()) != lit) return false;
  pos += lit.size();
  return true;
}

Board Parse2048(const std::vector<std::string>& lines,
                const DifficultyConfig& cfg) {
  Board board(cfg.board_rows, cfg.board_cols);
  if (static_cast<int>(lines.size()) != board.rows()) {
    throw MalformedPerception(lines.size(), 1,
                              "expected " + std::to_string(board.rows()) +
                                  " rows, got " + std::to_string(lines.size()));
  }
  for (int r = 0; r < board.rows(); ++r) {
    const std::string_view line = lines[r];
    std::size_t pos = 0;
    for (int c = 0; c < board.cols(); ++c) {
      if (c > 0 && !Expect(line, pos, " ")) {
        throw MalformedPerception(r + 1, pos + 1, "expected a space");
      }
      const std::size_t start = pos;
      const auto value = ReadNumber(line, pos);
      if (!value) {
        throw MalformedPerception(r + 1, start + 1, "expected a tile value");
      }
      if (*value == 1 || (*value & (*value - 1)) != 0) {
        throw MalformedPerception(r + 1, start + 1,
                                  "tile value is not 0 or a power of two");
      }
      board.at(r, c) = *value;
    }
    if (pos != line.size()) {
      throw MalformedPerception(r + 1, pos + 1, "unexpected trailing text");
    }
  }
  return board;
}

Board ParseTiles(const std::vector<std::string>& lines, GameId game,
                 const DifficultyConfig& cfg) {
  Board board(cfg.board_rows, cfg.board_cols);
  int last_index = -1;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string_view line = lines[i];
    const std::size_t line_no = i + 1;
    std::size_t pos = 0;
    if (!Expect(line, pos, "(")) {
      throw MalformedPerception(line_no, pos + 1, "expected '('");
    }
    const auto row = ReadNumber(line, pos);
    if (!row) throw MalformedPerception(line_no, pos + 1, "expected a row");
    if (!Expect(line, pos, ", ")) {
      throw MalformedPerception(line_no, pos + 1, "expected ', '");
    }
    const auto col = ReadNumber(line, pos);
    if (!col) throw MalformedPerception(line_no, pos + 1, "expected a column");
    if (!Expect(line, pos, "): ")) {
      throw MalformedPerception(line_no, pos + 1, "expected '): '");
    }
    const Coord at{static_cast<int>(*row), static_cast<int>(*col)};
    if (*row > static_cast<std::uint32_t>(board.rows()) ||
        *col > static_cast<std::uint32_t>(board.cols()) || !board.Contains(at)) {
      throw MalformedPerception(line_no, 2, "coordinate out of range");
    }
    const int index = at.row * board.cols() + at.col;
    if (index <= last_index) {
      throw MalformedPerception(line_no, 2, "cells must be listed in row-major order");
    }
    last_index = index;
    const auto kind = FindKind(game, line.substr(pos));
    if (!kind) throw MalformedPerception(line_no, pos + 1, "unknown tile kind");
    board.at(at) = static_cast<std::uint32_t>(*kind) + 1;
  }
  return board;
}

}  // namespace

std::string SerializePerception(GameId game, const Board& board) {
  std::string out;
  if (game == GameId::G2048) {
    for (int r = 0; r < board.rows(); ++r) {
      if (r > 0) out += '\n';
      for (int c = 0; c < board.cols(); ++c) {
        if (c > 0) out += ' ';
        out += std::to_string(board.at(r, c));
      }
    }
    return out;
  }
  for (int r = 0; r < board.rows(); ++r) {
    for (int c = 0; c < board.cols(); ++c) {
      const std::uint32_t code = board.at(r, c);
      if (code == 0) continue;
      if (!out.empty()) out += '\n';
      out += "(" + std::to_string(r) + ", " + std::to_string(c) +
             "): " + KindAt(game, static_cast<int>(code) - 1).Name();
    }
  }
  return out;
}

std::string SerializePerception(const GameState& state) {
  return SerializePerception(state.game, state.board);
}

Board ParsePerception(std::string_view text, GameId game,
                      const DifficultyConfig& cfg) {
  text = Trim(text);
  if (game != GameId::G2048 && text.empty()) {
    return Board(cfg.board_rows, cfg.board_cols);
  }
  const std::vector<std::string> lines = NormalizeLines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) throw MalformedPerception(i + 1, 1, "empty line");
  }
  return game == GameId::G2048 ? Parse2048(lines, cfg)
                               : ParseTiles(lines, game, cfg);
}

}  // namespace vlmgym
