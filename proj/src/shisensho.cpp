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

#include "vlmgym/shisensho.h"

#include <algorithm>
#include <array>
#include <utility>

#include "vlmgym/errors.h"

namespace vlmgym::shisensho {
namespace {

// Board plus the optional one-cell ring of permanently empty cells.
class Field {
 public:
  Field(const Board& board, bool margin) : board_(board), margin_(margin) {}

  bool InRange(Coord c) const {
    const int lo = margin_ ? -1 : 0;
    return c.row >= lo && c.row < board_.rows() + (margin_ ? 1 : 0) &&
           c.col >= lo && c.col < board_.cols() + (margin_ ? 1 : 0);
  }

  bool Empty(Coord c) const {
    if (!InRange(c)) return false;
    if (!board_.Contains(c)) return true;
    return board_.at(c) == 0;
  }

  // a and b share a row or a column; every cell strictly between is empty.
  bool Clear(Coord a, Coord b) const {
    if (a.row == b.row) {
      const int lo = std::min(a.col, b.col), hi = std::max(a.col, b.col);
      for (int c = lo + 1; c < hi; ++c) {
        if (!Empty({a.row, c})) return false;
      }
      return true;
    }
    if (a.col == b.col) {
      const int lo = std::min(a.row, b.row), hi = std::max(a.row, b.row);
      for (int r = lo + 1; r < hi; ++r) {
        if (!Empty({r, a.col})) return false;
      }
      return true;
    }
    return false;
  }

  // One-turn route from `from` to `to` through an empty corner.
  std::optional<Coord> Corner(Coord from, Coord to) const {
    for (Coord corner : {Coord{from.row, to.col}, Coord{to.row, from.col}}) {
      if (corner == from || corner == to) continue;
      if (Empty(corner) && Clear(from, corner) && Clear(corner, to)) {
        return corner;
      }
    }
    return std::nullopt;
  }

 private:
  const Board& board_;
  bool margin_;
};

constexpr std::array<std::pair<int, int>, 4> kSteps = {
    std::pair{0, -1}, std::pair{0, 1}, std::pair{-1, 0}, std::pair{1, 0}};

}  // namespace

std::optional<Path> FindPath(const Board& board, Coord a, Coord b,
                             bool outside_margin) {
  if (a == b || !board.Contains(a) || !board.Contains(b)) return std::nullopt;
  const Field field(board, outside_margin);

  if ((a.row == b.row || a.col == b.col) && field.Clear(a, b)) {
    return Path{{a, b}};
  }
  if (auto corner = field.Corner(a, b)) {
    return Path{{a, *corner, b}};
  }
  // Two turns: leave a in a straight line, then make a one-turn route to b.
  for (auto [dr, dc] : kSteps) {
    for (Coord p{a.row + dr, a.col + dc}; field.Empty(p);
         p = {p.row + dr, p.col + dc}) {
      const Coord q = dr == 0 ? Coord{b.row, p.col} : Coord{p.row, b.col};
      if (q == b || q == p) continue;
      if (field.Empty(q) && field.Clear(p, q) && field.Clear(q, b)) {
        return Path{{a, p, q, b}};
      }
    }
  }
  return std::nullopt;
}

Board GenerateBoard(const DifficultyConfig& cfg, Rng& rng) {
  const int cells = cfg.board_rows * cfg.board_cols;
  if (cells <= 0 || cells % 2 != 0) {
    throw InvalidConfig("shisensho: board needs a positive, even tile count");
  }
  if (cfg.tile_vocabulary_size < 1) {
    throw InvalidConfig("shisensho: vocabulary must be non-empty");
  }
  Board board(cfg.board_rows, cfg.board_cols);
  auto& v = board.cells();
  for (int i = 0; i < cells; i += 2) {
    const auto kind =
        static_cast<std::uint32_t>(rng.Uniform(cfg.tile_vocabulary_size)) + 1;
    v[i] = kind;
    v[i + 1] = kind;
  }
  for (int i = cells - 1; i > 0; --i) {
    const auto j = static_cast<int>(rng.Uniform(i + 1));
    std::swap(v[i], v[j]);
  }
  return board;
}

bool IsValidMatch(const Board& board, const CoordPair& pair,
                  bool outside_margin) {
  const auto [a, b] = pair;
  if (a == b || !board.Contains(a) || !board.Contains(b)) return false;
  if (board.at(a) == 0 || board.at(a) != board.at(b)) return false;
  return FindPath(board, a, b, outside_margin).has_value();
}

std::vector<CoordPair> ValidMatches(const Board& board, bool outside_margin) {
  std::vector<CoordPair> out;
  for (int i = 0; i < board.size(); ++i) {
    if (board.cells()[i] == 0) continue;
    for (int j = i + 1; j < board.size(); ++j) {
      if (board.cells()[j] != board.cells()[i]) continue;
      const CoordPair pair{{i / board.cols(), i % board.cols()},
                           {j / board.cols(), j % board.cols()}};
      if (FindPath(board, pair.first, pair.second, outside_margin)) {
        out.push_back(pair);
      }
    }
  }
  return out;
}

bool HasValidMatch(const Board& board, bool outside_margin) {
  for (int i = 0; i < board.size(); ++i) {
    if (board.cells()[i] == 0) continue;
    for (int j = i + 1; j < board.size(); ++j) {
      if (board.cells()[j] != board.cells()[i]) continue;
      if (FindPath(board, {i / board.cols(), i % board.cols()},
                   {j / board.cols(), j % board.cols()}, outside_margin)) {
        return true;
      }
    }
  }
  return false;
}

StepOutcome Step(Board& board, const CoordPair& pair, bool outside_margin) {
  StepOutcome out;
  if (IsValidMatch(board, pair, outside_margin)) {
    board.at(pair.first) = 0;
    board.at(pair.second) = 0;
    out.game_reward = 1;
    out.score_delta = 1;
    out.state_changed = true;
  }
  out.terminal = board.CountNonEmpty() == 0 || !HasValidMatch(board, outside_margin);
  return out;
}

}  // namespace vlmgym::shisensho
