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

#include "vlmgym/game_2048.h"

#include <array>
#include <vector>

namespace vlmgym::g2048 {
namespace {

// Cells of line `index` listed from the wall `dir` slides toward.
std::vector<Coord> LineCells(const Board& board, Direction dir, int index) {
  std::vector<Coord> cells;
  switch (dir) {
    case Direction::Left:
      for (int c = 0; c < board.cols(); ++c) cells.push_back({index, c});
      break;
    case Direction::Right:
      for (int c = board.cols() - 1; c >= 0; --c) cells.push_back({index, c});
      break;
    case Direction::Up:
      for (int r = 0; r < board.rows(); ++r) cells.push_back({r, index});
      break;
    case Direction::Down:
      for (int r = board.rows() - 1; r >= 0; --r) cells.push_back({r, index});
      break;
  }
  return cells;
}

}  // namespace

SlideResult SlideMerge(const Board& board, Direction dir) {
  SlideResult result{board, 0, false};
  const bool horizontal = dir == Direction::Left || dir == Direction::Right;
  const int lines = horizontal ? board.rows() : board.cols();

  for (int i = 0; i < lines; ++i) {
    const std::vector<Coord> cells = LineCells(board, dir, i);
    std::vector<std::uint32_t> out;
    out.reserve(cells.size());
    bool last_merged = false;
    for (Coord c : cells) {
      const std::uint32_t v = board.at(c);
      if (v == 0) continue;
      if (!out.empty() && !last_merged && out.back() == v) {
        out.back() = v * 2;
        result.merged_sum += v * 2;
        last_merged = true;
      } else {
        out.push_back(v);
        last_merged = false;
      }
    }
    out.resize(cells.size(), 0);
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (result.board.at(cells[k]) != out[k]) result.moved = true;
      result.board.at(cells[k]) = out[k];
    }
  }
  return result;
}

void SpawnTile(Board& board, Rng& rng) {
  std::vector<int> empty;
  for (int i = 0; i < board.size(); ++i) {
    if (board.cells()[i] == 0) empty.push_back(i);
  }
  if (empty.empty()) return;
  const int cell = empty[rng.Uniform(empty.size())];
  board.cells()[cell] = rng.Uniform(10) == 0 ? 4 : 2;
}

Board NewBoard(Rng& rng) {
  Board board(4, 4);
  SpawnTile(board, rng);
  SpawnTile(board, rng);
  return board;
}

bool CanMove(const Board& board) {
  for (Direction d : kAllDirections) {
    if (SlideMerge(board, d).moved) return true;
  }
  return false;
}

StepOutcome Step(Board& board, Rng& rng, Direction dir) {
  SlideResult slid = SlideMerge(board, dir);
  StepOutcome out;
  out.game_reward = slid.merged_sum > 0 ? 1 : -1;
  out.score_delta = slid.merged_sum;
  out.state_changed = slid.moved;
  if (slid.moved) {
    board = std::move(slid.board);
    SpawnTile(board, rng);
  }
  out.terminal = !CanMove(board);
  return out;
}

}  // namespace vlmgym::g2048
