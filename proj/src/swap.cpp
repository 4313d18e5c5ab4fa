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

#include "vlmgym/swap.h"

#include <cstdlib>
#include <utility>

#include "vlmgym/errors.h"

namespace vlmgym::swap {
namespace {

constexpr int kShuffleAttempts = 1000;
constexpr int kRegenerateAttempts = 1000;

std::vector<bool> MatchMask(const Board& board) {
  std::vector<bool> mask(board.size(), false);
  const int rows = board.rows(), cols = board.cols();
  for (int r = 0; r < rows; ++r) {
    int start = 0;
    for (int c = 1; c <= cols; ++c) {
      if (c < cols && board.at(r, c) == board.at(r, start)) continue;
      if (c - start >= 3 && board.at(r, start) != 0) {
        for (int k = start; k < c; ++k) mask[r * cols + k] = true;
      }
      start = c;
    }
  }
  for (int c = 0; c < cols; ++c) {
    int start = 0;
    for (int r = 1; r <= rows; ++r) {
      if (r < rows && board.at(r, c) == board.at(start, c)) continue;
      if (r - start >= 3 && board.at(start, c) != 0) {
        for (int k = start; k < r; ++k) mask[k * cols + c] = true;
      }
      start = r;
    }
  }
  return mask;
}

bool AnyMatch(const Board& board) {
  for (bool m : MatchMask(board)) {
    if (m) return true;
  }
  return false;
}

std::uint32_t DrawKind(int vocabulary, Rng& rng) {
  return static_cast<std::uint32_t>(rng.Uniform(vocabulary)) + 1;
}

void FillWithoutRuns(Board& board, int vocabulary, Rng& rng) {
  for (int r = 0; r < board.rows(); ++r) {
    for (int c = 0; c < board.cols(); ++c) {
      std::uint32_t kind;
      do {
        kind = DrawKind(vocabulary, rng);
      } while ((c >= 2 && board.at(r, c - 1) == kind &&
                board.at(r, c - 2) == kind) ||
               (r >= 2 && board.at(r - 1, c) == kind &&
                board.at(r - 2, c) == kind));
      board.at(r, c) = kind;
    }
  }
}

void Collapse(Board& board, const std::vector<bool>& cleared, int vocabulary,
              Rng& rng) {
  const int rows = board.rows(), cols = board.cols();
  for (int c = 0; c < cols; ++c) {
    int write = rows - 1;
    for (int r = rows - 1; r >= 0; --r) {
      if (cleared[r * cols + c]) continue;
      board.at(write--, c) = board.at(r, c);
    }
    for (; write >= 0; --write) board.at(write, c) = 0;
  }
  for (int c = 0; c < cols; ++c) {
    for (int r = 0; r < rows && board.at(r, c) == 0; ++r) {
      board.at(r, c) = DrawKind(vocabulary, rng);
    }
  }
}

}  // namespace

std::vector<Coord> DetectMatches(const Board& board) {
  std::vector<Coord> out;
  const std::vector<bool> mask = MatchMask(board);
  for (int i = 0; i < board.size(); ++i) {
    if (mask[i]) out.push_back({i / board.cols(), i % board.cols()});
  }
  return out;
}

bool Adjacent(Coord a, Coord b) {
  return std::abs(a.row - b.row) + std::abs(a.col - b.col) == 1;
}

bool CreatesMatch(const Board& board, const CoordPair& pair) {
  const auto [a, b] = pair;
  if (!board.Contains(a) || !board.Contains(b) || !Adjacent(a, b)) {
    return false;
  }
  if (board.at(a) == board.at(b)) return false;
  Board swapped = board;
  std::swap(swapped.at(a), swapped.at(b));
  return AnyMatch(swapped);
}

std::vector<CoordPair> ValidSwaps(const Board& board) {
  std::vector<CoordPair> out;
  for (int r = 0; r < board.rows(); ++r) {
    for (int c = 0; c < board.cols(); ++c) {
      for (Coord n : {Coord{r, c + 1}, Coord{r + 1, c}}) {
        const CoordPair pair{{r, c}, n};
        if (CreatesMatch(board, pair)) out.push_back(pair);
      }
    }
  }
  return out;
}

bool HasValidSwap(const Board& board) {
  for (int r = 0; r < board.rows(); ++r) {
    for (int c = 0; c < board.cols(); ++c) {
      if (CreatesMatch(board, {{r, c}, {r, c + 1}}) ||
          CreatesMatch(board, {{r, c}, {r + 1, c}})) {
        return true;
      }
    }
  }
  return false;
}

void Shuffle(Board& board, int vocabulary, Rng& rng) {
  auto& v = board.cells();
  for (int attempt = 0; attempt < kShuffleAttempts; ++attempt) {
    for (int i = board.size() - 1; i > 0; --i) {
      const auto j = static_cast<int>(rng.Uniform(i + 1));
      std::swap(v[i], v[j]);
    }
    if (!AnyMatch(board) && HasValidSwap(board)) return;
  }
  for (int attempt = 0; attempt < kRegenerateAttempts; ++attempt) {
    FillWithoutRuns(board, vocabulary, rng);
    if (HasValidSwap(board)) return;
  }
}

Board GenerateBoard(const DifficultyConfig& cfg, Rng& rng) {
  if (cfg.board_rows < 3 && cfg.board_cols < 3) {
    throw InvalidConfig("swap: no line of three fits on the board");
  }
  if (cfg.tile_vocabulary_size < 3) {
    throw InvalidConfig("swap: vocabulary must hold at least three kinds");
  }
  Board board(cfg.board_rows, cfg.board_cols);
  FillWithoutRuns(board, cfg.tile_vocabulary_size, rng);
  if (!HasValidSwap(board)) Shuffle(board, cfg.tile_vocabulary_size, rng);
  return board;
}

StepOutcome Step(Board& board, Rng& rng, const CoordPair& pair,
                 int vocabulary) {
  StepOutcome out;
  if (!CreatesMatch(board, pair)) return out;

  std::swap(board.at(pair.first), board.at(pair.second));
  for (std::vector<bool> mask = MatchMask(board);;
       mask = MatchMask(board)) {
    bool any = false;
    for (bool m : mask) any = any || m;
    if (!any) break;
    Collapse(board, mask, vocabulary, rng);
  }
  if (!HasValidSwap(board)) Shuffle(board, vocabulary, rng);

  out.game_reward = 1;
  out.score_delta = 1;
  out.state_changed = true;
  return out;
}

}  // namespace vlmgym::swap
