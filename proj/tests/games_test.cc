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


#include <algorithm>
#include <map>

#include <gtest/gtest.h>

#include "oracles.h"
#include "vlmgym/errors.h"
#include "vlmgym/game_2048.h"
#include "vlmgym/rng.h"
#include "vlmgym/shisensho.h"
#include "vlmgym/swap.h"

namespace vlmgym {
namespace {

Board Rows(const std::vector<std::vector<std::uint32_t>>& rows) {
  Board b(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int r = 0; r < b.rows(); ++r) {
    for (int c = 0; c < b.cols(); ++c) b.at(r, c) = rows[r][c];
  }
  return b;
}

// Published SplitMix64 outputs for state 0.
TEST(RngTest, SplitMix64ReferenceVector) {
  Rng rng(0);
  EXPECT_EQ(rng.Next(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(rng.Next(), 0x6E789E6AA1B965F4ULL);
  EXPECT_EQ(rng.Next(), 0x06C45D188009454FULL);
}

TEST(RngTest, UniformStaysInRange) {
  Rng rng(42);
  std::vector<int> counts(7, 0);
  for (int i = 0; i < 70000; ++i) ++counts[rng.Uniform(7)];
  for (int c : counts) EXPECT_NEAR(c, 10000, 500);
}

TEST(Game2048Test, SlideExamples) {
  auto left = [](std::vector<std::uint32_t> row) {
    return g2048::SlideMerge(Rows({row, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}),
                             Direction::Left);
  };
  g2048::SlideResult r = left({2, 2, 0, 0});
  EXPECT_EQ(r.board.at(0, 0), 4u);
  EXPECT_EQ(r.board.at(0, 1), 0u);
  EXPECT_EQ(r.merged_sum, 4);
  EXPECT_TRUE(r.moved);

  r = left({2, 2, 2, 0});
  EXPECT_EQ(r.board, Rows({{4, 2, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}));
  EXPECT_EQ(r.merged_sum, 4);

  r = left({4, 4, 4, 4});
  EXPECT_EQ(r.board, Rows({{8, 8, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}));
  EXPECT_EQ(r.merged_sum, 16);

  const Board empty(4, 4);
  for (Direction d : kAllDirections) {
    r = g2048::SlideMerge(empty, d);
    EXPECT_EQ(r.board, empty);
    EXPECT_EQ(r.merged_sum, 0);
    EXPECT_FALSE(r.moved);
  }
}

TEST(Game2048Test, MatchesReferenceOracle) {
  Rng rng(2048);
  constexpr std::uint32_t kValues[] = {0, 0, 0, 2, 2, 4, 4, 8, 16, 32};
  for (int i = 0; i < 10000; ++i) {
    Board b(4, 4);
    for (auto& v : b.cells()) v = kValues[rng.Uniform(10)];
    for (Direction d : kAllDirections) {
      const g2048::SlideResult got = g2048::SlideMerge(b, d);
      const oracle::Slide2048 want = oracle::SlideMerge2048(b, d);
      ASSERT_EQ(got.board, want.board);
      ASSERT_EQ(got.merged_sum, want.merged_sum);
      ASSERT_EQ(got.moved, want.moved);
    }
  }
}

TEST(Game2048Test, MergingMoveScoresAndSpawns) {
  Board b = Rows({{2, 2, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
  Rng rng(1);
  const StepOutcome o = g2048::Step(b, rng, Direction::Left);
  EXPECT_EQ(o.game_reward, 1);
  EXPECT_EQ(o.score_delta, 4);
  EXPECT_EQ(b.CountNonEmpty(), 2);  // the 4 plus one spawn
  EXPECT_EQ(b.at(0, 0), 4u);
}

TEST(Game2048Test, SlideWithoutMergeFailsButSpawns) {
  Board b = Rows({{0, 0, 0, 2}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
  Rng rng(1);
  const StepOutcome o = g2048::Step(b, rng, Direction::Left);
  EXPECT_EQ(o.game_reward, -1);
  EXPECT_EQ(o.score_delta, 0);
  EXPECT_TRUE(o.state_changed);
  EXPECT_EQ(b.CountNonEmpty(), 2);
}

TEST(Game2048Test, BlockedMoveTouchesNothing) {
  const Board before =
      Rows({{2, 4, 0, 0}, {8, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
  Board b = before;
  Rng rng(9);
  const Rng rng_before = rng;
  const StepOutcome o = g2048::Step(b, rng, Direction::Left);
  EXPECT_EQ(o.game_reward, -1);
  EXPECT_FALSE(o.state_changed);
  EXPECT_EQ(b, before);
  EXPECT_EQ(rng, rng_before);
}

TEST(Game2048Test, SpawnDistribution) {
  Rng rng(5);
  int fours = 0;
  constexpr int kTrials = 20000;
  std::vector<int> cell_hits(16, 0);
  for (int i = 0; i < kTrials; ++i) {
    Board b(4, 4);
    g2048::SpawnTile(b, rng);
    for (int k = 0; k < 16; ++k) {
      if (b.cells()[k] != 0) {
        ++cell_hits[k];
        if (b.cells()[k] == 4) ++fours;
      }
    }
  }
  EXPECT_NEAR(static_cast<double>(fours) / kTrials, 0.1, 0.01);
  for (int h : cell_hits) EXPECT_NEAR(h, kTrials / 16, 200);
}

TEST(Game2048Test, NewBoardHasTwoTiles) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    Rng rng(s);
    const Board b = g2048::NewBoard(rng);
    EXPECT_EQ(b.CountNonEmpty(), 2);
    for (auto v : b.cells()) EXPECT_TRUE(v == 0 || v == 2 || v == 4);
  }
}

TEST(Game2048Test, CanMoveDetectsDeadBoard) {
  EXPECT_FALSE(g2048::CanMove(
      Rows({{2, 4, 2, 4}, {4, 2, 4, 2}, {2, 4, 2, 4}, {4, 2, 4, 2}})));
  EXPECT_TRUE(g2048::CanMove(
      Rows({{2, 2, 2, 4}, {4, 2, 4, 2}, {2, 4, 2, 4}, {4, 2, 4, 2}})));
}

// Shisen-Sho glyph code for (color, shape): kind = shape * 6 + color.
std::uint32_t Glyph(int color, int shape) { return shape * 6 + color + 1; }

TEST(ShisenShoTest, AdjacentCellsConnectStraight) {
  Board b(4, 4);
  b.at(1, 1) = b.at(1, 2) = Glyph(1, 0);
  const auto path = shisensho::FindPath(b, {1, 1}, {1, 2}, false);
  ASSERT_TRUE(path.has_value());
  EXPECT_EQ(path->turns(), 0);
}

TEST(ShisenShoTest, FullRowEndsNeedTheMargin) {
  Board b(4, 4);
  for (auto& v : b.cells()) v = Glyph(0, 1);
  EXPECT_FALSE(shisensho::FindPath(b, {0, 0}, {0, 3}, false).has_value());
  const auto via_margin = shisensho::FindPath(b, {0, 0}, {0, 3}, true);
  ASSERT_TRUE(via_margin.has_value());
  EXPECT_EQ(via_margin->turns(), 2);
}

void CheckPathShape(const Board& b, Coord a, Coord z, const shisensho::Path& p) {
  ASSERT_GE(p.points.size(), 2u);
  ASSERT_LE(p.turns(), 2);
  EXPECT_EQ(p.points.front(), a);
  EXPECT_EQ(p.points.back(), z);
  for (std::size_t i = 1; i < p.points.size(); ++i) {
    const Coord u = p.points[i - 1], v = p.points[i];
    ASSERT_TRUE(u.row == v.row || u.col == v.col);
    const int dr = (v.row > u.row) - (v.row < u.row);
    const int dc = (v.col > u.col) - (v.col < u.col);
    for (Coord c{u.row + dr, u.col + dc}; !(c == v);
         c = {c.row + dr, c.col + dc}) {
      if (b.Contains(c)) ASSERT_EQ(b.at(c), 0u);
    }
    if (i + 1 < p.points.size() && b.Contains(v)) ASSERT_EQ(b.at(v), 0u);
  }
}

TEST(ShisenShoTest, FindPathMatchesBfsOracle) {
  Rng rng(77);
  int found = 0;
  for (int i = 0; i < 1000; ++i) {
    Board b(8, 8);
    const std::uint64_t density = 3 + rng.Uniform(7);  // 30..90 percent
    for (auto& v : b.cells()) v = rng.Uniform(10) < density ? 1 : 0;
    const bool margin = i % 2 == 0;
    for (int k = 0; k < 20; ++k) {
      const Coord a{static_cast<int>(rng.Uniform(8)), static_cast<int>(rng.Uniform(8))};
      const Coord z{static_cast<int>(rng.Uniform(8)), static_cast<int>(rng.Uniform(8))};
      const int want = oracle::MinTurnsBfs(b, a, z, margin);
      const auto got = shisensho::FindPath(b, a, z, margin);
      ASSERT_EQ(got.has_value(), want >= 0) << "board " << i << " pair " << k;
      if (got) {
        ++found;
        ASSERT_EQ(got->turns(), want);
        CheckPathShape(b, a, z, *got);
      }
    }
  }
  EXPECT_GT(found, 1000);
}

TEST(ShisenShoTest, MatchingGreenCirclesClear) {
  Board b(4, 4);
  b.at(2, 1) = b.at(2, 2) = Glyph(1, 0);
  b.at(0, 0) = Glyph(2, 3);
  const StepOutcome o = shisensho::Step(b, {{2, 1}, {2, 2}}, false);
  EXPECT_EQ(o.game_reward, 1);
  EXPECT_EQ(o.score_delta, 1);
  EXPECT_EQ(b.at(2, 1), 0u);
  EXPECT_EQ(b.at(2, 2), 0u);
  EXPECT_EQ(b.CountNonEmpty(), 1);
}

TEST(ShisenShoTest, BlockedPairFailsUnchanged) {
  Board b(4, 4);
  for (auto& v : b.cells()) v = Glyph(3, 2);
  b.at(0, 0) = b.at(0, 3) = Glyph(1, 0);
  const Board before = b;
  const StepOutcome o = shisensho::Step(b, {{0, 0}, {0, 3}}, false);
  EXPECT_EQ(o.game_reward, -1);
  EXPECT_FALSE(o.state_changed);
  EXPECT_EQ(b, before);
}

TEST(ShisenShoTest, RejectsSameCellAndMismatchedKinds) {
  Board b(4, 4);
  b.at(0, 0) = Glyph(1, 0);
  b.at(0, 1) = Glyph(2, 0);
  EXPECT_EQ(shisensho::Step(b, {{0, 0}, {0, 0}}, true).game_reward, -1);
  EXPECT_EQ(shisensho::Step(b, {{0, 0}, {0, 1}}, true).game_reward, -1);
  EXPECT_EQ(shisensho::Step(b, {{0, 0}, {5, 1}}, true).game_reward, -1);
  EXPECT_EQ(shisensho::Step(b, {{0, 2}, {0, 3}}, true).game_reward, -1);
  EXPECT_EQ(b.CountNonEmpty(), 2);
}

TEST(ShisenShoTest, GeneratedBoardsHaveEvenMultiplicities) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    Rng rng(s);
    const Board b = shisensho::GenerateBoard(DifficultyConfig{}, rng);
    EXPECT_EQ(b.CountNonEmpty(), 64);
    std::map<std::uint32_t, int> counts;
    for (auto v : b.cells()) ++counts[v];
    for (const auto& [kind, n] : counts) {
      EXPECT_GE(kind, 1u);
      EXPECT_LE(kind, 36u);
      EXPECT_EQ(n % 2, 0);
    }
  }
}

TEST(ShisenShoTest, VocabularyOneFillsIdentically) {
  DifficultyConfig cfg;
  cfg.board_rows = cfg.board_cols = 2;
  cfg.tile_vocabulary_size = 1;
  Rng rng(3);
  const Board b = shisensho::GenerateBoard(cfg, rng);
  for (auto v : b.cells()) EXPECT_EQ(v, 1u);
}

TEST(ShisenShoTest, GenerationIsDeterministic) {
  Rng a(11), b(11);
  EXPECT_EQ(shisensho::GenerateBoard(DifficultyConfig{}, a),
            shisensho::GenerateBoard(DifficultyConfig{}, b));
}

TEST(ShisenShoTest, OddBoardIsInvalid) {
  DifficultyConfig cfg;
  cfg.board_rows = cfg.board_cols = 3;
  Rng rng(0);
  EXPECT_THROW(shisensho::GenerateBoard(cfg, rng), InvalidConfig);
}

TEST(ShisenShoTest, ValidMatchesAreExactlyTheConnectablePairs) {
  Rng rng(8);
  for (int i = 0; i < 50; ++i) {
    Board b = shisensho::GenerateBoard(DifficultyConfig{}, rng);
    for (auto& v : b.cells()) {
      if (rng.Uniform(2) == 0) v = 0;
    }
    std::vector<CoordPair> want;
    for (int p = 0; p < 64; ++p) {
      for (int q = p + 1; q < 64; ++q) {
        const Coord a{p / 8, p % 8}, z{q / 8, q % 8};
        if (b.at(a) != 0 && b.at(a) == b.at(z) &&
            oracle::MinTurnsBfs(b, a, z, true) >= 0) {
          want.push_back({a, z});
        }
      }
    }
    EXPECT_EQ(shisensho::ValidMatches(b, true), want);
  }
}

// Swap glyph code for (color, shape): kind = shape * 4 + color.
std::uint32_t SwapGlyph(int color, int shape) { return shape * 4 + color + 1; }

TEST(SwapTest, DetectMatchesExamples) {
  Rng rng(1);
  const Board clean = swap::GenerateBoard(DefaultConfig(GameId::Swap), rng);
  EXPECT_TRUE(swap::DetectMatches(clean).empty());

  // Row 1 holds three blue circles; nothing else lines up.
  const Board b = Rows({{5, 6, 7, 8}, {3, 3, 3, 9}, {10, 11, 12, 1}, {2, 4, 5, 6}});
  ASSERT_EQ(SwapGlyph(2, 0), 3u);
  ASSERT_EQ(oracle::MatchesByWindowScan(b).size(), 3u);
  const std::vector<Coord> want = {{1, 0}, {1, 1}, {1, 2}};
  EXPECT_EQ(swap::DetectMatches(b), want);
}

TEST(SwapTest, DetectMatchesEqualsWindowScan) {
  Rng rng(3);
  for (int i = 0; i < 5000; ++i) {
    const int rows = 3 + static_cast<int>(rng.Uniform(6));
    const int cols = 3 + static_cast<int>(rng.Uniform(6));
    Board b(rows, cols);
    const std::uint64_t kinds = 2 + rng.Uniform(3);
    for (auto& v : b.cells()) v = 1 + static_cast<std::uint32_t>(rng.Uniform(kinds));
    ASSERT_EQ(swap::DetectMatches(b), oracle::MatchesByWindowScan(b));
  }
}

TEST(SwapTest, ProductiveSwapScoresAndResolves) {
  // Swapping (0, 2) and (1, 2) lines up three blue circles on row 0.
  Board b = Rows({{3, 3, 1, 4}, {5, 6, 3, 7}, {8, 9, 10, 11}, {12, 1, 5, 6}});
  ASSERT_TRUE(swap::DetectMatches(b).empty());
  Rng rng(4);
  const StepOutcome o = swap::Step(b, rng, {{0, 2}, {1, 2}}, 12);
  EXPECT_EQ(o.game_reward, 1);
  EXPECT_EQ(o.score_delta, 1);
  EXPECT_TRUE(o.state_changed);
  EXPECT_EQ(b.CountNonEmpty(), 16);
  EXPECT_TRUE(swap::DetectMatches(b).empty());
  EXPECT_TRUE(swap::HasValidSwap(b));
}

TEST(SwapTest, UnproductiveSwapReverts) {
  Rng rng(6);
  Board b = swap::GenerateBoard(DefaultConfig(GameId::Swap), rng);
  const Board before = b;
  const Rng rng_before = rng;
  // Find an adjacent pair that does not create a match.
  CoordPair dud{};
  bool have = false;
  for (int r = 0; r < 8 && !have; ++r) {
    for (int c = 0; c + 1 < 8 && !have; ++c) {
      const CoordPair p{{r, c}, {r, c + 1}};
      if (!swap::CreatesMatch(b, p)) {
        dud = p;
        have = true;
      }
    }
  }
  ASSERT_TRUE(have);
  const StepOutcome o = swap::Step(b, rng, dud, 12);
  EXPECT_EQ(o.game_reward, -1);
  EXPECT_FALSE(o.state_changed);
  EXPECT_EQ(b, before);
  EXPECT_EQ(rng, rng_before);

  const StepOutcome diag = swap::Step(b, rng, {{2, 2}, {3, 3}}, 12);
  EXPECT_EQ(diag.game_reward, -1);
  EXPECT_EQ(b, before);
  EXPECT_EQ(rng, rng_before);
}

TEST(SwapTest, GeneratedBoardsAreStable) {
  for (std::uint64_t s = 0; s < 1000; ++s) {
    Rng rng(s);
    const Board b = swap::GenerateBoard(DefaultConfig(GameId::Swap), rng);
    ASSERT_TRUE(oracle::MatchesByWindowScan(b).empty()) << "seed " << s;
    ASSERT_TRUE(swap::HasValidSwap(b)) << "seed " << s;
    ASSERT_EQ(b.CountNonEmpty(), 64);
  }
}

TEST(SwapTest, StableAfterEverySuccessfulStep) {
  Rng rng(10);
  Board b = swap::GenerateBoard(DefaultConfig(GameId::Swap), rng);
  for (int t = 0; t < 300; ++t) {
    const std::vector<CoordPair> moves = swap::ValidSwaps(b);
    ASSERT_FALSE(moves.empty());
    const StepOutcome o = swap::Step(b, rng, moves[rng.Uniform(moves.size())], 12);
    ASSERT_EQ(o.game_reward, 1);
    ASSERT_TRUE(oracle::MatchesByWindowScan(b).empty());
    ASSERT_EQ(b.CountNonEmpty(), 64);
  }
}

TEST(SwapTest, ValidSwapsAgreeWithBruteForce) {
  Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    const Board b = swap::GenerateBoard(DefaultConfig(GameId::Swap), rng);
    std::vector<CoordPair> want;
    for (int r = 0; r < 8; ++r) {
      for (int c = 0; c < 8; ++c) {
        for (const Coord z : {Coord{r, c + 1}, Coord{r + 1, c}}) {
          if (!b.Contains(z)) continue;
          Board t = b;
          std::swap(t.at(r, c), t.at(z));
          if (!oracle::MatchesByWindowScan(t).empty()) want.push_back({{r, c}, z});
        }
      }
    }
    auto got = swap::ValidSwaps(b);
    auto key = [](const CoordPair& p) {
      return std::make_pair(p.first, p.second);
    };
    std::sort(want.begin(), want.end(),
              [&](auto& x, auto& y) { return key(x) < key(y); });
    std::sort(got.begin(), got.end(),
              [&](auto& x, auto& y) { return key(x) < key(y); });
    ASSERT_EQ(got, want);
  }
}

}  // namespace
}  // namespace vlmgym
