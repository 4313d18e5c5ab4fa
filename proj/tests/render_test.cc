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


#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

#include "golden_cases.h"
#include "vlmgym/errors.h"
#include "vlmgym/png_io.h"
#include "vlmgym/render.h"
#include "vlmgym/rng.h"
#include "vlmgym/tiles.h"

namespace vlmgym {
namespace {

namespace fs = std::filesystem;

Rgb CenterOf(const ObservationImage& img, const PixelRect& r) {
  return img.At(r.x + r.w / 2, r.y + r.h / 2);
}

TEST(RenderTest, SizeAndDeterminism) {
  for (GameId g : kAllGames) {
    const GameState s = WarmupRandom(g, DefaultConfig(g), 9, 10);
    const ObservationImage a = Render(s);
    const ObservationImage b = Render(s);
    EXPECT_EQ(a.width, 640);
    EXPECT_EQ(a.height, 840);
    EXPECT_EQ(a.pixels.size(), 640u * 840u * 3u);
    EXPECT_EQ(a.content_hash, b.content_hash);
    EXPECT_EQ(a.pixels, b.pixels);
    EXPECT_EQ(a.content_hash, Fnv1a64(a.pixels));
  }
}

TEST(RenderTest, DistinctStatesDistinctImages) {
  for (GameId g : kAllGames) {
    EXPECT_NE(Render(Reset(g, 1)).content_hash, Render(Reset(g, 2)).content_hash);
  }
}

TEST(RenderTest, EmptyCellsUseEmptyColour) {
  for (GameId g : kAllGames) {
    GameState s = Reset(g, 0);
    s.board = Board(s.board.rows(), s.board.cols());
    const ObservationImage img = Render(s);
    for (int r = 0; r < s.board.rows(); ++r) {
      for (int c = 0; c < s.board.cols(); ++c) {
        ASSERT_EQ(CenterOf(img, CellRect(s.board, {}, r, c)), palette::kEmptyCell);
      }
    }
  }
}

TEST(RenderTest, OccupiedCellsAreNotEmptyColour) {
  const GameState s = Reset(GameId::ShisenSho, 0);
  const ObservationImage img = Render(s);
  int differs = 0;
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      const PixelRect rect = CellRect(s.board, {}, r, c);
      differs += img.At(rect.x + 1, rect.y + 1) != palette::kEmptyCell;
    }
  }
  EXPECT_EQ(differs, 64);
}

TEST(RenderTest, CellRectsDisjointAndInside) {
  for (int n : {2, 4, 8, 10}) {
    const Board b(n, n);
    for (int i = 0; i < n * n; ++i) {
      const PixelRect p = CellRect(b, {}, i / n, i % n);
      ASSERT_GT(p.w, 0);
      ASSERT_GE(p.x, 0);
      ASSERT_LE(p.x + p.w, 640);
      ASSERT_GE(p.y, 840 / 7);
      ASSERT_LE(p.y + p.h, 840);
      for (int j = i + 1; j < n * n; ++j) {
        const PixelRect q = CellRect(b, {}, j / n, j % n);
        const bool overlap = p.x < q.x + q.w && q.x < p.x + p.w &&
                             p.y < q.y + q.h && q.y < p.y + p.h;
        ASSERT_FALSE(overlap);
      }
    }
  }
}

TEST(RenderTest, HeaderShowsScore) {
  GameState s = Reset(GameId::G2048, 0);
  const std::uint64_t before = Render(s).content_hash;
  s.cumulative_score = 1234;
  EXPECT_NE(Render(s).content_hash, before);
}

TEST(RenderTest, GoldenHashes) {
  if (std::getenv("VLMGYM_WRITE_GOLDEN")) golden::WriteGolden();
  const auto want = golden::LoadGolden();
  ASSERT_EQ(want.size(), golden::RenderCases().size()) << golden::GoldenPath();
  for (const golden::Case& c : golden::RenderCases()) {
    EXPECT_EQ(golden::RenderHash(c), want.at(c.Key())) << c.Key();
  }
}

class AssetDir : public ::testing::Test {
 protected:
  void SetUp() override {
    root_ = fs::temp_directory_path() /
            ("vlmgym_assets_" + std::to_string(::testing::UnitTest::GetInstance()
                                                   ->random_seed()) +
             "_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(root_);
  }
  void TearDown() override { fs::remove_all(root_); }

  void WriteClass(int k, Rgb colour) {
    const fs::path dir = root_ / std::string(kImageClassNames[k]);
    fs::create_directories(dir);
    ObservationImage img;
    img.width = 8;
    img.height = 8;
    for (int i = 0; i < 64; ++i) {
      img.pixels.insert(img.pixels.end(), {colour.r, colour.g, colour.b});
    }
    WritePng(img, dir / "0.png");
  }

  fs::path root_;
};

TEST_F(AssetDir, MissingClassThrows) {
  for (int k = 0; k < 9; ++k) WriteClass(k, {10, 20, 30});
  EXPECT_THROW(AssetLibrary::Load(root_), AssetMissing);
  EXPECT_THROW(AssetLibrary::Load(root_ / "nope"), AssetMissing);
}

TEST_F(AssetDir, TilesUseClassImages) {
  for (int k = 0; k < 10; ++k) {
    WriteClass(k, {static_cast<std::uint8_t>(20 * k), 7, static_cast<std::uint8_t>(200 - k)});
  }
  RenderConfig cfg;
  cfg.assets = AssetLibrary::Load(root_);
  const GameState s = Reset(GameId::ShisenShoCifar10, 4);
  const ObservationImage img = Render(s, cfg);
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      const int k = static_cast<int>(s.board.at(r, c)) - 1;
      ASSERT_EQ(CenterOf(img, CellRect(s.board, cfg, r, c)),
                (Rgb{static_cast<std::uint8_t>(20 * k), 7,
                     static_cast<std::uint8_t>(200 - k)}));
    }
  }
  EXPECT_EQ(Render(s, cfg).content_hash, img.content_hash);
}

TEST_F(AssetDir, UnreadableAssetThrows) {
  for (int k = 0; k < 10; ++k) WriteClass(k, {1, 2, 3});
  std::ofstream(root_ / "cat" / "0.png") << "not a png";
  RenderConfig cfg;
  cfg.assets = AssetLibrary::Load(root_);
  GameState s = Reset(GameId::ShisenShoCifar10, 0);
  s.board = Board(8, 8);
  s.board.at(0, 0) = 4;  // cat
  EXPECT_THROW(Render(s, cfg), AssetMissing);
}

TEST(PngTest, RoundTrip) {
  const ObservationImage img = Render(Reset(GameId::Swap, 3));
  const fs::path p = fs::temp_directory_path() / "vlmgym_png_roundtrip.png";
  WritePng(img, p);
  const ObservationImage back = ReadPng(p);
  fs::remove(p);
  EXPECT_EQ(back.width, img.width);
  EXPECT_EQ(back.pixels, img.pixels);
  EXPECT_EQ(back.content_hash, img.content_hash);
}

}  // namespace
}  // namespace vlmgym
