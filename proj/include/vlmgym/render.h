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

#ifndef VLMGYM_RENDER_H_
#define VLMGYM_RENDER_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "vlmgym/env.h"

namespace vlmgym {

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

// Packed RGB8, row-major, no padding.
struct ObservationImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;
  std::uint64_t content_hash = 0;  // Fnv1a64(pixels)

  Rgb At(int x, int y) const {
    const std::size_t i = (static_cast<std::size_t>(y) * width + x) * 3;
    return {pixels[i], pixels[i + 1], pixels[i + 2]};
  }
};

// Decoded image files for the CIFAR-10 variant, laid out as
// <root>/<class>/<n>.png. File lists are read once; pixels are decoded on
// demand. Immutable after Load, so one library can serve many threads.
class AssetLibrary {
 public:
  // Throws AssetMissing when a class directory is absent or holds no PNG.
  static std::shared_ptr<const AssetLibrary> Load(
      const std::filesystem::path& root);

  const std::vector<std::filesystem::path>& Files(int image_class) const {
    return files_[image_class];
  }

 private:
  std::array<std::vector<std::filesystem::path>, 10> files_;
};

struct RenderConfig {
  int width = 640;
  int height = 840;
  // When null, image-class tiles use a procedural per-class texture.
  std::shared_ptr<const AssetLibrary> assets;
};

struct PixelRect {
  int x = 0, y = 0, w = 0, h = 0;
};

// Screen rectangle of board cell (row, col) under cfg.
PixelRect CellRect(const Board& board, const RenderConfig& cfg, int row,
                   int col);

namespace palette {
inline constexpr Rgb kPage{238, 234, 226};
inline constexpr Rgb kHeader{58, 56, 52};
inline constexpr Rgb kBoard{150, 140, 128};
inline constexpr Rgb kEmptyCell{205, 196, 184};
inline constexpr Rgb kTileFace{250, 248, 242};
}  // namespace palette

// Deterministic raster of the state. Throws AssetMissing if an asset file
// cannot be decoded.
ObservationImage Render(const GameState& state, const RenderConfig& cfg = {});

}  // namespace vlmgym

#endif  // VLMGYM_RENDER_H_
