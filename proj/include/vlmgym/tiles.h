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

#ifndef VLMGYM_TILES_H_
#define VLMGYM_TILES_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "vlmgym/types.h"

namespace vlmgym {

enum class TileColor : std::uint8_t { Red, Green, Blue, Yellow, Magenta, Cyan };
enum class TileShape : std::uint8_t {
  Circle,
  Square,
  Triangle,
  Diamond,
  Cross,
  Star
};

inline constexpr std::array<std::string_view, 6> kColorNames = {
    "Red", "Green", "Blue", "Yellow", "Magenta", "Cyan"};
inline constexpr std::array<std::string_view, 6> kShapeNames = {
    "circle", "square", "triangle", "diamond", "cross", "star"};
inline constexpr std::array<std::string_view, 10> kImageClassNames = {
    "airplane", "automobile", "bird",  "cat",  "deer",
    "dog",      "frog",       "horse", "ship", "truck"};

struct TileKind {
  enum class Family : std::uint8_t { Glyph, ImageClass };

  Family family = Family::Glyph;
  TileColor color = TileColor::Red;
  TileShape shape = TileShape::Circle;
  std::uint8_t image_class = 0;

  // "Yellow square" or "cat".
  std::string Name() const;

  friend bool operator==(const TileKind&, const TileKind&) = default;
};

// Number of kinds a game can draw from: 36 glyphs for Shisen-Sho, 10 image
// classes for the CIFAR-10 variant, 12 glyphs for Swap, 0 for 2048.
int PaletteSize(GameId game);

// Palette kind `index` of game. Glyph palettes enumerate colors fastest, so
// a vocabulary of n uses kinds 0..n-1 of this order.
TileKind KindAt(GameId game, int index);

// Reverse lookup, case-insensitive and tolerant of repeated whitespace.
std::optional<int> FindKind(GameId game, std::string_view name);

}  // namespace vlmgym

#endif  // VLMGYM_TILES_H_
