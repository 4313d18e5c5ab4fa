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

#include "vlmgym/tiles.h"

#include <stdexcept>

#include "vlmgym/text_util.h"

namespace vlmgym {
namespace {

// Swap draws from the first four colors and first three shapes.
constexpr int kSwapColors = 4;
constexpr int kSwapShapes = 3;

}  // namespace

std::string TileKind::Name() const {
  if (family == Family::ImageClass) {
    return std::string(kImageClassNames[image_class]);
  }
  return std::string(kColorNames[static_cast<int>(color)]) + " " +
         std::string(kShapeNames[static_cast<int>(shape)]);
}

int PaletteSize(GameId game) {
  switch (game) {
    case GameId::G2048:
      return 0;
    case GameId::ShisenSho:
      return static_cast<int>(kColorNames.size() * kShapeNames.size());
    case GameId::ShisenShoCifar10:
      return static_cast<int>(kImageClassNames.size());
    case GameId::Swap:
      return kSwapColors * kSwapShapes;
  }
  return 0;
}

TileKind KindAt(GameId game, int index) {
  if (index < 0 || index >= PaletteSize(game)) {
    throw std::out_of_range("tile kind index out of range");
  }
  TileKind kind;
  switch (game) {
    case GameId::ShisenShoCifar10:
      kind.family = TileKind::Family::ImageClass;
      kind.image_class = static_cast<std::uint8_t>(index);
      break;
    case GameId::ShisenSho:
      kind.color = static_cast<TileColor>(index % 6);
      kind.shape = static_cast<TileShape>(index / 6);
      break;
    case GameId::Swap:
      kind.color = static_cast<TileColor>(index % kSwapColors);
      kind.shape = static_cast<TileShape>(index / kSwapColors);
      break;
    case GameId::G2048:
      break;
  }
  return kind;
}

std::optional<int> FindKind(GameId game, std::string_view name) {
  const std::string wanted = NormalizeText(name);
  for (int i = 0; i < PaletteSize(game); ++i) {
    if (NormalizeText(KindAt(game, i).Name()) == wanted) return i;
  }
  return std::nullopt;
}

}  // namespace vlmgym
