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

#include "vlmgym/render.h"

#include <algorithm>
#include <span>
#include <string>
#include <utility>

#include "vlmgym/errors.h"
#include "vlmgym/hash.h"
#include "vlmgym/png_io.h"
#include "vlmgym/rng.h"
#include "vlmgym/tiles.h"

namespace vlmgym {
namespace {

constexpr int kGutter = 4;
constexpr int kMargin = 14;

// Shapes live on a 1000x1000 unit box. Rasterization compares pixel centres
// against these vertices in exact integer arithmetic.
struct Vertex {
  int x, y;
};

constexpr Vertex kSquare[] = {{150, 150}, {850, 150}, {850, 850}, {150, 850}};
constexpr Vertex kTriangle[] = {{500, 100}, {900, 850}, {100, 850}};
constexpr Vertex kDiamond[] = {{500, 80}, {920, 500}, {500, 920}, {80, 500}};
constexpr Vertex kCross[] = {{350, 100}, {650, 100}, {650, 350}, {900, 350},
                             {900, 650}, {650, 650}, {650, 900}, {350, 900},
                             {350, 650}, {100, 650}, {100, 350}, {350, 350}};
constexpr Vertex kStar[] = {{500, 110}, {603, 388}, {899, 400}, {666, 584},
                            {747, 870}, {500, 705}, {253, 870}, {334, 584},
                            {101, 400}, {397, 388}};
constexpr int kCircleCentre = 500;
constexpr int kCircleRadius = 400;

constexpr Rgb kShapeColors[] = {{220, 40, 40},  {40, 160, 60},  {40, 80, 220},
                                {225, 190, 20}, {200, 40, 200}, {20, 180, 200}};

// Seven-segment masks, bit order a b c d e f g.
constexpr std::uint8_t kDigitSegments[] = {0x3F, 0x06, 0x5B, 0x4F, 0x66,
                                           0x6D, 0x7D, 0x07, 0x7F, 0x6F};

struct TexturePair {
  Rgb fg, bg;
};
constexpr TexturePair kClassTextures[] = {
    {{70, 110, 190}, {200, 220, 240}},  // airplane
    {{180, 30, 40}, {90, 90, 100}},     // automobile
    {{150, 110, 60}, {170, 210, 140}},  // bird
    {{120, 100, 80}, {230, 200, 160}},  // cat
    {{140, 90, 40}, {90, 140, 60}},     // deer
    {{90, 60, 40}, {220, 180, 120}},    // dog
    {{60, 140, 50}, {120, 90, 60}},     // frog
    {{100, 60, 30}, {190, 170, 110}},   // horse
    {{40, 60, 110}, {110, 170, 210}},   // ship
    {{200, 120, 30}, {60, 60, 60}},     // truck
};

class Canvas {
 public:
  Canvas(int w, int h) : w_(w), h_(h), px_(static_cast<std::size_t>(w) * h * 3) {}

  void Set(int x, int y, Rgb c) {
    if (x < 0 || y < 0 || x >= w_ || y >= h_) return;
    const std::size_t i = (static_cast<std::size_t>(y) * w_ + x) * 3;
    px_[i] = c.r;
    px_[i + 1] = c.g;
    px_[i + 2] = c.b;
  }

  void Fill(PixelRect r, Rgb c) {
    for (int y = r.y; y < r.y + r.h; ++y) {
      for (int x = r.x; x < r.x + r.w; ++x) Set(x, y, c);
    }
  }

  int width() const { return w_; }
  int height() const { return h_; }
  std::vector<std::uint8_t> Release() { return std::move(px_); }

 private:
  int w_, h_;
  std::vector<std::uint8_t> px_;
};

bool InsidePolygon(std::span<const Vertex> poly, std::int64_t px,
                   std::int64_t py, std::int64_t scale) {
  bool inside = false;
  for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    const std::int64_t xi = poly[i].x * scale, yi = poly[i].y * scale;
    const std::int64_t xj = poly[j].x * scale, yj = poly[j].y * scale;
    if ((yi > py) == (yj > py)) continue;
    const std::int64_t lhs = (px - xi) * (yj - yi);
    const std::int64_t rhs = (py - yi) * (xj - xi);
    if (yj > yi ? lhs < rhs : lhs > rhs) inside = !inside;
  }
  return inside;
}

void DrawShape(Canvas& canvas, PixelRect box, TileShape shape, Rgb color) {
  const std::int64_t s = box.w;
  std::span<const Vertex> poly;
  switch (shape) {
    case TileShape::Square:
      poly = kSquare;
      break;
    case TileShape::Triangle:
      poly = kTriangle;
      break;
    case TileShape::Diamond:
      poly = kDiamond;
      break;
    case TileShape::Cross:
      poly = kCross;
      break;
    case TileShape::Star:
      poly = kStar;
      break;
    case TileShape::Circle:
      break;
  }
  for (int y = 0; y < box.h; ++y) {
    for (int x = 0; x < box.w; ++x) {
      // Pixel centre in unit-box coordinates scaled by 2 * s.
      const std::int64_t px = (2 * x + 1) * 1000LL;
      const std::int64_t py = (2 * y + 1) * 1000LL;
      bool hit;
      if (shape == TileShape::Circle) {
        const std::int64_t dx = px - kCircleCentre * 2 * s;
        const std::int64_t dy = py - kCircleCentre * 2 * s;
        const std::int64_t r = kCircleRadius * 2 * s;
        hit = dx * dx + dy * dy <= r * r;
      } else {
        hit = InsidePolygon(poly, px, py, 2 * s);
      }
      if (hit) canvas.Set(box.x + x, box.y + y, color);
    }
  }
}

void DrawDigit(Canvas& canvas, int x, int y, int w, int h, int digit, Rgb c) {
  const int t = std::max(1, h / 8);
  const int half = h / 2;
  const std::uint8_t mask = kDigitSegments[digit];
  const PixelRect segments[7] = {
      {x, y, w, t},                       // a
      {x + w - t, y, t, half},            // b
      {x + w - t, y + half, t, h - half}, // c
      {x, y + h - t, w, t},               // d
      {x, y + half, t, h - half},         // e
      {x, y, t, half},                    // f
      {x, y + half - t / 2, w, t},        // g
  };
  for (int s = 0; s < 7; ++s) {
    if (mask & (1 << s)) canvas.Fill(segments[s], c);
  }
}

// Draws `value` in seven-segment numerals. anchor_x is the left edge, the
// centre, or the right edge depending on align (-1, 0, +1).
void DrawNumber(Canvas& canvas, std::int64_t value, int anchor_x, int top,
                int digit_h, int align, Rgb c) {
  const std::string text = std::to_string(value);
  const int digit_w = std::max(3, digit_h * 11 / 20);
  const int gap = std::max(1, digit_h / 6);
  const int n = static_cast<int>(text.size());
  const int total = n * digit_w + (n - 1) * gap;
  int x = align < 0 ? anchor_x : align == 0 ? anchor_x - total / 2
                                            : anchor_x - total;
  for (char ch : text) {
    DrawDigit(canvas, x, top, digit_w, digit_h, ch - '0', c);
    x += digit_w + gap;
  }
}

Rgb TileColor2048(std::uint32_t value) {
  static constexpr Rgb kColors[] = {
      {238, 228, 218}, {237, 224, 200}, {242, 177, 121}, {245, 149, 99},
      {246, 124, 95},  {246, 94, 59},   {237, 207, 114}, {237, 204, 97},
      {237, 200, 80},  {237, 197, 63},  {237, 194, 46}};
  int log2 = 0;
  while ((1u << (log2 + 1)) <= value) ++log2;
  if (log2 >= 1 && log2 <= 11) return kColors[log2 - 1];
  return {60, 58, 50};
}

void Draw2048Cell(Canvas& canvas, PixelRect cell, std::uint32_t value) {
  if (value == 0) {
    canvas.Fill(cell, palette::kEmptyCell);
    return;
  }
  canvas.Fill(cell, TileColor2048(value));
  const int digits = static_cast<int>(std::to_string(value).size());
  int digit_h = cell.h * 2 / 5;
  const auto width_for = [digits](int h) {
    return digits * std::max(3, h * 11 / 20) + (digits - 1) * std::max(1, h / 6);
  };
  while (digit_h > 6 && width_for(digit_h) > cell.w * 4 / 5) --digit_h;
  const Rgb ink = value <= 4 ? Rgb{119, 110, 101} : Rgb{249, 246, 242};
  DrawNumber(canvas, value, cell.x + cell.w / 2, cell.y + (cell.h - digit_h) / 2,
             digit_h, 0, ink);
}

void DrawTexture(Canvas& canvas, PixelRect cell, int image_class,
                 std::uint64_t variation) {
  const TexturePair colors = kClassTextures[image_class];
  const int half = 3 + image_class / 2;
  const int phase = static_cast<int>(variation % (2 * half));
  const int cx = cell.w / 2, cy = cell.h / 2;
  for (int y = 0; y < cell.h; ++y) {
    for (int x = 0; x < cell.w; ++x) {
      int band = 0;
      switch (image_class % 5) {
        case 0:
          band = (y + phase) / half;
          break;
        case 1:
          band = (x + phase) / half;
          break;
        case 2:
          band = (x + phase) / half + y / half;
          break;
        case 3:
          band = (x + y + phase) / half;
          break;
        case 4:
          band = std::max(std::abs(x - cx), std::abs(y - cy)) / half + phase;
          break;
      }
      canvas.Set(cell.x + x, cell.y + y, band % 2 ? colors.fg : colors.bg);
    }
  }
}

void DrawAsset(Canvas& canvas, PixelRect cell, const ObservationImage& img) {
  for (int y = 0; y < cell.h; ++y) {
    for (int x = 0; x < cell.w; ++x) {
      canvas.Set(cell.x + x, cell.y + y,
                 img.At(x * img.width / cell.w, y * img.height / cell.h));
    }
  }
}

}  // namespace

std::shared_ptr<const AssetLibrary> AssetLibrary::Load(
    const std::filesystem::path& root) {
  auto lib = std::make_shared<AssetLibrary>();
  for (int k = 0; k < 10; ++k) {
    const std::filesystem::path dir = root / std::string(kImageClassNames[k]);
    std::error_code ec;
    if (std::filesystem::is_directory(dir, ec)) {
      for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".png") {
          lib->files_[k].push_back(entry.path());
        }
      }
    }
    if (lib->files_[k].empty()) {
      throw AssetMissing("no images for class '" +
                         std::string(kImageClassNames[k]) + "' under " +
                         root.string());
    }
    std::sort(lib->files_[k].begin(), lib->files_[k].end());
  }
  return lib;
}

PixelRect CellRect(const Board& board, const RenderConfig& cfg, int row,
                   int col) {
  const int header = cfg.height / 7;
  const int n = std::max(board.rows(), board.cols());
  const int extent = std::min(cfg.width - 2 * kMargin,
                              cfg.height - header - 2 * kMargin);
  const int cell = (extent - kGutter * (n + 1)) / n;
  const int board_w = board.cols() * cell + (board.cols() + 1) * kGutter;
  const int board_h = board.rows() * cell + (board.rows() + 1) * kGutter;
  const int x0 = (cfg.width - board_w) / 2;
  const int y0 = header + (cfg.height - header - board_h) / 2;
  return {x0 + kGutter + col * (cell + kGutter),
          y0 + kGutter + row * (cell + kGutter), cell, cell};
}

ObservationImage Render(const GameState& state, const RenderConfig& cfg) {
  Canvas canvas(cfg.width, cfg.height);
  canvas.Fill({0, 0, cfg.width, cfg.height}, palette::kPage);

  const int header = cfg.height / 7;
  canvas.Fill({0, 0, cfg.width, header}, palette::kHeader);
  const int digit_h = header / 2;
  const Rgb ink{245, 242, 235};
  DrawNumber(canvas, static_cast<std::int64_t>(state.step_count), 24,
             (header - digit_h) / 2, digit_h, -1, ink);
  DrawNumber(canvas, state.cumulative_score, cfg.width - 24,
             (header - digit_h) / 2, digit_h, 1, ink);

  const Board& board = state.board;
  const PixelRect first = CellRect(board, cfg, 0, 0);
  const PixelRect last =
      CellRect(board, cfg, board.rows() - 1, board.cols() - 1);
  canvas.Fill({first.x - kGutter, first.y - kGutter,
               last.x + last.w + kGutter - (first.x - kGutter),
               last.y + last.h + kGutter - (first.y - kGutter)},
              palette::kBoard);

  for (int r = 0; r < board.rows(); ++r) {
    for (int c = 0; c < board.cols(); ++c) {
      const PixelRect cell = CellRect(board, cfg, r, c);
      const std::uint32_t code = board.at(r, c);
      if (state.game == GameId::G2048) {
        Draw2048Cell(canvas, cell, code);
        continue;
      }
      if (code == 0) {
        canvas.Fill(cell, palette::kEmptyCell);
        continue;
      }
      const TileKind kind = KindAt(state.game, static_cast<int>(code) - 1);
      if (kind.family == TileKind::Family::ImageClass) {
        const std::uint64_t variation =
            Rng::Mix(state.seed ^ Rng::Mix(static_cast<std::uint64_t>(
                                      r * board.cols() + c + 1)));
        if (cfg.assets) {
          const auto& files = cfg.assets->Files(kind.image_class);
          try {
            DrawAsset(canvas, cell, ReadPng(files[variation % files.size()]));
          } catch (const std::runtime_error& e) {
            throw AssetMissing(e.what());
          }
        } else {
          DrawTexture(canvas, cell, kind.image_class, variation);
        }
        continue;
      }
      canvas.Fill(cell, palette::kTileFace);
      const int inset = cell.w / 10;
      DrawShape(canvas,
                {cell.x + inset, cell.y + inset, cell.w - 2 * inset,
                 cell.h - 2 * inset},
                kind.shape, kShapeColors[static_cast<int>(kind.color)]);
    }
  }

  ObservationImage out;
  out.width = canvas.width();
  out.height = canvas.height();
  out.pixels = canvas.Release();
  out.content_hash = Fnv1a64(out.pixels);
  return out;
}

}  // namespace vlmgym
