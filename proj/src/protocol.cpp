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

#include "vlmgym/protocol.h"

#include <charconv>
#include <cstdint>
#include <utility>
#include <vector>

#include "vlmgym/text_util.h"

namespace vlmgym {
namespace {

constexpr std::string_view kRule2048 =
    R"(You are now playing the 2048 game. 2048 is a sliding tile puzzle game where you combine numbered tiles to create a tile with the value 2048.

Only Tiles with the SAME number merge when they collide. After each move, a new tile (2 or 4) appears randomly on the board. The game ends when there are no more valid moves.

Available actions:

- (0): Up (slide all tiles upward)

- (1): Right (slide all tiles to the right)

- (2): Down (slide all tiles downward)

- (3): Left (slide all tiles to the left)

What action should you take to achieve the highest score and reach the 2048 tile?)";

constexpr std::string_view kRuleShisenSho =
    R"(You are playing a Shisen-sho puzzle game.  The objective is to match pairs of identical tiles by connecting them with a path that has at most 2 turns and doesn't cross any other tiles.

The tiles are distinguished by their color and shape:

- Color include: Red, Green, Blue, Yellow, Magenta, Cyan, etc.

- Shapes include: circle, square, triangle, diamond, cross, star, etc.

Please analyze the game board and identify two matching tiles that can be connected according to these rules.

Return your answer as follows:

1. First coordinate: (row1, col1)

2. Second coordinate: (row2, col2)

Where row and col are 0-indexed numbers such as (0, 1), starting from the top-left of the board.)";

constexpr std::string_view kRuleCifar =
    R"(You are playing a Shisen-sho puzzle game that uses CIFAR-10 images. Each tile on the board corresponds to one of the CIFAR-10 classes: airplane, automobile, bird, cat, deer, dog, frog, horse, ship, and truck. The objective is to find a pair of tiles that belong to the same class and can be connected with a path that does not cross any other tiles and makes at most two turns.

Please analyze the game board and identify two matching tiles that can be connected according to these rules.

Return your answer as follows:

1. First coordinate: (row1, col1)

2. Second coordinate: (row2, col2)

Where row and col are 0-indexed numbers such as (0, 1), starting from the top-left of the board.)";

constexpr std::string_view kRuleSwap =
    R"(You are playing a Swap Game where you need to swap adjacent tiles to create matches of 3 or more identical tiles.

- Tiles are identified by color (Red, Green, Blue, Yellow) and shape (circle, square, triangle)

- You can only swap adjacent tiles (not diagonal)

- A valid move must create at least one match of 3 or more identical tiles

- After matches are removed, tiles above will fall down and new tiles will appear at the top

- If no valid moves are available, the board will automatically be shuffled

- The game ends when you run out of moves

Please analyze the game board and identify two adjacent tiles to swap that will create a match.

Return your answer as follows:

1. First coordinate: (row1, col1)

2. Second coordinate: (row2, col2)

Where row and col are 0-indexed numbers starting from the top-left of the board.)";

constexpr std::string_view kFormatDirection =
    "First describe the board in <perception></perception>. Then output your "
    "thinking process in <think></think> and final action in "
    "<answer></answer>.";

constexpr std::string_view kFormatPair =
    "First describe the board in <perception></perception>. Then output your "
    "thinking process in <think></think> and final action in "
    "<answer>(row1, col1) (row2, col2)</answer>.";

constexpr std::string_view kFormatDistill =
    "I will give you the board description in <perception></perception>. "
    "Then output your thinking process in <think></think> and final action "
    "in <answer></answer>.";

constexpr std::string_view kTags[3] = {"perception", "think", "answer"};

std::size_t CountOf(std::string_view hay, std::string_view needle) {
  std::size_t n = 0;
  for (std::size_t p = hay.find(needle); p != std::string_view::npos;
       p = hay.find(needle, p + needle.size())) {
    ++n;
  }
  return n;
}

// Reads [-]digits at pos. nullopt on no digits or int overflow.
std::optional<int> ReadInt(std::string_view s, std::size_t& pos) {
  std::size_t end = pos;
  if (end < s.size() && s[end] == '-') ++end;
  const std::size_t digits = end;
  while (end < s.size() && s[end] >= '0' && s[end] <= '9') ++end;
  if (end == digits) return std::nullopt;
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + end, value);
  if (ec != std::errc() || ptr != s.data() + end) return std::nullopt;
  pos = end;
  return value;
}

void SkipSpace(std::string_view s, std::size_t& pos) {
  while (pos < s.size() && IsSpace(s[pos])) ++pos;
}

// Matches "(" int "," int ")" at pos with optional inner whitespace. On
// success advances pos past the ')'.
std::optional<Coord> ReadTuple(std::string_view s, std::size_t& pos) {
  std::size_t p = pos;
  if (p >= s.size() || s[p] != '(') return std::nullopt;
  ++p;
  SkipSpace(s, p);
  const auto row = ReadInt(s, p);
  if (!row) return std::nullopt;
  SkipSpace(s, p);
  if (p >= s.size() || s[p] != ',') return std::nullopt;
  ++p;
  SkipSpace(s, p);
  const auto col = ReadInt(s, p);
  if (!col) return std::nullopt;
  SkipSpace(s, p);
  if (p >= s.size() || s[p] != ')') return std::nullopt;
  pos = p + 1;
  return Coord{*row, *col};
}

}  // namespace

std::string_view RuleText(GameId game) {
  switch (game) {
    case GameId::G2048:
      return kRule2048;
    case GameId::ShisenSho:
      return kRuleShisenSho;
    case GameId::ShisenShoCifar10:
      return kRuleCifar;
    case GameId::Swap:
      return kRuleSwap;
  }
  return {};
}

std::string_view FormatText(GameId game) {
  return IsPairGame(game) ? kFormatPair : kFormatDirection;
}

std::string PromptInstance::Text() const {
  return rule_text + "\n\n" + format_text;
}

PromptInstance BuildPrompt(GameId game, ObservationImage obs) {
  PromptInstance p;
  p.game = game;
  p.rule_text = std::string(RuleText(game));
  p.format_text = std::string(FormatText(game));
  p.image = std::move(obs);
  return p;
}

std::string BuildDistillationPrompt(GameId game,
                                    std::string_view gt_perception) {
  std::string out(RuleText(game));
  out += "\n\n";
  out += kFormatDistill;
  out += "\n\n<perception>";
  out += gt_perception;
  out += "</perception>";
  return out;
}

std::optional<GameAction> ParseAnswer(std::string_view answer, GameId game) {
  if (game == GameId::G2048) {
    std::string a = ToLower(Trim(answer));
    if (a.size() >= 2 && a.front() == '(' && a.back() == ')') {
      a = std::string(Trim(std::string_view(a).substr(1, a.size() - 2)));
    }
    for (Direction d : kAllDirections) {
      if (a == std::to_string(static_cast<int>(d)) ||
          a == ToLower(DirectionName(d))) {
        return GameAction(d);
      }
    }
    return std::nullopt;
  }
  std::vector<Coord> found;
  for (std::size_t pos = 0; pos < answer.size();) {
    if (auto c = ReadTuple(answer, pos)) {
      found.push_back(*c);
    } else {
      ++pos;
    }
  }
  if (found.size() != 2) return std::nullopt;
  return GameAction(CoordPair{found[0], found[1]});
}

ParsedResponse ParseResponse(std::string_view raw, GameId game) {
  ParsedResponse r;
  std::optional<std::string>* slots[3] = {&r.perception, &r.think, &r.answer};
  bool ordered = true;
  std::size_t cursor = 0;
  bool once = true;
  for (int i = 0; i < 3; ++i) {
    const std::string open = "<" + std::string(kTags[i]) + ">";
    const std::string close = "</" + std::string(kTags[i]) + ">";
    once = once && CountOf(raw, open) == 1 && CountOf(raw, close) == 1;
    const std::size_t o = raw.find(open);
    if (o == std::string_view::npos) {
      ordered = false;
      continue;
    }
    const std::size_t body = o + open.size();
    const std::size_t c = raw.find(close, body);
    if (c == std::string_view::npos) {
      ordered = false;
      continue;
    }
    *slots[i] = std::string(raw.substr(body, c - body));
    if (o < cursor) ordered = false;
    cursor = c + close.size();
  }
  r.well_formed = once && ordered;
  if (r.answer) r.action = ParseAnswer(*r.answer, game);
  return r;
}

int FormatReward(const ParsedResponse& resp) { return resp.well_formed; }

int PerceptionReward(const ParsedResponse& resp, std::string_view gt) {
  return resp.well_formed && resp.perception &&
         NormalizeText(*resp.perception) == NormalizeText(gt);
}

int CountLocalizationPatterns(std::string_view text) {
  int count = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    for (std::size_t pos = line.find('('); pos != std::string_view::npos;
         pos = line.find('(', pos + 1)) {
      std::size_t p = pos;
      if (!ReadTuple(line, p)) continue;
      SkipSpace(line, p);
      if (p >= line.size() || line[p] != ':') continue;
      if (Trim(line.substr(p + 1)).empty()) continue;
      ++count;
      break;
    }
    start = end + 1;
  }
  return count;
}

}  // namespace vlmgym
