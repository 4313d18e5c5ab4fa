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


#ifndef VLMGYM_PROTOCOL_H_
#define VLMGYM_PROTOCOL_H_

#include <optional>
#include <string>
#include <string_view>

#include "vlmgym/render.h"
#include "vlmgym/types.h"

namespace vlmgym {

// Bumped whenever any prompt text below changes.
inline constexpr std::string_view kPromptVersion = "v1";

// Per-game rule description, byte-for-byte as shipped.
std::string_view RuleText(GameId game);

// Output-format instruction appended after the rule text.
std::string_view FormatText(GameId game);

struct PromptInstance {
  GameId game = GameId::G2048;
  std::string rule_text;
  std::string format_text;
  ObservationImage image;

  // rule_text, a blank line, format_text.
  std::string Text() const;
};

PromptInstance BuildPrompt(GameId game, ObservationImage obs);

// Teacher prompt: rule text, the "I will give you the board description"
// instruction, then the ground-truth perception in its own block.
std::string BuildDistillationPrompt(GameId game,
                                    std::string_view gt_perception);

struct ParsedResponse {
  std::optional<std::string> perception;
  std::optional<std::string> think;
  std::optional<std::string> answer;
  bool well_formed = false;
  std::optional<GameAction> action;  // never holds NoAction
};

// Total over arbitrary input. See docs/protocol.md for the grammar.
ParsedResponse ParseResponse(std::string_view raw, GameId game);

// Answer-block body to action. 2048 takes 0-3, "(2)" or a direction word;
// the pair games take exactly two "(r, c)" tuples.
std::optional<GameAction> ParseAnswer(std::string_view answer, GameId game);

int FormatReward(const ParsedResponse& resp);
int PerceptionReward(const ParsedResponse& resp, std::string_view gt);

// Lines containing "(<int>, <int>): <description>". At most one per line.
int CountLocalizationPatterns(std::string_view text);

}  // namespace vlmgym

#endif  // VLMGYM_PROTOCOL_H_
