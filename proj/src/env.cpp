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

#include "vlmgym/env.h"

#include <stdexcept>

#include <nlohmann/json.hpp>

#include "vlmgym/game_2048.h"
#include "vlmgym/hash.h"
#include "vlmgym/shisensho.h"
#include "vlmgym/swap.h"

namespace vlmgym {
namespace {

using ordered_json = nlohmann::ordered_json;

StepOutcome Rejected(const GameState& state) {
  StepOutcome out;
  out.terminal = IsTerminal(state);
  return out;
}

StepOutcome Apply(GameState& state, const GameAction& action) {
  const bool margin = state.config.outside_margin;
  const int vocabulary = state.config.tile_vocabulary_size;
  switch (state.game) {
    case GameId::G2048:
      if (const auto* dir = std::get_if<Direction>(&action)) {
        return g2048::Step(state.board, state.rng, *dir);
      }
      return Rejected(state);
    case GameId::ShisenSho:
    case GameId::ShisenShoCifar10:
      if (const auto* pair = std::get_if<CoordPair>(&action)) {
        return shisensho::Step(state.board, *pair, margin);
      }
      return Rejected(state);
    case GameId::Swap:
      if (const auto* pair = std::get_if<CoordPair>(&action)) {
        return swap::Step(state.board, state.rng, *pair, vocabulary);
      }
      return Rejected(state);
  }
  return Rejected(state);
}

}  // namespace

GameState Reset(GameId game, const DifficultyConfig& cfg, Seed seed) {
  ValidateConfig(game, cfg);
  GameState state;
  state.game = game;
  state.config = cfg;
  state.seed = seed;
  state.rng = Rng(seed);
  switch (game) {
    case GameId::G2048:
      state.board = g2048::NewBoard(state.rng);
      break;
    case GameId::ShisenSho:
    case GameId::ShisenShoCifar10:
      state.board = shisensho::GenerateBoard(cfg, state.rng);
      break;
    case GameId::Swap:
      state.board = swap::GenerateBoard(cfg, state.rng);
      break;
  }
  return state;
}

GameState Reset(GameId game, Seed seed) {
  return Reset(game, DefaultConfig(game), seed);
}

std::pair<StepOutcome, GameState> PeekStep(const GameState& state,
                                           const GameAction& action) {
  GameState next = state;
  StepOutcome out = CommitStep(next, action);
  return {out, std::move(next)};
}

StepOutcome CommitStep(GameState& state, const GameAction& action) {
  StepOutcome out = Apply(state, action);
  state.cumulative_score += out.score_delta;
  ++state.step_count;
  return out;
}

bool IsTerminal(const GameState& state) {
  switch (state.game) {
    case GameId::G2048:
      return !g2048::CanMove(state.board);
    case GameId::ShisenSho:
    case GameId::ShisenShoCifar10:
      return state.board.CountNonEmpty() == 0 ||
             !shisensho::HasValidMatch(state.board,
                                       state.config.outside_margin);
    case GameId::Swap:
      return false;
  }
  return false;
}

std::vector<GameAction> RewardingActions(const GameState& state) {
  std::vector<GameAction> out;
  switch (state.game) {
    case GameId::G2048:
      for (Direction d : kAllDirections) {
        if (g2048::SlideMerge(state.board, d).merged_sum > 0) out.push_back(d);
      }
      break;
    case GameId::ShisenSho:
    case GameId::ShisenShoCifar10:
      for (const CoordPair& p :
           shisensho::ValidMatches(state.board, state.config.outside_margin)) {
        out.push_back(p);
      }
      break;
    case GameId::Swap:
      for (const CoordPair& p : swap::ValidSwaps(state.board)) {
        out.push_back(p);
      }
      break;
  }
  return out;
}

std::vector<GameAction> ValidMoves(const GameState& state) {
  if (state.game != GameId::G2048) return RewardingActions(state);
  std::vector<GameAction> out;
  for (Direction d : kAllDirections) {
    if (g2048::SlideMerge(state.board, d).moved) out.push_back(d);
  }
  return out;
}

std::string SerializeState(const GameState& state) {
  ordered_json j;
  j["schema_version"] = kStateSchemaVersion;
  j["game"] = std::string(GameName(state.game));
  ordered_json cfg;
  cfg["rows"] = state.config.board_rows;
  cfg["cols"] = state.config.board_cols;
  cfg["vocabulary"] = state.config.tile_vocabulary_size;
  cfg["perception"] =
      state.config.perception_variant == PerceptionVariant::Glyph ? "glyph"
                                                                  : "image";
  cfg["outside_margin"] = state.config.outside_margin;
  j["config"] = std::move(cfg);
  j["seed"] = state.seed;
  j["rng_state"] = state.rng.state();
  j["cumulative_score"] = state.cumulative_score;
  j["step_count"] = state.step_count;
  ordered_json rows = ordered_json::array();
  for (int r = 0; r < state.board.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < state.board.cols(); ++c) row.push_back(state.board.at(r, c));
    rows.push_back(std::move(row));
  }
  j["board"] = std::move(rows);
  return j.dump();
}

GameState DeserializeState(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  if (j.at("schema_version").get<int>() != kStateSchemaVersion) {
    throw std::invalid_argument("unsupported state schema version");
  }
  GameState state;
  const auto game = ParseGameName(j.at("game").get<std::string>());
  if (!game) throw std::invalid_argument("unknown game in state document");
  state.game = *game;
  const auto& cfg = j.at("config");
  state.config.board_rows = cfg.at("rows").get<int>();
  state.config.board_cols = cfg.at("cols").get<int>();
  state.config.tile_vocabulary_size = cfg.at("vocabulary").get<int>();
  state.config.perception_variant = cfg.at("perception").get<std::string>() == "image"
                                        ? PerceptionVariant::ImageAsset
                                        : PerceptionVariant::Glyph;
  state.config.outside_margin = cfg.at("outside_margin").get<bool>();
  ValidateConfig(state.game, state.config);
  state.seed = j.at("seed").get<Seed>();
  state.rng = Rng(j.at("rng_state").get<std::uint64_t>());
  state.cumulative_score = j.at("cumulative_score").get<std::int64_t>();
  state.step_count = j.at("step_count").get<std::uint64_t>();
  state.board = Board(state.config.board_rows, state.config.board_cols);
  const auto& rows = j.at("board");
  if (!rows.is_array() || static_cast<int>(rows.size()) != state.board.rows()) {
    throw std::invalid_argument("board row count does not match config");
  }
  for (int r = 0; r < state.board.rows(); ++r) {
    const auto& row = rows[r];
    if (!row.is_array() || static_cast<int>(row.size()) != state.board.cols()) {
      throw std::invalid_argument("board column count does not match config");
    }
    for (int c = 0; c < state.board.cols(); ++c) {
      state.board.at(r, c) = row[c].get<std::uint32_t>();
    }
  }
  return state;
}

std::uint64_t StateHash(const GameState& state) {
  return Fnv1a64(SerializeState(state));
}

}  // namespace vlmgym
