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


#ifndef VLMGYM_HARNESS_ROLLOUT_H_
#define VLMGYM_HARNESS_ROLLOUT_H_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vlmgym/env.h"
#include "vlmgym/harness/agent.h"
#include "vlmgym/harness/records.h"
#include "vlmgym/harness/warmup.h"
#include "vlmgym/render.h"
#include "vlmgym/rl_math.h"

namespace vlmgym {

struct EvalProtocol {
  GameId game = GameId::G2048;
  int steps_per_episode = 100;
  int num_runs = 10;
  Seed seed_base = 0;
};

// 2048 (100, 10), Shisen-Sho and the CIFAR variant (36, 10), Swap (1, 100).
EvalProtocol DefaultProtocol(GameId game);

struct RunOptions {
  std::optional<DifficultyConfig> config;  // unset: DefaultConfig(game)
  int workers = 128;
  int group_size = 1;
  RewardWeights weights;
  int warmup_steps = 0;
  WarmupMode warmup_mode = WarmupMode::ActionSpace;
  RenderConfig render;
  // When set, every observation is rendered and written here as PNG.
  std::optional<std::filesystem::path> image_dir;
};

struct GroupResult {
  std::vector<RolloutRecord> records;
  std::vector<GameAction> actions;  // NoAction where unparsable
  std::vector<StepOutcome> outcomes;
  std::vector<double> rewards;
  std::vector<double> advantages;
  int best = 0;  // highest combined reward, lowest index on ties
};

// Queries agent G times on one observation and scores every response on a
// peeked copy. `state` is never modified.
GroupResult SampleGroup(const GameState& state, Agent& agent, int group_size,
                        const RewardWeights& weights, AgentContext& ctx);

struct EpisodeResult {
  int episode = 0;
  Seed seed = 0;
  double score = 0.0;  // merged sum for 2048, success count otherwise
  int steps_taken = 0;
  std::vector<RolloutRecord> records;
  GameState final_state;
  std::optional<std::string> error;
};

// Plays one episode. Agent failures end the episode and set `error`.
EpisodeResult RunEpisode(const EvalProtocol& protocol, const RunOptions& opts,
                         int episode, Agent& agent);

struct RolloutResult {
  std::vector<EpisodeResult> episodes;  // index order, completed ones only
  bool complete = true;
  std::optional<std::string> error;

  std::vector<RolloutRecord> AllRecords() const;
};

// Episode i uses seed seed_base + i. Episodes run on opts.workers threads;
// results do not depend on the worker count.
RolloutResult RunRollout(const EvalProtocol& protocol, const AgentFactory& agents,
                         const RunOptions& opts);

struct EvalReport {
  std::string game;
  std::string agent;
  EvalProtocol protocol;
  std::vector<double> scores;
  double mean = 0.0;
  double std = 0.0;  // population
  std::optional<double> p_acc;
  std::optional<double> r_acc;
  bool complete = true;
  std::optional<std::string> error;
};

EvalReport Summarize(const EvalProtocol& protocol, const std::string& agent,
                     const RolloutResult& result);

EvalReport RunEval(const EvalProtocol& protocol, const AgentKind& agent,
                   const RunOptions& opts, RolloutResult* detail = nullptr);
EvalReport RunEval(const EvalProtocol& protocol, const AgentKind& agent);

nlohmann::ordered_json ToJson(const EvalReport& report);

}  // namespace vlmgym

#endif  // VLMGYM_HARNESS_ROLLOUT_H_
