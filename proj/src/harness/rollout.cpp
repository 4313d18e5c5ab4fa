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


#include "vlmgym/harness/rollout.h"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <utility>

#include "vlmgym/errors.h"
#include "vlmgym/harness/parallel.h"
#include "vlmgym/png_io.h"
#include "vlmgym/protocol.h"

namespace vlmgym {

EvalProtocol DefaultProtocol(GameId game) {
  switch (game) {
    case GameId::G2048:
      return {game, 100, 10, 0};
    case GameId::ShisenSho:
    case GameId::ShisenShoCifar10:
      return {game, 36, 10, 0};
    case GameId::Swap:
      return {game, 1, 100, 0};
  }
  return {};
}

GroupResult SampleGroup(const GameState& state, Agent& agent, int group_size,
                        const RewardWeights& weights, AgentContext& ctx) {
  GroupResult g;
  const GameId game = state.game;
  const std::string& gt = ctx.ground_truth();
  const std::string prompt = BuildPrompt(game, {}).Text();
  const std::uint64_t state_hash = StateHash(state);
  for (int k = 0; k < group_size; ++k) {
    ctx.set_sample(k);
    RolloutRecord r;
    r.episode = ctx.episode();
    r.step = ctx.step();
    r.sample = k;
    r.seed = state.seed;
    r.game = std::string(GameName(game));
    r.state_hash = state_hash;
    r.prompt = prompt;
    r.raw_response = agent.Respond(ctx);
    if (ctx.image_rendered()) r.image_hash = ctx.image().content_hash;

    const ParsedResponse parsed = ParseResponse(r.raw_response, game);
    const GameAction action = parsed.action.value_or(GameAction(NoAction{}));
    const StepOutcome outcome = PeekStep(state, action).first;
    r.well_formed = parsed.well_formed;
    r.perception = parsed.perception;
    r.answer = parsed.answer;
    if (parsed.action) r.action = FormatAction(*parsed.action);
    r.game_reward = outcome.game_reward;
    r.format_reward = FormatReward(parsed);
    r.perception_reward = PerceptionReward(parsed, gt);
    r.combined_reward = CombineReward(r.game_reward, r.format_reward,
                                      r.perception_reward, weights);
    r.committed = false;
    r.score_delta = outcome.score_delta;
    r.cumulative_score = state.cumulative_score + outcome.score_delta;
    r.localization_patterns = CountLocalizationPatterns(r.raw_response);
    r.p_acc = PerceptionAccuracy(parsed, gt);

    g.rewards.push_back(r.combined_reward);
    g.actions.push_back(action);
    g.outcomes.push_back(outcome);
    g.records.push_back(std::move(r));
  }
  g.advantages = GroupAdvantages(g.rewards);
  for (int k = 1; k < group_size; ++k) {
    if (g.rewards[k] > g.rewards[g.best]) g.best = k;
  }
  if (group_size > 1) {
    for (int k = 0; k < group_size; ++k) g.records[k].advantage = g.advantages[k];
  }
  if (group_size > 0) g.records[g.best].committed = true;
  return g;
}

EpisodeResult RunEpisode(const EvalProtocol& protocol, const RunOptions& opts,
                         int episode, Agent& agent) {
  const GameId game = protocol.game;
  const DifficultyConfig cfg = opts.config.value_or(DefaultConfig(game));
  EpisodeResult res;
  res.episode = episode;
  res.seed = protocol.seed_base + static_cast<Seed>(episode);
  GameState state =
      opts.warmup_steps > 0
          ? WarmupRandom(game, cfg, res.seed, opts.warmup_steps, opts.warmup_mode)
          : Reset(game, cfg, res.seed);
  const std::int64_t start_score = state.cumulative_score;
  for (int t = 0; t < protocol.steps_per_episode; ++t) {
    if (IsTerminal(state)) break;
    AgentContext ctx(state, opts.render, episode, t);
    std::optional<std::string> image_path;
    if (opts.image_dir) {
      char name[48];
      std::snprintf(name, sizeof(name), "ep%05d_t%04d.png", episode, t);
      const std::filesystem::path path = *opts.image_dir / name;
      WritePng(ctx.image(), path);
      image_path = path.string();
    }
    GroupResult g;
    try {
      g = SampleGroup(state, agent, opts.group_size, opts.weights, ctx);
    } catch (const AgentFailure& e) {
      res.error = e.what();
      break;
    }
    for (RolloutRecord& r : g.records) {
      r.image_path = image_path;
      res.records.push_back(std::move(r));
    }
    CommitStep(state, g.actions[g.best]);
    ++res.steps_taken;
  }
  res.score = static_cast<double>(state.cumulative_score - start_score);
  res.final_state = std::move(state);
  return res;
}

std::vector<RolloutRecord> RolloutResult::AllRecords() const {
  std::vector<RolloutRecord> out;
  for (const EpisodeResult& e : episodes) {
    out.insert(out.end(), e.records.begin(), e.records.end());
  }
  return out;
}

RolloutResult RunRollout(const EvalProtocol& protocol, const AgentFactory& agents,
                         const RunOptions& opts) {
  ValidateConfig(protocol.game, opts.config.value_or(DefaultConfig(protocol.game)));
  if (protocol.steps_per_episode < 0 || protocol.num_runs < 0 ||
      opts.group_size < 1) {
    throw InvalidConfig("steps, runs and group size must be non-negative");
  }
  if (opts.image_dir) std::filesystem::create_directories(*opts.image_dir);

  std::vector<std::optional<EpisodeResult>> slots(protocol.num_runs);
  std::atomic<bool> abort{false};
  ParallelFor(protocol.num_runs, opts.workers, [&](int i) {
    if (abort) return;
    const std::unique_ptr<Agent> agent =
        agents.Make(protocol.seed_base + static_cast<Seed>(i));
    slots[i] = RunEpisode(protocol, opts, i, *agent);
    if (slots[i]->error) abort = true;
  });

  RolloutResult out;
  for (std::optional<EpisodeResult>& slot : slots) {
    if (!slot) {
      out.complete = false;
      continue;
    }
    if (slot->error) {
      out.complete = false;
      if (!out.error) out.error = *slot->error;
      continue;
    }
    out.episodes.push_back(std::move(*slot));
  }
  return out;
}

EvalReport Summarize(const EvalProtocol& protocol, const std::string& agent,
                     const RolloutResult& result) {
  EvalReport report;
  report.game = std::string(GameName(protocol.game));
  report.agent = agent;
  report.protocol = protocol;
  report.complete = result.complete;
  report.error = result.error;
  for (const EpisodeResult& e : result.episodes) report.scores.push_back(e.score);
  if (!report.scores.empty()) {
    const double n = static_cast<double>(report.scores.size());
    for (double s : report.scores) report.mean += s;
    report.mean /= n;
    double ss = 0.0;
    for (double s : report.scores) ss += (s - report.mean) * (s - report.mean);
    report.std = std::sqrt(ss / n);
  }
  std::vector<std::pair<int, int>> acc;
  for (const EpisodeResult& e : result.episodes) {
    for (const RolloutRecord& r : e.records) {
      if (r.committed) acc.emplace_back(r.p_acc, r.game_reward);
    }
  }
  if (!acc.empty()) {
    double sum = 0.0;
    for (const auto& a : acc) sum += a.first;
    report.p_acc = sum / static_cast<double>(acc.size());
    report.r_acc = ReasoningAccuracy(acc);
  }
  return report;
}

EvalReport RunEval(const EvalProtocol& protocol, const AgentKind& agent,
                   const RunOptions& opts, RolloutResult* detail) {
  const AgentFactory factory(agent);
  RolloutResult result = RunRollout(protocol, factory, opts);
  EvalReport report = Summarize(protocol, AgentName(agent), result);
  if (detail != nullptr) *detail = std::move(result);
  return report;
}

EvalReport RunEval(const EvalProtocol& protocol, const AgentKind& agent) {
  return RunEval(protocol, agent, RunOptions{});
}

nlohmann::ordered_json ToJson(const EvalReport& report) {
  nlohmann::ordered_json j;
  j["schema_version"] = kRecordSchemaVersion;
  j["game"] = report.game;
  j["agent"] = report.agent;
  j["steps_per_episode"] = report.protocol.steps_per_episode;
  j["num_runs"] = report.protocol.num_runs;
  j["seed_base"] = report.protocol.seed_base;
  j["scores"] = report.scores;
  j["mean"] = report.mean;
  j["std"] = report.std;
  j["p_acc"] = report.p_acc ? nlohmann::ordered_json(*report.p_acc)
                            : nlohmann::ordered_json(nullptr);
  j["r_acc"] = report.r_acc ? nlohmann::ordered_json(*report.r_acc)
                            : nlohmann::ordered_json(nullptr);
  j["complete"] = report.complete;
  j["error"] = report.error ? nlohmann::ordered_json(*report.error)
                            : nlohmann::ordered_json(nullptr);
  return j;
}

}  // namespace vlmgym
