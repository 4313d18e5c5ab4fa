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


// Command-line front end: eval, rollout, coldstart, render, baseline.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "vlmgym/env.h"
#include "vlmgym/errors.h"
#include "vlmgym/hash.h"
#include "vlmgym/harness/coldstart.h"
#include "vlmgym/harness/rollout.h"
#include "vlmgym/png_io.h"
#include "vlmgym/render.h"

namespace {

using namespace vlmgym;

const std::map<std::string, GameId> kGameMap = {
    {"2048", GameId::G2048},
    {"shisensho", GameId::ShisenSho},
    {"shisensho-cifar10", GameId::ShisenShoCifar10},
    {"swap", GameId::Swap}};

const std::map<std::string, WarmupMode> kWarmupMap = {
    {"action-space", WarmupMode::ActionSpace},
    {"valid-moves", WarmupMode::ValidMoves}};

struct AgentFlags {
  std::string agent = "random";
  VlmEndpoint endpoint;
  std::string replay_log;

  void Register(CLI::App* cmd) {
    cmd->add_option("--agent", agent, "random | oracle | remote | replay")
        ->check(CLI::IsMember({"random", "oracle", "remote", "replay"}));
    cmd->add_option("--endpoint", endpoint.url, "chat-completions URL");
    cmd->add_option("--model", endpoint.model, "model name sent to the endpoint");
    cmd->add_option("--api-key-env", endpoint.api_key_env,
                    "environment variable holding the API key");
    cmd->add_option("--min-interval-ms", endpoint.min_interval_ms,
                    "minimum spacing between requests");
    cmd->add_option("--replay-log", replay_log, "rollout JSONL to replay");
  }

  AgentKind Kind() const {
    if (agent == "oracle") return OracleAgentSpec{};
    if (agent == "remote") {
      return RemoteVlmSpec{endpoint, [](VlmLogKind kind, std::string_view text) {
                             if (kind == VlmLogKind::Error) {
                               std::cerr << "vlm: " << text << "\n";
                             }
                           }};
    }
    if (agent == "replay") return ReplaySpec{replay_log};
    return RandomAgentSpec{};
  }
};

struct BoardFlags {
  int rows = 0, cols = 0, vocabulary = 0;
  bool no_margin = false;
  std::string assets;

  void Register(CLI::App* cmd) {
    cmd->add_option("--rows", rows, "board rows (default per game)");
    cmd->add_option("--cols", cols, "board columns (default per game)");
    cmd->add_option("--vocabulary", vocabulary, "tile kinds in play");
    cmd->add_flag("--no-margin", no_margin,
                  "Shisen-Sho paths may not leave the board");
    cmd->add_option("--assets", assets,
                    "CIFAR-10 images as <dir>/<class>/*.png");
  }

  RenderConfig Raster() const {
    RenderConfig r;
    if (!assets.empty()) r.assets = AssetLibrary::Load(assets);
    return r;
  }

  DifficultyConfig Config(GameId game) const {
    DifficultyConfig cfg = DefaultConfig(game);
    if (rows > 0) cfg.board_rows = rows;
    if (cols > 0) cfg.board_cols = cols;
    if (vocabulary > 0) cfg.tile_vocabulary_size = vocabulary;
    if (no_margin) cfg.outside_margin = false;
    return cfg;
  }
};

void WriteText(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  f << text;
}

void PrintSummary(const EvalReport& r) {
  std::fprintf(stderr, "%-18s %-7s %4d x %-5d mean %10.4f  std %9.4f%s\n",
               r.game.c_str(), r.agent.c_str(), r.protocol.steps_per_episode,
               r.protocol.num_runs, r.mean, r.std,
               r.complete ? "" : "  (incomplete)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vlmgym: VLM game environments and evaluation harness"};
  app.set_config("--config", "", "INI file mirroring the command-line flags");
  app.require_subcommand(1);

  // eval
  GameId eval_game = GameId::G2048;
  int eval_steps = 0, eval_runs = 0, eval_workers = 128;
  Seed eval_seed = 0;
  std::string eval_out = "-";
  AgentFlags eval_agent;
  BoardFlags eval_board;
  CLI::App* eval = app.add_subcommand("eval", "Run the evaluation protocol");
  eval->add_option("--game", eval_game, "game id")
      ->required()
      ->transform(CLI::CheckedTransformer(kGameMap));
  eval->add_option("--steps", eval_steps, "steps per episode (default per game)");
  eval->add_option("--runs", eval_runs, "episodes (default per game)");
  eval->add_option("--seed", eval_seed, "seed of run 0; run i uses seed + i");
  eval->add_option("--workers", eval_workers, "concurrent episodes");
  eval->add_option("--out", eval_out, "report JSON path, - for stdout");
  eval_agent.Register(eval);
  eval_board.Register(eval);

  // rollout
  GameId ro_game = GameId::G2048;
  int ro_episodes = 1, ro_steps = 0, ro_group = 1, ro_warmup = 0,
      ro_workers = 128;
  WarmupMode ro_mode = WarmupMode::ActionSpace;
  Seed ro_seed = 0;
  std::string ro_log = "-", ro_images;
  double ro_alpha = 1.0, ro_beta = 0.0;
  AgentFlags ro_agent;
  BoardFlags ro_board;
  CLI::App* rollout = app.add_subcommand("rollout", "Log agent rollouts as JSONL");
  rollout->add_option("--game", ro_game, "game id")
      ->required()
      ->transform(CLI::CheckedTransformer(kGameMap));
  rollout->add_option("--episodes", ro_episodes, "episodes");
  rollout->add_option("--steps", ro_steps, "steps per episode (default per game)");
  rollout->add_option("--seed", ro_seed, "seed of episode 0");
  rollout->add_option("--group-size", ro_group, "responses sampled per step");
  rollout->add_option("--alpha", ro_alpha, "format reward weight");
  rollout->add_option("--beta", ro_beta, "perception reward weight");
  rollout->add_option("--warmup", ro_warmup, "random steps before the episode");
  rollout->add_option("--warmup-mode", ro_mode, "action-space | valid-moves")
      ->transform(CLI::CheckedTransformer(kWarmupMap));
  rollout->add_option("--workers", ro_workers, "concurrent episodes");
  rollout->add_option("--log", ro_log, "JSONL output, - for stdout");
  rollout->add_option("--images", ro_images, "directory for observation PNGs");
  ro_agent.Register(rollout);
  ro_board.Register(rollout);

  // coldstart
  GameId cs_game = GameId::ShisenSho;
  int cs_n = 1000, cs_depth = 0, cs_workers = 8;
  Seed cs_seed = 0;
  bool cs_dry = false, cs_no_images = false;
  WarmupMode cs_mode = WarmupMode::ActionSpace;
  std::string cs_out;
  VlmEndpoint cs_endpoint;
  BoardFlags cs_board;
  CLI::App* coldstart =
      app.add_subcommand("coldstart", "Build perception-grounded distillation data");
  coldstart->add_option("--game", cs_game, "game id")
      ->required()
      ->transform(CLI::CheckedTransformer(kGameMap));
  coldstart->add_option("--n", cs_n, "examples");
  coldstart->add_option("--seed", cs_seed, "seed of example 0");
  coldstart->add_option("--max-depth", cs_depth,
                        "maximum warm-up depth (default per game)");
  coldstart->add_option("--warmup-mode", cs_mode, "action-space | valid-moves")
      ->transform(CLI::CheckedTransformer(kWarmupMap));
  coldstart->add_option("--endpoint", cs_endpoint.url, "teacher endpoint URL");
  coldstart->add_option("--model", cs_endpoint.model, "teacher model name");
  coldstart->add_option("--api-key-env", cs_endpoint.api_key_env,
                        "environment variable holding the API key");
  coldstart->add_option("--workers", cs_workers, "concurrent teacher queries");
  coldstart->add_flag("--dry-run", cs_dry, "write prompts only");
  coldstart->add_flag("--no-images", cs_no_images, "skip PNG files");
  coldstart->add_option("--out", cs_out, "output directory")->required();
  cs_board.Register(coldstart);

  // render
  GameId rd_game = GameId::G2048;
  Seed rd_seed = 0;
  int rd_warmup = 0;
  std::string rd_out;
  RenderConfig rd_cfg;
  BoardFlags rd_board;
  CLI::App* render = app.add_subcommand("render", "Render a state to PNG");
  render->add_option("--game", rd_game, "game id")
      ->required()
      ->transform(CLI::CheckedTransformer(kGameMap));
  render->add_option("--seed", rd_seed, "reset seed");
  render->add_option("--warmup", rd_warmup, "random steps before rendering");
  render->add_option("--width", rd_cfg.width, "image width");
  render->add_option("--height", rd_cfg.height, "image height");
  render->add_option("--out", rd_out, "PNG path")->required();
  rd_board.Register(render);

  // baseline
  bool bl_all = false;
  std::string bl_out = "-";
  int bl_workers = 128;
  Seed bl_seed = 0;
  CLI::App* baseline =
      app.add_subcommand("baseline", "Random-agent row under the default protocol");
  baseline->add_flag("--all", bl_all, "all four games");
  baseline->add_option("--seed", bl_seed, "seed of run 0");
  baseline->add_option("--workers", bl_workers, "concurrent episodes");
  baseline->add_option("--out", bl_out, "JSONL of reports, - for stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*eval) {
      EvalProtocol p = DefaultProtocol(eval_game);
      if (eval_steps > 0) p.steps_per_episode = eval_steps;
      if (eval_runs > 0) p.num_runs = eval_runs;
      p.seed_base = eval_seed;
      RunOptions opts;
      opts.config = eval_board.Config(eval_game);
      opts.workers = eval_workers;
      opts.render = eval_board.Raster();
      const EvalReport report = RunEval(p, eval_agent.Kind(), opts);
      WriteText(eval_out, ToJson(report).dump(2) + "\n");
      PrintSummary(report);
      return report.complete ? 0 : 3;
    }
    if (*rollout) {
      EvalProtocol p = DefaultProtocol(ro_game);
      p.num_runs = ro_episodes;
      if (ro_steps > 0) p.steps_per_episode = ro_steps;
      p.seed_base = ro_seed;
      RunOptions opts;
      opts.config = ro_board.Config(ro_game);
      opts.workers = ro_workers;
      opts.group_size = ro_group;
      opts.weights = {ro_alpha, ro_beta};
      opts.warmup_steps = ro_warmup;
      opts.warmup_mode = ro_mode;
      opts.render = ro_board.Raster();
      if (!ro_images.empty()) opts.image_dir = ro_images;
      RolloutResult result;
      const EvalReport report = RunEval(p, ro_agent.Kind(), opts, &result);
      WriteText(ro_log, ToJsonl(result.AllRecords()));
      PrintSummary(report);
      return report.complete ? 0 : 3;
    }
    if (*coldstart) {
      ColdStartConfig cfg;
      cfg.game = cs_game;
      cfg.config = cs_board.Config(cs_game);
      cfg.n_examples = cs_n;
      cfg.seed = cs_seed;
      cfg.out_dir = cs_out;
      cfg.max_depth = cs_depth;
      cfg.warmup_mode = cs_mode;
      cfg.workers = cs_workers;
      cfg.write_images = !cs_no_images;
      cfg.render = cs_board.Raster();
      if (!cs_dry) {
        if (cs_endpoint.url.empty()) {
          std::cerr << "coldstart: --endpoint is required unless --dry-run\n";
          return 2;
        }
        cfg.teacher = cs_endpoint;
      }
      const ColdStartSummary s = BuildColdStart(cfg);
      std::fprintf(stderr, "wrote %d examples (%d failed) to %s\n", s.written,
                   s.failed, s.examples_path.c_str());
      return s.partial ? 3 : 0;
    }
    if (*render) {
      rd_cfg.assets = rd_board.Raster().assets;
      const DifficultyConfig cfg = rd_board.Config(rd_game);
      GameState state = rd_warmup > 0
                            ? WarmupRandom(rd_game, cfg, rd_seed, rd_warmup)
                            : Reset(rd_game, cfg, rd_seed);
      const ObservationImage img = Render(state, rd_cfg);
      WritePng(img, rd_out);
      std::printf("%s\n", HashHex(img.content_hash).c_str());
      return 0;
    }
    if (*baseline) {
      std::string out;
      const std::vector<GameId> games =
          bl_all ? std::vector<GameId>(kAllGames.begin(), kAllGames.end())
                 : std::vector<GameId>{GameId::G2048};
      for (GameId g : games) {
        EvalProtocol p = DefaultProtocol(g);
        p.seed_base = bl_seed;
        RunOptions opts;
        opts.workers = bl_workers;
        const EvalReport report = RunEval(p, RandomAgentSpec{}, opts);
        out += ToJson(report).dump() + "\n";
        PrintSummary(report);
      }
      WriteText(bl_out, out);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
