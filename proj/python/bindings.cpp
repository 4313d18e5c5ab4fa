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


// Python bindings. Observations cross as bytes and strings; no game logic
// lives here.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "vlmgym/env.h"
#include "vlmgym/errors.h"
#include "vlmgym/harness/rollout.h"
#include "vlmgym/harness/warmup.h"
#include "vlmgym/hash.h"
#include "vlmgym/perception.h"
#include "vlmgym/png_io.h"
#include "vlmgym/protocol.h"
#include "vlmgym/render.h"
#include "vlmgym/rl_math.h"

namespace py = pybind11;
using namespace vlmgym;

namespace {

// None, a Direction, an int 0-3, or ((r1, c1), (r2, c2)).
GameAction ToAction(const py::handle& obj) {
  if (obj.is_none()) return NoAction{};
  if (py::isinstance<Direction>(obj)) return obj.cast<Direction>();
  if (py::isinstance<py::int_>(obj)) {
    const int v = obj.cast<int>();
    if (v < 0 || v > 3) return NoAction{};
    return static_cast<Direction>(v);
  }
  const auto pair = obj.cast<std::pair<std::pair<int, int>, std::pair<int, int>>>();
  return CoordPair{{pair.first.first, pair.first.second},
                   {pair.second.first, pair.second.second}};
}

py::object FromAction(const GameAction& a) {
  if (const auto* d = std::get_if<Direction>(&a)) return py::cast(*d);
  if (const auto* p = std::get_if<CoordPair>(&a)) {
    return py::make_tuple(py::make_tuple(p->first.row, p->first.col),
                          py::make_tuple(p->second.row, p->second.col));
  }
  return py::none();
}

py::list ToActionList(const std::vector<GameAction>& actions) {
  py::list out;
  for (const GameAction& a : actions) out.append(FromAction(a));
  return out;
}

std::vector<std::vector<std::uint32_t>> BoardRows(const Board& b) {
  std::vector<std::vector<std::uint32_t>> rows(b.rows());
  for (int r = 0; r < b.rows(); ++r) {
    for (int c = 0; c < b.cols(); ++c) rows[r].push_back(b.at(r, c));
  }
  return rows;
}

GameId GameFromName(const std::string& name) {
  const auto g = ParseGameName(name);
  if (!g) throw py::value_error("unknown game '" + name + "'");
  return *g;
}

AgentKind AgentFromName(const std::string& name) {
  if (name == "random") return RandomAgentSpec{};
  if (name == "oracle") return OracleAgentSpec{};
  throw py::value_error("agent must be 'random' or 'oracle'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core of vlmgym";

  py::register_exception<InvalidConfig>(m, "InvalidConfig", PyExc_ValueError);
  py::register_exception<ShapeMismatch>(m, "ShapeMismatch", PyExc_ValueError);
  py::register_exception<AssetMissing>(m, "AssetMissing", PyExc_RuntimeError);
  py::register_exception<MalformedPerception>(m, "MalformedPerception",
                                              PyExc_ValueError);

  py::enum_<GameId>(m, "GameId")
      .value("G2048", GameId::G2048)
      .value("ShisenSho", GameId::ShisenSho)
      .value("ShisenShoCifar10", GameId::ShisenShoCifar10)
      .value("Swap", GameId::Swap);
  m.def("game_name", [](GameId g) { return std::string(GameName(g)); });
  m.def("parse_game_name", &GameFromName);

  py::enum_<Direction>(m, "Direction")
      .value("Up", Direction::Up)
      .value("Right", Direction::Right)
      .value("Down", Direction::Down)
      .value("Left", Direction::Left);

  py::enum_<PerceptionVariant>(m, "PerceptionVariant")
      .value("Glyph", PerceptionVariant::Glyph)
      .value("ImageAsset", PerceptionVariant::ImageAsset);

  py::class_<DifficultyConfig>(m, "DifficultyConfig")
      .def(py::init<>())
      .def_readwrite("board_rows", &DifficultyConfig::board_rows)
      .def_readwrite("board_cols", &DifficultyConfig::board_cols)
      .def_readwrite("tile_vocabulary_size",
                     &DifficultyConfig::tile_vocabulary_size)
      .def_readwrite("perception_variant",
                     &DifficultyConfig::perception_variant)
      .def_readwrite("outside_margin", &DifficultyConfig::outside_margin)
      .def(py::self == py::self);
  m.def("default_config", &DefaultConfig);

  py::class_<StepOutcome>(m, "StepOutcome")
      .def_readonly("game_reward", &StepOutcome::game_reward)
      .def_readonly("score_delta", &StepOutcome::score_delta)
      .def_readonly("state_changed", &StepOutcome::state_changed)
      .def_readonly("terminal", &StepOutcome::terminal)
      .def(py::self == py::self);

  py::class_<GameState>(m, "GameState")
      .def_readonly("game", &GameState::game)
      .def_readonly("config", &GameState::config)
      .def_readonly("seed", &GameState::seed)
      .def_readonly("cumulative_score", &GameState::cumulative_score)
      .def_readonly("step_count", &GameState::step_count)
      .def_property_readonly("board",
                             [](const GameState& s) { return BoardRows(s.board); })
      .def("copy", [](const GameState& s) { return GameState(s); })
      .def(py::self == py::self);

  m.def("reset",
        [](GameId game, Seed seed, std::optional<DifficultyConfig> cfg) {
          return Reset(game, cfg.value_or(DefaultConfig(game)), seed);
        },
        py::arg("game"), py::arg("seed"), py::arg("config") = py::none());
  m.def("peek_step", [](const GameState& s, const py::object& action) {
    return PeekStep(s, ToAction(action));
  });
  m.def("commit_step", [](GameState& s, const py::object& action) {
    return CommitStep(s, ToAction(action));
  });
  m.def("is_terminal", &IsTerminal);
  m.def("rewarding_actions",
        [](const GameState& s) { return ToActionList(RewardingActions(s)); });
  m.def("valid_moves",
        [](const GameState& s) { return ToActionList(ValidMoves(s)); });
  m.def("serialize_state", &SerializeState);
  m.def("deserialize_state", &DeserializeState);
  m.def("state_hash", &StateHash);
  m.def("format_action",
        [](const py::object& a) { return FormatAction(ToAction(a)); });

  py::class_<ObservationImage>(m, "ObservationImage")
      .def_readonly("width", &ObservationImage::width)
      .def_readonly("height", &ObservationImage::height)
      .def_readonly("content_hash", &ObservationImage::content_hash)
      .def_property_readonly("pixels",
                             [](const ObservationImage& img) {
                               return py::bytes(
                                   reinterpret_cast<const char*>(img.pixels.data()),
                                   img.pixels.size());
                             })
      .def("encode_png", [](const ObservationImage& img) {
        const std::vector<std::uint8_t> png = EncodePng(img);
        return py::bytes(reinterpret_cast<const char*>(png.data()), png.size());
      });
  m.def("render",
        [](const GameState& s, int width, int height,
           std::optional<std::string> assets) {
          RenderConfig cfg;
          cfg.width = width;
          cfg.height = height;
          if (assets) cfg.assets = AssetLibrary::Load(*assets);
          return Render(s, cfg);
        },
        py::arg("state"), py::arg("width") = 640, py::arg("height") = 840,
        py::arg("assets") = py::none());
  m.def("hash_hex", &HashHex);

  m.def("serialize_perception",
        [](const GameState& s) { return SerializePerception(s); });
  m.def("parse_perception",
        [](const std::string& text, GameId game, const DifficultyConfig& cfg) {
          return BoardRows(ParsePerception(text, game, cfg));
        });

  m.attr("PROMPT_VERSION") = std::string(kPromptVersion);
  m.def("rule_text", [](GameId g) { return std::string(RuleText(g)); });
  m.def("format_text", [](GameId g) { return std::string(FormatText(g)); });
  m.def("prompt_text", [](GameId g) { return BuildPrompt(g, {}).Text(); });
  m.def("build_distillation_prompt", &BuildDistillationPrompt);

  py::class_<ParsedResponse>(m, "ParsedResponse")
      .def_readonly("perception", &ParsedResponse::perception)
      .def_readonly("think", &ParsedResponse::think)
      .def_readonly("answer", &ParsedResponse::answer)
      .def_readonly("well_formed", &ParsedResponse::well_formed)
      .def_property_readonly("action", [](const ParsedResponse& r) {
        return r.action ? FromAction(*r.action) : py::none();
      });
  m.def("parse_response", &ParseResponse);
  m.def("format_reward", &FormatReward);
  m.def("perception_reward", &PerceptionReward);
  m.def("count_localization_patterns", &CountLocalizationPatterns);

  py::class_<RewardWeights>(m, "RewardWeights")
      .def(py::init<double, double>(), py::arg("alpha") = 1.0,
           py::arg("beta_pr") = 0.0)
      .def_readwrite("alpha", &RewardWeights::alpha)
      .def_readwrite("beta_pr", &RewardWeights::beta_pr);
  m.def("combine_reward", &CombineReward, py::arg("gr"), py::arg("fr"),
        py::arg("pr"), py::arg("weights") = RewardWeights{});
  m.def("group_advantages",
        [](const std::vector<double>& r, bool sample_std) {
          return GroupAdvantages(r, sample_std ? StdKind::Sample
                                               : StdKind::Population);
        },
        py::arg("rewards"), py::arg("sample_std") = false);
  // groups: list of lists of (policy, old_policy, reference, advantage).
  m.def("grpo_objective",
        [](const std::vector<std::vector<std::tuple<std::vector<double>,
                                                    std::vector<double>,
                                                    std::vector<double>, double>>>&
               groups,
           double clip_epsilon, double kl_coeff) {
          std::vector<ResponseGroupLogProbs> native;
          for (const auto& g : groups) {
            ResponseGroupLogProbs& out = native.emplace_back();
            for (const auto& [p, o, ref, a] : g) out.push_back({{p, o, ref}, a});
          }
          GrpoConfig cfg;
          cfg.clip_epsilon = clip_epsilon;
          cfg.kl_coeff = kl_coeff;
          return GrpoObjective(native, cfg);
        },
        py::arg("groups"), py::arg("clip_epsilon") = 0.2,
        py::arg("kl_coeff") = 0.01);
  m.def("perception_accuracy", &PerceptionAccuracy);
  m.def("reasoning_accuracy",
        [](const std::vector<std::pair<int, int>>& records) {
          return ReasoningAccuracy(records);
        });

  m.def("warmup_random",
        [](GameId game, Seed seed, int n_steps, bool valid_moves,
           std::optional<DifficultyConfig> cfg) {
          return WarmupRandom(game, cfg.value_or(DefaultConfig(game)), seed,
                              n_steps,
                              valid_moves ? WarmupMode::ValidMoves
                                          : WarmupMode::ActionSpace);
        },
        py::arg("game"), py::arg("seed"), py::arg("n_steps"),
        py::arg("valid_moves") = false, py::arg("config") = py::none());

  // Returns the report as a JSON string.
  m.def("run_eval",
        [](GameId game, const std::string& agent, int steps, int runs,
           Seed seed, int workers) {
          EvalProtocol p = DefaultProtocol(game);
          if (steps > 0) p.steps_per_episode = steps;
          if (runs > 0) p.num_runs = runs;
          p.seed_base = seed;
          RunOptions opts;
          opts.workers = workers;
          py::gil_scoped_release release;
          return ToJson(RunEval(p, AgentFromName(agent), opts)).dump();
        },
        py::arg("game"), py::arg("agent") = "random", py::arg("steps") = 0,
        py::arg("runs") = 0, py::arg("seed") = 0, py::arg("workers") = 8);
}
