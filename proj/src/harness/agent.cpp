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


#include "vlmgym/harness/agent.h"

#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "vlmgym/errors.h"
#include "vlmgym/harness/warmup.h"
#include "vlmgym/perception.h"
#include "vlmgym/protocol.h"

namespace vlmgym {

const ObservationImage& AgentContext::image() const {
  if (!image_) image_ = Render(state_, render_);
  return *image_;
}

const std::string& AgentContext::ground_truth() const {
  if (!ground_truth_) ground_truth_ = SerializePerception(state_);
  return *ground_truth_;
}

std::string ComposeResponse(std::string_view perception, std::string_view think,
                            std::string_view answer) {
  std::string out = "<perception>";
  out += perception;
  out += "</perception><think>";
  out += think;
  out += "</think><answer>";
  out += answer;
  out += "</answer>";
  return out;
}

GameAction RandomAgent::SampleAction(const GameState& state) {
  return SampleRandomAction(state, rng_);
}

std::string RandomAgent::Respond(const AgentContext& ctx) {
  return ComposeResponse("", "", FormatAction(SampleAction(ctx.state())));
}

GameAction OracleAgent::Choose(const GameState& state) {
  std::vector<GameAction> actions = RewardingActions(state);
  if (actions.empty()) actions = ValidMoves(state);
  if (!actions.empty()) return actions.front();
  if (state.game == GameId::G2048) return Direction::Up;
  return CoordPair{{0, 0}, {0, 1}};
}

std::string OracleAgent::Respond(const AgentContext& ctx) {
  return ComposeResponse(ctx.ground_truth(), "",
                         FormatAction(Choose(ctx.state())));
}

std::string RemoteVlmAgent::Respond(const AgentContext& ctx) {
  return QueryVlm(endpoint_, BuildPrompt(ctx.state().game, ctx.image()), log_);
}

std::shared_ptr<const ReplayLog> ReplayLog::Load(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open replay log " + path.string());
  auto log = std::make_shared<ReplayLog>();
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.contains("raw_response")) {
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                               ": not a rollout record");
    }
    log->responses_[{j.at("episode").get<int>(), j.at("step").get<int>(),
                     j.value("sample", 0)}] =
        j.at("raw_response").get<std::string>();
  }
  return log;
}

const std::string* ReplayLog::Find(int episode, int step, int sample) const {
  const auto it = responses_.find({episode, step, sample});
  return it == responses_.end() ? nullptr : &it->second;
}

std::string ReplayAgent::Respond(const AgentContext& ctx) {
  const std::string* r = log_->Find(ctx.episode(), ctx.step(), ctx.sample());
  if (r == nullptr) {
    throw AgentFailure("replay log has no response for episode " +
                       std::to_string(ctx.episode()) + " step " +
                       std::to_string(ctx.step()) + " sample " +
                       std::to_string(ctx.sample()));
  }
  return *r;
}

std::string AgentName(const AgentKind& kind) {
  switch (kind.index()) {
    case 0:
      return "random";
    case 1:
      return "oracle";
    case 2:
      return "remote";
    default:
      return "replay";
  }
}

AgentFactory::AgentFactory(AgentKind kind) : kind_(std::move(kind)) {
  if (const auto* remote = std::get_if<RemoteVlmSpec>(&kind_)) {
    if (remote->endpoint.url.empty()) {
      throw std::invalid_argument("remote agent needs an endpoint URL");
    }
  }
  if (const auto* replay = std::get_if<ReplaySpec>(&kind_)) {
    replay_ = ReplayLog::Load(replay->log_path);
  }
}

std::unique_ptr<Agent> AgentFactory::Make(Seed episode_seed) const {
  switch (kind_.index()) {
    case 0:
      return std::make_unique<RandomAgent>(episode_seed);
    case 1:
      return std::make_unique<OracleAgent>();
    case 2: {
      const auto& remote = std::get<RemoteVlmSpec>(kind_);
      return std::make_unique<RemoteVlmAgent>(remote.endpoint, remote.log);
    }
    default:
      return std::make_unique<ReplayAgent>(replay_);
  }
}

}  // namespace vlmgym
