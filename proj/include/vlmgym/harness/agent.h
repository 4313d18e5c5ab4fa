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


#ifndef VLMGYM_HARNESS_AGENT_H_
#define VLMGYM_HARNESS_AGENT_H_

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <variant>

#include "vlmgym/env.h"
#include "vlmgym/harness/vlm_client.h"
#include "vlmgym/harness/warmup.h"
#include "vlmgym/render.h"

namespace vlmgym {

// What an agent sees at one decision. The image and the ground-truth
// perception are computed on first use.
class AgentContext {
 public:
  AgentContext(const GameState& state, const RenderConfig& render, int episode,
               int step)
      : state_(state), render_(render), episode_(episode), step_(step) {}

  const GameState& state() const { return state_; }
  int episode() const { return episode_; }
  int step() const { return step_; }
  int sample() const { return sample_; }
  void set_sample(int s) { sample_ = s; }

  const ObservationImage& image() const;
  bool image_rendered() const { return image_.has_value(); }
  const std::string& ground_truth() const;

 private:
  const GameState& state_;
  const RenderConfig& render_;
  int episode_;
  int step_;
  int sample_ = 0;
  mutable std::optional<ObservationImage> image_;
  mutable std::optional<std::string> ground_truth_;
};

// Agents return raw model text. Instances are per episode and not shared
// between threads.
class Agent {
 public:
  virtual ~Agent() = default;
  virtual std::string Respond(const AgentContext& ctx) = 0;
};

// Empty perception, uniform random action: 2048 over the four directions,
// pair games over ordered pairs of distinct cells.
class RandomAgent : public Agent {
 public:
  explicit RandomAgent(Seed seed) : rng_(Rng::Derive(seed, kAgentStream)) {}
  std::string Respond(const AgentContext& ctx) override;
  GameAction SampleAction(const GameState& state);

 private:
  Rng rng_;
};

// Ground-truth perception and the first rewarding action, or the first
// board-changing move when nothing rewards.
class OracleAgent : public Agent {
 public:
  std::string Respond(const AgentContext& ctx) override;
  static GameAction Choose(const GameState& state);
};

class RemoteVlmAgent : public Agent {
 public:
  RemoteVlmAgent(VlmEndpoint endpoint, VlmLogFn log = nullptr)
      : endpoint_(std::move(endpoint)), log_(std::move(log)) {}
  std::string Respond(const AgentContext& ctx) override;

 private:
  VlmEndpoint endpoint_;
  VlmLogFn log_;
};

// Raw responses keyed by (episode, step, sample), read from a rollout log.
class ReplayLog {
 public:
  static std::shared_ptr<const ReplayLog> Load(
      const std::filesystem::path& path);
  const std::string* Find(int episode, int step, int sample) const;

 private:
  std::map<std::tuple<int, int, int>, std::string> responses_;
};

class ReplayAgent : public Agent {
 public:
  explicit ReplayAgent(std::shared_ptr<const ReplayLog> log)
      : log_(std::move(log)) {}
  // Throws AgentFailure when the log has no entry for this decision.
  std::string Respond(const AgentContext& ctx) override;

 private:
  std::shared_ptr<const ReplayLog> log_;
};

struct RandomAgentSpec {};
struct OracleAgentSpec {};
struct RemoteVlmSpec {
  VlmEndpoint endpoint;
  VlmLogFn log;
};
struct ReplaySpec {
  std::filesystem::path log_path;
};
using AgentKind =
    std::variant<RandomAgentSpec, OracleAgentSpec, RemoteVlmSpec, ReplaySpec>;

std::string AgentName(const AgentKind& kind);

// Builds per-episode agents. Loads a replay log once.
class AgentFactory {
 public:
  // Throws std::invalid_argument for a RemoteVlmSpec without URL and
  // std::runtime_error for an unreadable replay log.
  explicit AgentFactory(AgentKind kind);
  std::unique_ptr<Agent> Make(Seed episode_seed) const;
  const AgentKind& kind() const { return kind_; }

 private:
  AgentKind kind_;
  std::shared_ptr<const ReplayLog> replay_;
};

// "<perception>p</perception><think>t</think><answer>a</answer>".
std::string ComposeResponse(std::string_view perception, std::string_view think,
                            std::string_view answer);

}  // namespace vlmgym

#endif  // VLMGYM_HARNESS_AGENT_H_
