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


#include "vlmgym/harness/records.h"

#include <fstream>
#include <stdexcept>

#include "vlmgym/hash.h"

namespace vlmgym {
namespace {

template <typename T>
nlohmann::ordered_json Nullable(const std::optional<T>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

template <typename T>
std::optional<T> ReadNullable(const nlohmann::json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return it->get<T>();
}

std::optional<std::uint64_t> ReadHash(const nlohmann::json& j, const char* key) {
  const auto hex = ReadNullable<std::string>(j, key);
  if (!hex) return std::nullopt;
  return std::stoull(*hex, nullptr, 16);
}

}  // namespace

nlohmann::ordered_json ToJson(const RolloutRecord& r) {
  nlohmann::ordered_json j;
  j["schema_version"] = kRecordSchemaVersion;
  j["game"] = r.game;
  j["episode"] = r.episode;
  j["step"] = r.step;
  j["sample"] = r.sample;
  j["seed"] = r.seed;
  j["state_hash"] = HashHex(r.state_hash);
  j["image_hash"] = r.image_hash ? nlohmann::ordered_json(HashHex(*r.image_hash))
                                 : nlohmann::ordered_json(nullptr);
  j["image_path"] = Nullable(r.image_path);
  j["prompt"] = r.prompt;
  j["raw_response"] = r.raw_response;
  j["parsed"] = {{"well_formed", r.well_formed},
                 {"perception", Nullable(r.perception)},
                 {"answer", Nullable(r.answer)},
                 {"action", Nullable(r.action)}};
  j["game_reward"] = r.game_reward;
  j["format_reward"] = r.format_reward;
  j["perception_reward"] = r.perception_reward;
  j["combined_reward"] = r.combined_reward;
  j["advantage"] = Nullable(r.advantage);
  j["committed"] = r.committed;
  j["score_delta"] = r.score_delta;
  j["cumulative_score"] = r.cumulative_score;
  j["localization_patterns"] = r.localization_patterns;
  j["p_acc"] = r.p_acc;
  return j;
}

RolloutRecord RecordFromJson(const nlohmann::json& j) {
  if (j.at("schema_version").get<int>() != kRecordSchemaVersion) {
    throw std::runtime_error("unsupported record schema_version");
  }
  RolloutRecord r;
  r.game = j.at("game").get<std::string>();
  r.episode = j.at("episode").get<int>();
  r.step = j.at("step").get<int>();
  r.sample = j.at("sample").get<int>();
  r.seed = j.at("seed").get<Seed>();
  r.state_hash = *ReadHash(j, "state_hash");
  r.image_hash = ReadHash(j, "image_hash");
  r.image_path = ReadNullable<std::string>(j, "image_path");
  r.prompt = j.at("prompt").get<std::string>();
  r.raw_response = j.at("raw_response").get<std::string>();
  const nlohmann::json& parsed = j.at("parsed");
  r.well_formed = parsed.at("well_formed").get<bool>();
  r.perception = ReadNullable<std::string>(parsed, "perception");
  r.answer = ReadNullable<std::string>(parsed, "answer");
  r.action = ReadNullable<std::string>(parsed, "action");
  r.game_reward = j.at("game_reward").get<int>();
  r.format_reward = j.at("format_reward").get<int>();
  r.perception_reward = j.at("perception_reward").get<int>();
  r.combined_reward = j.at("combined_reward").get<double>();
  r.advantage = ReadNullable<double>(j, "advantage");
  r.committed = j.at("committed").get<bool>();
  r.score_delta = j.at("score_delta").get<std::int64_t>();
  r.cumulative_score = j.at("cumulative_score").get<std::int64_t>();
  r.localization_patterns = j.at("localization_patterns").get<int>();
  r.p_acc = j.at("p_acc").get<int>();
  return r;
}

std::string ToJsonl(const std::vector<RolloutRecord>& records) {
  std::string out;
  for (const RolloutRecord& r : records) {
    out += ToJson(r).dump();
    out += '\n';
  }
  return out;
}

void WriteJsonl(const std::filesystem::path& path,
                const std::vector<RolloutRecord>& records) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path.string());
  f << ToJsonl(records);
}

std::vector<RolloutRecord> ReadJsonl(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path.string());
  std::vector<RolloutRecord> out;
  std::string line;
  while (std::getline(f, line)) {
    if (!line.empty()) out.push_back(RecordFromJson(nlohmann::json::parse(line)));
  }
  return out;
}

}  // namespace vlmgym
