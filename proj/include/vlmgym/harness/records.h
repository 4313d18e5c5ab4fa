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


#ifndef VLMGYM_HARNESS_RECORDS_H_
#define VLMGYM_HARNESS_RECORDS_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vlmgym/types.h"

namespace vlmgym {

inline constexpr int kRecordSchemaVersion = 1;

// One agent response at one decision point. Grouped sampling yields
// group_size records per step, exactly one of them committed.
struct RolloutRecord {
  int episode = 0;
  int step = 0;
  int sample = 0;
  Seed seed = 0;
  std::string game;
  std::uint64_t state_hash = 0;
  std::optional<std::uint64_t> image_hash;
  std::optional<std::string> image_path;
  std::string prompt;
  std::string raw_response;
  bool well_formed = false;
  std::optional<std::string> perception;
  std::optional<std::string> answer;
  std::optional<std::string> action;  // FormatAction of the parsed action
  int game_reward = -1;
  int format_reward = 0;
  int perception_reward = 0;
  double combined_reward = 0.0;
  std::optional<double> advantage;
  bool committed = true;
  std::int64_t score_delta = 0;
  std::int64_t cumulative_score = 0;  // after this response's step
  int localization_patterns = 0;
  int p_acc = 0;
};

// Ordered JSON object, schema_version first.
nlohmann::ordered_json ToJson(const RolloutRecord& r);
RolloutRecord RecordFromJson(const nlohmann::json& j);

std::string ToJsonl(const std::vector<RolloutRecord>& records);
void WriteJsonl(const std::filesystem::path& path,
                const std::vector<RolloutRecord>& records);
std::vector<RolloutRecord> ReadJsonl(const std::filesystem::path& path);

}  // namespace vlmgym

#endif  // VLMGYM_HARNESS_RECORDS_H_
