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


#ifndef VLMGYM_HARNESS_COLDSTART_H_
#define VLMGYM_HARNESS_COLDSTART_H_

#include <filesystem>
#include <optional>
#include <string>

#include "vlmgym/harness/vlm_client.h"
#include "vlmgym/harness/warmup.h"
#include "vlmgym/render.h"

namespace vlmgym {

inline constexpr int kColdStartSchemaVersion = 1;

struct ColdStartConfig {
  GameId game = GameId::ShisenSho;
  DifficultyConfig config;
  int n_examples = 1000;
  Seed seed = 0;
  std::filesystem::path out_dir;
  // Unset means dry run: prompts are written, teacher fields are null.
  std::optional<VlmEndpoint> teacher;
  VlmLogFn teacher_log;
  bool write_images = true;
  // Warm-up depth per example is uniform in [0, max_depth].
  int max_depth = 0;  // 0 selects DefaultWarmupSteps(game)
  WarmupMode warmup_mode = WarmupMode::ActionSpace;
  int workers = 8;
  RenderConfig render;
};

struct ColdStartSummary {
  int written = 0;
  int failed = 0;  // teacher errors
  bool partial = false;
  std::filesystem::path examples_path;
  std::filesystem::path manifest_path;
};

// Writes <out>/examples.jsonl, <out>/manifest.json and, when enabled,
// <out>/images/NNNNN.png.
ColdStartSummary BuildColdStart(const ColdStartConfig& cfg);

// "<perception>gt</perception><think>t</think><answer>a</answer>".
std::string SftTarget(std::string_view gt, std::string_view think,
                      std::string_view answer);

}  // namespace vlmgym

#endif  // VLMGYM_HARNESS_COLDSTART_H_
