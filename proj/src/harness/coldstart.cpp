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


#include "vlmgym/harness/coldstart.h"

#include <cstdio>
#include <fstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "vlmgym/errors.h"
#include "vlmgym/harness/agent.h"
#include "vlmgym/hash.h"
#include "vlmgym/harness/parallel.h"
#include "vlmgym/perception.h"
#include "vlmgym/png_io.h"
#include "vlmgym/protocol.h"

namespace vlmgym {

std::string SftTarget(std::string_view gt, std::string_view think,
                      std::string_view answer) {
  return ComposeResponse(gt, think, answer);
}

ColdStartSummary BuildColdStart(const ColdStartConfig& cfg) {
  ValidateConfig(cfg.game, cfg.config);
  if (cfg.n_examples < 0) throw InvalidConfig("n_examples must be >= 0");
  const int max_depth =
      cfg.max_depth > 0 ? cfg.max_depth : DefaultWarmupSteps(cfg.game);
  const std::filesystem::path image_dir = cfg.out_dir / "images";
  std::filesystem::create_directories(cfg.out_dir);
  if (cfg.write_images) std::filesystem::create_directories(image_dir);

  // Depths are drawn up front so they do not depend on thread timing.
  Rng depth_rng = Rng::Derive(cfg.seed, kColdStartStream);
  std::vector<int> depths(cfg.n_examples);
  for (int& d : depths) {
    d = static_cast<int>(depth_rng.Uniform(static_cast<std::uint64_t>(max_depth) + 1));
  }

  std::vector<std::string> lines(cfg.n_examples);
  std::vector<char> failed(cfg.n_examples, 0);
  ParallelFor(cfg.n_examples, cfg.workers, [&](int i) {
    const Seed seed = cfg.seed + static_cast<Seed>(i);
    const GameState state =
        WarmupRandom(cfg.game, cfg.config, seed, depths[i], cfg.warmup_mode);
    const std::string gt = SerializePerception(state);
    const std::string prompt = BuildDistillationPrompt(cfg.game, gt);

    std::optional<ObservationImage> image;
    nlohmann::ordered_json image_path = nullptr;
    if (cfg.write_images || cfg.teacher) image = Render(state, cfg.render);
    if (cfg.write_images) {
      char name[32];
      std::snprintf(name, sizeof(name), "%05d.png", i);
      WritePng(*image, image_dir / name);
      image_path = (std::filesystem::path("images") / name).string();
    }

    nlohmann::ordered_json j;
    j["schema_version"] = kColdStartSchemaVersion;
    j["index"] = i;
    j["game"] = std::string(GameName(cfg.game));
    j["seed"] = seed;
    j["depth"] = depths[i];
    j["image_path"] = image_path;
    j["image_hash"] = image ? nlohmann::ordered_json(HashHex(image->content_hash))
                            : nlohmann::ordered_json(nullptr);
    j["state"] = nlohmann::ordered_json::parse(SerializeState(state));
    j["perception"] = gt;
    j["prompt_version"] = std::string(kPromptVersion);
    j["prompt"] = prompt;
    j["teacher_response"] = nullptr;
    j["teacher_think"] = nullptr;
    j["teacher_answer"] = nullptr;
    j["sft_target"] = nullptr;
    j["error"] = nullptr;
    if (cfg.teacher) {
      try {
        std::vector<std::uint8_t> png = EncodePng(*image);
        const std::string reply =
            QueryVlm(*cfg.teacher, prompt, png, cfg.teacher_log);
        const ParsedResponse parsed = ParseResponse(reply, cfg.game);
        j["teacher_response"] = reply;
        if (parsed.think && parsed.answer) {
          j["teacher_think"] = *parsed.think;
          j["teacher_answer"] = *parsed.answer;
          j["sft_target"] = SftTarget(gt, *parsed.think, *parsed.answer);
        } else {
          j["error"] = "teacher reply lacks <think> or <answer>";
          failed[i] = 1;
        }
      } catch (const AgentFailure& e) {
        j["error"] = e.what();
        failed[i] = 1;
      }
    }
    lines[i] = j.dump();
  });

  ColdStartSummary summary;
  summary.examples_path = cfg.out_dir / "examples.jsonl";
  summary.manifest_path = cfg.out_dir / "manifest.json";
  {
    std::ofstream out(summary.examples_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + summary.examples_path.string());
    for (const std::string& line : lines) out << line << '\n';
  }
  summary.written = cfg.n_examples;
  for (char f : failed) summary.failed += f;
  summary.partial = summary.failed > 0;

  nlohmann::ordered_json manifest;
  manifest["schema_version"] = kColdStartSchemaVersion;
  manifest["game"] = std::string(GameName(cfg.game));
  manifest["seed"] = cfg.seed;
  manifest["n_examples"] = cfg.n_examples;
  manifest["max_depth"] = max_depth;
  manifest["warmup_mode"] =
      cfg.warmup_mode == WarmupMode::ActionSpace ? "action_space" : "valid_moves";
  manifest["prompt_version"] = std::string(kPromptVersion);
  manifest["dry_run"] = !cfg.teacher.has_value();
  manifest["teacher_model"] = cfg.teacher ? nlohmann::ordered_json(cfg.teacher->model)
                                          : nlohmann::ordered_json(nullptr);
  manifest["failed"] = summary.failed;
  manifest["partial"] = summary.partial;
  std::ofstream mf(summary.manifest_path, std::ios::binary);
  mf << manifest.dump(2) << '\n';
  return summary;
}

}  // namespace vlmgym
