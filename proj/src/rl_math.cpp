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


#include "vlmgym/rl_math.h"

#include <algorithm>
#include <cmath>

#include "vlmgym/errors.h"
#include "vlmgym/text_util.h"

namespace vlmgym {

double CombineReward(int gr, int fr, int pr, const RewardWeights& w) {
  return gr + w.alpha * fr + w.beta_pr * pr;
}

std::vector<double> GroupAdvantages(std::span<const double> rewards,
                                    StdKind kind) {
  const std::size_t n = rewards.size();
  std::vector<double> out(n, 0.0);
  if (n == 0) return out;
  double mean = 0.0;
  for (double r : rewards) mean += r;
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double r : rewards) ss += (r - mean) * (r - mean);
  const double denom = kind == StdKind::Population ? static_cast<double>(n)
                                                   : static_cast<double>(n) - 1;
  const double sd = denom > 0 ? std::sqrt(ss / denom) : 0.0;
  if (sd < kAdvantageStdFloor) return out;
  for (std::size_t i = 0; i < n; ++i) out[i] = (rewards[i] - mean) / sd;
  return out;
}

double TokenKl(double policy_logprob, double reference_logprob) {
  const double log_r = reference_logprob - policy_logprob;
  return std::exp(log_r) - log_r - 1.0;
}

double GrpoObjective(std::span<const ResponseGroupLogProbs> groups,
                     const GrpoConfig& cfg) {
  if (groups.empty()) throw ShapeMismatch("no groups");
  double total = 0.0;
  for (const ResponseGroupLogProbs& group : groups) {
    if (group.empty()) throw ShapeMismatch("empty group");
    double group_sum = 0.0;
    for (const ScoredResponse& resp : group) {
      const TokenLogProbs& lp = resp.logprobs;
      const std::size_t n = lp.policy.size();
      if (n == 0) throw ShapeMismatch("response has no tokens");
      if (lp.old_policy.size() != n || lp.reference.size() != n) {
        throw ShapeMismatch("per-token log-prob lengths differ");
      }
      const double a = resp.advantage;
      double token_sum = 0.0;
      for (std::size_t t = 0; t < n; ++t) {
        const double ratio = std::exp(lp.policy[t] - lp.old_policy[t]);
        const double clipped = std::clamp(ratio, 1.0 - cfg.clip_epsilon,
                                          1.0 + cfg.clip_epsilon);
        token_sum += std::min(ratio * a, clipped * a) -
                     cfg.kl_coeff * TokenKl(lp.policy[t], lp.reference[t]);
      }
      group_sum += token_sum / static_cast<double>(n);
    }
    total += group_sum / static_cast<double>(group.size());
  }
  return total / static_cast<double>(groups.size());
}

int PerceptionAccuracy(const ParsedResponse& resp, std::string_view gt) {
  return resp.perception && NormalizeText(*resp.perception) == NormalizeText(gt);
}

std::optional<double> ReasoningAccuracy(
    std::span<const std::pair<int, int>> records) {
  int n = 0, positive = 0;
  for (const auto& [p_acc, reward] : records) {
    if (p_acc != 1) continue;
    ++n;
    if (reward > 0) ++positive;
  }
  if (n == 0) return std::nullopt;
  return static_cast<double>(positive) / n;
}

}  // namespace vlmgym
