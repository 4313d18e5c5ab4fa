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


#ifndef VLMGYM_RL_MATH_H_
#define VLMGYM_RL_MATH_H_

#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "vlmgym/protocol.h"

namespace vlmgym {

struct RewardWeights {
  double alpha = 1.0;    // format reward weight
  double beta_pr = 0.0;  // perception reward weight
};

struct GrpoConfig {
  double clip_epsilon = 0.2;
  double kl_coeff = 0.01;
  int group_size = 5;
  int batch_games = 128;
};

// Below this the group is treated as tied and every advantage is 0.
inline constexpr double kAdvantageStdFloor = 1e-8;

double CombineReward(int gr, int fr, int pr, const RewardWeights& w = {});

enum class StdKind { Population, Sample };

// (R_i - mean) / std within the group. Sample std of a singleton is taken
// as 0.
std::vector<double> GroupAdvantages(std::span<const double> rewards,
                                    StdKind kind = StdKind::Population);

// Per-token log-probabilities of one response under the current, old and
// reference policies.
struct TokenLogProbs {
  std::vector<double> policy;
  std::vector<double> old_policy;
  std::vector<double> reference;
};

struct ScoredResponse {
  TokenLogProbs logprobs;
  double advantage = 0.0;
};

using ResponseGroupLogProbs = std::vector<ScoredResponse>;

// Per-token KL(policy || reference) estimate r - log r - 1 with
// r = exp(reference - policy). Non-negative, zero iff equal.
double TokenKl(double policy_logprob, double reference_logprob);

// Mean over groups of the mean over responses of the token-mean of
// min(ratio * A, clip(ratio, 1 - eps, 1 + eps) * A) - kl_coeff * KL.
// Throws ShapeMismatch on empty groups, empty responses or unequal
// per-token lengths.
double GrpoObjective(std::span<const ResponseGroupLogProbs> groups,
                     const GrpoConfig& cfg = {});

// 1 iff the perception block, if present, normalizes to gt. Ignores the
// other tags.
int PerceptionAccuracy(const ParsedResponse& resp, std::string_view gt);

// Fraction of records with p_acc == 1 whose game reward is positive.
// nullopt when no record has p_acc == 1.
std::optional<double> ReasoningAccuracy(
    std::span<const std::pair<int, int>> records);

}  // namespace vlmgym

#endif  // VLMGYM_RL_MATH_H_
