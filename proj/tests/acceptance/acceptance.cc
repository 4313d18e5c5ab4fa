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


// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "golden_cases.h"
#include "oracles.h"
#include "protocol_cases.h"
#include "vlmgym/env.h"
#include "vlmgym/game_2048.h"
#include "vlmgym/harness/agent.h"
#include "vlmgym/harness/records.h"
#include "vlmgym/harness/rollout.h"
#include "vlmgym/harness/warmup.h"
#include "vlmgym/perception.h"
#include "vlmgym/protocol.h"
#include "vlmgym/rl_math.h"
#include "vlmgym/shisensho.h"
#include "vlmgym/swap.h"

namespace vlmgym {
namespace {

// Pinned thresholds.
constexpr int kRuns2048 = 200;
constexpr double kBand2048Lo = 550.0, kBand2048Hi = 900.0;
constexpr double kMaxSeconds2048 = 60.0;
constexpr int kRunsShisen = 200;
constexpr double kBandShisenLo = 0.05, kBandShisenHi = 1.5;
constexpr int kRunsSwap = 50000;
constexpr double kBandSwapLo = 0.001, kBandSwapHi = 0.05;
constexpr int kOracleMinPairs = 30;
constexpr int kGreedySeedsWanted = 100;
constexpr int kMechanicsCases = 10000;
constexpr double kAdvTol = 1e-3;
constexpr double kInvariantTol = 1e-9;
constexpr int kFuzzStrings = 1000000;
constexpr int kRoundTripsPerGame = 1000;
constexpr int kParallelEpisodes = 128;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string Fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), f, a, b, c);
  return buf;
}

Outcome RandomBand(GameId game, int runs, int steps, double lo, double hi,
                   double max_seconds) {
  const EvalProtocol p{game, steps, runs, 0};
  RunOptions opts;
  opts.workers = 1;
  const auto t0 = std::chrono::steady_clock::now();
  const EvalReport r = RunEval(p, RandomAgentSpec{}, opts);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  Outcome o;
  o.pass = r.complete && static_cast<int>(r.scores.size()) == runs && r.mean >= lo &&
           r.mean <= hi && secs < max_seconds;
  o.detail = std::string(GameName(game)) + " runs=" + std::to_string(runs) +
             " steps=" + std::to_string(steps) +
             Fmt(" mean=%.4f band=[%g, %g]", r.mean, lo, hi) +
             Fmt(" time=%.2fs", secs);
  return o;
}

Outcome OraclePlumbing() {
  // Seeds on which greedy first-rewarding-pair play clears the board,
  // found by stepping the environment directly.
  std::vector<Seed> seeds;
  for (Seed s = 0; static_cast<int>(seeds.size()) < kGreedySeedsWanted && s < 100000; ++s) {
    GameState st = Reset(GameId::ShisenSho, s);
    for (int t = 0; t < 36 && !IsTerminal(st); ++t) {
      const std::vector<GameAction> acts = RewardingActions(st);
      if (acts.empty()) break;
      CommitStep(st, acts.front());
    }
    if (st.board.CountNonEmpty() == 0) seeds.push_back(s);
  }
  // Then the same seeds through the full harness: render, prompt, parse,
  // reward.
  double worst = 1e9;
  RunOptions opts;
  opts.workers = 1;
  const AgentFactory factory(OracleAgentSpec{});
  for (Seed s : seeds) {
    const EvalProtocol p{GameId::ShisenSho, 36, 1, s};
    const auto agent = factory.Make(s);
    const EpisodeResult e = RunEpisode(p, opts, 0, *agent);
    worst = std::min(worst, e.score);
  }
  bool pass = static_cast<int>(seeds.size()) == kGreedySeedsWanted &&
              worst >= kOracleMinPairs;
  std::ostringstream d;
  d << "shisensho greedy-solvable seeds=" << seeds.size() << " min_score=" << worst
    << " (need >=" << kOracleMinPairs << ");";
  for (GameId g : kAllGames) {
    const EvalReport r = RunEval(DefaultProtocol(g), OracleAgentSpec{}, opts);
    pass = pass && r.complete && r.mean > 0;
    d << " " << GameName(g) << "_mean=" << r.mean;
  }
  return {pass, d.str()};
}

Outcome Mechanics() {
  int bad2048 = 0, badPath = 0, badMatch = 0;
  Rng rng(20260101);
  constexpr std::uint32_t kValues[] = {0, 0, 0, 2, 2, 4, 4, 8, 16, 32};
  for (int i = 0; i < kMechanicsCases; ++i) {
    Board b(4, 4);
    for (auto& v : b.cells()) v = kValues[rng.Uniform(10)];
    const Direction d = kAllDirections[rng.Uniform(4)];
    const g2048::SlideResult got = g2048::SlideMerge(b, d);
    const oracle::Slide2048 want = oracle::SlideMerge2048(b, d);
    bad2048 += got.board != want.board || got.merged_sum != want.merged_sum ||
               got.moved != want.moved;
  }
  for (int i = 0; i < kMechanicsCases; ++i) {
    Board b(8, 8);
    const std::uint64_t density = 3 + rng.Uniform(7);
    for (auto& v : b.cells()) v = rng.Uniform(10) < density ? 1 : 0;
    const bool margin = rng.Uniform(2) == 0;
    const Coord a{static_cast<int>(rng.Uniform(8)), static_cast<int>(rng.Uniform(8))};
    const Coord z{static_cast<int>(rng.Uniform(8)), static_cast<int>(rng.Uniform(8))};
    const int want = oracle::MinTurnsBfs(b, a, z, margin);
    const auto got = shisensho::FindPath(b, a, z, margin);
    badPath += got.has_value() != (want >= 0) || (got && got->turns() != want);
  }
  for (int i = 0; i < kMechanicsCases; ++i) {
    const int rows = 3 + static_cast<int>(rng.Uniform(6));
    const int cols = 3 + static_cast<int>(rng.Uniform(6));
    Board b(rows, cols);
    const std::uint64_t kinds = 2 + rng.Uniform(3);
    for (auto& v : b.cells()) v = 1 + static_cast<std::uint32_t>(rng.Uniform(kinds));
    badMatch += swap::DetectMatches(b) != oracle::MatchesByWindowScan(b);
  }
  return {bad2048 == 0 && badPath == 0 && badMatch == 0,
          "cases=" + std::to_string(kMechanicsCases) + " each; mismatches slide_merge=" +
              std::to_string(bad2048) + " path_bfs=" + std::to_string(badPath) +
              " match3_scan=" + std::to_string(badMatch)};
}

ScoredResponse OneToken(double ratio, double adv) {
  ScoredResponse r;
  r.logprobs.policy = {std::log(ratio)};
  r.logprobs.old_policy = {0.0};
  r.logprobs.reference = {0.0};
  r.advantage = adv;
  return r;
}

Outcome GrpoMath() {
  bool pass = true;
  std::vector<double> r = {1, -1, -1, -1, 1};
  const std::vector<double> a = GroupAdvantages(r);
  const double want[] = {1.2247, -0.8165, -0.8165, -0.8165, 1.2247};
  double max_err = 0;
  for (int i = 0; i < 5; ++i) max_err = std::max(max_err, std::abs(a[i] - want[i]));
  pass = pass && max_err <= kAdvTol;
  r = {1, -1};
  pass = pass && GroupAdvantages(r) == std::vector<double>{1.0, -1.0};
  r = {0.5, 0.5, 0.5};
  pass = pass && GroupAdvantages(r) == std::vector<double>{0, 0, 0};

  Rng rng(6);
  double worst_mean = 0, worst_std = 0;
  for (int t = 0; t < 5000; ++t) {
    std::vector<double> v(2 + rng.Uniform(15));
    for (double& x : v) x = static_cast<double>(rng.Uniform(5)) - 2.0;
    if (std::all_of(v.begin(), v.end(), [&](double x) { return x == v[0]; })) continue;
    const std::vector<double> adv = GroupAdvantages(v);
    double m = 0, ss = 0;
    for (double x : adv) m += x;
    m /= adv.size();
    for (double x : adv) ss += (x - m) * (x - m);
    worst_mean = std::max(worst_mean, std::abs(m));
    worst_std = std::max(worst_std, std::abs(std::sqrt(ss / adv.size()) - 1.0));
  }
  pass = pass && worst_mean <= kInvariantTol && worst_std <= kInvariantTol;

  const GrpoConfig cfg{0.2, 0.0, 1, 1};
  std::vector<ResponseGroupLogProbs> g = {{OneToken(1.5, 1.0)}};
  const double v1 = GrpoObjective(g, cfg);
  g = {{OneToken(0.5, -1.0)}};
  const double v2 = GrpoObjective(g, cfg);
  pass = pass && v1 == 1.2 && v2 == -0.8;
  return {pass, Fmt("adv_max_err=%.2e mean_dev=%.2e", max_err, worst_mean) +
                    Fmt(" std_dev=%.2e", worst_std) +
                    Fmt(" grpo(1.5,+1)=%.17g grpo(0.5,-1)=%.17g", v1, v2)};
}

Outcome RewardWeighting() {
  int checked = 0, bad = 0;
  for (int gr : {-1, 1}) {
    for (int fr : {0, 1}) {
      for (int pr : {0, 1}) {
        for (double a : {0.0, 0.1, 0.5, 1.0, 2.0, 10.0}) {
          for (double b : {0.0, 0.1, 0.25, 1.0, 3.0}) {
            ++checked;
            bad += CombineReward(gr, fr, pr, {a, b}) != gr + a * fr + b * pr;
          }
        }
      }
    }
  }
  bad += CombineReward(1, 1, 0) != 2.0;
  return {bad == 0, "grid=" + std::to_string(checked) + " mismatches=" + std::to_string(bad)};
}

Outcome Protocol() {
  int table_bad = 0;
  for (const cases::RewardCase& c : cases::FormatCases()) {
    table_bad += FormatReward(ParseResponse(c.raw, GameId::G2048)) != c.want;
  }
  for (const cases::RewardCase& c : cases::PerceptionCases()) {
    table_bad +=
        PerceptionReward(ParseResponse(c.raw, GameId::ShisenSho), cases::kPerceptionGt) !=
        c.want;
  }
  int fuzz_bad = 0;
  Rng rng(31337);
  const std::vector<std::string>& pieces = cases::FuzzPieces();
  for (int i = 0; i < kFuzzStrings; ++i) {
    std::string raw;
    const std::uint64_t n = rng.Uniform(16);
    for (std::uint64_t k = 0; k < n; ++k) raw += pieces[rng.Uniform(pieces.size())];
    // Occasional raw bytes.
    if (i % 7 == 0) raw.push_back(static_cast<char>(rng.Uniform(256)));
    const GameId g = kAllGames[i % 4];
    try {
      const ParsedResponse r = ParseResponse(raw, g);
      fuzz_bad += r.well_formed != cases::GrammarOracle(raw);
      if (r.action && ParseAnswer(FormatAction(*r.action), g) != r.action) ++fuzz_bad;
    } catch (const std::exception&) {
      ++fuzz_bad;
    }
  }
  int rt_bad = 0;
  for (GameId g : kAllGames) {
    Rng depth(static_cast<std::uint64_t>(g) + 100);
    for (int i = 0; i < kRoundTripsPerGame; ++i) {
      const GameState s = WarmupRandom(g, DefaultConfig(g), 5000 + i,
                                       static_cast<int>(depth.Uniform(150)),
                                       WarmupMode::ValidMoves);
      try {
        rt_bad += ParsePerception(SerializePerception(s), g, s.config) != s.board;
      } catch (const std::exception&) {
        ++rt_bad;
      }
    }
  }
  return {table_bad == 0 && fuzz_bad == 0 && rt_bad == 0,
          "tables=8+8 bad=" + std::to_string(table_bad) +
              " fuzz=" + std::to_string(kFuzzStrings) + " bad=" + std::to_string(fuzz_bad) +
              " roundtrips=" + std::to_string(kRoundTripsPerGame) +
              "/game bad=" + std::to_string(rt_bad)};
}

Outcome Determinism() {
  int jsonl_bad = 0;
  for (GameId g : kAllGames) {
    for (const AgentKind& kind : {AgentKind(RandomAgentSpec{}), AgentKind(OracleAgentSpec{})}) {
      EvalProtocol p = DefaultProtocol(g);
      p.seed_base = 77;
      RunOptions opts;
      opts.group_size = 3;
      RolloutResult a, b;
      RunEval(p, kind, opts, &a);
      RunEval(p, kind, opts, &b);
      jsonl_bad += ToJsonl(a.AllRecords()) != ToJsonl(b.AllRecords());
    }
  }
  const auto golden = golden::LoadGolden();
  int golden_bad = 0;
  for (const golden::Case& c : golden::RenderCases()) {
    const auto it = golden.find(c.Key());
    golden_bad += it == golden.end() || it->second != golden::RenderHash(c);
  }
  return {jsonl_bad == 0 && golden_bad == 0 && !golden.empty(),
          "jsonl_replay_mismatches=" + std::to_string(jsonl_bad) + " golden_renders=" +
              std::to_string(golden::RenderCases().size()) +
              " mismatches=" + std::to_string(golden_bad) + " at 640x840"};
}

Outcome ParallelSerial() {
  int bad = 0;
  for (GameId g : kAllGames) {
    EvalProtocol p = DefaultProtocol(g);
    p.num_runs = kParallelEpisodes;
    p.seed_base = 9000;
    RunOptions par;
    par.workers = kParallelEpisodes;
    RunOptions ser;
    ser.workers = 1;
    RolloutResult a, b;
    RunEval(p, RandomAgentSpec{}, par, &a);
    RunEval(p, RandomAgentSpec{}, ser, &b);
    if (a.episodes.size() != static_cast<std::size_t>(kParallelEpisodes) ||
        b.episodes.size() != a.episodes.size()) {
      ++bad;
      continue;
    }
    for (int i = 0; i < kParallelEpisodes; ++i) {
      bad += !(a.episodes[i].final_state == b.episodes[i].final_state) ||
             ToJsonl(a.episodes[i].records) != ToJsonl(b.episodes[i].records);
    }
  }
  return {bad == 0, std::to_string(kParallelEpisodes) +
                        " concurrent episodes x 4 games vs serial; mismatches=" +
                        std::to_string(bad)};
}

}  // namespace
}  // namespace vlmgym

int main() {
  using vlmgym::GameId;
  using vlmgym::Outcome;
  namespace v = vlmgym;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"random_baseline_2048",
       [] {
         return v::RandomBand(GameId::G2048, v::kRuns2048, 100, v::kBand2048Lo,
                              v::kBand2048Hi, v::kMaxSeconds2048);
       }},
      {"random_baseline_shisensho",
       [] {
         return v::RandomBand(GameId::ShisenSho, v::kRunsShisen, 36, v::kBandShisenLo,
                              v::kBandShisenHi, 1e9);
       }},
      {"random_baseline_swap",
       [] {
         return v::RandomBand(GameId::Swap, v::kRunsSwap, 1, v::kBandSwapLo,
                              v::kBandSwapHi, 1e9);
       }},
      {"oracle_plumbing", v::OraclePlumbing},
      {"mechanics_oracles", v::Mechanics},
      {"grpo_math", v::GrpoMath},
      {"reward_weighting", v::RewardWeighting},
      {"protocol", v::Protocol},
      {"determinism", v::Determinism},
      {"parallel_serial_equivalence", v::ParallelSerial},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
