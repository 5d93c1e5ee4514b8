// Copyright 2026 The itervote Authors
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

#include <doctest.h>

#include "itervote/dynamics.hpp"
#include "itervote/error.hpp"
#include "support.hpp"

using namespace itervote;
using itervote::testing::Gen;
using itervote::testing::game;
using itervote::testing::plurality;
using itervote::testing::set;

namespace {

// Unweighted or weighted lex Plurality winner, recomputed from scratch.
int lex_winner(const Game& g, const Profile& p) {
  const auto& spec = g.form.plurality_spec();
  std::vector<long long> s = spec.initial_scores;
  for (int i = 0; i < g.num_voters(); ++i) s[p[i]] += spec.weights[i];
  int w = 0;
  for (int c = 1; c < static_cast<int>(s.size()); ++c) {
    if (s[c] > s[w]) w = c;
  }
  return w;
}

std::vector<int> better_oracle(const Game& g, const Profile& p, int i, ReplyKind kind) {
  const PreferenceOrder& q = g.prefs[i];
  const int old_w = lex_winner(g, p);
  std::vector<int> better;
  int best_rank = 1 << 20;
  for (int a = 0; a < g.form.num_candidates(); ++a) {
    if (a == p[i]) continue;
    Profile np = p;
    np[i] = a;
    const int w = lex_winner(g, np);
    if (!q.prefers(CandidateId{w}, CandidateId{old_w})) continue;
    if ((kind == ReplyKind::kDirect || kind == ReplyKind::kDirectBest) && w != a) continue;
    better.push_back(a);
    best_rank = std::min(best_rank, q.rank(CandidateId{w}));
  }
  if (kind == ReplyKind::kBest || kind == ReplyKind::kDirectBest) {
    std::vector<int> best;
    for (int a : better) {
      Profile np = p;
      np[i] = a;
      if (q.rank(CandidateId{lex_winner(g, np)}) == best_rank) best.push_back(a);
    }
    if (kind == ReplyKind::kDirectBest) {
      // Best among all better replies, then restricted to direct ones.
      std::vector<int> all = better_oracle(g, p, i, ReplyKind::kBest);
      std::vector<int> out;
      for (int a : all) {
        Profile np = p;
        np[i] = a;
        if (lex_winner(g, np) == a) out.push_back(a);
      }
      return out;
    }
    return best;
  }
  return better;
}

Game cycle_game() {
  // Initial scores (1,0,0); the 4-cycle runs from (b,c).
  return game(plurality({1, 0, 0}, {1, 1}), {"abc", "cba"});
}

}  // namespace

TEST_CASE("policy names") {
  CHECK(to_string(ReplyPolicy{ReplyKind::kDirectBest, ComparatorMode::kExpectedUtility}) ==
        "direct-best/eu");
  CHECK(to_string(StepType::kType2) == "T2");
  CHECK(to_string(PathStatus::kCycleDetected) == "cycle");
}

TEST_CASE("default comparator follows the tie-breaking rule") {
  Gen gen(1);
  CHECK(default_comparator(gen.plurality_game(3, 2, 1, 2, TieBreak::kLexicographic)) ==
        ComparatorMode::kLexSingleton);
  Game r = gen.plurality_game(3, 2, 1, 2, TieBreak::kRandomized);
  CHECK(default_comparator(r) == ComparatorMode::kExpectedUtility);
  r.utilities.reset();
  CHECK(default_comparator(r) == ComparatorMode::kStochasticDominance);
}

TEST_CASE("property: lexicographic reply sets match a brute-force oracle") {
  Gen gen(41);
  for (int trial = 0; trial < 400; ++trial) {
    const int m = gen.uniform(2, 5);
    const int n = gen.uniform(1, 4);
    const Game g = gen.plurality_game(m, n, 3, 3, TieBreak::kLexicographic);
    Profile p(n);
    for (int& a : p) a = gen.uniform(0, m - 1);
    for (int i = 0; i < n; ++i) {
      for (ReplyKind k : {ReplyKind::kBetter, ReplyKind::kBest, ReplyKind::kDirect,
                          ReplyKind::kDirectBest}) {
        CHECK(improvement_set(g, p, i, {k, ComparatorMode::kLexSingleton}) ==
              better_oracle(g, p, i, k));
      }
    }
  }
}

TEST_CASE("property: reply policies nest under every comparator") {
  Gen gen(43);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = gen.uniform(2, 5);
    const int n = gen.uniform(1, 3);
    const Game g = gen.plurality_game(m, n, 2, 2, TieBreak::kRandomized);
    Profile p(n);
    for (int& a : p) a = gen.uniform(0, m - 1);
    for (ComparatorMode c :
         {ComparatorMode::kExpectedUtility, ComparatorMode::kStochasticDominance,
          ComparatorMode::kLocalDominance, ComparatorMode::kKOnly}) {
      for (int i = 0; i < n; ++i) {
        const auto better = improvement_set(g, p, i, {ReplyKind::kBetter, c});
        const auto best = improvement_set(g, p, i, {ReplyKind::kBest, c});
        const auto direct = improvement_set(g, p, i, {ReplyKind::kDirect, c});
        const auto db = improvement_set(g, p, i, {ReplyKind::kDirectBest, c});
        auto subset = [](const std::vector<int>& a, const std::vector<int>& b) {
          return std::includes(b.begin(), b.end(), a.begin(), a.end());
        };
        CHECK(subset(best, better));
        CHECK(subset(direct, better));
        CHECK(subset(db, best));
        CHECK(subset(db, direct));
        CHECK(db.size() <= 1);
        CHECK(better.empty() == best.empty());
        for (int a : direct) {
          Profile np = p;
          np[i] = a;
          CHECK(g.form.outcome(np).contains(CandidateId{a}));
        }
      }
    }
  }
}

TEST_CASE("expected-utility replies need utilities") {
  Gen gen(2);
  Game g = gen.plurality_game(3, 2, 1, 1, TieBreak::kRandomized);
  g.utilities.reset();
  try {
    improvement_set(g, {0, 0}, 0, {ReplyKind::kBetter, ComparatorMode::kExpectedUtility});
    FAIL("ran without utilities");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kInvalidConfiguration);
  }
}

TEST_CASE("step types") {
  const Game g = cycle_game();
  const GameForm& f = g.form;
  // (b,c) -> (b,b): voter 2 moves to the new winner b, from a loser.
  StepRecord s = classify_step(f, {1, 2}, {1, 1}, set("a"), set("b"), 1);
  CHECK(s.type == StepType::kType1);
  CHECK(s.direct);
  // (b,b) -> (c,b): voter 1 leaves the winner b, the winner becomes a.
  s = classify_step(f, {1, 1}, {2, 1}, set("b"), set("a"), 0);
  CHECK(s.type == StepType::kType3);
  CHECK_FALSE(s.direct);
  // From a winner to the new winner.
  s = classify_step(f, {0, 1}, {0, 0}, set("a"), set("a"), 1);
  CHECK(s.type == StepType::kType1);
  s = classify_step(f, {1, 1}, {1, 2}, set("b"), set("c"), 1);
  CHECK(s.type == StepType::kType2);
  CHECK_THROWS_AS(classify_step(f, {1, 1}, {2, 2}, set("b"), set("c"), 1), Error);
}

TEST_CASE("scripted best-reply cycle") {
  const Game g = cycle_game();
  const ReplyPolicy best{ReplyKind::kBest, ComparatorMode::kLexSingleton};
  const PathResult r =
      run_path(g, {1, 2}, scripted_schedule({1, 0, 1, 0}, {"b", "c", "c", "b"}), best, 100);
  CHECK(r.status == PathStatus::kCycleDetected);
  CHECK(r.cycle_length() == 4);
  CHECK(r.cycle_start == 0);
  CHECK(r.states == std::vector<Profile>{{1, 2}, {1, 1}, {2, 1}, {2, 2}, {1, 2}});
  CHECK(format_step(g.form, 1, r.steps[0]) == "1 2 c b {a} {b} T1 yes");
  CHECK(format_trace(g.form, r).size() > 0);
}

TEST_CASE("scripted runs end by status") {
  const Game g = cycle_game();
  const ReplyPolicy better{ReplyKind::kBetter, ComparatorMode::kLexSingleton};
  PathResult r = run_path(g, {1, 2}, scripted_schedule({1}, {"b"}), better, 100);
  CHECK(r.status == PathStatus::kTruncated);
  r = run_path(g, {0, 2}, scripted_schedule({}), better, 100);
  CHECK(r.status == PathStatus::kConverged);
  CHECK(r.steps.empty());
}

TEST_CASE("scheduler errors") {
  const Game g = cycle_game();
  const ReplyPolicy better{ReplyKind::kBetter, ComparatorMode::kLexSingleton};
  try {
    run_path(g, {0, 2}, scripted_schedule({0}), better, 10);
    FAIL("voter without a reply was scheduled");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kInvalidSchedule);
  }
  try {
    run_path(g, {1, 2}, scripted_schedule({1}, {"a"}), better, 10);
    FAIL("non-improving action accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kInvalidSchedule);
  }
  CHECK_THROWS_AS(run_path(g, {1, 2}, scripted_schedule({5}), better, 10), Error);
  CHECK_THROWS_AS(run_path(g, {1, 2, 0}, scripted_schedule({}), better, 10), Error);
}

TEST_CASE("round robin with least-preferred replies cycles") {
  const Game g = cycle_game();
  SchedulerSpec s;
  s.agent.kind = AgentScheduler::Kind::kRoundRobin;
  s.agent.start = 1;
  s.action.kind = ActionScheduler::Kind::kLeastPreferred;
  const PathResult r = run_path(g, {1, 2}, s, {ReplyKind::kBest, ComparatorMode::kLexSingleton}, 50);
  CHECK(r.status == PathStatus::kCycleDetected);
  CHECK(r.cycle_length() == 4);
}

TEST_CASE("property: direct replies converge within m^2 n^2 under any scheduler") {
  Gen gen(47);
  const ReplyPolicy direct{ReplyKind::kDirect, ComparatorMode::kLexSingleton};
  for (int trial = 0; trial < 300; ++trial) {
    const int m = gen.uniform(2, 5);
    const int n = gen.uniform(1, 4);
    const Game g = gen.plurality_game(m, n, 1, 3, TieBreak::kLexicographic);
    Profile p(n);
    for (int& a : p) a = gen.uniform(0, m - 1);
    SchedulerSpec s;
    s.agent.kind = AgentScheduler::Kind::kSeededRandom;
    s.agent.seed = trial;
    s.action.kind = ActionScheduler::Kind::kSeededRandom;
    s.action.seed = trial + 1;
    const std::size_t bound = static_cast<std::size_t>(m * m * n * n);
    const PathResult r = run_path(g, p, s, direct, bound + 1);
    CHECK(r.status == PathStatus::kConverged);
    CHECK(r.steps.size() <= bound);
    for (const StepRecord& st : r.steps) CHECK(st.direct);
  }
}

TEST_CASE("seeded schedulers are deterministic") {
  Gen gen(53);
  const Game g = gen.plurality_game(4, 3, 3, 2, TieBreak::kLexicographic);
  SchedulerSpec s;
  s.agent.kind = AgentScheduler::Kind::kSeededRandom;
  s.agent.seed = 9;
  s.action.kind = ActionScheduler::Kind::kSeededRandom;
  s.action.seed = 10;
  const ReplyPolicy better{ReplyKind::kBetter, ComparatorMode::kLexSingleton};
  const PathResult a = run_path(g, {0, 1, 2}, s, better, 40);
  const PathResult b = run_path(g, {0, 1, 2}, s, better, 40);
  CHECK(a.states == b.states);
  CHECK(a.steps == b.steps);
}

TEST_CASE("fixed priority asks voters in order") {
  // At (c,c) both voters can improve.
  const Game g = game(plurality({0, 0, 0}, {1, 1}), {"abc", "bac"});
  SchedulerSpec s;
  s.agent.kind = AgentScheduler::Kind::kFixedPriority;
  s.agent.order = {1, 0};
  const ReplyPolicy better{ReplyKind::kBetter, ComparatorMode::kLexSingleton};
  PathResult r = run_path(g, {2, 2}, s, better, 20);
  REQUIRE_FALSE(r.steps.empty());
  CHECK(r.steps.front().voter == 1);
  s.agent.order = {0, 1};
  r = run_path(g, {2, 2}, s, better, 20);
  CHECK(r.steps.front().voter == 0);
  s.agent.order = {3};
  CHECK_THROWS_AS(run_path(g, {2, 2}, s, better, 20), Error);
}
