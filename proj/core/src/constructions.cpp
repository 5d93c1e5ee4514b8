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

#include "itervote/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "itervote/analysis.hpp"
#include "itervote/error.hpp"

namespace itervote {
namespace {

std::vector<std::string> split_words(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

PreferenceOrder order_of(const std::vector<std::string>& names,
                         const std::string& text) {
  std::vector<CandidateId> ranking;
  for (const std::string& w : split_words(text, '>')) {
    auto it = std::find(names.begin(), names.end(), w);
    if (it == names.end()) fail(ErrorKind::kInvalidInput, "unknown candidate " + w);
    ranking.push_back(CandidateId{static_cast<int>(it - names.begin())});
  }
  return PreferenceOrder(std::move(ranking));
}

std::vector<std::string> letters(int m) {
  std::vector<std::string> names;
  for (int c = 0; c < m; ++c) names.push_back(default_candidate_name(c));
  return names;
}

// Preferences follow the utilities when they are given.
Game plurality_game(std::vector<std::string> names, std::vector<long long> initial,
                    std::vector<int> weights, TieBreak tiebreak,
                    const std::vector<std::string>& prefs,
                    std::vector<std::vector<double>> utilities = {}) {
  PluralitySpec spec;
  spec.num_candidates = static_cast<int>(names.size());
  spec.initial_scores = std::move(initial);
  spec.weights = std::move(weights);
  spec.tiebreak = tiebreak;
  Game game;
  for (const std::string& p : prefs) game.prefs.push_back(order_of(names, p));
  if (!utilities.empty()) {
    std::vector<UtilityVector> us;
    for (auto& u : utilities) us.emplace_back(std::move(u));
    if (game.prefs.empty()) {
      for (const UtilityVector& u : us) {
        std::vector<CandidateId> r(u.size());
        for (int c = 0; c < u.size(); ++c) r[c] = CandidateId{c};
        std::stable_sort(r.begin(), r.end(), [&](CandidateId a, CandidateId b) {
          return u[a] > u[b];
        });
        game.prefs.emplace_back(std::move(r));
      }
    }
    game.utilities = std::move(us);
  }
  game.form = GameForm::plurality(std::move(spec), std::move(names));
  game.validate();
  return game;
}

Profile profile_of(const Game& game, const std::string& text) {
  return game.form.profile_of(split_words(text, ','));
}

Outcome winners_of(const Game& game, const std::string& text) {
  Outcome o;
  for (const std::string& w : split_words(text, ',')) {
    auto c = game.form.find_candidate(w);
    if (!c) fail(ErrorKind::kInvalidInput, "unknown candidate " + w);
    o.insert(*c);
  }
  return o;
}

void expect_path(CatalogEntry& e, const std::vector<std::string>& states,
                 const std::vector<std::string>& winners,
                 const std::vector<ScoreVector>& scores = {}) {
  for (const auto& s : states) e.expected_states.push_back(profile_of(e.game, s));
  for (const auto& w : winners) e.expected_winners.push_back(winners_of(e.game, w));
  e.expected_scores = scores;
  e.start = e.expected_states.front();
}

constexpr ReplyPolicy kBetterLex{ReplyKind::kBetter, ComparatorMode::kLexSingleton};
constexpr ReplyPolicy kBestLex{ReplyKind::kBest, ComparatorMode::kLexSingleton};
constexpr ReplyPolicy kDirectLex{ReplyKind::kDirect, ComparatorMode::kLexSingleton};
constexpr ReplyPolicy kBetterEu{ReplyKind::kBetter, ComparatorMode::kExpectedUtility};
constexpr ReplyPolicy kDirectEu{ReplyKind::kDirect, ComparatorMode::kExpectedUtility};
constexpr ReplyPolicy kBetterLd{ReplyKind::kBetter, ComparatorMode::kLocalDominance};
constexpr ReplyPolicy kBetterSd{ReplyKind::kBetter, ComparatorMode::kStochasticDominance};

CatalogEntry weighted_pair_a() {
  CatalogEntry e;
  e.name = "two-voter-weighted-a";
  e.summary = "weighted two-voter game with three equilibria; the truthful vote is one";
  e.game = plurality_game(letters(3), {7, 9, 3}, {3, 4}, TieBreak::kLexicographic,
                          {"a>b>c", "c>a>b"});
  e.policy = kBetterLex;
  e.scheduler.agent.kind = AgentScheduler::Kind::kRoundRobin;
  e.expected_status = PathStatus::kConverged;
  expect_path(e, {"a,c"}, {"a"}, {{10, 9, 7}});
  for (const char* p : {"a,a", "a,c", "b,b"}) {
    e.expected_equilibria.push_back(profile_of(e.game, p));
  }
  return e;
}

CatalogEntry weighted_pair_b() {
  CatalogEntry e;
  e.name = "two-voter-weighted-b";
  e.summary = "same scores and weights; the truthful vote is not an equilibrium";
  e.game = plurality_game(letters(3), {7, 9, 3}, {3, 4}, TieBreak::kLexicographic,
                          {"a>c>b", "c>b>a"});
  e.policy = kBetterLex;
  e.scheduler = scripted_schedule({1}, {"b"});
  e.expected_status = PathStatus::kConverged;
  expect_path(e, {"a,c", "a,b"}, {"a", "b"}, {{10, 9, 7}, {10, 13, 3}});
  for (const char* p : {"a,b", "b,b"}) {
    e.expected_equilibria.push_back(profile_of(e.game, p));
  }
  return e;
}

CatalogEntry lex_best_reply_cycle() {
  CatalogEntry e;
  e.name = "lex-best-reply-cycle";
  e.summary = "lexicographic Plurality is not FBRP; voter 1 moves indirectly";
  e.game = plurality_game(letters(3), {1, 0, 0}, {1, 1}, TieBreak::kLexicographic,
                          {"a>b>c", "c>b>a"});
  e.policy = kBestLex;
  e.scheduler = scripted_schedule({1, 0, 1, 0}, {"b", "c", "c", "b"});
  e.expected_cycle_length = 4;
  expect_path(e, {"b,c", "b,b", "c,b", "c,c", "b,c"}, {"a", "b", "a", "c", "a"},
              {{1, 1, 1}, {1, 2, 0}, {1, 1, 1}, {1, 0, 2}, {1, 1, 1}});
  e.facts = {{"fip", kBestLex, false},
             {"fip", kBetterLex, false},
             {"fip", kDirectLex, true}};
  return e;
}

CatalogEntry lex_truth_cycle() {
  CatalogEntry e;
  e.name = "lex-truth-cycle";
  e.summary = "from the truthful state, two better replies lead into a best-reply cycle";
  e.game = plurality_game(letters(4), {2, 2, 2, 0}, {1, 1, 1}, TieBreak::kLexicographic,
                          {"d>a>b>c", "c>b>a>d", "d>a>b>c"});
  e.policy = kBetterLex;
  e.scheduler = scripted_schedule({0, 2, 1, 0, 1, 0}, {"b", "a", "b", "c", "c", "b"});
  e.expected_cycle_length = 4;
  expect_path(e,
              {"d,c,d", "b,c,d", "b,c,a", "b,b,a", "c,b,a", "c,c,a", "b,c,a"},
              {"c", "b", "a", "b", "a", "c", "a"},
              {{2, 2, 3, 2}, {2, 3, 3, 1}, {3, 3, 3, 0}, {3, 4, 2, 0},
               {3, 3, 3, 0}, {3, 2, 4, 0}, {3, 3, 3, 0}});
  e.facts = {{"fip-from-start", kBetterLex, false},
             {"fip", kBestLex, false},
             {"fip", kDirectLex, true}};
  return e;
}

CatalogEntry weighted_direct_cycle() {
  CatalogEntry e;
  e.name = "weighted-direct-cycle";
  e.summary = "weighted lexicographic Plurality is not restricted-FDRP";
  e.game = plurality_game(letters(4), {0, 1, 2, 3}, {1, 2, 3}, TieBreak::kLexicographic,
                          {"c>d>b>a", "b>c>a>d", "a>b>c>d"});
  e.policy = kDirectLex;
  e.scheduler = scripted_schedule({0, 1, 2, 0, 1, 2}, {"d", "c", "b", "c", "b", "a"});
  e.expected_cycle_length = 6;
  expect_path(e,
              {"c,b,a", "d,b,a", "d,c,a", "d,c,b", "c,c,b", "c,b,b", "c,b,a"},
              {"a", "d", "c", "b", "c", "b", "a"},
              {{3, 3, 3, 3}, {3, 3, 2, 4}, {3, 1, 4, 4}, {0, 4, 4, 4},
               {0, 4, 5, 3}, {0, 6, 3, 3}, {3, 3, 3, 3}});
  e.facts = {{"fip", kDirectLex, false},
             {"restricted-fip", kDirectLex, false},
             {"weak-fip", kDirectLex, true}};
  return e;
}

CatalogEntry random_tiebreak_cycle() {
  CatalogEntry e;
  e.name = "random-tiebreak-cycle";
  e.summary = "randomized Plurality is not FIP; every step follows from axioms K and G";
  e.game = plurality_game(letters(3), {0, 1, 0}, {1, 1, 1}, TieBreak::kRandomized,
                          {"a>c>b", "b>a>c", "c>b>a"});
  e.policy = kBetterLd;
  e.scheduler = scripted_schedule({1, 0, 2, 1, 2, 0}, {"c", "c", "a", "a", "b", "a"});
  e.expected_cycle_length = 6;
  expect_path(e,
              {"a,a,b", "a,c,b", "c,c,b", "c,c,a", "c,a,a", "c,a,b", "a,a,b"},
              {"a,b", "b", "b,c", "c", "a", "b", "a,b"},
              {{2, 2, 0}, {1, 2, 1}, {0, 2, 2}, {1, 1, 2}, {2, 1, 1}, {1, 2, 1},
               {2, 2, 0}});
  e.facts = {{"fip", kBetterLd, false}, {"fip", kBetterSd, false}};
  return e;
}

CatalogEntry random_truth_cycle() {
  CatalogEntry e;
  e.name = "random-truth-cycle";
  e.summary = "randomized Plurality with expected utilities is not FIP from the truth";
  e.game = plurality_game(letters(5), {1, 1, 2, 0, 0}, {1, 1}, TieBreak::kRandomized, {},
                          {{5, 3, 2, 8, 0}, {4, 2, 5, 0, 8}});
  e.policy = kBetterEu;
  e.scheduler = scripted_schedule({0, 1, 0, 1}, {"b", "a", "d", "e"});
  e.expected_cycle_length = 4;
  expect_path(e, {"d,e", "b,e", "b,a", "d,a", "d,e"},
              {"c", "b,c", "a,b,c", "a,c", "c"},
              {{1, 1, 2, 1, 1}, {1, 2, 2, 0, 1}, {2, 2, 2, 0, 0}, {2, 1, 2, 1, 0},
               {1, 1, 2, 1, 1}});
  e.facts = {{"fip-from-start", kBetterEu, false}};
  return e;
}

CatalogEntry random_unique_reply_cycle() {
  CatalogEntry e;
  e.name = "random-unique-reply-cycle";
  e.summary = "randomized Plurality is not restricted-FIP; every step is the mover's only reply";
  e.game = plurality_game({"a", "b", "c", "x"}, {0, 0, 0, 0}, {1, 1, 1},
                          TieBreak::kRandomized, {},
                          {{7, 3, 0, 4}, {0, 7, 3, 4}, {3, 0, 7, 4}});
  e.policy = kBetterEu;
  e.scheduler.agent.kind = AgentScheduler::Kind::kScripted;
  e.scheduler.agent.script = {1, 2, 0, 1, 2, 0};
  e.scheduler.action.kind = ActionScheduler::Kind::kPolicyUnique;
  e.expected_cycle_length = 6;
  expect_path(e,
              {"a,b,x", "a,x,x", "a,x,c", "x,x,c", "x,b,c", "x,b,x", "a,b,x"},
              {"a,b,x", "x", "a,c,x", "x", "b,c,x", "x", "a,b,x"},
              {{1, 1, 0, 1}, {1, 0, 0, 2}, {1, 0, 1, 1}, {0, 0, 1, 2},
               {0, 1, 1, 1}, {0, 1, 0, 2}, {1, 1, 0, 1}});
  e.facts = {{"restricted-fip", kBetterEu, false},
             {"weak-fip", kBetterEu, true},
             {"weak-fip", kDirectEu, true}};
  return e;
}

CatalogEntry random_direct_truth_cycle() {
  CatalogEntry e;
  e.name = "random-direct-truth-cycle";
  e.summary = "randomized Plurality is not FDRP even from the truth";
  // One extra candidate per voter, loved by its owner; the low values
  // are offset by one half to keep every utility vector injective.
  e.game = plurality_game({"a", "b", "c", "x", "d1", "d2", "d3"}, {3, 3, 3, 3, 0, 0, 0},
                          {1, 1, 1}, TieBreak::kRandomized, {},
                          {{7, 3, 0, 4, 8, 1.5, 2.5},
                           {0, 7, 3, 4, 0.5, 8, 2.5},
                           {3, 0, 7, 4, 0.5, 1.5, 8}});
  e.policy = kDirectEu;
  e.scheduler = scripted_schedule({2, 0, 1, 1, 2, 0, 1, 2, 0},
                                  {"x", "a", "b", "x", "c", "x", "b", "x", "a"});
  e.expected_cycle_length = 6;
  expect_path(e,
              {"d1,d2,d3", "d1,d2,x", "a,d2,x", "a,b,x", "a,x,x", "a,x,c", "x,x,c",
               "x,b,c", "x,b,x", "a,b,x"},
              {"a,b,c,x", "x", "a,x", "a,b,x", "x", "a,c,x", "x", "b,c,x", "x", "a,b,x"},
              {{3, 3, 3, 3, 1, 1, 1}, {3, 3, 3, 4, 1, 1, 0}, {4, 3, 3, 4, 0, 1, 0},
               {4, 4, 3, 4, 0, 0, 0}, {4, 3, 3, 5, 0, 0, 0}, {4, 3, 4, 4, 0, 0, 0},
               {3, 3, 4, 5, 0, 0, 0}, {3, 4, 4, 4, 0, 0, 0}, {3, 4, 3, 5, 0, 0, 0},
               {4, 4, 3, 4, 0, 0, 0}});
  e.facts = {{"fip-from-start", kDirectEu, false}};
  return e;
}

CatalogEntry restricted_form_cycle() {
  CatalogEntry e;
  e.name = "restricted-form-cycle";
  e.summary = "weak-FIP but not restricted-FIP: a cycle of unique replies in a tabular form";
  e.game = g_star_game();
  e.policy = kBetterLex;
  e.scheduler.agent.kind = AgentScheduler::Kind::kScripted;
  e.scheduler.agent.script = {2, 0, 1, 2, 0, 1};
  e.scheduler.action.kind = ActionScheduler::Kind::kPolicyUnique;
  e.expected_cycle_length = 6;
  expect_path(e, {"c,b,b", "c,b,a", "d,b,a", "d,c,a", "d,c,b", "c,c,b", "c,b,b"},
              {"b", "a", "d", "c", "b", "c", "b"});
  e.facts = {{"restricted-fip", kBetterLex, false}, {"weak-fip", kBetterLex, true}};
  return e;
}

bool decide(const std::string& property, const BetterReplyGraph& g,
            const Profile& start) {
  if (property == "has-ne") return !g.sinks().empty();
  if (property == "fip") return is_fip(g).fip;
  if (property == "weak-fip") return is_weak_fip(g).weak_fip;
  if (property == "restricted-fip") {
    ClassifyOptions o;
    o.include_truthful = false;
    return classify_graph(g, o).restricted.restricted_fip;
  }
  const FromStateResult r = from_state(g, start);
  if (property == "fip-from-start") return r.fip;
  if (property == "weak-fip-from-start") return r.weak_fip;
  if (property == "restricted-fip-from-start") return r.restricted_fip;
  fail(ErrorKind::kInvalidInput, "unknown property " + property);
}

std::string join_profiles(const GameForm& form, const std::vector<Profile>& ps) {
  std::string out;
  for (const Profile& p : ps) out += form.format_profile(p);
  return out;
}

}  // namespace

std::vector<CatalogEntry> catalog() {
  return {weighted_pair_a(),          weighted_pair_b(),
          lex_best_reply_cycle(),     lex_truth_cycle(),
          weighted_direct_cycle(),    random_tiebreak_cycle(),
          random_truth_cycle(),       random_unique_reply_cycle(),
          random_direct_truth_cycle(), restricted_form_cycle()};
}

std::optional<CatalogEntry> catalog_entry(std::string_view name) {
  for (CatalogEntry& e : catalog()) {
    if (e.name == name) return std::move(e);
  }
  return std::nullopt;
}

VerifyResult verify_entry(const CatalogEntry& entry) {
  VerifyResult v;
  const GameForm& form = entry.game.form;
  auto problem = [&](std::string what) {
    v.ok = false;
    v.problems.push_back(entry.name + ": " + std::move(what));
  };
  try {
    v.path = run_path(entry.game, entry.start, entry.scheduler, entry.policy,
                      entry.max_steps);
  } catch (const Error& e) {
    problem(std::string("replay failed: ") + e.what());
    return v;
  }
  const PathResult& path = v.path;
  if (path.status != entry.expected_status) {
    problem("status " + std::string(to_string(path.status)) + ", expected " +
            std::string(to_string(entry.expected_status)));
  }
  if (entry.expected_status == PathStatus::kCycleDetected &&
      path.status == PathStatus::kCycleDetected &&
      path.cycle_length() != entry.expected_cycle_length) {
    problem("cycle length " + std::to_string(path.cycle_length()));
  }
  if (path.states != entry.expected_states) {
    problem("states " + join_profiles(form, path.states) + ", expected " +
            join_profiles(form, entry.expected_states));
  }
  std::vector<Outcome> winners;
  for (const Profile& p : path.states) winners.push_back(form.outcome(p));
  if (winners != entry.expected_winners) problem("winner sequence differs");
  for (std::size_t t = 0; t < path.steps.size(); ++t) {
    if (path.steps[t].old_outcome != winners[t] ||
        path.steps[t].new_outcome != winners[t + 1]) {
      problem("step record outcomes differ at step " + std::to_string(t + 1));
    }
  }
  if (!entry.expected_scores.empty()) {
    std::vector<ScoreVector> scores;
    for (const Profile& p : path.states) {
      scores.push_back(score_vector(form.plurality_spec(), p));
    }
    if (scores != entry.expected_scores) problem("score sequence differs");
  }
  std::map<std::string, BetterReplyGraph> graphs;
  auto graph_for = [&](const ReplyPolicy& policy) -> const BetterReplyGraph& {
    const std::string key = to_string(policy);
    auto it = graphs.find(key);
    if (it == graphs.end()) {
      it = graphs.emplace(key, build_graph(entry.game, policy)).first;
    }
    return it->second;
  };
  for (const ExpectedFact& f : entry.facts) {
    const bool got = decide(f.property, graph_for(f.policy), entry.start);
    if (got != f.value) {
      problem(f.property + " under " + to_string(f.policy) + " is " +
              (got ? "true" : "false"));
    }
  }
  if (!entry.expected_equilibria.empty()) {
    auto ne = nash_equilibria(
        graph_for(ReplyPolicy{ReplyKind::kBetter, default_comparator(entry.game)}));
    auto want = entry.expected_equilibria;
    std::sort(ne.begin(), ne.end());
    std::sort(want.begin(), want.end());
    if (ne != want) {
      problem("equilibria " + join_profiles(form, ne) + ", expected " +
              join_profiles(form, want));
    }
  }
  return v;
}

GameForm f_star_form() {
  std::vector<std::string> names = letters(4);
  std::vector<std::vector<std::string>> actions = {{"c", "d"}, {"b", "c"}, {"a", "b", "d"}};
  // Rows follow the profile index: voter 3 varies fastest.
  const std::map<std::string, std::string> table = {
      {"cba", "a"}, {"cbb", "b"}, {"cbd", "d"}, {"cca", "c"}, {"ccb", "c"}, {"ccd", "d"},
      {"dba", "d"}, {"dbb", "b"}, {"dbd", "d"}, {"dca", "c"}, {"dcb", "b"}, {"dcd", "d"}};
  std::vector<Outcome> outcomes;
  for (const auto& a1 : actions[0]) {
    for (const auto& a2 : actions[1]) {
      for (const auto& a3 : actions[2]) {
        const std::string& w = table.at(a1 + a2 + a3);
        outcomes.push_back(CandidateSet::single(CandidateId{w[0] - 'a'}));
      }
    }
  }
  return GameForm::tabular(std::move(names), std::move(actions), std::move(outcomes));
}

Game g_star_game() {
  Game g;
  g.form = f_star_form();
  const std::vector<std::string> names = letters(4);
  for (const char* p : {"c>d>b>a", "b>c>a>d", "a>b>c>d"}) {
    g.prefs.push_back(order_of(names, p));
  }
  g.validate();
  return g;
}

HammingForm hamming_fip_form() {
  constexpr int kVoters = 7;
  std::vector<std::string> names;
  for (int j = 1; j <= 14; ++j) names.push_back("a" + std::to_string(j));
  names.push_back("z");
  const CandidateId z{14};
  std::vector<std::vector<std::string>> actions(kVoters, {"x", "y"});
  std::vector<Outcome> table(std::size_t{1} << kVoters, CandidateSet::single(z));
  HammingForm h;
  int next = 0;
  for (int word = 0; word < (1 << kVoters); ++word) {
    // Voter i (1-based) owns bit 7 - i; the parity-check column of
    // position i is i in binary.
    int syndrome = 0;
    for (int i = 1; i <= kVoters; ++i) {
      if ((word >> (kVoters - i)) & 1) syndrome ^= i;
    }
    if (syndrome != 0 || word == 0 || word == (1 << kVoters) - 1) continue;
    table[word] = CandidateSet::single(CandidateId{next++});
    Profile p(kVoters);
    for (int i = 0; i < kVoters; ++i) p[i] = (word >> (kVoters - 1 - i)) & 1;
    h.codewords.push_back(p);
  }
  std::vector<bool> used(names.size(), false);
  for (Outcome o : table) used[o.first().index] = true;
  h.certificate.range_size = std::count(used.begin(), used.end(), true);
  h.certificate.action_budget = 2 * kVoters;
  int best = kVoters + 1;
  for (std::size_t i = 0; i < h.codewords.size(); ++i) {
    for (std::size_t j = i + 1; j < h.codewords.size(); ++j) {
      int d = 0;
      for (int v = 0; v < kVoters; ++v) d += h.codewords[i][v] != h.codewords[j][v];
      best = std::min(best, d);
    }
  }
  h.certificate.min_pairwise_distance = best;
  h.form = GameForm::tabular(std::move(names), std::move(actions), std::move(table));
  return h;
}

PreferenceOrder random_preference(int m, std::mt19937_64& rng) {
  std::vector<CandidateId> r(m);
  for (int c = 0; c < m; ++c) r[c] = CandidateId{c};
  for (int i = m - 1; i > 0; --i) {
    std::swap(r[i], r[std::uniform_int_distribution<int>(0, i)(rng)]);
  }
  return PreferenceOrder(std::move(r));
}

UtilityVector random_consistent_utility(const PreferenceOrder& q,
                                        std::mt19937_64& rng) {
  const int m = q.size();
  const int pool = std::max(100, 4 * m);
  std::vector<int> values(pool);
  std::iota(values.begin(), values.end(), 0);
  for (int i = 0; i < m; ++i) {
    std::swap(values[i], values[std::uniform_int_distribution<int>(i, pool - 1)(rng)]);
  }
  values.resize(m);
  std::sort(values.begin(), values.end(), std::greater<>());
  std::vector<double> u(m);
  for (int r = 0; r < m; ++r) u[q.ranking()[r].index] = values[r];
  return UtilityVector(std::move(u));
}

Game random_game(const RandomGameParams& params, std::uint64_t seed) {
  if (params.m < 1 || params.n < 0 || params.weight_bound < 1 || params.score_bound < 0) {
    fail(ErrorKind::kInvalidInput, "random game bounds out of range");
  }
  std::mt19937_64 rng(seed);
  PluralitySpec spec;
  spec.num_candidates = params.m;
  spec.tiebreak = params.tiebreak;
  Game game;
  for (int i = 0; i < params.n; ++i) game.prefs.push_back(random_preference(params.m, rng));
  std::uniform_int_distribution<int> weight(1, params.weight_bound);
  for (int i = 0; i < params.n; ++i) spec.weights.push_back(weight(rng));
  std::uniform_int_distribution<int> score(0, params.score_bound);
  for (int c = 0; c < params.m; ++c) spec.initial_scores.push_back(score(rng));
  if (params.tiebreak == TieBreak::kRandomized) {
    std::vector<UtilityVector> us;
    for (const PreferenceOrder& q : game.prefs) us.push_back(random_consistent_utility(q, rng));
    game.utilities = std::move(us);
  }
  game.form = GameForm::plurality(std::move(spec));
  return game;
}

}  // namespace itervote
