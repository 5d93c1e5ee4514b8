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

#ifndef ITERVOTE_CONSTRUCTIONS_HPP_
#define ITERVOTE_CONSTRUCTIONS_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "itervote/dynamics.hpp"
#include "itervote/game_form.hpp"

namespace itervote {

// A classification claim about a catalog game. `property` is one of
// has-ne, fip, weak-fip, restricted-fip, or one of the last three with a
// -from-start suffix (decided from the entry's start).
struct ExpectedFact {
  std::string property;
  ReplyPolicy policy;
  bool value = false;
};

struct CatalogEntry {
  std::string name;
  std::string summary;
  Game game;
  Profile start;
  SchedulerSpec scheduler;
  ReplyPolicy policy;
  std::size_t max_steps = 64;
  PathStatus expected_status = PathStatus::kCycleDetected;
  std::size_t expected_cycle_length = 0;
  std::vector<Profile> expected_states;
  std::vector<ScoreVector> expected_scores;  // empty for tabular forms
  std::vector<Outcome> expected_winners;
  std::vector<ExpectedFact> facts;
  // Checked against the Better graph when non-empty.
  std::vector<Profile> expected_equilibria;
};

std::vector<CatalogEntry> catalog();
std::optional<CatalogEntry> catalog_entry(std::string_view name);

struct VerifyResult {
  bool ok = true;
  std::vector<std::string> problems;
  PathResult path;
};

// Replays the script and decides every listed fact.
VerifyResult verify_entry(const CatalogEntry& entry);

// 2x2x3 restricted weighted Plurality form as an explicit table.
GameForm f_star_form();
// f_star_form with preferences c>d>b>a, b>c>a>d, a>b>c>d.
Game g_star_game();

struct SeparabilityCertificate {
  std::size_t range_size = 0;
  std::size_t action_budget = 0;  // sum of action-set sizes
  int min_pairwise_distance = 0;  // Hamming distance among non-z profiles

  // A separable form has at most action_budget outcomes.
  bool non_separable() const { return range_size > action_budget; }
};

struct HammingForm {
  GameForm form;
  SeparabilityCertificate certificate;
  std::vector<Profile> codewords;  // the 14 profiles with non-z outcomes
};

// Seven binary voters; 14 Hamming(7,4) codewords get their own candidate and
// every other profile elects z.
HammingForm hamming_fip_form();

struct RandomGameParams {
  int m = 3;
  int n = 3;
  int weight_bound = 1;
  int score_bound = 2;
  TieBreak tiebreak = TieBreak::kLexicographic;
};

PreferenceOrder random_preference(int m, std::mt19937_64& rng);
// Distinct integer values decreasing along q.
UtilityVector random_consistent_utility(const PreferenceOrder& q,
                                        std::mt19937_64& rng);
// Utilities are drawn for randomized tie-breaking only.
Game random_game(const RandomGameParams& params, std::uint64_t seed);

}  // namespace itervote

#endif  // ITERVOTE_CONSTRUCTIONS_HPP_
