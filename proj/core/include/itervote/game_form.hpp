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

#ifndef ITERVOTE_GAME_FORM_HPP_
#define ITERVOTE_GAME_FORM_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "itervote/types.hpp"

namespace itervote {

enum class TieBreak { kLexicographic, kRandomized };

// Plurality with voter weights, fixed initial scores and a tie-breaking
// regime. Empty action sets mean "all candidates".
struct PluralitySpec {
  int num_candidates = 0;
  std::vector<int> weights;
  std::vector<long long> initial_scores;
  TieBreak tiebreak = TieBreak::kLexicographic;
  std::vector<std::vector<CandidateId>> action_sets;

  int num_voters() const { return static_cast<int>(weights.size()); }
  // Candidates available to `voter`, in action-index order.
  std::vector<CandidateId> actions_of(int voter) const;
  CandidateId candidate_of(int voter, int action) const;
  void validate() const;
};

ScoreVector score_vector(const PluralitySpec& spec, const Profile& profile);
Outcome outcome(const PluralitySpec& spec, const Profile& profile);
// Winner set for a given score vector under a tie-breaking regime.
Outcome winners_from_scores(const ScoreVector& scores, TieBreak tiebreak);

// Explicit outcome table over arbitrary action labels.
struct TabularForm {
  std::vector<std::vector<std::string>> action_labels;
  // Candidate an action stands for, when the label names a candidate. Used
  // for direct replies, step typing and truthful states.
  std::vector<std::vector<std::optional<CandidateId>>> action_candidates;
  // Indexed by the mixed-radix profile index (last voter fastest).
  std::vector<Outcome> table;
};

class GameForm {
 public:
  GameForm() = default;

  static GameForm plurality(PluralitySpec spec,
                            std::vector<std::string> candidate_names = {});
  // `table` is indexed by profile index; every entry must be non-empty.
  static GameForm tabular(std::vector<std::string> candidate_names,
                          std::vector<std::vector<std::string>> action_labels,
                          std::vector<Outcome> table);

  bool is_plurality() const {
    return std::holds_alternative<PluralitySpec>(kind_);
  }
  const PluralitySpec& plurality_spec() const;
  const TabularForm& tabular_form() const;

  int num_voters() const { return static_cast<int>(radices_.size()); }
  int num_candidates() const { return static_cast<int>(names_.size()); }
  int num_actions(int voter) const { return radices_[voter]; }
  const std::vector<std::string>& candidate_names() const { return names_; }
  const std::string& candidate_name(CandidateId c) const {
    return names_[c.index];
  }
  std::optional<CandidateId> find_candidate(const std::string& name) const;

  std::optional<CandidateId> action_candidate(int voter, int action) const;
  std::string action_label(int voter, int action) const;
  std::optional<int> find_action(int voter, const std::string& label) const;

  Outcome outcome(const Profile& profile) const;

  // Mixed-radix state encoding with the last voter varying fastest, so index
  // order equals lexicographic profile order.
  std::uint64_t state_count() const;
  std::uint64_t encode(const Profile& profile) const;
  Profile decode(std::uint64_t index) const;
  std::uint64_t stride(int voter) const { return strides_[voter]; }

  bool valid_profile(const Profile& profile) const;
  void require_valid(const Profile& profile) const;

  // Profile from one label per voter.
  Profile profile_of(const std::vector<std::string>& labels) const;
  std::string format_profile(const Profile& profile) const;
  std::string format_outcome(Outcome outcome) const;

 private:
  void init_layout(std::vector<int> radices);

  std::variant<PluralitySpec, TabularForm> kind_;
  std::vector<std::string> names_;
  std::vector<int> radices_;
  std::vector<std::uint64_t> strides_;
};

Outcome tabular_outcome(const GameForm& form, const Profile& profile);

struct Game {
  GameForm form;
  std::vector<PreferenceOrder> prefs;
  std::optional<std::vector<UtilityVector>> utilities;

  int num_voters() const { return form.num_voters(); }
  void validate() const;
};

// Each voter votes for the most preferred candidate in their action set.
Profile truthful_profile(const Game& game);

}  // namespace itervote

#endif  // ITERVOTE_GAME_FORM_HPP_
