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

#include "itervote/game_form.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "itervote/error.hpp"

namespace itervote {

std::vector<CandidateId> PluralitySpec::actions_of(int voter) const {
  if (!action_sets.empty() && !action_sets[voter].empty()) {
    return action_sets[voter];
  }
  std::vector<CandidateId> all(num_candidates);
  for (int c = 0; c < num_candidates; ++c) all[c] = CandidateId{c};
  return all;
}

CandidateId PluralitySpec::candidate_of(int voter, int action) const {
  if (!action_sets.empty() && !action_sets[voter].empty()) {
    return action_sets[voter][action];
  }
  return CandidateId{action};
}

void PluralitySpec::validate() const {
  if (num_candidates < 1 || num_candidates > kMaxCandidates) {
    fail(ErrorKind::kInvalidInput, "candidate count out of range");
  }
  if (static_cast<int>(initial_scores.size()) != num_candidates) {
    fail(ErrorKind::kInvalidInput,
         "initial score vector length differs from candidate count");
  }
  for (long long s : initial_scores) {
    if (s < 0) fail(ErrorKind::kInvalidInput, "negative initial score");
  }
  for (int w : weights) {
    if (w <= 0) fail(ErrorKind::kInvalidInput, "voter weights must be positive");
  }
  if (!action_sets.empty()) {
    if (action_sets.size() != weights.size()) {
      fail(ErrorKind::kInvalidInput, "one action set per voter expected");
    }
    for (const auto& set : action_sets) {
      // An empty entry stands for the unrestricted set.
      std::vector<bool> seen(num_candidates, false);
      for (CandidateId c : set) {
        if (c.index < 0 || c.index >= num_candidates || seen[c.index]) {
          fail(ErrorKind::kInvalidInput, "malformed action set");
        }
        seen[c.index] = true;
      }
    }
  }
}

ScoreVector score_vector(const PluralitySpec& spec, const Profile& profile) {
  if (static_cast<int>(profile.size()) != spec.num_voters()) {
    fail(ErrorKind::kInvalidInput, "profile length differs from voter count");
  }
  ScoreVector scores(spec.initial_scores.begin(), spec.initial_scores.end());
  if (static_cast<int>(scores.size()) != spec.num_candidates) {
    fail(ErrorKind::kInvalidInput, "initial score vector length mismatch");
  }
  for (int i = 0; i < spec.num_voters(); ++i) {
    const int available = static_cast<int>(spec.actions_of(i).size());
    if (profile[i] < 0 || profile[i] >= available) {
      fail(ErrorKind::kInvalidInput, "action outside the voter's action set");
    }
    scores[spec.candidate_of(i, profile[i]).index] += spec.weights[i];
  }
  return scores;
}

Outcome winners_from_scores(const ScoreVector& scores, TieBreak tiebreak) {
  const long long best = *std::max_element(scores.begin(), scores.end());
  CandidateSet winners;
  for (int c = 0; c < static_cast<int>(scores.size()); ++c) {
    if (scores[c] == best) winners.insert(CandidateId{c});
  }
  if (tiebreak == TieBreak::kLexicographic) {
    return CandidateSet::single(winners.first());
  }
  return winners;
}

Outcome outcome(const PluralitySpec& spec, const Profile& profile) {
  return winners_from_scores(score_vector(spec, profile), spec.tiebreak);
}

GameForm GameForm::plurality(PluralitySpec spec,
                             std::vector<std::string> candidate_names) {
  spec.validate();
  if (candidate_names.empty()) {
    for (int c = 0; c < spec.num_candidates; ++c) {
      candidate_names.push_back(default_candidate_name(c));
    }
  }
  if (static_cast<int>(candidate_names.size()) != spec.num_candidates) {
    fail(ErrorKind::kInvalidInput, "candidate name count mismatch");
  }
  GameForm form;
  form.names_ = std::move(candidate_names);
  std::vector<int> radices;
  for (int i = 0; i < spec.num_voters(); ++i) {
    radices.push_back(static_cast<int>(spec.actions_of(i).size()));
  }
  form.kind_ = std::move(spec);
  form.init_layout(std::move(radices));
  return form;
}

GameForm GameForm::tabular(std::vector<std::string> candidate_names,
                           std::vector<std::vector<std::string>> action_labels,
                           std::vector<Outcome> table) {
  if (candidate_names.empty() ||
      static_cast<int>(candidate_names.size()) > kMaxCandidates) {
    fail(ErrorKind::kInvalidInput, "candidate count out of range");
  }
  GameForm form;
  form.names_ = std::move(candidate_names);
  std::vector<int> radices;
  TabularForm tab;
  for (const auto& labels : action_labels) {
    if (labels.empty()) fail(ErrorKind::kInvalidInput, "empty action set");
    radices.push_back(static_cast<int>(labels.size()));
    std::vector<std::optional<CandidateId>> cands;
    for (const auto& label : labels) cands.push_back(form.find_candidate(label));
    tab.action_candidates.push_back(std::move(cands));
  }
  tab.action_labels = std::move(action_labels);
  form.init_layout(std::move(radices));
  if (table.size() != form.state_count()) {
    fail(ErrorKind::kInvalidInput, "tabular map is not total");
  }
  const CandidateSet universe = CandidateSet::all(form.num_candidates());
  for (Outcome o : table) {
    if (o.empty() || (o - universe) != CandidateSet{}) {
      fail(ErrorKind::kInvalidInput, "tabular outcome must be a non-empty candidate set");
    }
  }
  tab.table = std::move(table);
  form.kind_ = std::move(tab);
  return form;
}

void GameForm::init_layout(std::vector<int> radices) {
  radices_ = std::move(radices);
  strides_.assign(radices_.size(), 1);
  std::uint64_t stride = 1;
  for (int i = static_cast<int>(radices_.size()) - 1; i >= 0; --i) {
    strides_[i] = stride;
    if (stride > std::numeric_limits<std::uint64_t>::max() / radices_[i]) {
      fail(ErrorKind::kResourceLimit, "state space does not fit in 64 bits");
    }
    stride *= radices_[i];
  }
}

const PluralitySpec& GameForm::plurality_spec() const {
  if (!is_plurality()) fail(ErrorKind::kUnsupported, "form is not a Plurality form");
  return std::get<PluralitySpec>(kind_);
}

const TabularForm& GameForm::tabular_form() const {
  if (is_plurality()) fail(ErrorKind::kUnsupported, "form is not tabular");
  return std::get<TabularForm>(kind_);
}

std::optional<CandidateId> GameForm::find_candidate(const std::string& name) const {
  for (int c = 0; c < num_candidates(); ++c) {
    if (names_[c] == name) return CandidateId{c};
  }
  return std::nullopt;
}

std::optional<CandidateId> GameForm::action_candidate(int voter, int action) const {
  if (const auto* spec = std::get_if<PluralitySpec>(&kind_)) {
    return spec->candidate_of(voter, action);
  }
  return std::get<TabularForm>(kind_).action_candidates[voter][action];
}

std::string GameForm::action_label(int voter, int action) const {
  if (const auto* spec = std::get_if<PluralitySpec>(&kind_)) {
    return names_[spec->candidate_of(voter, action).index];
  }
  return std::get<TabularForm>(kind_).action_labels[voter][action];
}

std::optional<int> GameForm::find_action(int voter, const std::string& label) const {
  for (int a = 0; a < num_actions(voter); ++a) {
    if (action_label(voter, a) == label) return a;
  }
  return std::nullopt;
}

Outcome GameForm::outcome(const Profile& profile) const {
  require_valid(profile);
  if (const auto* spec = std::get_if<PluralitySpec>(&kind_)) {
    return itervote::outcome(*spec, profile);
  }
  return std::get<TabularForm>(kind_).table[encode(profile)];
}

std::uint64_t GameForm::state_count() const {
  if (radices_.empty()) return 1;
  return strides_[0] * static_cast<std::uint64_t>(radices_[0]);
}

std::uint64_t GameForm::encode(const Profile& profile) const {
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    index += strides_[i] * static_cast<std::uint64_t>(profile[i]);
  }
  return index;
}

Profile GameForm::decode(std::uint64_t index) const {
  Profile p(radices_.size());
  for (std::size_t i = 0; i < radices_.size(); ++i) {
    p[i] = static_cast<int>(index / strides_[i]);
    index %= strides_[i];
  }
  return p;
}

bool GameForm::valid_profile(const Profile& profile) const {
  if (profile.size() != radices_.size()) return false;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (profile[i] < 0 || profile[i] >= radices_[i]) return false;
  }
  return true;
}

void GameForm::require_valid(const Profile& profile) const {
  if (!valid_profile(profile)) {
    fail(ErrorKind::kInvalidInput, "profile does not match the game form");
  }
}

Profile GameForm::profile_of(const std::vector<std::string>& labels) const {
  if (static_cast<int>(labels.size()) != num_voters()) {
    fail(ErrorKind::kInvalidInput, "profile length differs from voter count");
  }
  Profile p;
  for (int i = 0; i < num_voters(); ++i) {
    auto a = find_action(i, labels[i]);
    if (!a) {
      fail(ErrorKind::kInvalidInput,
           "'" + labels[i] + "' is not an action of voter " + std::to_string(i + 1));
    }
    p.push_back(*a);
  }
  return p;
}

std::string GameForm::format_profile(const Profile& profile) const {
  std::string out = "(";
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (i) out += ',';
    out += action_label(static_cast<int>(i), profile[i]);
  }
  return out + ")";
}

std::string GameForm::format_outcome(Outcome o) const {
  std::string out = "{";
  bool first = true;
  for (CandidateId c : o.members()) {
    if (!first) out += ',';
    out += names_[c.index];
    first = false;
  }
  return out + "}";
}

Outcome tabular_outcome(const GameForm& form, const Profile& profile) {
  if (form.is_plurality()) {
    fail(ErrorKind::kUnsupported, "tabular_outcome on a Plurality form");
  }
  return form.outcome(profile);
}

void Game::validate() const {
  const int n = form.num_voters();
  const int m = form.num_candidates();
  if (static_cast<int>(prefs.size()) != n) {
    fail(ErrorKind::kInvalidInput, "one preference order per voter expected");
  }
  for (const auto& q : prefs) {
    if (q.size() != m) fail(ErrorKind::kInvalidInput, "preference order length mismatch");
  }
  if (utilities) {
    if (static_cast<int>(utilities->size()) != n) {
      fail(ErrorKind::kInvalidInput, "one utility vector per voter expected");
    }
    for (int i = 0; i < n; ++i) {
      if (!(*utilities)[i].consistent_with(prefs[i])) {
        fail(ErrorKind::kInvalidInput,
             "utilities of voter " + std::to_string(i + 1) +
                 " are inconsistent with their preferences");
      }
    }
  }
}

Profile truthful_profile(const Game& game) {
  const GameForm& form = game.form;
  Profile p(form.num_voters());
  for (int i = 0; i < form.num_voters(); ++i) {
    int best_action = -1;
    int best_rank = kMaxCandidates + 1;
    for (int a = 0; a < form.num_actions(i); ++a) {
      auto c = form.action_candidate(i, a);
      if (!c) {
        fail(ErrorKind::kUnsupported,
             "truthful state undefined: voter " + std::to_string(i + 1) +
                 " has actions that are not candidates");
      }
      const int r = game.prefs[i].rank(*c);
      if (r < best_rank) {
        best_rank = r;
        best_action = a;
      }
    }
    p[i] = best_action;
  }
  return p;
}

}  // namespace itervote
