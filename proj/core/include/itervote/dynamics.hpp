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

#ifndef ITERVOTE_DYNAMICS_HPP_
#define ITERVOTE_DYNAMICS_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "itervote/comparators.hpp"
#include "itervote/game_form.hpp"
#include "itervote/types.hpp"

namespace itervote {

enum class ReplyKind { kBetter, kBest, kDirect, kDirectBest };

std::string_view to_string(ReplyKind kind);

struct ReplyPolicy {
  ReplyKind kind = ReplyKind::kBetter;
  ComparatorMode comparator = ComparatorMode::kLexSingleton;

  friend bool operator==(const ReplyPolicy&, const ReplyPolicy&) = default;
};

std::string to_string(const ReplyPolicy& policy);

// Comparator matching the tie-breaking of a Plurality form: singleton
// comparison for lexicographic forms and tabular forms with singleton
// outcomes, expected utility otherwise.
ComparatorMode default_comparator(const Game& game);

// The utility vector a comparator reads for `voter`, or null.
const UtilityVector* utilities_of(const Game& game, int voter);

// Action indices of `voter` that improve on `profile` under `policy`, in
// increasing index order. DirectBest keeps at most one action under
// comparators other than the singleton one (lowest candidate index wins).
std::vector<int> improvement_set(const Game& game, const Profile& profile,
                                 int voter, const ReplyPolicy& policy);

// Same, reading the outcome of each unilateral deviation from `outcomes`,
// indexed by action.
std::vector<int> improvement_set_from(const Game& game, const Profile& profile,
                                      int voter, const ReplyPolicy& policy,
                                      const std::vector<Outcome>& outcomes);

enum class StepType { kType1, kType2, kType3 };

std::string_view to_string(StepType type);

struct StepRecord {
  int voter = 0;
  int from_action = 0;
  int to_action = 0;
  Outcome old_outcome;
  Outcome new_outcome;
  StepType type = StepType::kType3;
  bool direct = false;

  friend bool operator==(const StepRecord&, const StepRecord&) = default;
};

StepRecord classify_step(const GameForm& form, const Profile& before,
                         const Profile& after, Outcome old_outcome,
                         Outcome new_outcome, int voter);

struct AgentScheduler {
  enum class Kind { kRoundRobin, kFixedPriority, kSeededRandom, kScripted };
  Kind kind = Kind::kRoundRobin;
  int start = 0;                // round robin: first voter asked
  std::vector<int> order;       // fixed priority
  std::uint64_t seed = 0;       // seeded random
  std::vector<int> script;      // scripted voter ids (0-based)
};

struct ActionScheduler {
  enum class Kind {
    kPolicyUnique,
    kPreferMostPreferred,
    kLeastPreferred,
    kSeededRandom,
    kScripted,
  };
  Kind kind = Kind::kPreferMostPreferred;
  std::uint64_t seed = 0;
  std::vector<std::string> script;  // action labels
};

struct SchedulerSpec {
  AgentScheduler agent;
  ActionScheduler action;
};

SchedulerSpec scripted_schedule(std::vector<int> voters,
                                std::vector<std::string> actions = {});

enum class PathStatus { kConverged, kCycleDetected, kTruncated };

std::string_view to_string(PathStatus status);

struct PathResult {
  PathStatus status = PathStatus::kTruncated;
  // states.size() == steps.size() + 1; states[t + 1] follows steps[t].
  std::vector<Profile> states;
  std::vector<StepRecord> steps;
  // With kCycleDetected, steps[cycle_start..] close a cycle ending at
  // states[cycle_start].
  std::size_t cycle_start = 0;

  const Profile& final_profile() const { return states.back(); }
  std::size_t cycle_length() const { return steps.size() - cycle_start; }
};

PathResult run_path(const Game& game, const Profile& start,
                    const SchedulerSpec& scheduler, const ReplyPolicy& policy,
                    std::size_t max_steps);

// One line per step: `t voter from to old new type direct`, voters 1-based.
std::string format_step(const GameForm& form, std::size_t t,
                        const StepRecord& step);
std::string format_trace(const GameForm& form, const PathResult& path);

}  // namespace itervote

#endif  // ITERVOTE_DYNAMICS_HPP_
