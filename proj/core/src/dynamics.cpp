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

#include "itervote/dynamics.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <utility>

#include "itervote/error.hpp"

namespace itervote {
namespace {

std::vector<Outcome> deviation_outcomes(const Game& game, Profile profile,
                                        int voter) {
  std::vector<Outcome> out(game.form.num_actions(voter));
  for (int a = 0; a < game.form.num_actions(voter); ++a) {
    profile[voter] = a;
    out[a] = game.form.outcome(profile);
  }
  return out;
}

bool votes_for_winner(const GameForm& form, int voter, int action,
                      Outcome outcome) {
  auto c = form.action_candidate(voter, action);
  return c && outcome.contains(*c);
}

// Members of `actions` whose outcome no other member strictly beats.
std::vector<int> maximal(const Game& game, int voter, ComparatorMode mode,
                         const std::vector<int>& actions,
                         const std::vector<Outcome>& outcomes) {
  const PreferenceOrder& q = game.prefs[voter];
  const UtilityVector* u = utilities_of(game, voter);
  std::vector<int> keep;
  for (int a : actions) {
    bool dominated = false;
    for (int b : actions) {
      if (b != a &&
          compare(mode, outcomes[b], outcomes[a], q, u) == Verdict::kBetter) {
        dominated = true;
        break;
      }
    }
    if (!dominated) keep.push_back(a);
  }
  return keep;
}

int candidate_rank(const Game& game, int voter, int action) {
  auto c = game.form.action_candidate(voter, action);
  return c ? game.prefs[voter].rank(*c) : game.form.num_candidates();
}

}  // namespace

std::string_view to_string(ReplyKind kind) {
  switch (kind) {
    case ReplyKind::kBetter: return "better";
    case ReplyKind::kBest: return "best";
    case ReplyKind::kDirect: return "direct";
    case ReplyKind::kDirectBest: return "direct-best";
  }
  return "?";
}

std::string to_string(const ReplyPolicy& policy) {
  return std::string(to_string(policy.kind)) + "/" +
         std::string(to_string(policy.comparator));
}

std::string_view to_string(StepType type) {
  switch (type) {
    case StepType::kType1: return "T1";
    case StepType::kType2: return "T2";
    case StepType::kType3: return "T3";
  }
  return "?";
}

std::string_view to_string(PathStatus status) {
  switch (status) {
    case PathStatus::kConverged: return "converged";
    case PathStatus::kCycleDetected: return "cycle";
    case PathStatus::kTruncated: return "truncated";
  }
  return "?";
}

ComparatorMode default_comparator(const Game& game) {
  bool singletons = true;
  if (game.form.is_plurality()) {
    singletons = game.form.plurality_spec().tiebreak == TieBreak::kLexicographic;
  } else {
    for (Outcome o : game.form.tabular_form().table) {
      if (o.size() != 1) {
        singletons = false;
        break;
      }
    }
  }
  if (singletons) return ComparatorMode::kLexSingleton;
  return game.utilities ? ComparatorMode::kExpectedUtility
                        : ComparatorMode::kStochasticDominance;
}

const UtilityVector* utilities_of(const Game& game, int voter) {
  if (!game.utilities) return nullptr;
  return &(*game.utilities)[voter];
}

std::vector<int> improvement_set(const Game& game, const Profile& profile,
                                 int voter, const ReplyPolicy& policy) {
  game.form.require_valid(profile);
  if (voter < 0 || voter >= game.num_voters()) {
    fail(ErrorKind::kInvalidInput, "voter out of range");
  }
  return improvement_set_from(game, profile, voter, policy,
                              deviation_outcomes(game, profile, voter));
}

std::vector<int> improvement_set_from(const Game& game, const Profile& profile,
                                      int voter, const ReplyPolicy& policy,
                                      const std::vector<Outcome>& outcomes) {
  const PreferenceOrder& q = game.prefs[voter];
  const UtilityVector* u = utilities_of(game, voter);
  if (policy.comparator == ComparatorMode::kExpectedUtility && u == nullptr) {
    fail(ErrorKind::kInvalidConfiguration,
         "expected-utility replies need cardinal utilities");
  }
  const int current = profile[voter];
  std::vector<int> better;
  for (int a = 0; a < static_cast<int>(outcomes.size()); ++a) {
    if (a == current) continue;
    if (compare(policy.comparator, outcomes[a], outcomes[current], q, u) ==
        Verdict::kBetter) {
      better.push_back(a);
    }
  }
  if (policy.kind == ReplyKind::kBetter || better.empty()) return better;

  if (policy.kind == ReplyKind::kDirect) {
    std::erase_if(better, [&](int a) {
      return !votes_for_winner(game.form, voter, a, outcomes[a]);
    });
    return better;
  }
  std::vector<int> best = maximal(game, voter, policy.comparator, better, outcomes);
  if (policy.kind == ReplyKind::kBest) return best;

  std::erase_if(best, [&](int a) {
    return !votes_for_winner(game.form, voter, a, outcomes[a]);
  });
  if (best.size() > 1 && policy.comparator != ComparatorMode::kLexSingleton) {
    auto lowest = std::min_element(best.begin(), best.end(), [&](int a, int b) {
      return game.form.action_candidate(voter, a)->index <
             game.form.action_candidate(voter, b)->index;
    });
    return {*lowest};
  }
  return best;
}

StepRecord classify_step(const GameForm& form, const Profile& before,
                         const Profile& after, Outcome old_outcome,
                         Outcome new_outcome, int voter) {
  if (before.size() != after.size() || voter < 0 ||
      voter >= static_cast<int>(before.size())) {
    fail(ErrorKind::kInvalidInput, "step profiles do not match");
  }
  for (std::size_t i = 0; i < before.size(); ++i) {
    const bool differs = before[i] != after[i];
    if (differs != (static_cast<int>(i) == voter)) {
      fail(ErrorKind::kInvalidInput, "a step changes exactly the mover's action");
    }
  }
  StepRecord s;
  s.voter = voter;
  s.from_action = before[voter];
  s.to_action = after[voter];
  s.old_outcome = old_outcome;
  s.new_outcome = new_outcome;
  const bool was_winner = votes_for_winner(form, voter, s.from_action, old_outcome);
  s.direct = votes_for_winner(form, voter, s.to_action, new_outcome);
  if (!s.direct) {
    s.type = StepType::kType3;
  } else {
    s.type = was_winner ? StepType::kType2 : StepType::kType1;
  }
  return s;
}

SchedulerSpec scripted_schedule(std::vector<int> voters,
                                std::vector<std::string> actions) {
  SchedulerSpec spec;
  spec.agent.kind = AgentScheduler::Kind::kScripted;
  spec.agent.script = std::move(voters);
  if (actions.empty()) {
    spec.action.kind = ActionScheduler::Kind::kPreferMostPreferred;
  } else {
    spec.action.kind = ActionScheduler::Kind::kScripted;
    spec.action.script = std::move(actions);
  }
  return spec;
}

PathResult run_path(const Game& game, const Profile& start,
                    const SchedulerSpec& scheduler, const ReplyPolicy& policy,
                    std::size_t max_steps) {
  const GameForm& form = game.form;
  form.require_valid(start);
  if (max_steps < 1) fail(ErrorKind::kInvalidInput, "max_steps must be positive");
  const int n = form.num_voters();
  using AK = AgentScheduler::Kind;
  using CK = ActionScheduler::Kind;
  const AgentScheduler& agent = scheduler.agent;
  const ActionScheduler& action = scheduler.action;

  std::mt19937_64 agent_rng(agent.seed);
  std::mt19937_64 action_rng(action.seed);
  const bool memoryless =
      (agent.kind == AK::kRoundRobin || agent.kind == AK::kFixedPriority) &&
      (action.kind == CK::kPolicyUnique || action.kind == CK::kPreferMostPreferred ||
       action.kind == CK::kLeastPreferred);
  std::vector<int> priority = agent.order;
  if (agent.kind == AK::kFixedPriority && priority.empty()) {
    for (int i = 0; i < n; ++i) priority.push_back(i);
  }
  for (int v : priority) {
    if (v < 0 || v >= n) fail(ErrorKind::kInvalidSchedule, "priority names no voter");
  }

  PathResult result;
  Profile current = start;
  Outcome current_outcome = form.outcome(current);
  result.states.push_back(current);
  int pointer = n > 0 ? ((agent.start % n) + n) % n : 0;
  std::map<std::pair<std::uint64_t, int>, std::size_t> seen;
  auto key = [&]() {
    return std::make_pair(form.encode(current),
                          agent.kind == AK::kRoundRobin ? pointer : 0);
  };
  if (memoryless) seen.emplace(key(), 0);
  std::size_t agent_pos = 0;
  std::size_t action_pos = 0;

  auto improving = [&](int v) {
    std::vector<Outcome> outs = deviation_outcomes(game, current, v);
    std::vector<int> set = improvement_set_from(game, current, v, policy, outs);
    return std::make_pair(std::move(set), std::move(outs));
  };
  auto anyone_improves = [&]() {
    for (int v = 0; v < n; ++v) {
      if (!improving(v).first.empty()) return true;
    }
    return false;
  };
  auto finish_script = [&]() {
    if (!anyone_improves()) {
      result.status = PathStatus::kConverged;
      return;
    }
    for (std::size_t j = result.states.size() - 1; j-- > 0;) {
      if (result.states[j] == current) {
        result.status = PathStatus::kCycleDetected;
        result.cycle_start = j;
        return;
      }
    }
    result.status = PathStatus::kTruncated;
  };

  while (true) {
    int voter = -1;
    std::vector<int> options;
    std::vector<Outcome> outcomes;
    if (agent.kind == AK::kScripted) {
      if (agent_pos == agent.script.size()) {
        finish_script();
        return result;
      }
      voter = agent.script[agent_pos++];
      if (voter < 0 || voter >= n) {
        fail(ErrorKind::kInvalidSchedule, "scripted voter out of range");
      }
      std::tie(options, outcomes) = improving(voter);
      if (options.empty()) {
        fail(ErrorKind::kInvalidSchedule,
             "voter " + std::to_string(voter + 1) + " cannot improve at " +
                 form.format_profile(current));
      }
    } else {
      std::vector<int> order;
      if (agent.kind == AK::kRoundRobin) {
        for (int k = 0; k < n; ++k) order.push_back((pointer + k) % n);
      } else if (agent.kind == AK::kFixedPriority) {
        order = priority;
      } else {
        for (int v = 0; v < n; ++v) order.push_back(v);
      }
      std::vector<int> movers;
      for (int v : order) {
        auto [set, outs] = improving(v);
        if (set.empty()) continue;
        if (agent.kind != AK::kSeededRandom) {
          voter = v;
          options = std::move(set);
          outcomes = std::move(outs);
          break;
        }
        movers.push_back(v);
      }
      if (agent.kind == AK::kSeededRandom && !movers.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, movers.size() - 1);
        voter = movers[pick(agent_rng)];
        std::tie(options, outcomes) = improving(voter);
      }
      if (voter < 0) {
        result.status = PathStatus::kConverged;
        return result;
      }
    }

    int chosen = -1;
    switch (action.kind) {
      case CK::kPolicyUnique:
        if (options.size() != 1) {
          fail(ErrorKind::kInvalidSchedule,
               "voter " + std::to_string(voter + 1) + " has " +
                   std::to_string(options.size()) + " replies at " +
                   form.format_profile(current));
        }
        chosen = options.front();
        break;
      case CK::kPreferMostPreferred:
      case CK::kLeastPreferred: {
        std::vector<int> top =
            maximal(game, voter, policy.comparator, options, outcomes);
        const bool most = action.kind == CK::kPreferMostPreferred;
        auto sort_key = [&](int a) {
          const int direct =
              most && votes_for_winner(form, voter, a, outcomes[a]) ? 0 : 1;
          const int r = candidate_rank(game, voter, a);
          return std::make_tuple(direct, most ? r : -r, a);
        };
        chosen = *std::min_element(top.begin(), top.end(), [&](int a, int b) {
          return sort_key(a) < sort_key(b);
        });
        break;
      }
      case CK::kSeededRandom: {
        std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
        chosen = options[pick(action_rng)];
        break;
      }
      case CK::kScripted: {
        if (action_pos == action.script.size()) {
          finish_script();
          return result;
        }
        const std::string& label = action.script[action_pos++];
        auto a = form.find_action(voter, label);
        if (!a || std::find(options.begin(), options.end(), *a) == options.end()) {
          fail(ErrorKind::kInvalidSchedule,
               "'" + label + "' is not an allowed reply of voter " +
                   std::to_string(voter + 1) + " at " + form.format_profile(current));
        }
        chosen = *a;
        break;
      }
    }

    Profile next = current;
    next[voter] = chosen;
    const Outcome next_outcome = outcomes[chosen];
    result.steps.push_back(
        classify_step(form, current, next, current_outcome, next_outcome, voter));
    current = std::move(next);
    current_outcome = next_outcome;
    result.states.push_back(current);
    pointer = n > 0 ? (voter + 1) % n : 0;

    if (memoryless) {
      auto [it, inserted] = seen.emplace(key(), result.steps.size());
      if (!inserted) {
        result.status = PathStatus::kCycleDetected;
        result.cycle_start = it->second;
        return result;
      }
    }
    if (result.steps.size() >= max_steps) {
      result.status = PathStatus::kTruncated;
      return result;
    }
  }
}

std::string format_step(const GameForm& form, std::size_t t,
                        const StepRecord& step) {
  std::string line = std::to_string(t) + " " + std::to_string(step.voter + 1) + " ";
  line += form.action_label(step.voter, step.from_action) + " ";
  line += form.action_label(step.voter, step.to_action) + " ";
  line += form.format_outcome(step.old_outcome) + " ";
  line += form.format_outcome(step.new_outcome) + " ";
  line += std::string(to_string(step.type)) + " ";
  line += step.direct ? "yes" : "no";
  return line;
}

std::string format_trace(const GameForm& form, const PathResult& path) {
  std::string out;
  for (std::size_t t = 0; t < path.steps.size(); ++t) {
    out += format_step(form, t + 1, path.steps[t]);
    out += '\n';
  }
  return out;
}

}  // namespace itervote
