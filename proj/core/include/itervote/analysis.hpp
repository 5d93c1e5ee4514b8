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

#ifndef ITERVOTE_ANALYSIS_HPP_
#define ITERVOTE_ANALYSIS_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "itervote/dynamics.hpp"
#include "itervote/game_form.hpp"

namespace itervote {

inline constexpr std::uint64_t kDefaultNodeLimit = 1'000'000;
inline constexpr std::uint64_t kDefaultSearchBudget = 5'000'000;

struct GraphEdge {
  std::uint64_t from = 0;
  std::uint64_t to = 0;
  int voter = 0;
  int action = 0;

  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

// Improvement graph over all profiles of a game. Nodes are profile indices;
// each node's edges are sorted by voter, then action.
class BetterReplyGraph {
 public:
  const Game& game() const { return game_; }
  const ReplyPolicy& policy() const { return policy_; }
  std::uint64_t num_nodes() const { return outcomes_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  Outcome outcome(std::uint64_t node) const { return outcomes_[node]; }
  Profile profile(std::uint64_t node) const { return game_.form.decode(node); }
  std::uint64_t node_of(const Profile& p) const;

  std::span<const GraphEdge> out_edges(std::uint64_t node) const {
    return {edges_.data() + offsets_[node], edges_.data() + offsets_[node + 1]};
  }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  std::size_t edge_offset(std::uint64_t node) const { return offsets_[node]; }
  bool is_sink(std::uint64_t node) const {
    return offsets_[node] == offsets_[node + 1];
  }
  std::vector<std::uint64_t> sinks() const;

 private:
  friend BetterReplyGraph build_graph(const Game&, const ReplyPolicy&,
                                      std::uint64_t, unsigned);

  Game game_;
  ReplyPolicy policy_;
  std::vector<Outcome> outcomes_;
  std::vector<std::size_t> offsets_;
  std::vector<GraphEdge> edges_;
};

// threads = 0 picks the hardware concurrency.
BetterReplyGraph build_graph(const Game& game, const ReplyPolicy& policy,
                             std::uint64_t node_limit = kDefaultNodeLimit,
                             unsigned threads = 0);

// Requires a Better-policy graph.
std::vector<Profile> nash_equilibria(const BetterReplyGraph& graph);

struct FipResult {
  bool fip = true;
  // Closed walk of improvement edges when fip is false.
  std::vector<GraphEdge> cycle;
};

struct WeakFipResult {
  bool weak_fip = true;
  std::optional<std::uint64_t> stuck;  // a node that reaches no sink
  // Per node, index of an edge one step closer to a sink; -1 at sinks and
  // at stuck nodes.
  std::vector<std::int64_t> next_edge;
};

struct RestrictedResult {
  bool restricted_fip = true;
  // Per (node * num_voters + voter), the selected edge index or -1.
  std::vector<std::int64_t> selection;
  // Cycle made of edges that are the only reply of their mover; present
  // when such a cycle decides the question.
  std::vector<GraphEdge> forced_cycle;
  // Set when failure follows from a node that reaches no sink.
  std::optional<std::uint64_t> stuck;
  std::uint64_t search_nodes = 0;
};

FipResult is_fip(const BetterReplyGraph& graph);
WeakFipResult is_weak_fip(const BetterReplyGraph& graph);
RestrictedResult is_restricted_fip(const BetterReplyGraph& graph,
                                   std::uint64_t budget = kDefaultSearchBudget);
// Only states reachable from `start` under the selection matter.
RestrictedResult is_restricted_fip_from(const BetterReplyGraph& graph,
                                        std::uint64_t start,
                                        std::uint64_t budget = kDefaultSearchBudget);

struct FromStateResult {
  bool fip = true;             // no cycle reachable
  bool weak_fip = true;        // some sink reachable
  bool restricted_fip = true;  // some selection converges from the start
  std::optional<std::size_t> longest_path;  // when fip holds
};

FromStateResult from_state(const BetterReplyGraph& graph, const Profile& start,
                           std::uint64_t budget = kDefaultSearchBudget);

// Longest improvement path in edges. Throws not-applicable on cyclic graphs.
std::size_t longest_convergence_path(const BetterReplyGraph& graph);
std::size_t longest_path_from(const BetterReplyGraph& graph, std::uint64_t start);

// Witness replay.
bool verify_cycle(const BetterReplyGraph& graph, const std::vector<GraphEdge>& cycle);
bool verify_weak_witness(const BetterReplyGraph& graph, const WeakFipResult& result);
bool verify_selection(const BetterReplyGraph& graph,
                      const std::vector<std::int64_t>& selection);

std::vector<StepRecord> steps_of(const BetterReplyGraph& graph,
                                 const std::vector<GraphEdge>& walk);

struct ClassifyOptions {
  std::uint64_t node_limit = kDefaultNodeLimit;
  std::uint64_t search_budget = kDefaultSearchBudget;
  bool include_truthful = true;
  std::vector<Profile> starts;
  unsigned threads = 0;
};

struct ClassificationReport {
  ReplyPolicy policy;
  std::uint64_t nodes = 0;
  std::size_t edges = 0;
  bool has_ne = false;
  std::size_t ne_count = 0;
  FipResult fip;
  WeakFipResult weak;
  RestrictedResult restricted;
  std::optional<std::size_t> longest_path;
  std::vector<std::pair<Profile, FromStateResult>> from_states;

  // fip => restricted => weak => has_ne, also for every from-state entry.
  bool hierarchy_consistent() const;
};

ClassificationReport classify_graph(const BetterReplyGraph& graph,
                                    const ClassifyOptions& options = {});
ClassificationReport classify_game(const Game& game, const ReplyPolicy& policy,
                                   const ClassifyOptions& options = {});

// `key: value` lines; cycle witnesses embed trace lines and a replay script.
std::string format_report(const Game& game, const ClassificationReport& report);

struct FormScope {
  enum class Kind { kExhaustive, kSample };
  Kind kind = Kind::kExhaustive;
  std::uint64_t samples = 100;     // preference profiles drawn under kSample
  std::uint64_t seed = 0;
  int utility_samples = 5;         // per preference profile, when utilities are needed
  std::uint64_t game_limit = 2'000'000;
};

struct FormWitness {
  Game game;
  ClassificationReport report;
};

struct FormReport {
  ReplyPolicy policy;
  bool exhaustive = true;
  std::uint64_t games = 0;
  bool has_ne = true;
  bool fip = true;
  bool weak_fip = true;
  bool restricted_fip = true;
  bool hierarchy_consistent = true;
  // First failing game in enumeration order, per property.
  std::optional<FormWitness> ne_witness;
  std::optional<FormWitness> fip_witness;
  std::optional<FormWitness> weak_witness;
  std::optional<FormWitness> restricted_witness;
};

// Conjunction over preference profiles (and sampled utilities when the
// comparator reads them).
FormReport classify_game_form(const GameForm& form, const ReplyPolicy& policy,
                              const FormScope& scope,
                              const ClassifyOptions& options = {});

std::string format_form_report(const GameForm& form, const FormReport& report);

struct ScanParams {
  int max_m = 4;
  int max_n = 3;
  int weight_bound = 5;
  int score_bound = 3;
};

struct ScanReport {
  std::uint64_t trials = 0;
  std::uint64_t confirmed = 0;
  std::uint64_t cyclic = 0;  // confirming instances whose Direct graph has a cycle
  std::vector<Game> violations;
};

// Samples weighted lexicographic Plurality games and checks that every state
// of the Direct graph reaches an equilibrium.
ScanReport conjecture_scan(const ScanParams& params, std::uint64_t trials,
                           std::uint64_t seed);

}  // namespace itervote

#endif  // ITERVOTE_ANALYSIS_HPP_
