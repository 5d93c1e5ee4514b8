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

#include "itervote/analysis.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include "itervote/constructions.hpp"
#include "itervote/error.hpp"
#include "parallel.hpp"

namespace itervote {
namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

// Finds a cycle reachable from `roots` among the edges accepted by `keep`.
template <class Keep>
std::vector<GraphEdge> find_cycle(const BetterReplyGraph& g,
                                  const std::vector<std::uint64_t>& roots,
                                  Keep keep) {
  std::vector<std::uint8_t> color(g.num_nodes(), 0);
  std::vector<std::pair<std::uint64_t, std::size_t>> stack;
  std::vector<GraphEdge> path;
  for (std::uint64_t root : roots) {
    if (color[root] != 0) continue;
    color[root] = 1;
    stack.emplace_back(root, 0);
    while (!stack.empty()) {
      auto& [u, i] = stack.back();
      auto out = g.out_edges(u);
      if (i < out.size()) {
        const GraphEdge& e = out[i++];
        if (!keep(e)) continue;
        if (color[e.to] == 0) {
          color[e.to] = 1;
          path.push_back(e);
          stack.emplace_back(e.to, 0);
        } else if (color[e.to] == 1) {
          std::vector<GraphEdge> cycle;
          std::size_t k = path.size();
          while (k > 0 && path[k - 1].from != e.to) --k;
          if (k > 0) cycle.assign(path.begin() + (k - 1), path.end());
          cycle.push_back(e);
          return cycle;
        }
      } else {
        color[u] = 2;
        stack.pop_back();
        if (!path.empty()) path.pop_back();
      }
    }
  }
  return {};
}

std::vector<std::uint64_t> all_nodes(const BetterReplyGraph& g) {
  std::vector<std::uint64_t> v(g.num_nodes());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

std::vector<bool> reachable_from(const BetterReplyGraph& g, std::uint64_t start) {
  std::vector<bool> seen(g.num_nodes(), false);
  std::vector<std::uint64_t> todo{start};
  seen[start] = true;
  while (!todo.empty()) {
    const std::uint64_t u = todo.back();
    todo.pop_back();
    for (const GraphEdge& e : g.out_edges(u)) {
      if (!seen[e.to]) {
        seen[e.to] = true;
        todo.push_back(e.to);
      }
    }
  }
  return seen;
}

// Distance (in edges) to the nearest sink; kUnreached when none is reachable.
std::vector<std::uint32_t> sink_distances(const BetterReplyGraph& g,
                                          std::vector<std::int64_t>* next_edge) {
  const std::uint64_t n = g.num_nodes();
  std::vector<std::size_t> in_off(n + 1, 0);
  for (const GraphEdge& e : g.edges()) ++in_off[e.to + 1];
  std::partial_sum(in_off.begin(), in_off.end(), in_off.begin());
  std::vector<std::size_t> in_edges(g.num_edges());
  std::vector<std::size_t> fill(in_off.begin(), in_off.end() - 1);
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    in_edges[fill[g.edges()[i].to]++] = i;
  }
  std::vector<std::uint32_t> dist(n, kUnreached);
  if (next_edge) next_edge->assign(n, -1);
  std::deque<std::uint64_t> queue;
  for (std::uint64_t u = 0; u < n; ++u) {
    if (g.is_sink(u)) {
      dist[u] = 0;
      queue.push_back(u);
    }
  }
  while (!queue.empty()) {
    const std::uint64_t v = queue.front();
    queue.pop_front();
    for (std::size_t k = in_off[v]; k < in_off[v + 1]; ++k) {
      const std::size_t idx = in_edges[k];
      const std::uint64_t u = g.edges()[idx].from;
      if (dist[u] != kUnreached) continue;
      dist[u] = dist[v] + 1;
      if (next_edge) (*next_edge)[u] = static_cast<std::int64_t>(idx);
      queue.push_back(u);
    }
  }
  return dist;
}

// Backtracking search for a per-(state, voter) selection whose selected
// edges form an acyclic graph. Rooted searches only assign states that the
// selection reaches from the root.
class SelectionSearch {
 public:
  SelectionSearch(const BetterReplyGraph& g, std::uint64_t budget)
      : g_(g), budget_(budget), voters_(g.game().num_voters()) {
    for (std::uint64_t u = 0; u < g.num_nodes(); ++u) {
      auto out = g.out_edges(u);
      std::size_t i = 0;
      while (i < out.size()) {
        std::size_t j = i;
        while (j < out.size() && out[j].voter == out[i].voter) ++j;
        const std::size_t base = g.edge_offset(u);
        pairs_.push_back({u, out[i].voter, base + i, base + j});
        i = j;
      }
    }
    choice_.assign(pairs_.size(), -1);
    selected_.assign(g.num_nodes(), {});
    reach_.assign(g.num_nodes(), 0);
    stamp_.assign(g.num_nodes(), 0);
    dist_ = sink_distances(g, nullptr);
  }

  // Pairs whose mover has exactly one reply.
  std::vector<GraphEdge> forced_cycle() const {
    return find_cycle(g_, all_nodes(g_), [&](const GraphEdge& e) {
      auto out = g_.out_edges(e.from);
      return std::count_if(out.begin(), out.end(), [&](const GraphEdge& f) {
               return f.voter == e.voter;
             }) == 1;
    });
  }

  bool run_all() {
    std::fill(reach_.begin(), reach_.end(), 1);
    return search();
  }

  bool run_rooted(std::uint64_t root) {
    reach_[root] = 1;
    return search();
  }

  std::vector<std::int64_t> selection() const {
    std::vector<std::int64_t> sel(g_.num_nodes() * voters_, -1);
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      if (choice_[p] >= 0) {
        sel[pairs_[p].node * voters_ + pairs_[p].voter] = choice_[p];
      }
    }
    return sel;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  struct Pair {
    std::uint64_t node;
    int voter;
    std::size_t begin;
    std::size_t end;
  };

  bool reaches(std::uint64_t from, std::uint64_t target) {
    if (from == target) return true;
    ++epoch_;
    std::vector<std::uint64_t>& todo = scratch_;
    todo.clear();
    todo.push_back(from);
    stamp_[from] = epoch_;
    while (!todo.empty()) {
      const std::uint64_t u = todo.back();
      todo.pop_back();
      for (std::uint64_t v : selected_[u]) {
        if (v == target) return true;
        if (stamp_[v] != epoch_) {
          stamp_[v] = epoch_;
          todo.push_back(v);
        }
      }
    }
    return false;
  }

  bool search() {
    if (++nodes_ > budget_) {
      fail(ErrorKind::kResourceLimit,
           "restricted-FIP search exceeded its budget of " +
               std::to_string(budget_) + " nodes");
    }
    std::size_t best = pairs_.size();
    std::vector<std::size_t> best_options;
    std::vector<std::size_t> options;
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      const Pair& pr = pairs_[p];
      if (choice_[p] >= 0 || reach_[pr.node] == 0) continue;
      options.clear();
      for (std::size_t e = pr.begin; e < pr.end; ++e) {
        if (!reaches(g_.edges()[e].to, pr.node)) options.push_back(e);
      }
      if (options.empty()) return false;
      if (best == pairs_.size() || options.size() < best_options.size()) {
        best = p;
        best_options = options;
        if (options.size() == 1) break;
      }
    }
    if (best == pairs_.size()) return true;
    std::stable_sort(best_options.begin(), best_options.end(),
                     [&](std::size_t a, std::size_t b) {
                       return dist_[g_.edges()[a].to] < dist_[g_.edges()[b].to];
                     });
    for (std::size_t e : best_options) {
      assign(best, e);
      if (search()) return true;
      unassign(best, e);
    }
    return false;
  }

  void assign(std::size_t p, std::size_t e) {
    const GraphEdge& edge = g_.edges()[e];
    choice_[p] = static_cast<std::int64_t>(e);
    selected_[edge.from].push_back(edge.to);
    ++reach_[edge.to];
  }

  void unassign(std::size_t p, std::size_t e) {
    const GraphEdge& edge = g_.edges()[e];
    choice_[p] = -1;
    auto& out = selected_[edge.from];
    out.erase(std::find(out.begin(), out.end(), edge.to));
    --reach_[edge.to];
  }

  const BetterReplyGraph& g_;
  std::uint64_t budget_;
  int voters_;
  std::vector<Pair> pairs_;
  std::vector<std::int64_t> choice_;
  std::vector<std::vector<std::uint64_t>> selected_;
  std::vector<std::uint32_t> reach_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<std::uint64_t> scratch_;
  std::vector<std::uint32_t> dist_;
  std::uint64_t nodes_ = 0;
};

std::vector<std::int64_t> first_edge_selection(const BetterReplyGraph& g) {
  const int n = g.game().num_voters();
  std::vector<std::int64_t> sel(g.num_nodes() * n, -1);
  for (std::uint64_t u = 0; u < g.num_nodes(); ++u) {
    auto out = g.out_edges(u);
    for (std::size_t i = 0; i < out.size(); ++i) {
      auto& slot = sel[u * n + out[i].voter];
      if (slot < 0) slot = static_cast<std::int64_t>(g.edge_offset(u) + i);
    }
  }
  return sel;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string replay_script(const GameForm& form,
                          const std::vector<StepRecord>& steps,
                          const Profile& start) {
  std::string voters;
  std::string actions;
  for (const StepRecord& s : steps) {
    if (!voters.empty()) {
      voters += ',';
      actions += ',';
    }
    voters += std::to_string(s.voter + 1);
    actions += form.action_label(s.voter, s.to_action);
  }
  return "--start \"" + form.format_profile(start) + "\" --agents scripted:" +
         voters + " --actions scripted:" + actions;
}

void write_walk(std::ostringstream& os, const BetterReplyGraph& g,
                const std::string& key, const std::vector<GraphEdge>& walk) {
  const GameForm& form = g.game().form;
  const std::vector<StepRecord> steps = steps_of(g, walk);
  os << key << "-length: " << walk.size() << '\n';
  os << key << "-start: " << form.format_profile(g.profile(walk.front().from)) << '\n';
  os << key << ":\n";
  for (std::size_t t = 0; t < steps.size(); ++t) {
    os << "  " << format_step(form, t + 1, steps[t]) << '\n';
  }
  os << key << "-replay: "
     << replay_script(form, steps, g.profile(walk.front().from)) << '\n';
}

std::string format_prefs(const Game& game) {
  std::string out;
  for (int i = 0; i < game.num_voters(); ++i) {
    if (i) out += " | ";
    bool first = true;
    for (CandidateId c : game.prefs[i].ranking()) {
      if (!first) out += '>';
      out += game.form.candidate_name(c);
      first = false;
    }
  }
  return out;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  std::uint64_t out[1];
  std::uint32_t parts[2];
  seq.generate(parts, parts + 2);
  out[0] = (std::uint64_t{parts[0]} << 32) | parts[1];
  return out[0];
}

}  // namespace

std::uint64_t BetterReplyGraph::node_of(const Profile& p) const {
  game_.form.require_valid(p);
  return game_.form.encode(p);
}

std::vector<std::uint64_t> BetterReplyGraph::sinks() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t u = 0; u < num_nodes(); ++u) {
    if (is_sink(u)) out.push_back(u);
  }
  return out;
}

BetterReplyGraph build_graph(const Game& game, const ReplyPolicy& policy,
                             std::uint64_t node_limit, unsigned threads) {
  game.validate();
  const GameForm& form = game.form;
  const std::uint64_t count = form.state_count();
  if (count > node_limit) {
    fail(ErrorKind::kResourceLimit,
         "state space of " + std::to_string(count) + " profiles exceeds the node limit of " +
             std::to_string(node_limit));
  }
  if (policy.comparator == ComparatorMode::kExpectedUtility && !game.utilities) {
    fail(ErrorKind::kInvalidConfiguration,
         "expected-utility replies need cardinal utilities");
  }
  BetterReplyGraph g;
  g.game_ = game;
  g.policy_ = policy;
  g.outcomes_.resize(count);
  const std::size_t chunks = internal::plan_chunks(count, threads, 2048);
  internal::run_chunks(count, chunks, [&](std::size_t, std::size_t b, std::size_t e) {
    for (std::size_t u = b; u < e; ++u) g.outcomes_[u] = form.outcome(form.decode(u));
  });

  const int n = form.num_voters();
  std::vector<std::vector<GraphEdge>> parts(chunks);
  std::vector<std::vector<std::size_t>> degrees(chunks);
  internal::run_chunks(count, chunks, [&](std::size_t c, std::size_t b, std::size_t e) {
    std::vector<Outcome> outs;
    for (std::size_t u = b; u < e; ++u) {
      const Profile p = form.decode(u);
      std::size_t deg = 0;
      for (int v = 0; v < n; ++v) {
        const std::uint64_t stride = form.stride(v);
        const std::uint64_t base = u - static_cast<std::uint64_t>(p[v]) * stride;
        outs.resize(form.num_actions(v));
        for (int a = 0; a < form.num_actions(v); ++a) {
          outs[a] = g.outcomes_[base + a * stride];
        }
        for (int a : improvement_set_from(game, p, v, policy, outs)) {
          parts[c].push_back({u, base + a * stride, v, a});
          ++deg;
        }
      }
      degrees[c].push_back(deg);
    }
  });
  g.offsets_.reserve(count + 1);
  g.offsets_.push_back(0);
  for (std::size_t c = 0; c < chunks; ++c) {
    for (std::size_t d : degrees[c]) g.offsets_.push_back(g.offsets_.back() + d);
    g.edges_.insert(g.edges_.end(), parts[c].begin(), parts[c].end());
  }
  return g;
}

std::vector<Profile> nash_equilibria(const BetterReplyGraph& graph) {
  if (graph.policy().kind != ReplyKind::kBetter) {
    fail(ErrorKind::kNotApplicable, "equilibria are read from a Better-reply graph");
  }
  std::vector<Profile> out;
  for (std::uint64_t u : graph.sinks()) out.push_back(graph.profile(u));
  return out;
}

FipResult is_fip(const BetterReplyGraph& graph) {
  FipResult r;
  r.cycle = find_cycle(graph, all_nodes(graph), [](const GraphEdge&) { return true; });
  r.fip = r.cycle.empty();
  return r;
}

WeakFipResult is_weak_fip(const BetterReplyGraph& graph) {
  WeakFipResult r;
  const auto dist = sink_distances(graph, &r.next_edge);
  for (std::uint64_t u = 0; u < graph.num_nodes(); ++u) {
    if (dist[u] == kUnreached) {
      r.weak_fip = false;
      r.stuck = u;
      break;
    }
  }
  return r;
}

RestrictedResult is_restricted_fip(const BetterReplyGraph& graph,
                                   std::uint64_t budget) {
  RestrictedResult r;
  SelectionSearch search(graph, budget);
  r.forced_cycle = search.forced_cycle();
  if (!r.forced_cycle.empty()) {
    r.restricted_fip = false;
    return r;
  }
  r.restricted_fip = search.run_all();
  r.search_nodes = search.nodes();
  if (r.restricted_fip) r.selection = search.selection();
  return r;
}

RestrictedResult is_restricted_fip_from(const BetterReplyGraph& graph,
                                        std::uint64_t start, std::uint64_t budget) {
  RestrictedResult r;
  SelectionSearch search(graph, budget);
  r.restricted_fip = search.run_rooted(start);
  r.search_nodes = search.nodes();
  if (r.restricted_fip) r.selection = search.selection();
  return r;
}

FromStateResult from_state(const BetterReplyGraph& graph, const Profile& start,
                           std::uint64_t budget) {
  const std::uint64_t s = graph.node_of(start);
  FromStateResult r;
  r.fip = find_cycle(graph, {s}, [](const GraphEdge&) { return true; }).empty();
  const auto seen = reachable_from(graph, s);
  r.weak_fip = false;
  for (std::uint64_t u = 0; u < graph.num_nodes(); ++u) {
    if (seen[u] && graph.is_sink(u)) {
      r.weak_fip = true;
      break;
    }
  }
  if (r.fip) {
    r.restricted_fip = true;
    r.longest_path = longest_path_from(graph, s);
  } else if (!r.weak_fip) {
    r.restricted_fip = false;
  } else {
    r.restricted_fip = is_restricted_fip_from(graph, s, budget).restricted_fip;
  }
  return r;
}

std::size_t longest_convergence_path(const BetterReplyGraph& graph) {
  const std::uint64_t n = graph.num_nodes();
  std::vector<std::size_t> indeg(n, 0);
  for (const GraphEdge& e : graph.edges()) ++indeg[e.to];
  std::vector<std::uint64_t> order;
  order.reserve(n);
  for (std::uint64_t u = 0; u < n; ++u) {
    if (indeg[u] == 0) order.push_back(u);
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const GraphEdge& e : graph.out_edges(order[i])) {
      if (--indeg[e.to] == 0) order.push_back(e.to);
    }
  }
  if (order.size() != n) {
    fail(ErrorKind::kNotApplicable, "longest path of a cyclic improvement graph");
  }
  std::vector<std::size_t> longest(n, 0);
  std::size_t best = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    for (const GraphEdge& e : graph.out_edges(*it)) {
      longest[*it] = std::max(longest[*it], longest[e.to] + 1);
    }
    best = std::max(best, longest[*it]);
  }
  return best;
}

std::size_t longest_path_from(const BetterReplyGraph& graph, std::uint64_t start) {
  const std::uint64_t n = graph.num_nodes();
  constexpr std::size_t kOpen = std::numeric_limits<std::size_t>::max();
  constexpr std::size_t kNew = kOpen - 1;
  std::vector<std::size_t> longest(n, kNew);
  std::vector<std::pair<std::uint64_t, std::size_t>> stack{{start, 0}};
  longest[start] = kOpen;
  while (!stack.empty()) {
    auto& [u, i] = stack.back();
    auto out = graph.out_edges(u);
    if (i < out.size()) {
      const std::uint64_t v = out[i++].to;
      if (longest[v] == kOpen) {
        fail(ErrorKind::kNotApplicable, "a cycle is reachable from the start");
      }
      if (longest[v] == kNew) {
        longest[v] = kOpen;
        stack.emplace_back(v, 0);
      }
    } else {
      std::size_t best = 0;
      for (const GraphEdge& e : out) best = std::max(best, longest[e.to] + 1);
      longest[u] = best;
      stack.pop_back();
    }
  }
  return longest[start];
}

bool verify_cycle(const BetterReplyGraph& graph, const std::vector<GraphEdge>& cycle) {
  if (cycle.empty() || cycle.back().to != cycle.front().from) return false;
  const Game& game = graph.game();
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const GraphEdge& e = cycle[i];
    if (i > 0 && cycle[i - 1].to != e.from) return false;
    Profile p = graph.profile(e.from);
    const auto set = improvement_set(game, p, e.voter, graph.policy());
    if (std::find(set.begin(), set.end(), e.action) == set.end()) return false;
    p[e.voter] = e.action;
    if (game.form.encode(p) != e.to) return false;
  }
  return true;
}

bool verify_weak_witness(const BetterReplyGraph& graph, const WeakFipResult& result) {
  if (!result.weak_fip) {
    if (!result.stuck) return false;
    const auto seen = reachable_from(graph, *result.stuck);
    for (std::uint64_t u = 0; u < graph.num_nodes(); ++u) {
      if (seen[u] && graph.is_sink(u)) return false;
    }
    return true;
  }
  if (result.next_edge.size() != graph.num_nodes()) return false;
  for (std::uint64_t u = 0; u < graph.num_nodes(); ++u) {
    std::uint64_t v = u;
    for (std::uint64_t steps = 0; !graph.is_sink(v); ++steps) {
      const std::int64_t e = result.next_edge[v];
      if (steps > graph.num_nodes() || e < static_cast<std::int64_t>(graph.edge_offset(v)) ||
          e >= static_cast<std::int64_t>(graph.edge_offset(v + 1))) {
        return false;
      }
      v = graph.edges()[e].to;
    }
  }
  return true;
}

bool verify_selection(const BetterReplyGraph& graph,
                      const std::vector<std::int64_t>& selection) {
  const int n = graph.game().num_voters();
  if (selection.size() != graph.num_nodes() * n) return false;
  std::vector<std::vector<std::uint64_t>> adj(graph.num_nodes());
  std::vector<std::size_t> indeg(graph.num_nodes(), 0);
  for (std::uint64_t u = 0; u < graph.num_nodes(); ++u) {
    for (int v = 0; v < n; ++v) {
      const std::int64_t e = selection[u * n + v];
      bool has_edge = false;
      for (const GraphEdge& edge : graph.out_edges(u)) has_edge |= edge.voter == v;
      if (has_edge != (e >= 0)) return false;
      if (e < 0) continue;
      if (e < static_cast<std::int64_t>(graph.edge_offset(u)) ||
          e >= static_cast<std::int64_t>(graph.edge_offset(u + 1)) ||
          graph.edges()[e].voter != v) {
        return false;
      }
      adj[u].push_back(graph.edges()[e].to);
      ++indeg[graph.edges()[e].to];
    }
  }
  std::vector<std::uint64_t> order;
  for (std::uint64_t u = 0; u < graph.num_nodes(); ++u) {
    if (indeg[u] == 0) order.push_back(u);
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::uint64_t v : adj[order[i]]) {
      if (--indeg[v] == 0) order.push_back(v);
    }
  }
  return order.size() == graph.num_nodes();
}

std::vector<StepRecord> steps_of(const BetterReplyGraph& graph,
                                 const std::vector<GraphEdge>& walk) {
  std::vector<StepRecord> steps;
  for (const GraphEdge& e : walk) {
    steps.push_back(classify_step(graph.game().form, graph.profile(e.from),
                                  graph.profile(e.to), graph.outcome(e.from),
                                  graph.outcome(e.to), e.voter));
  }
  return steps;
}

bool ClassificationReport::hierarchy_consistent() const {
  auto chain = [](bool f, bool r, bool w, bool ne) {
    return (!f || r) && (!r || w) && (!w || ne);
  };
  if (!chain(fip.fip, restricted.restricted_fip, weak.weak_fip, has_ne)) return false;
  for (const auto& [start, res] : from_states) {
    if (!chain(res.fip, res.restricted_fip, res.weak_fip, true)) return false;
  }
  return true;
}

ClassificationReport classify_graph(const BetterReplyGraph& graph,
                                    const ClassifyOptions& options) {
  ClassificationReport r;
  r.policy = graph.policy();
  r.nodes = graph.num_nodes();
  r.edges = graph.num_edges();
  r.ne_count = graph.sinks().size();
  r.has_ne = r.ne_count > 0;
  r.fip = is_fip(graph);
  r.weak = is_weak_fip(graph);
  if (r.fip.fip) {
    r.restricted.selection = first_edge_selection(graph);
    r.longest_path = longest_convergence_path(graph);
  } else if (!r.weak.weak_fip) {
    r.restricted.restricted_fip = false;
    r.restricted.stuck = r.weak.stuck;
  } else {
    r.restricted = is_restricted_fip(graph, options.search_budget);
  }
  std::vector<Profile> starts;
  if (options.include_truthful) {
    try {
      starts.push_back(truthful_profile(graph.game()));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kUnsupported) throw;
    }
  }
  for (const Profile& p : options.starts) {
    if (std::find(starts.begin(), starts.end(), p) == starts.end()) starts.push_back(p);
  }
  for (const Profile& p : starts) {
    r.from_states.emplace_back(p, from_state(graph, p, options.search_budget));
  }
  return r;
}

ClassificationReport classify_game(const Game& game, const ReplyPolicy& policy,
                                   const ClassifyOptions& options) {
  return classify_graph(build_graph(game, policy, options.node_limit, options.threads),
                        options);
}

std::string format_report(const Game& game, const ClassificationReport& r) {
  const GameForm& form = game.form;
  // Witness traces need the graph's outcomes; rebuilding is cheap next to
  // the classification itself.
  std::ostringstream os;
  os << "policy: " << to_string(r.policy) << '\n';
  os << "nodes: " << r.nodes << '\n';
  os << "edges: " << r.edges << '\n';
  os << "equilibria: " << r.ne_count << '\n';
  os << "has-ne: " << yes_no(r.has_ne) << '\n';
  os << "fip: " << yes_no(r.fip.fip) << '\n';
  std::optional<BetterReplyGraph> graph;
  auto need_graph = [&]() -> const BetterReplyGraph& {
    if (!graph) graph = build_graph(game, r.policy, std::max<std::uint64_t>(r.nodes, 1), 1);
    return *graph;
  };
  if (!r.fip.fip) write_walk(os, need_graph(), "fip-cycle", r.fip.cycle);
  os << "weak-fip: " << yes_no(r.weak.weak_fip) << '\n';
  if (r.weak.stuck) {
    os << "weak-fip-stuck: " << form.format_profile(form.decode(*r.weak.stuck)) << '\n';
  }
  os << "restricted-fip: " << yes_no(r.restricted.restricted_fip) << '\n';
  if (!r.restricted.restricted_fip) {
    if (!r.restricted.forced_cycle.empty()) {
      os << "restricted-certificate: forced cycle\n";
      write_walk(os, need_graph(), "restricted-cycle", r.restricted.forced_cycle);
    } else if (r.restricted.stuck) {
      os << "restricted-certificate: state without a reachable equilibrium "
         << form.format_profile(form.decode(*r.restricted.stuck)) << '\n';
    } else {
      os << "restricted-certificate: exhausted after " << r.restricted.search_nodes
         << " search nodes\n";
    }
  }
  os << "longest-path: "
     << (r.longest_path ? std::to_string(*r.longest_path) : std::string("n/a")) << '\n';
  for (const auto& [start, res] : r.from_states) {
    os << "from " << form.format_profile(start) << ": fip=" << yes_no(res.fip)
       << " weak-fip=" << yes_no(res.weak_fip)
       << " restricted-fip=" << yes_no(res.restricted_fip) << " longest-path="
       << (res.longest_path ? std::to_string(*res.longest_path) : std::string("n/a"))
       << '\n';
  }
  os << "hierarchy: " << (r.hierarchy_consistent() ? "consistent" : "VIOLATED") << '\n';
  return os.str();
}

FormReport classify_game_form(const GameForm& form, const ReplyPolicy& policy,
                              const FormScope& scope, const ClassifyOptions& options) {
  const int m = form.num_candidates();
  const int n = form.num_voters();
  const bool needs_utilities = policy.comparator == ComparatorMode::kExpectedUtility;
  const std::uint64_t k = needs_utilities ? std::max(1, scope.utility_samples) : 1;
  std::vector<PreferenceOrder> perms;
  std::uint64_t total = 0;
  if (scope.kind == FormScope::Kind::kExhaustive) {
    if (m > 8) fail(ErrorKind::kResourceLimit, "too many preference orders to enumerate");
    std::vector<CandidateId> ranking(m);
    for (int c = 0; c < m; ++c) ranking[c] = CandidateId{c};
    do {
      perms.emplace_back(ranking);
    } while (std::next_permutation(ranking.begin(), ranking.end()));
    total = k;
    for (int i = 0; i < n; ++i) {
      if (total > scope.game_limit / perms.size()) {
        fail(ErrorKind::kResourceLimit, "preference profiles exceed the game limit");
      }
      total *= perms.size();
    }
  } else {
    if (scope.samples > scope.game_limit / k) {
      fail(ErrorKind::kResourceLimit, "preference profiles exceed the game limit");
    }
    total = scope.samples * k;
  }
  if (total > scope.game_limit) {
    fail(ErrorKind::kResourceLimit, "preference profiles exceed the game limit");
  }

  auto game_of = [&](std::uint64_t index) {
    Game g;
    g.form = form;
    // Each preference profile is shared by its k utility samples.
    std::mt19937_64 rng(mix_seed(scope.seed, index));
    if (scope.kind == FormScope::Kind::kExhaustive) {
      std::uint64_t code = index / k;
      g.prefs.resize(n);
      for (int i = n - 1; i >= 0; --i) {
        g.prefs[i] = perms[code % perms.size()];
        code /= perms.size();
      }
    } else {
      std::mt19937_64 pref_rng(mix_seed(scope.seed + 1, index / k));
      for (int i = 0; i < n; ++i) g.prefs.push_back(random_preference(m, pref_rng));
    }
    if (needs_utilities) {
      std::vector<UtilityVector> us;
      for (int i = 0; i < n; ++i) us.push_back(random_consistent_utility(g.prefs[i], rng));
      g.utilities = std::move(us);
    }
    return g;
  };

  ClassifyOptions inner = options;
  inner.include_truthful = false;
  inner.threads = 1;
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  struct Partial {
    std::uint64_t ne = kNone, fip = kNone, weak = kNone, restricted = kNone;
    bool hierarchy = true;
  };
  const std::size_t chunks = internal::plan_chunks(total, options.threads, 64);
  std::vector<Partial> partial(chunks);
  internal::run_chunks(total, chunks, [&](std::size_t c, std::size_t b, std::size_t e) {
    Partial& p = partial[c];
    for (std::uint64_t i = b; i < e; ++i) {
      const ClassificationReport r = classify_game(game_of(i), policy, inner);
      if (!r.has_ne) p.ne = std::min(p.ne, i);
      if (!r.fip.fip) p.fip = std::min(p.fip, i);
      if (!r.weak.weak_fip) p.weak = std::min(p.weak, i);
      if (!r.restricted.restricted_fip) p.restricted = std::min(p.restricted, i);
      p.hierarchy = p.hierarchy && r.hierarchy_consistent();
    }
  });
  Partial all;
  for (const Partial& p : partial) {
    all.ne = std::min(all.ne, p.ne);
    all.fip = std::min(all.fip, p.fip);
    all.weak = std::min(all.weak, p.weak);
    all.restricted = std::min(all.restricted, p.restricted);
    all.hierarchy = all.hierarchy && p.hierarchy;
  }
  FormReport report;
  report.policy = policy;
  report.exhaustive = scope.kind == FormScope::Kind::kExhaustive;
  report.games = total;
  report.hierarchy_consistent = all.hierarchy;
  auto witness = [&](std::uint64_t index) -> std::optional<FormWitness> {
    if (index == kNone) return std::nullopt;
    Game g = game_of(index);
    ClassificationReport r = classify_game(g, policy, inner);
    return FormWitness{std::move(g), std::move(r)};
  };
  report.has_ne = all.ne == kNone;
  report.fip = all.fip == kNone;
  report.weak_fip = all.weak == kNone;
  report.restricted_fip = all.restricted == kNone;
  report.ne_witness = witness(all.ne);
  report.fip_witness = witness(all.fip);
  report.weak_witness = witness(all.weak);
  report.restricted_witness = witness(all.restricted);
  return report;
}

std::string format_form_report(const GameForm& form, const FormReport& r) {
  std::ostringstream os;
  auto verdict = [&](bool holds) {
    if (holds && !r.exhaustive) return std::string("no counterexample found");
    return yes_no(holds);
  };
  os << "policy: " << to_string(r.policy) << '\n';
  os << "scope: " << (r.exhaustive ? "exhaustive" : "sample") << '\n';
  os << "games: " << r.games << '\n';
  os << "has-ne: " << verdict(r.has_ne) << '\n';
  os << "fip: " << verdict(r.fip) << '\n';
  os << "weak-fip: " << verdict(r.weak_fip) << '\n';
  os << "restricted-fip: " << verdict(r.restricted_fip) << '\n';
  auto witness = [&](const char* key, const std::optional<FormWitness>& w) {
    if (!w) return;
    os << key << "-witness-prefs: " << format_prefs(w->game) << '\n';
    if (w->game.utilities) {
      os << key << "-witness-utilities:";
      for (const UtilityVector& u : *w->game.utilities) {
        os << " |";
        for (double x : u.values()) os << ' ' << x;
      }
      os << '\n';
    }
  };
  witness("has-ne", r.ne_witness);
  witness("fip", r.fip_witness);
  witness("weak-fip", r.weak_witness);
  witness("restricted-fip", r.restricted_witness);
  (void)form;
  os << "hierarchy: " << (r.hierarchy_consistent ? "consistent" : "VIOLATED") << '\n';
  return os.str();
}

ScanReport conjecture_scan(const ScanParams& params, std::uint64_t trials,
                           std::uint64_t seed) {
  if (params.max_m < 2 || params.max_n < 1 || params.weight_bound < 1 ||
      params.score_bound < 0) {
    fail(ErrorKind::kInvalidInput, "scan bounds out of range");
  }
  ScanReport report;
  report.trials = trials;
  const ReplyPolicy direct{ReplyKind::kDirect, ComparatorMode::kLexSingleton};
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::mt19937_64 rng(mix_seed(seed, t));
    RandomGameParams p;
    p.m = std::uniform_int_distribution<int>(2, params.max_m)(rng);
    p.n = std::uniform_int_distribution<int>(1, params.max_n)(rng);
    p.weight_bound = params.weight_bound;
    p.score_bound = params.score_bound;
    Game game = random_game(p, rng());
    const BetterReplyGraph g = build_graph(game, direct, kDefaultNodeLimit, 1);
    if (!is_weak_fip(g).weak_fip) {
      report.violations.push_back(std::move(game));
      continue;
    }
    ++report.confirmed;
    if (!is_fip(g).fip) ++report.cyclic;
  }
  return report;
}

}  // namespace itervote
