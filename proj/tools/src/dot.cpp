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

#include "itervote_cli/dot.hpp"

#include <algorithm>
#include <sstream>

namespace itervote::cli {
namespace {

// Iterative Tarjan; returns the component id of every node.
std::vector<std::uint64_t> components(const BetterReplyGraph& g) {
  const std::uint64_t n = g.num_nodes();
  constexpr std::uint64_t kUnset = ~std::uint64_t{0};
  std::vector<std::uint64_t> index(n, kUnset), low(n, 0), comp(n, kUnset);
  std::vector<bool> on_stack(n, false);
  std::vector<std::uint64_t> stack;
  std::vector<std::pair<std::uint64_t, std::size_t>> calls;
  std::uint64_t counter = 0;
  std::uint64_t comp_count = 0;
  for (std::uint64_t root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    calls.emplace_back(root, 0);
    while (!calls.empty()) {
      auto [u, i] = calls.back();
      if (i == 0) {
        index[u] = low[u] = counter++;
        stack.push_back(u);
        on_stack[u] = true;
      }
      auto out = g.out_edges(u);
      if (i < out.size()) {
        calls.back().second = i + 1;
        const std::uint64_t v = out[i].to;
        if (index[v] == kUnset) {
          calls.emplace_back(v, 0);
        } else if (on_stack[v]) {
          low[u] = std::min(low[u], index[v]);
        }
        continue;
      }
      calls.pop_back();
      if (!calls.empty()) {
        const std::uint64_t parent = calls.back().first;
        low[parent] = std::min(low[parent], low[u]);
      }
      if (low[u] == index[u]) {
        while (true) {
          const std::uint64_t w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = comp_count;
          if (w == u) break;
        }
        ++comp_count;
      }
    }
  }
  return comp;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string export_dot(const BetterReplyGraph& graph, bool highlight_cycles) {
  const GameForm& form = graph.game().form;
  std::vector<std::uint64_t> comp;
  if (highlight_cycles) comp = components(graph);
  std::ostringstream os;
  os << "digraph improvement {\n";
  os << "  node [shape=box];\n";
  for (std::uint64_t u = 0; u < graph.num_nodes(); ++u) {
    const Profile p = graph.profile(u);
    std::string label;
    for (int i = 0; i < form.num_voters(); ++i) {
      if (i) label += ' ';
      label += form.action_label(i, p[i]);
    }
    label += " | " + form.format_outcome(graph.outcome(u));
    os << "  n" << u << " [label=\"" << escape(label) << '"';
    if (graph.is_sink(u)) os << ", peripheries=2";
    os << "];\n";
  }
  for (const GraphEdge& e : graph.edges()) {
    os << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.voter + 1 << ':'
       << escape(form.action_label(e.voter, e.action)) << '"';
    if (highlight_cycles && comp[e.from] == comp[e.to]) os << ", style=bold";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace itervote::cli
