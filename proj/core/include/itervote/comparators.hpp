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

#ifndef ITERVOTE_COMPARATORS_HPP_
#define ITERVOTE_COMPARATORS_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "itervote/types.hpp"

namespace itervote {

enum class Verdict { kBetter, kEqual, kWorse, kIncomparable };

// Swaps kBetter and kWorse.
Verdict flip(Verdict v);
std::string_view to_string(Verdict v);

enum class ComparatorMode {
  kLexSingleton,
  kExpectedUtility,
  kStochasticDominance,
  kLocalDominance,
  kKOnly,
};

std::string_view to_string(ComparatorMode mode);

double expected_utility(const UtilityVector& u, CandidateSet w);

// Exact comparison of the means of u over X and Y.
Verdict eu_compare(const UtilityVector& u, CandidateSet x, CandidateSet y);

// Both sets must be singletons.
Verdict lex_compare(CandidateSet x, CandidateSet y, const PreferenceOrder& q);

// Block-partition criterion on sets sorted by increasing preference.
bool match_dominates(CandidateSet x, CandidateSet y, const PreferenceOrder& q);

// First-order dominance of the uniform lottery over X against the one over Y.
Verdict sd_dominates(CandidateSet x, CandidateSet y, const PreferenceOrder& q);

// X is better when its realized winner is weakly preferred under every
// tie-breaking order and strictly under some.
Verdict ld_dominates(CandidateSet x, CandidateSet y, const PreferenceOrder& q);

// Every member of X beats every member of Y.
Verdict k_only_compare(CandidateSet x, CandidateSet y, const PreferenceOrder& q);

// `u` is required for kExpectedUtility and ignored otherwise.
Verdict compare(ComparatorMode mode, CandidateSet x, CandidateSet y,
                const PreferenceOrder& q, const UtilityVector* u);

// 0/1 utility, weakly consistent with q, under which Y is at least as good
// as X. Empty when X match-dominates Y.
std::optional<std::vector<double>> adversarial_utility(CandidateSet x,
                                                       CandidateSet y,
                                                       const PreferenceOrder& q);

// Outcome pairs that two profiles differing in one vote can produce: one
// candidate added, removed or swapped, or one side a singleton.
bool single_vote_adjacent(CandidateSet x, CandidateSet y);

struct AxiomSet {
  bool k = false;
  bool g = false;
  bool r = false;
};

inline constexpr int kMaxClosureCandidates = 6;

// Calls `emit(X, Y)` for every instance X > Y of the selected axioms.
void for_each_axiom_instance(
    const PreferenceOrder& q, AxiomSet axioms,
    const std::function<void(CandidateSet, CandidateSet)>& emit);

// Strict relation over the non-empty subsets of m candidates.
class SubsetRelation {
 public:
  explicit SubsetRelation(int m);

  int num_candidates() const { return m_; }
  bool holds(CandidateSet x, CandidateSet y) const {
    return (rows_[x.bits() - 1] >> (y.bits() - 1)) & 1U;
  }
  void add(CandidateSet x, CandidateSet y) {
    rows_[x.bits() - 1] |= std::uint64_t{1} << (y.bits() - 1);
  }
  void close_transitively();
  std::size_t pair_count() const;

 private:
  int m_;
  std::vector<std::uint64_t> rows_;
};

// Least transitive relation containing every selected axiom instance.
SubsetRelation axiom_closure(int m, const PreferenceOrder& q, AxiomSet axioms);

}  // namespace itervote

#endif  // ITERVOTE_COMPARATORS_HPP_
