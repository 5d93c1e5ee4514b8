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

// Shared fixtures and hand-rolled generators for the test suites.
#ifndef ITERVOTE_TESTS_SUPPORT_HPP_
#define ITERVOTE_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "itervote/game_form.hpp"
#include "itervote/types.hpp"

namespace itervote::testing {

// "cab" -> c > a > b, with candidate i named by letter 'a' + i.
inline PreferenceOrder order(const std::string& letters) {
  std::vector<CandidateId> r;
  for (char ch : letters) r.push_back(CandidateId{ch - 'a'});
  return PreferenceOrder(std::move(r));
}

inline CandidateSet set(const std::string& letters) {
  CandidateSet s;
  for (char ch : letters) s.insert(CandidateId{ch - 'a'});
  return s;
}

inline GameForm plurality(std::vector<long long> scores, std::vector<int> weights,
                          TieBreak tb = TieBreak::kLexicographic) {
  PluralitySpec spec;
  spec.num_candidates = static_cast<int>(scores.size());
  spec.initial_scores = std::move(scores);
  spec.weights = std::move(weights);
  spec.tiebreak = tb;
  spec.action_sets.assign(spec.weights.size(), {});
  return GameForm::plurality(std::move(spec));
}

inline Game game(GameForm form, const std::vector<std::string>& prefs) {
  Game g;
  g.form = std::move(form);
  for (const std::string& p : prefs) g.prefs.push_back(order(p));
  g.validate();
  return g;
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  PreferenceOrder permutation(int m) {
    std::vector<CandidateId> r(m);
    for (int c = 0; c < m; ++c) r[c] = CandidateId{c};
    std::shuffle(r.begin(), r.end(), rng_);
    return PreferenceOrder(std::move(r));
  }

  // Distinct values laid out along q, top highest.
  UtilityVector utility(const PreferenceOrder& q) {
    const int m = q.size();
    std::vector<double> pool(m);
    double v = 0;
    for (int k = 0; k < m; ++k) {
      v += 1 + uniform(0, 9);
      pool[k] = v;
    }
    std::vector<double> u(m);
    for (int k = 0; k < m; ++k) u[q.ranking()[k].index] = pool[m - 1 - k];
    return UtilityVector(std::move(u));
  }

  CandidateSet nonempty_subset(int m) {
    std::uint64_t bits = 0;
    while (bits == 0) bits = std::uniform_int_distribution<std::uint64_t>(1, (1ULL << m) - 1)(rng_);
    return CandidateSet::from_bits(bits);
  }

  Game plurality_game(int m, int n, int max_weight, int max_score, TieBreak tb) {
    std::vector<long long> scores(m);
    for (auto& s : scores) s = uniform(0, max_score);
    std::vector<int> weights(n);
    for (auto& w : weights) w = uniform(1, max_weight);
    Game g;
    g.form = plurality(scores, weights, tb);
    for (int i = 0; i < n; ++i) g.prefs.push_back(permutation(m));
    if (tb == TieBreak::kRandomized) {
      std::vector<UtilityVector> us;
      for (const auto& q : g.prefs) us.push_back(utility(q));
      g.utilities = std::move(us);
    }
    return g;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Every permutation of 0..m-1 in lexicographic order.
inline std::vector<PreferenceOrder> all_orders(int m) {
  std::vector<int> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<PreferenceOrder> out;
  do {
    std::vector<CandidateId> r;
    for (int i : idx) r.push_back(CandidateId{i});
    out.emplace_back(std::move(r));
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

}  // namespace itervote::testing

#endif  // ITERVOTE_TESTS_SUPPORT_HPP_
