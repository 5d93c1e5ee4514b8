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

#include "itervote/comparators.hpp"

#include <algorithm>

#include "itervote/error.hpp"

namespace itervote {
namespace {

// Rank 0 is the top choice, so "best" is the minimum rank.
int best_rank(CandidateSet s, const PreferenceOrder& q) {
  int r = kMaxCandidates;
  for (CandidateId c : s.members()) r = std::min(r, q.rank(c));
  return r;
}

int worst_rank(CandidateSet s, const PreferenceOrder& q) {
  int r = -1;
  for (CandidateId c : s.members()) r = std::max(r, q.rank(c));
  return r;
}

// Least preferred first.
std::vector<CandidateId> increasing(CandidateSet s, const PreferenceOrder& q) {
  std::vector<CandidateId> v = s.members();
  std::sort(v.begin(), v.end(), [&](CandidateId a, CandidateId b) {
    return q.rank(a) > q.rank(b);
  });
  return v;
}

void require_non_empty(CandidateSet x, CandidateSet y) {
  if (x.empty() || y.empty()) {
    fail(ErrorKind::kInvalidInput, "comparison of an empty winner set");
  }
}

bool ld_better(CandidateSet x, CandidateSet y, const PreferenceOrder& q) {
  const CandidateSet z = x & y;
  const CandidateSet xp = x - z;
  const CandidateSet yp = y - z;
  if (!yp.empty() && !(worst_rank(x, q) < best_rank(yp, q))) return false;
  if (!xp.empty() && !(worst_rank(xp, q) < best_rank(y, q))) return false;
  return true;
}

// Index of the first member of y that beats its matched x, or -1.
int match_violation(const std::vector<CandidateId>& xs,
                    const std::vector<CandidateId>& ys, const PreferenceOrder& q,
                    bool* strict) {
  const int k = static_cast<int>(xs.size());
  const int big_k = static_cast<int>(ys.size());
  int lo = 0;
  for (int j = 1; j <= k; ++j) {
    const int hi = (j * big_k + k - 1) / k;
    for (int t = lo; t < hi; ++t) {
      if (q.prefers(ys[t], xs[j - 1])) return t;
      if (q.prefers(xs[j - 1], ys[t])) *strict = true;
    }
    lo = hi;
  }
  return -1;
}

}  // namespace

Verdict flip(Verdict v) {
  switch (v) {
    case Verdict::kBetter: return Verdict::kWorse;
    case Verdict::kWorse: return Verdict::kBetter;
    default: return v;
  }
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kBetter: return "better";
    case Verdict::kEqual: return "equal";
    case Verdict::kWorse: return "worse";
    case Verdict::kIncomparable: return "incomparable";
  }
  return "?";
}

std::string_view to_string(ComparatorMode mode) {
  switch (mode) {
    case ComparatorMode::kLexSingleton: return "lex";
    case ComparatorMode::kExpectedUtility: return "eu";
    case ComparatorMode::kStochasticDominance: return "sd";
    case ComparatorMode::kLocalDominance: return "ld";
    case ComparatorMode::kKOnly: return "k";
  }
  return "?";
}

double expected_utility(const UtilityVector& u, CandidateSet w) {
  if (w.empty()) fail(ErrorKind::kInvalidInput, "expected utility of an empty set");
  double sum = 0;
  for (CandidateId c : w.members()) sum += u[c];
  return sum / w.size();
}

Verdict eu_compare(const UtilityVector& u, CandidateSet x, CandidateSet y) {
  require_non_empty(x, y);
  double sx = 0;
  double sy = 0;
  for (CandidateId c : x.members()) sx += u[c];
  for (CandidateId c : y.members()) sy += u[c];
  const double lhs = sx * y.size();
  const double rhs = sy * x.size();
  if (lhs > rhs) return Verdict::kBetter;
  if (lhs < rhs) return Verdict::kWorse;
  return Verdict::kEqual;
}

Verdict lex_compare(CandidateSet x, CandidateSet y, const PreferenceOrder& q) {
  if (x.size() != 1 || y.size() != 1) {
    fail(ErrorKind::kInvalidConfiguration,
         "singleton comparator applied to a multi-winner outcome");
  }
  if (x == y) return Verdict::kEqual;
  return q.prefers(x.first(), y.first()) ? Verdict::kBetter : Verdict::kWorse;
}

bool match_dominates(CandidateSet x, CandidateSet y, const PreferenceOrder& q) {
  require_non_empty(x, y);
  if (x.size() > y.size()) return match_dominates(y, x, q.reversed());
  bool strict = false;
  if (match_violation(increasing(x, q), increasing(y, q), q, &strict) >= 0) {
    return false;
  }
  return strict || y.size() % x.size() != 0;
}

Verdict sd_dominates(CandidateSet x, CandidateSet y, const PreferenceOrder& q) {
  require_non_empty(x, y);
  if (x == y) return Verdict::kEqual;
  const long long nx = x.size();
  const long long ny = y.size();
  long long cx = 0;
  long long cy = 0;
  bool x_geq = true;
  bool y_geq = true;
  for (CandidateId c : q.ranking()) {
    cx += x.contains(c);
    cy += y.contains(c);
    const long long lhs = cx * ny;
    const long long rhs = cy * nx;
    if (lhs < rhs) x_geq = false;
    if (lhs > rhs) y_geq = false;
  }
  if (x_geq) return Verdict::kBetter;
  if (y_geq) return Verdict::kWorse;
  return Verdict::kIncomparable;
}

Verdict ld_dominates(CandidateSet x, CandidateSet y, const PreferenceOrder& q) {
  require_non_empty(x, y);
  if (x == y) return Verdict::kEqual;
  if (ld_better(x, y, q)) return Verdict::kBetter;
  if (ld_better(y, x, q)) return Verdict::kWorse;
  return Verdict::kIncomparable;
}

Verdict k_only_compare(CandidateSet x, CandidateSet y, const PreferenceOrder& q) {
  require_non_empty(x, y);
  if (x == y) return Verdict::kEqual;
  if (worst_rank(x, q) < best_rank(y, q)) return Verdict::kBetter;
  if (worst_rank(y, q) < best_rank(x, q)) return Verdict::kWorse;
  return Verdict::kIncomparable;
}

Verdict compare(ComparatorMode mode, CandidateSet x, CandidateSet y,
                const PreferenceOrder& q, const UtilityVector* u) {
  switch (mode) {
    case ComparatorMode::kLexSingleton: return lex_compare(x, y, q);
    case ComparatorMode::kExpectedUtility:
      if (u == nullptr) {
        fail(ErrorKind::kInvalidConfiguration,
             "expected-utility comparison needs cardinal utilities");
      }
      return eu_compare(*u, x, y);
    case ComparatorMode::kStochasticDominance: return sd_dominates(x, y, q);
    case ComparatorMode::kLocalDominance: return ld_dominates(x, y, q);
    case ComparatorMode::kKOnly: return k_only_compare(x, y, q);
  }
  return Verdict::kIncomparable;
}

std::optional<std::vector<double>> adversarial_utility(CandidateSet x,
                                                       CandidateSet y,
                                                       const PreferenceOrder& q) {
  if (match_dominates(x, y, q)) return std::nullopt;
  const int m = q.size();
  if (x.size() > y.size()) {
    auto reversed = adversarial_utility(y, x, q.reversed());
    std::vector<double> u(m);
    for (int c = 0; c < m; ++c) u[c] = 1.0 - (*reversed)[c];
    return u;
  }
  bool strict = false;
  const std::vector<CandidateId> ys = increasing(y, q);
  const int t = match_violation(increasing(x, q), ys, q, &strict);
  // No violation means X = Y; every utility ties them.
  std::vector<double> u(m, 1.0);
  if (t >= 0) {
    const int threshold = q.rank(ys[t]);
    for (int c = 0; c < m; ++c) {
      u[c] = q.rank(CandidateId{c}) <= threshold ? 1.0 : 0.0;
    }
  }
  return u;
}

bool single_vote_adjacent(CandidateSet x, CandidateSet y) {
  if (x.size() == 1 || y.size() == 1) return true;
  const int added = (x - y).size();
  const int removed = (y - x).size();
  return added + removed == 1 || (added == 1 && removed == 1);
}

void for_each_axiom_instance(
    const PreferenceOrder& q, AxiomSet axioms,
    const std::function<void(CandidateSet, CandidateSet)>& emit) {
  const int m = q.size();
  if (m > kMaxClosureCandidates) {
    fail(ErrorKind::kResourceLimit, "axiom enumeration limited to 6 candidates");
  }
  const std::uint64_t full = (std::uint64_t{1} << m) - 1;
  std::vector<int> best(full + 1, kMaxCandidates);
  std::vector<int> worst(full + 1, -1);
  for (std::uint64_t s = 1; s <= full; ++s) {
    best[s] = best_rank(CandidateSet::from_bits(s), q);
    worst[s] = worst_rank(CandidateSet::from_bits(s), q);
  }
  if (axioms.k) {
    for (std::uint64_t a = 1; a <= full; ++a) {
      for (std::uint64_t b = 1; b <= full; ++b) {
        if (worst[a] < best[b]) {
          emit(CandidateSet::from_bits(a), CandidateSet::from_bits(b));
        }
      }
    }
  }
  for (int a = 0; a < m; ++a) {
    const std::uint64_t abit = std::uint64_t{1} << a;
    const int ra = q.rank(CandidateId{a});
    if (axioms.g) {
      // Adding a candidate above every member improves a set; adding one
      // below every member worsens it. The singleton chain
      // {a} > {a} u W > W follows from these by transitivity.
      for (std::uint64_t w = 1; w <= full; ++w) {
        if (w & abit) continue;
        if (ra < best[w]) {
          emit(CandidateSet::from_bits(abit | w), CandidateSet::from_bits(w));
        } else if (ra > worst[w]) {
          emit(CandidateSet::from_bits(w), CandidateSet::from_bits(abit | w));
        }
      }
    }
    if (axioms.r) {
      for (int b = 0; b < m; ++b) {
        if (b == a || !(ra < q.rank(CandidateId{b}))) continue;
        const std::uint64_t bbit = std::uint64_t{1} << b;
        // Subsets of the remaining candidates, the empty set included.
        const std::uint64_t rest = full & ~abit & ~bbit;
        for (std::uint64_t w = rest;; w = (w - 1) & rest) {
          emit(CandidateSet::from_bits(abit | w), CandidateSet::from_bits(bbit | w));
          if (w == 0) break;
        }
      }
    }
  }
}

SubsetRelation::SubsetRelation(int m) : m_(m) {
  if (m < 1 || m > kMaxClosureCandidates) {
    fail(ErrorKind::kResourceLimit, "subset relations limited to 6 candidates");
  }
  rows_.assign((std::size_t{1} << m) - 1, 0);
}

void SubsetRelation::close_transitively() {
  const std::size_t n = rows_.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if ((rows_[i] >> k) & 1U) rows_[i] |= rows_[k];
    }
  }
}

std::size_t SubsetRelation::pair_count() const {
  std::size_t total = 0;
  for (std::uint64_t r : rows_) total += std::popcount(r);
  return total;
}

SubsetRelation axiom_closure(int m, const PreferenceOrder& q, AxiomSet axioms) {
  if (m > kMaxClosureCandidates) {
    fail(ErrorKind::kResourceLimit, "axiom closure limited to 6 candidates");
  }
  if (q.size() != m) fail(ErrorKind::kInvalidInput, "order size differs from m");
  SubsetRelation rel(m);
  for_each_axiom_instance(q, axioms, [&](CandidateSet x, CandidateSet y) {
    rel.add(x, y);
  });
  rel.close_transitively();
  return rel;
}

}  // namespace itervote
