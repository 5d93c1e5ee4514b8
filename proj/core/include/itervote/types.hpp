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

#ifndef ITERVOTE_TYPES_HPP_
#define ITERVOTE_TYPES_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace itervote {

inline constexpr int kMaxCandidates = 64;

// Index order doubles as lexicographic tie-break priority: candidate 0 wins
// every tie it takes part in.
struct CandidateId {
  int index = 0;

  friend constexpr auto operator<=>(CandidateId, CandidateId) = default;
};

// Set of candidates backed by a 64-bit mask.
class CandidateSet {
 public:
  constexpr CandidateSet() = default;
  static constexpr CandidateSet from_bits(std::uint64_t bits) {
    CandidateSet s;
    s.bits_ = bits;
    return s;
  }
  static constexpr CandidateSet single(CandidateId c) {
    return from_bits(std::uint64_t{1} << c.index);
  }
  static CandidateSet of(std::initializer_list<int> indices) {
    CandidateSet s;
    for (int i : indices) s.insert(CandidateId{i});
    return s;
  }
  static constexpr CandidateSet all(int m) {
    return from_bits(m >= 64 ? ~std::uint64_t{0}
                             : (std::uint64_t{1} << m) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(CandidateId c) const {
    return (bits_ >> c.index) & 1U;
  }
  constexpr void insert(CandidateId c) { bits_ |= std::uint64_t{1} << c.index; }
  constexpr void erase(CandidateId c) { bits_ &= ~(std::uint64_t{1} << c.index); }
  // Lowest-index member; the set must be non-empty.
  constexpr CandidateId first() const { return {std::countr_zero(bits_)}; }

  std::vector<CandidateId> members() const;

  friend constexpr CandidateSet operator&(CandidateSet a, CandidateSet b) {
    return from_bits(a.bits_ & b.bits_);
  }
  friend constexpr CandidateSet operator|(CandidateSet a, CandidateSet b) {
    return from_bits(a.bits_ | b.bits_);
  }
  friend constexpr CandidateSet operator-(CandidateSet a, CandidateSet b) {
    return from_bits(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(CandidateSet, CandidateSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

// Winner set produced by a game form. Lexicographic rules always produce a
// singleton; randomized rules produce the whole argmax.
using Outcome = CandidateSet;

// Strict ranking, most preferred first.
class PreferenceOrder {
 public:
  PreferenceOrder() = default;
  explicit PreferenceOrder(std::vector<CandidateId> ranking);
  static PreferenceOrder from_indices(std::initializer_list<int> ranking);

  int size() const { return static_cast<int>(ranking_.size()); }
  const std::vector<CandidateId>& ranking() const { return ranking_; }
  // 0 is the top choice.
  int rank(CandidateId c) const { return rank_[c.index]; }
  bool prefers(CandidateId a, CandidateId b) const {
    return rank_[a.index] < rank_[b.index];
  }
  CandidateId top() const { return ranking_.front(); }
  PreferenceOrder reversed() const;

  friend bool operator==(const PreferenceOrder& a, const PreferenceOrder& b) {
    return a.ranking_ == b.ranking_;
  }

 private:
  std::vector<CandidateId> ranking_;
  std::vector<int> rank_;
};

class UtilityVector {
 public:
  UtilityVector() = default;
  explicit UtilityVector(std::vector<double> values)
      : values_(std::move(values)) {}

  int size() const { return static_cast<int>(values_.size()); }
  double operator[](CandidateId c) const { return values_[c.index]; }
  const std::vector<double>& values() const { return values_; }
  // Pairwise distinct values, strictly decreasing along the ranking.
  bool consistent_with(const PreferenceOrder& order) const;

  friend bool operator==(const UtilityVector&, const UtilityVector&) = default;

 private:
  std::vector<double> values_;
};

// One action index per voter; indices point into the voter's action set.
using Profile = std::vector<int>;

using ScoreVector = std::vector<long long>;

// "a", "b", ..., "z", "c26", ...
std::string default_candidate_name(int index);

}  // namespace itervote

#endif  // ITERVOTE_TYPES_HPP_
