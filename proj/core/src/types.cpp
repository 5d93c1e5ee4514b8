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

#include "itervote/error.hpp"
#include "itervote/types.hpp"

#include <algorithm>

namespace itervote {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInput: return "invalid-input";
    case ErrorKind::kInvalidConfiguration: return "invalid-configuration";
    case ErrorKind::kInvalidSchedule: return "invalid-schedule";
    case ErrorKind::kResourceLimit: return "resource-limit";
    case ErrorKind::kNotApplicable: return "not-applicable";
    case ErrorKind::kUnsupported: return "unsupported";
    case ErrorKind::kParse: return "parse-error";
  }
  return "unknown";
}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

std::vector<CandidateId> CandidateSet::members() const {
  std::vector<CandidateId> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(CandidateId{std::countr_zero(b)});
  }
  return out;
}

PreferenceOrder::PreferenceOrder(std::vector<CandidateId> ranking)
    : ranking_(std::move(ranking)) {
  const int m = static_cast<int>(ranking_.size());
  if (m > kMaxCandidates) fail(ErrorKind::kInvalidInput, "too many candidates");
  rank_.assign(m, -1);
  for (int r = 0; r < m; ++r) {
    const int c = ranking_[r].index;
    if (c < 0 || c >= m || rank_[c] != -1) {
      fail(ErrorKind::kInvalidInput, "preference order is not a permutation");
    }
    rank_[c] = r;
  }
}

PreferenceOrder PreferenceOrder::from_indices(std::initializer_list<int> ranking) {
  std::vector<CandidateId> r;
  for (int c : ranking) r.push_back(CandidateId{c});
  return PreferenceOrder(std::move(r));
}

PreferenceOrder PreferenceOrder::reversed() const {
  std::vector<CandidateId> r(ranking_.rbegin(), ranking_.rend());
  return PreferenceOrder(std::move(r));
}

bool UtilityVector::consistent_with(const PreferenceOrder& order) const {
  if (size() != order.size()) return false;
  const auto& r = order.ranking();
  for (std::size_t i = 1; i < r.size(); ++i) {
    if (!(values_[r[i - 1].index] > values_[r[i].index])) return false;
  }
  return true;
}

std::string default_candidate_name(int index) {
  if (index < 26) return std::string(1, static_cast<char>('a' + index));
  return "c" + std::to_string(index);
}

}  // namespace itervote
