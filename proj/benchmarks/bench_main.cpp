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


#include <benchmark/benchmark.h>

#include "itervote/analysis.hpp"
#include "itervote/comparators.hpp"
#include "itervote/constructions.hpp"

namespace {

using namespace itervote;

constexpr ReplyPolicy kBetterLex{ReplyKind::kBetter, ComparatorMode::kLexSingleton};
constexpr ReplyPolicy kDirectLex{ReplyKind::kDirect, ComparatorMode::kLexSingleton};

void BM_BuildGraphGStar(benchmark::State& state) {
  const Game game = g_star_game();
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_graph(game, kBetterLex, 1'000'000, 1));
  }
}
BENCHMARK(BM_BuildGraphGStar);

void BM_ClassifyGStar(benchmark::State& state) {
  const Game game = g_star_game();
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify_game(game, kBetterLex));
  }
}
BENCHMARK(BM_ClassifyGStar);

void BM_ClassifyFStarForm(benchmark::State& state) {
  const GameForm form = f_star_form();
  FormScope scope;
  scope.kind = FormScope::Kind::kSample;
  scope.samples = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify_game_form(form, kBetterLex, scope));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ClassifyFStarForm)->Arg(16)->Arg(128);

void BM_AxiomClosure(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  std::vector<CandidateId> ranking;
  for (int c = 0; c < m; ++c) ranking.push_back(CandidateId{c});
  const PreferenceOrder q(ranking);
  for (auto _ : state) {
    benchmark::DoNotOptimize(axiom_closure(m, q, AxiomSet{true, true, true}));
  }
}
BENCHMARK(BM_AxiomClosure)->DenseRange(3, 6);

void BM_RandomDirectGame(benchmark::State& state) {
  RandomGameParams params;
  params.m = 4;
  params.n = static_cast<int>(state.range(0));
  params.weight_bound = 4;
  params.score_bound = 3;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify_game(random_game(params, seed++), kDirectLex));
  }
}
BENCHMARK(BM_RandomDirectGame)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
