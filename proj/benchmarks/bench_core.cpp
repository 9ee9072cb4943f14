// Copyright 2026 The combforge developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "combforge/haar_moment.hpp"
#include "combforge/stair.hpp"

using namespace combforge;

static void BM_EnumerateTableaux(benchmark::State& state) {
  const YoungDiagram shape({4, 3, 2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_tableaux(shape));
}
BENCHMARK(BM_EnumerateTableaux);

static void BM_KerovRatios(benchmark::State& state) {
  const auto parts = enumerate_partitions(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const YoungDiagram& mu : parts) {
      const auto seq = interlacing(mu);
      for (int k = 0; k < static_cast<int>(seq.alphas.size()); ++k)
        benchmark::DoNotOptimize(add_box_ratio(mu, k));
    }
}
BENCHMARK(BM_KerovRatios)->Arg(8)->Arg(12);

static void BM_IrrepMatrix(benchmark::State& state) {
  const YoungDiagram lambda({3, 2, 1});
  const auto group = symmetric_group(6);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(irrep_matrix(lambda, group[i % group.size()]));
    i += 37;
  }
}
BENCHMARK(BM_IrrepMatrix);

static void BM_SchurBasis(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(SchurBasis(d, n));
}
BENCHMARK(BM_SchurBasis)->Args({2, 4})->Args({3, 3});

static void BM_HaarMomentRep(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const SchurBasis basis(d, n + 1);
  for (auto _ : state) benchmark::DoNotOptimize(haar_moment_rep(d, n, basis));
}
BENCHMARK(BM_HaarMomentRep)->Args({2, 2})->Args({3, 1});

static void BM_LinkProduct(benchmark::State& state) {
  const int d = 2, n = 2;
  const Comb r = random_comb(d, n + 1, 2, 1);
  const LabeledOperator moment = haar_moment_rep(d, n);
  for (auto _ : state) benchmark::DoNotOptimize(link_product(r.op, moment));
}
BENCHMARK(BM_LinkProduct);

static void BM_StairEmbed(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  const SchurBasis large(d, k + 1);
  const SchurBasis small(d, k);
  for (auto _ : state) benchmark::DoNotOptimize(stair_embed(d, k, k, large, small));
}
BENCHMARK(BM_StairEmbed)->Args({2, 2})->Args({3, 2});

static void BM_Lemma38(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(check_lemma38(d, n));
}
BENCHMARK(BM_Lemma38)->Args({2, 1})->Args({2, 2});

static void BM_HaarMomentMc(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(haar_moment_mc(2, 2, static_cast<std::uint64_t>(state.range(0)), 1));
}
BENCHMARK(BM_HaarMomentMc)->Arg(1000)->Arg(10000);
