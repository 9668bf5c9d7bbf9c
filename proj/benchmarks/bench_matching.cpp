// Copyright 2026 The callmatch Authors
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

#include "callmatch/core.hpp"
#include "callmatch/mechanisms.hpp"
#include "callmatch/oracle.hpp"

namespace {

using namespace callmatch;

Instance make_market(Count per_side, std::uint64_t seed) {
  oracle::Lcg64 rng(seed);
  const Price max_price = static_cast<Price>(4 * per_side + 16);
  Instance inst;
  inst.bids.reserve(per_side);
  inst.asks.reserve(per_side);
  for (Count i = 0; i < per_side; ++i) {
    inst.bids.push_back(Bid{rng.next_in(max_price), i + 1});
    inst.asks.push_back(Ask{rng.next_in(max_price), i + 1});
  }
  return inst;
}

void BM_sort_books(benchmark::State& state) {
  const auto n = static_cast<Count>(state.range(0));
  const Instance inst = make_market(n, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sort_bids_desc(inst.bids));
    benchmark::DoNotOptimize(sort_asks_asc(inst.asks));
  }
  state.SetComplexityN(static_cast<benchmark::IterationCount>(n));
}
BENCHMARK(BM_sort_books)->Range(16, 1 << 14)->Complexity(benchmark::oNLogN);

void BM_produce_mm(benchmark::State& state) {
  const auto n = static_cast<Count>(state.range(0));
  const Instance inst = make_market(n, 12);
  const auto bids = sort_bids_desc(inst.bids);
  const auto asks = sort_asks_desc(inst.asks);
  for (auto _ : state) {
    benchmark::DoNotOptimize(produce_mm(bids, asks, false));
  }
  state.SetComplexityN(static_cast<benchmark::IterationCount>(n));
}
BENCHMARK(BM_produce_mm)->Range(16, 1 << 14)->Complexity(benchmark::oN);

void BM_produce_um(benchmark::State& state) {
  const auto n = static_cast<Count>(state.range(0));
  const Instance inst = make_market(n, 13);
  const auto bids = sort_bids_desc(inst.bids);
  const auto asks = sort_asks_asc(inst.asks);
  for (auto _ : state) {
    benchmark::DoNotOptimize(produce_um(bids, asks, false));
  }
  state.SetComplexityN(static_cast<benchmark::IterationCount>(n));
}
BENCHMARK(BM_produce_um)->Range(16, 1 << 14)->Complexity(benchmark::oN);

void BM_fair_mm(benchmark::State& state) {
  const auto n = static_cast<Count>(state.range(0));
  const Instance inst = make_market(n, 14);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fair_mm(inst.bids, inst.asks));
  }
  state.SetComplexityN(static_cast<benchmark::IterationCount>(n));
}
BENCHMARK(BM_fair_mm)->Range(16, 1 << 14)->Complexity(benchmark::oNLogN);

void BM_fairize(benchmark::State& state) {
  const auto n = static_cast<Count>(state.range(0));
  const Instance inst = make_market(n, 15);
  const Matching mm =
      produce_mm(sort_bids_desc(inst.bids), sort_asks_desc(inst.asks), false);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fairize(mm, inst.bids, inst.asks));
  }
  state.SetComplexityN(static_cast<benchmark::IterationCount>(n));
}
BENCHMARK(BM_fairize)->Range(16, 1 << 12);

// The reference maximum is quadratic-ish; it only ever runs at desk scale.
void BM_oracle_max_matching(benchmark::State& state) {
  const auto n = static_cast<Count>(state.range(0));
  const Instance inst = make_market(n, 16);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::max_matching_size(inst.bids, inst.asks));
  }
  state.SetComplexityN(static_cast<benchmark::IterationCount>(n));
}
BENCHMARK(BM_oracle_max_matching)->Range(16, 1 << 9);

void BM_oracle_max_uniform(benchmark::State& state) {
  const auto n = static_cast<Count>(state.range(0));
  const Instance inst = make_market(n, 17);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::max_uniform_size(inst.bids, inst.asks));
  }
  state.SetComplexityN(static_cast<benchmark::IterationCount>(n));
}
BENCHMARK(BM_oracle_max_uniform)->Range(16, 1 << 12);

}  // namespace

BENCHMARK_MAIN();
