// Copyright 2026 The Walras Authors
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

#include "walras/config_lp.h"
#include "walras/demand.h"
#include "walras/generators.h"
#include "walras/integral.h"
#include "walras/simplex.h"

namespace walras {
namespace {

// Random packing LP: rows x cols with 0/1 entries and rhs 1.
void BM_SimplexPacking(benchmark::State& state) {
  const int rows = static_cast<int>(state.range(0));
  const int cols = 4 * rows;
  for (auto _ : state) {
    lp::ExactSimplex simplex(std::vector<Rational>(static_cast<std::size_t>(rows), Rational(1)));
    std::uint64_t x = 88172645463325252ULL;
    for (int c = 0; c < cols; ++c) {
      lp::Column column;
      x ^= x << 13; x ^= x >> 7; x ^= x << 17;
      column.cost = Rational(static_cast<std::int64_t>(1 + x % 17), 3);
      for (int r = 0; r < rows; ++r) {
        if ((x >> (r % 48)) & 1U) column.entries.emplace_back(r, 1);
      }
      if (column.entries.empty()) column.entries.emplace_back(c % rows, 1);
      simplex.AddColumn(std::move(column));
    }
    benchmark::DoNotOptimize(simplex.Solve());
  }
}
BENCHMARK(BM_SimplexPacking)->Arg(8)->Arg(16)->Arg(24);

void BM_DemandEnumeration(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  RandomMarketParams params;
  params.seed = 7;
  params.n = 1;
  params.m = m;
  params.mix = RandomClass::kXos;
  const Market market = GenRandomMarket(params);
  PriceVector prices(m);
  for (int j = 0; j < m; ++j) prices.Set(j, Rational(j % 3 + 1, 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ComputeDemand(market.buyer(0), prices));
  }
}
BENCHMARK(BM_DemandEnumeration)->Arg(8)->Arg(12)->Arg(16);

void BM_IntegralOptimum(benchmark::State& state) {
  RandomMarketParams params;
  params.seed = 11;
  params.n = static_cast<int>(state.range(0));
  params.m = static_cast<int>(state.range(1));
  const Market market = GenRandomMarket(params);
  for (auto _ : state) {
    benchmark::DoNotOptimize(IntegralOpt(market, market.all_items()));
  }
}
BENCHMARK(BM_IntegralOptimum)->Args({2, 8})->Args({3, 8})->Args({3, 10});

void BM_FractionalOptimum(benchmark::State& state) {
  RandomMarketParams params;
  params.seed = 13;
  params.n = 3;
  params.m = static_cast<int>(state.range(0));
  const Market market = GenRandomMarket(params);
  for (auto _ : state) {
    benchmark::DoNotOptimize(SolveFractional(market, market.all_items()));
  }
}
BENCHMARK(BM_FractionalOptimum)->Arg(6)->Arg(8)->Arg(10);

}  // namespace
}  // namespace walras

BENCHMARK_MAIN();
