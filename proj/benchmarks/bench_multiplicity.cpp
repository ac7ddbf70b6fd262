// bench_multiplicity.cpp — scaling of the counting routes with the weight
// size. The polytope timings deliberately bypass the memoization caches so
// every iteration pays the full derivation-plus-count cost.
// SPDX-License-Identifier: MIT
#include <benchmark/benchmark.h>

#include "sunmult/bounds.hpp"
#include "sunmult/four_point.hpp"
#include "sunmult/n_point.hpp"
#include "sunmult/oracle.hpp"
#include "sunmult/three_point.hpp"
#include "sunmult/weights.hpp"

using namespace sunmult;

namespace {

void BM_three_point_count(benchmark::State& state) {
  const long long k = state.range(0);
  const Weight w{{k, k}};
  for (auto _ : state) {
    const long long count = count_points(three_point_bounds(w, w, w)).count;
    benchmark::DoNotOptimize(count);
  }
}

void BM_four_point_count(benchmark::State& state) {
  const long long k = state.range(0);
  const Weight w{{k, k}};
  for (auto _ : state) {
    const long long count = count_points(four_point_bounds(w, w, w, w)).count;
    benchmark::DoNotOptimize(count);
  }
}

void BM_four_point_closed_rank2(benchmark::State& state) {
  const long long k = state.range(0);
  const Weight w{{k, k}};
  for (auto _ : state) {
    const long long count = multiplicity4_su3(w, w, w, w);
    benchmark::DoNotOptimize(count);
  }
}

void BM_four_point_count_rank3(benchmark::State& state) {
  const long long k = state.range(0);
  const Weight w{{k, 0, k}};
  for (auto _ : state) {
    const long long count = count_points(four_point_bounds(w, w, w, w)).count;
    benchmark::DoNotOptimize(count);
  }
}

void BM_three_point_box(benchmark::State& state) {
  const long long k = state.range(0);
  const Weight w{{k, k}};
  for (auto _ : state) {
    const long long count = multiplicity3_box(w, w, w);
    benchmark::DoNotOptimize(count);
  }
}

// Warm-cache oracle lookups: the steady-state cost a caller sees after the
// first decomposition of each product.
void BM_oracle_singlets(benchmark::State& state) {
  const long long k = state.range(0);
  const Weight w{{k, k}};
  singlet_count({w, w, w, w});
  for (auto _ : state) {
    const long long count = singlet_count({w, w, w, w});
    benchmark::DoNotOptimize(count);
  }
}

void BM_five_point_fold(benchmark::State& state) {
  const long long k = state.range(0);
  const CouplingQuery q{1, std::vector<Weight>(5, Weight{{k}})};
  for (auto _ : state) {
    const long long count = multiplicity_n(q);
    benchmark::DoNotOptimize(count);
  }
}

}  // namespace

BENCHMARK(BM_three_point_count)->DenseRange(1, 6);
BENCHMARK(BM_four_point_count)->DenseRange(1, 6);
BENCHMARK(BM_four_point_closed_rank2)->DenseRange(1, 6);
BENCHMARK(BM_four_point_count_rank3)->DenseRange(1, 4);
BENCHMARK(BM_three_point_box)->DenseRange(1, 4);
BENCHMARK(BM_oracle_singlets)->DenseRange(1, 6);
BENCHMARK(BM_five_point_fold)->DenseRange(2, 8, 2);

BENCHMARK_MAIN();
