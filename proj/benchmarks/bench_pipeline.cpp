#include <benchmark/benchmark.h>

#include "pointlike/catalog.hpp"
#include "pointlike/verify.hpp"

namespace {

using namespace pointlike;

Semigroup t2() {
  return Semigroup::from_rows({{0, 1, 2, 3}, {1, 0, 2, 3}, {2, 3, 2, 3}, {3, 2, 2, 3}});
}

Semigroup b2() {
  return Semigroup::from_rows({{0, 1, 4, 4, 4},
                               {4, 4, 0, 1, 4},
                               {2, 3, 4, 4, 4},
                               {4, 4, 2, 3, 4},
                               {4, 4, 4, 4, 4}});
}

void bm_green(benchmark::State& state) {
  const auto s = b2();
  for (auto _ : state) benchmark::DoNotOptimize(green(s));
}
BENCHMARK(bm_green);

void bm_group_kernel(benchmark::State& state) {
  const auto s = t2();
  for (auto _ : state) benchmark::DoNotOptimize(group_kernel(s));
}
BENCHMARK(bm_group_kernel);

void bm_construct_t2(benchmark::State& state) {
  const auto s = t2();
  for (auto _ : state) benchmark::DoNotOptimize(construct_er(s));
}
BENCHMARK(bm_construct_t2);

void bm_certify_t2(benchmark::State& state) {
  const auto s = t2();
  for (auto _ : state) benchmark::DoNotOptimize(certify(s));
}
BENCHMARK(bm_certify_t2);

void bm_certify_b2(benchmark::State& state) {
  const auto s = b2();
  for (auto _ : state) benchmark::DoNotOptimize(certify(s));
}
BENCHMARK(bm_certify_b2);

void bm_enumerate_catalog(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_catalog(state.range(0)));
}
BENCHMARK(bm_enumerate_catalog)->Arg(3)->Arg(4);

void bm_catalog_certify_order3(benchmark::State& state) {
  const auto entries = enumerate_catalog(3);
  for (auto _ : state)
    for (const auto& e : entries) benchmark::DoNotOptimize(certify(e.semigroup));
}
BENCHMARK(bm_catalog_certify_order3);

}  // namespace

BENCHMARK_MAIN();
