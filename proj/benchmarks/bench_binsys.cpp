#include <benchmark/benchmark.h>

#include "binsys/bin_semigroup.hpp"
#include "binsys/enumeration.hpp"
#include "binsys/factorization.hpp"

using namespace binsys;

static void bm_product(benchmark::State& state) {
  auto const n = static_cast<std::size_t>(state.range(0));
  GroupoidSampler s(n, 1);
  auto const g = s.next();
  auto const h = s.next();
  std::vector<element_type> out;
  for (auto _ : state) {
    product_into(g, h, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(bm_product)->Arg(3)->Arg(8)->Arg(32);

static void bm_classify(benchmark::State& state) {
  auto const n = static_cast<std::size_t>(state.range(0));
  GroupoidSampler s(n, 2);
  auto const g = s.next();
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify(g));
  }
}
BENCHMARK(bm_classify)->Arg(3)->Arg(8)->Arg(32);

static void bm_census(benchmark::State& state) {
  auto const threads = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(census(3, threads));
  }
}
BENCHMARK(bm_census)->Arg(1)->Unit(benchmark::kMillisecond);

static void bm_uniqueness(benchmark::State& state) {
  auto const n = static_cast<std::size_t>(state.range(0));
  GroupoidSampler s(n, 3);
  auto const g  = s.next();
  auto const& m = factorization_method(method::au);
  for (auto _ : state) {
    benchmark::DoNotOptimize(uniqueness_search(g, m));
  }
}
BENCHMARK(bm_uniqueness)->Arg(3)->Arg(5);

static void bm_verify(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_claims(3, std::nullopt, 1));
  }
}
BENCHMARK(bm_verify)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
