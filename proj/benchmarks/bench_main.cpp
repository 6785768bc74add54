#include <benchmark/benchmark.h>

#include "sl2idem/hyperalg.hpp"
#include "sl2idem/idem.hpp"
#include "sl2idem/pim.hpp"
#include "sl2idem/verify.hpp"

using namespace sl2idem;

namespace {

void BM_Multiply(benchmark::State& state) {
  const auto ctx = AlgebraCtx::make(static_cast<Word>(state.range(0)), static_cast<Word>(state.range(1)));
  Rng rng(kDefaultSeed);
  const auto u = random_element(ctx, rng);
  const auto v = random_element(ctx, rng);
  for (auto _ : state) benchmark::DoNotOptimize(u * v);
}
BENCHMARK(BM_Multiply)->Args({3, 1})->Args({3, 2})->Args({5, 2})->Args({2, 3});

void BM_BuildAllIdempotents(benchmark::State& state) {
  const auto ctx = AlgebraCtx::make(static_cast<Word>(state.range(0)), static_cast<Word>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(build_all_idempotents(ctx));
}
BENCHMARK(BM_BuildAllIdempotents)->Args({3, 1})->Args({5, 1})->Args({3, 2})->Args({5, 2})
    ->Unit(benchmark::kMillisecond);

void BM_LeftIdealSpan(benchmark::State& state) {
  const auto ctx = AlgebraCtx::make(static_cast<Word>(state.range(0)), static_cast<Word>(state.range(1)));
  const auto items = build_all_idempotents(ctx);
  const auto& e = items.front().element;
  for (auto _ : state) benchmark::DoNotOptimize(left_ideal_span(e));
}
BENCHMARK(BM_LeftIdealSpan)->Args({2, 1})->Args({3, 1})->Args({5, 1})->Args({2, 2})->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
