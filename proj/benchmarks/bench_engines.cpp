#include <benchmark/benchmark.h>

#include "anth/anth.hpp"

namespace {

// Radicands with long periods relative to their size.
constexpr long kRadicands[] = {19, 94, 661, 9949};

void BM_LogosEngine(benchmark::State& state) {
  const anth::SurdContext ctx(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(anth::anth_surd_logos(ctx));
}

void BM_StateEngine(benchmark::State& state) {
  const anth::Int d = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(anth::anth_surd_state(0, 1, d));
}

void BM_SurdFloorDiv(benchmark::State& state) {
  const anth::SurdContext ctx(19);
  const anth::SurdElement x(ctx, 14, -61);
  const anth::SurdElement y(ctx, -39, 170);
  for (auto _ : state) benchmark::DoNotOptimize(anth::surd_floor_div(x, y));
}

void BM_IntegerEuclid(benchmark::State& state) {
  const anth::Int a("806515533049393");  // consecutive Fibonacci numbers
  const anth::Int b("498454011879264");
  for (auto _ : state) benchmark::DoNotOptimize(anth::anth_integers(a, b));
}

void BM_PalindromeSweep(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(anth::palindrome_sweep(static_cast<unsigned long>(state.range(0)), 1));
  }
}

void BM_Convergents(benchmark::State& state) {
  const auto e = anth::anth_surd_logos(anth::SurdContext(19));
  for (auto _ : state) {
    benchmark::DoNotOptimize(anth::convergents(e, static_cast<std::size_t>(state.range(0))));
  }
}

void radicands(benchmark::internal::Benchmark* b) {
  for (long n : kRadicands) b->Arg(n);
}

}  // namespace

BENCHMARK(BM_LogosEngine)->Apply(radicands);
BENCHMARK(BM_StateEngine)->Apply(radicands);
BENCHMARK(BM_SurdFloorDiv);
BENCHMARK(BM_IntegerEuclid);
BENCHMARK(BM_PalindromeSweep)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Convergents)->Arg(10)->Arg(1000);

BENCHMARK_MAIN();
