#include "sandwich/limit.hpp"
#include "sandwich/parser.hpp"

#include <benchmark/benchmark.h>

using namespace sandwich;

static void BM_Envelope(benchmark::State& state) {
  LimitEngine engine;
  Expr e = parse("alt(x)*x^-1");
  GridSpec grid{Rational(3, 2), Rational(2), static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(engine.envelope(e, grid));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Envelope)->RangeMultiplier(2)->Range(8, 64)->Complexity(benchmark::oN);

static void BM_SuffixExtrema(benchmark::State& state) {
  std::vector<Scalar> values;
  for (long i = 0; i < state.range(0); ++i) values.emplace_back(Rational((i * 7919) % 1009, 13));
  for (auto _ : state) benchmark::DoNotOptimize(suffix_extrema(values));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SuffixExtrema)->RangeMultiplier(4)->Range(64, 16384)->Complexity(benchmark::oN);
