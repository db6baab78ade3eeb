#include "sandwich/evaluate.hpp"
#include "sandwich/parser.hpp"

#include <benchmark/benchmark.h>

using namespace sandwich;

static void BM_EvaluateExactPowTail(benchmark::State& state) {
  Expr e = parse("5*x^-2 + 3");
  Rational x(12345, 7);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(e, x));
}
BENCHMARK(BM_EvaluateExactPowTail);

static void BM_EvaluateIrrationalRoot(benchmark::State& state) {
  Expr e = parse("3*x^-1/2 + alt(x)*x^-3/2");
  Rational x(1000003, 10);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(e, x));
}
BENCHMARK(BM_EvaluateIrrationalRoot);

static void BM_Parse(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(parse("inv(2 + x^-1)*(1 - x^-1/2) + alt(x)*x^-2 @a=3"));
}
BENCHMARK(BM_Parse);
