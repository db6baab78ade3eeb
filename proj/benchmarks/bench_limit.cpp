#include "sandwich/generator.hpp"
#include "sandwich/limit.hpp"
#include "sandwich/parser.hpp"

#include <benchmark/benchmark.h>

using namespace sandwich;

static void BM_LimitLawSum(benchmark::State& state) {
  LimitEngine engine;
  Expr e = parse("5*x^-2 + 3");
  for (auto _ : state) benchmark::DoNotOptimize(engine.limit(e));
}
BENCHMARK(BM_LimitLawSum);

static void BM_LimitGenerated(benchmark::State& state) {
  LimitEngine engine;
  ExprGenerator gen(9);
  std::vector<Expr> pool;
  for (int i = 0; i < 64; ++i) pool.push_back(gen.convergent(static_cast<int>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(engine.limit(pool[i++ % pool.size()]));
}
BENCHMARK(BM_LimitGenerated)->DenseRange(1, 4);

static void BM_EpsWitness(benchmark::State& state) {
  LimitEngine engine;
  LimitCertificate cert = engine.limit(parse("alt(x)*x^-1 + inv(2 + x^-1)"));
  Scalar eps(Rational(1, 10000));
  for (auto _ : state) benchmark::DoNotOptimize(engine.eps_witness(cert, eps));
}
BENCHMARK(BM_EpsWitness);
