#include <benchmark/benchmark.h>

#include "clausen/integrals.hpp"
#include "clausen/relations.hpp"
#include "clausen/specfun.hpp"

using namespace clausen;

static void Clausen2(benchmark::State& state) {
  const auto ctx = make_context(static_cast<int>(state.range(0)));
  const Real theta = 2L * ctx.phi7();
  for (auto _ : state) benchmark::DoNotOptimize(clausen2(theta, ctx));
}
BENCHMARK(Clausen2)->Arg(50)->Arg(200)->Arg(1000)->Unit(benchmark::kMicrosecond);

static void HurwitzZeta(benchmark::State& state) {
  const auto ctx = make_context(static_cast<int>(state.range(0)));
  const Real s = ctx.integer(2);
  const Real a = ctx.rational(3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(hurwitz_zeta(s, a, ctx));
}
BENCHMARK(HurwitzZeta)->Arg(50)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

static void LMinus7(benchmark::State& state) {
  const auto ctx = make_context(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dirichlet_L(LSeriesPoint{Discriminant(-7), ctx.integer(2)}, ctx));
}
BENCHMARK(LMinus7)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

// Fresh engine each iteration so node generation is included.
static void IntegrateI7(benchmark::State& state) {
  const auto ctx = make_context(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const TanhSinh quad(ctx, QuadratureOptions{.workers = static_cast<int>(state.range(1))});
    benchmark::DoNotOptimize(integrate_I7(quad, ctx.target_digits()).value);
  }
}
BENCHMARK(IntegrateI7)->Args({100, 1})->Args({100, 4})->Unit(benchmark::kMillisecond);

static void PslqSixTerm(benchmark::State& state) {
  const auto ctx = make_context(static_cast<int>(state.range(0)));
  const auto values = six_clausen_values(ctx);
  for (auto _ : state) benchmark::DoNotOptimize(pslq(values, ctx));
}
BENCHMARK(PslqSixTerm)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
