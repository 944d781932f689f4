#include <benchmark/benchmark.h>

#include "fixspace/moments.hpp"
#include "fixspace/qidentity.hpp"
#include "fixspace/rsdist.hpp"
#include "fixspace/sampler.hpp"

using namespace fixspace;

static void BM_DistGL(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(dist_gl(n, 3));
}
BENCHMARK(BM_DistGL)->Arg(10)->Arg(20)->Arg(40);

static void BM_DistOEven(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(dist_o_even(n, 3, OrthogonalSign::Minus));
}
BENCHMARK(BM_DistOEven)->Arg(10)->Arg(40);

static void BM_StabilizationScan(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(stabilization_scan(Family::U, 2, 3, 12));
}
BENCHMARK(BM_StabilizationScan);

static void BM_LimitDist(benchmark::State& state) {
    const Rational tol(1, 1000000000);
    for (auto _ : state) benchmark::DoNotOptimize(limit_dist(Family::Sp, 2, 3, tol));
}
BENCHMARK(BM_LimitDist);

static void BM_GenfunSeries(benchmark::State& state) {
    const auto N = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(genfun_Fk_rhs(2, Rational(1, 3), -1, 3, N));
}
BENCHMARK(BM_GenfunSeries)->Arg(8)->Arg(12)->Arg(16);

static void BM_Enumerate(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_group({Family::GL, 3, 3}));
}
BENCHMARK(BM_Enumerate)->Unit(benchmark::kMillisecond);

static void BM_SampleIsometry(benchmark::State& state) {
    const GroupModel model({Family::Sp, static_cast<int>(state.range(0)), 5});
    Rng rng(1);
    for (auto _ : state) benchmark::DoNotOptimize(model.sample(rng));
}
BENCHMARK(BM_SampleIsometry)->Arg(2)->Arg(4)->Arg(8);

static void BM_EmpiricalFixdist(benchmark::State& state) {
    const auto workers = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(empirical_fixdist({Family::OEvenPlus, 3, 3}, 20000, 7, workers));
}
BENCHMARK(BM_EmpiricalFixdist)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_MAIN();
