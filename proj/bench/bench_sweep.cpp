// Serial reference vs OpenMP kernels on the default 65 x 257 grid.

#include <benchmark/benchmark.h>

#include "djcm/geometry.hpp"
#include "djcm/sweep.hpp"

using namespace djcm;

namespace {

const std::vector<Angle>& alphas() {
    static const std::vector<Angle> a = uniform_alpha_grid(65);
    return a;
}

const std::vector<double>& gts() {
    static const std::vector<double> g = uniform_grid(2 * kPi, 257);
    return g;
}

Execution mode(const benchmark::State& s) { return s.range(0) == 0 ? Execution::serial : Execution::parallel; }

void BM_AnalyticTraces(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(analytic_traces(Family::phi, alphas(), gts(), mode(state)));
}

void BM_SurfaceSample(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(surface_sample(Family::phi, Qubit::A, alphas(), gts(), mode(state)));
}

void BM_NumericOracle(benchmark::State& state) {
    const std::vector<Angle> a = uniform_alpha_grid(33);
    const std::vector<double> g = uniform_grid(2 * kPi, 65);
    const SpaceConfig cfg;
    for (auto _ : state) benchmark::DoNotOptimize(compare_oracle(Family::phi, a, g, cfg, mode(state)));
}

}  // namespace

BENCHMARK(BM_AnalyticTraces)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SurfaceSample)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NumericOracle)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
