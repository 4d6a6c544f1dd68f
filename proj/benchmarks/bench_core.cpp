#include <benchmark/benchmark.h>

#include "focuskit/dynamics.hpp"
#include "focuskit/fiber.hpp"
#include "focuskit/rng.hpp"
#include "focuskit/singularity.hpp"

using namespace focuskit;

namespace {

Vec orbit_point() {
    Vec x(6);
    x << 1.6, 1.0, -1.2, 0.6, 0.0, 0.8;
    return x;
}

void BM_Bracket(benchmark::State& state) {
    const SystemSpec sys = builtin_system("e3-form41");
    const Vec x = orbit_point();
    for (auto _ : state)
        benchmark::DoNotOptimize(
            bracket(sys.orbit.structure, sys.hamiltonian, sys.integral, x));
}
BENCHMARK(BM_Bracket);

void BM_Sgrad(benchmark::State& state) {
    const SystemSpec sys = builtin_system("e3-form41");
    const Vec x = orbit_point();
    for (auto _ : state)
        benchmark::DoNotOptimize(sgrad(sys.orbit.structure, sys.hamiltonian, x));
}
BENCHMARK(BM_Sgrad);

void BM_OrbitProjection(benchmark::State& state) {
    const SystemSpec sys = builtin_system("e3-form41");
    auto gen = substream(1, 0);
    const Vec x0 = uniform_vec(gen, 6, -2.0, 2.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(project_to_orbit(sys.orbit, x0));
}
BENCHMARK(BM_OrbitProjection);

void BM_Classify(benchmark::State& state) {
    const SystemSpec sys = builtin_system("e3-form41");
    Vec x(6);
    x << 0, 0, 0, 0, 0, 1;
    for (auto _ : state) benchmark::DoNotOptimize(classify(sys, x));
}
BENCHMARK(BM_Classify);

void BM_IntegrationStep(benchmark::State& state) {
    const SystemSpec sys = builtin_system("e3-form41");
    const Vec x0 = orbit_point();
    for (auto _ : state)
        benchmark::DoNotOptimize(integrate(sys, x0, 0.1, 1e-3));
}
BENCHMARK(BM_IntegrationStep);

void BM_FiberSample(benchmark::State& state) {
    const SystemSpec sys = builtin_system("e3-form41");
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_fiber(sys, {1.0, 0.0}, n, 1));
}
BENCHMARK(BM_FiberSample)->Arg(50)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
