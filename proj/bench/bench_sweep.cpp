// Serial reference sweep against the OpenMP sweep on the identity suite.

#include "pmc/catalog.hpp"
#include "pmc/identities.hpp"

#include <benchmark/benchmark.h>

namespace {

void run_suite(benchmark::State& state, const char* id, pmc::Execution ex)
{
    const pmc::SurfaceSpec s = pmc::instantiate(id);
    const pmc::Grid grid{static_cast<int>(state.range(0)), static_cast<int>(state.range(0)), pmc::kDefaultMargin};
    for (auto _ : state) benchmark::DoNotOptimize(pmc::run_identity_suite(s, grid, {}, ex));
    state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

void BM_suite_serial_cylinder(benchmark::State& st) { run_suite(st, "circle_cylinder", pmc::Execution::serial); }
void BM_suite_parallel_cylinder(benchmark::State& st) { run_suite(st, "circle_cylinder", pmc::Execution::parallel); }
void BM_suite_serial_cor32(benchmark::State& st) { run_suite(st, "cor32_flat_minimal", pmc::Execution::serial); }
void BM_suite_parallel_cor32(benchmark::State& st) { run_suite(st, "cor32_flat_minimal", pmc::Execution::parallel); }

void BM_field_serial(benchmark::State& state)
{
    const pmc::SurfaceSpec s = pmc::instantiate("helicoidal_torus");
    const auto pts = pmc::grid_points(s.domain, {static_cast<int>(state.range(0)), static_cast<int>(state.range(0))});
    for (auto _ : state)
        benchmark::DoNotOptimize(pmc::sweep_serial(pts, [&](const pmc::GridPoint& p) { return pmc::evaluate_chart(s, p.u, p.v).K.value(); }));
}

void BM_field_parallel(benchmark::State& state)
{
    const pmc::SurfaceSpec s = pmc::instantiate("helicoidal_torus");
    const auto pts = pmc::grid_points(s.domain, {static_cast<int>(state.range(0)), static_cast<int>(state.range(0))});
    for (auto _ : state)
        benchmark::DoNotOptimize(pmc::sweep_parallel(pts, [&](const pmc::GridPoint& p) { return pmc::evaluate_chart(s, p.u, p.v).K.value(); }));
}

} // namespace

BENCHMARK(BM_suite_serial_cylinder)->Arg(17)->Arg(33)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_suite_parallel_cylinder)->Arg(17)->Arg(33)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_suite_serial_cor32)->Arg(33)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_suite_parallel_cor32)->Arg(33)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_field_serial)->Arg(33)->Arg(65)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_field_parallel)->Arg(33)->Arg(65)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
