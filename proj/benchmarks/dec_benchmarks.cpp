#include "dec/circumcentric_dual.hpp"
#include "dec/conjugate_gradient.hpp"
#include "dec/de_rham.hpp"
#include "dec/dec_operators.hpp"
#include "dec/experiment.hpp"
#include "dec/mesh_generation.hpp"

#include <benchmark/benchmark.h>

using namespace dec;

namespace {

void BM_BuildComplex(benchmark::State& state)
{
    const auto data = perturbed_mesh_data(static_cast<int>(state.range(0)), 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(build_complex(data.coords, data.cells));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(data.cells.size()));
}
BENCHMARK(BM_BuildComplex)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_BuildDual(benchmark::State& state)
{
    const auto k = perturbed_mesh(static_cast<int>(state.range(0)), 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(build_dual(k));
    state.SetItemsProcessed(state.iterations() * k.count(2));
}
BENCHMARK(BM_BuildDual)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_AssembleLaplacian(benchmark::State& state)
{
    const auto k = perturbed_mesh(6, 1);
    const auto dual = build_dual(k);
    const int degree = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(symmetrized_laplacian(k, dual, degree));
}
BENCHMARK(BM_AssembleLaplacian)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_DeRhamSource(benchmark::State& state)
{
    const auto k = perturbed_mesh(5, 1);
    const int degree = static_cast<int>(state.range(0));
    const auto f = hodge_laplacian_smooth(manufactured_solution(degree));
    for (auto _ : state)
        benchmark::DoNotOptimize(de_rham(k, f));
}
BENCHMARK(BM_DeRhamSource)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_SolveProblem(benchmark::State& state)
{
    const auto k = symmetric_mesh(static_cast<int>(state.range(0)));
    const auto dual = build_dual(k);
    const int degree = static_cast<int>(state.range(1));
    int iterations = 0;
    for (auto _ : state) {
        const auto sol = solve_problem(k, dual, degree);
        iterations = sol.iterations;
        benchmark::DoNotOptimize(sol.u.values.data());
    }
    state.counters["cg_iterations"] = iterations;
}
BENCHMARK(BM_SolveProblem)
    ->ArgsProduct({{4, 5, 6}, {0, 1, 2}})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
