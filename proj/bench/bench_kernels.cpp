// Serial reference kernels against their OpenMP counterparts.

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "fracnabla/kernels.hpp"
#include "fracnabla/nabla_ops.hpp"
#include "fracnabla/solver.hpp"
#include "fracnabla/specfun.hpp"

namespace {

using namespace fracnabla;

std::vector<double> random_values(std::size_t n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> v(n);
    for (auto& x : v) {
        x = dist(rng);
    }
    return v;
}

template <Execution exec>
void BM_HistoryConvolution(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto weights = monomial_weight_sequence(-1.5, n);
    const auto u = random_values(n, 1);
    std::vector<double> out(n - 1);
    for (auto _ : state) {
        kernels::history_convolution(weights.data(), u, 1, out, exec);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n * n / 2));
}

template <Execution exec>
void BM_StripForwardSubstitution(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto primary = monomial_weight_sequence(-2.5, n + 1);
    const auto secondary = monomial_weight_sequence(-1.5, n + 1);
    const auto row_coeff = random_values(n, 2);
    const std::vector<double> diag(n, 1.5);
    const auto rhs = random_values(n, 3);
    const kernels::StripView view{primary.data(), secondary.data(), row_coeff, diag, rhs};
    std::vector<double> x(n);
    for (auto _ : state) {
        kernels::strip_forward_substitution(view, x, exec);
        benchmark::DoNotOptimize(x.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n * n / 2));
}

template <Execution exec>
void BM_SolveOscillation(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto forcing = GridFunction::tabulate(n, [](std::size_t t) { return 1.0 / (t + 1.0); });
    const auto problem = oscillation_problem(1.5, 0.5, forcing, 1.0, 1.0, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve(problem, {.execution = exec}));
    }
}

}  // namespace

BENCHMARK(BM_HistoryConvolution<Execution::serial>)->RangeMultiplier(4)->Range(256, 16384);
BENCHMARK(BM_HistoryConvolution<Execution::parallel>)->RangeMultiplier(4)->Range(256, 16384);
BENCHMARK(BM_StripForwardSubstitution<Execution::serial>)->RangeMultiplier(4)->Range(256, 16384);
BENCHMARK(BM_StripForwardSubstitution<Execution::parallel>)->RangeMultiplier(4)->Range(256, 16384);
BENCHMARK(BM_SolveOscillation<Execution::serial>)->Arg(100)->Arg(4096);
BENCHMARK(BM_SolveOscillation<Execution::parallel>)->Arg(100)->Arg(4096);

BENCHMARK_MAIN();
