// Serial reference kernels against the OpenMP versions.

#include "bellrec/kernels.hpp"

#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

using namespace bellrec;

namespace {

std::vector<Rational> inputs(std::size_t n, std::uint64_t seed = 1)
{
    std::mt19937_64 rng(seed * 1000003 + n);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 7);
    std::vector<Rational> xs;
    for (std::size_t i = 0; i < n; ++i) {
        xs.push_back(make_rational(num(rng), den(rng)));
    }
    return xs;
}

void BM_BellFillReference(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto xs = inputs(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::reference::bell_fill<Rational>(xs, n));
    }
}

void BM_BellFillParallel(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto xs = inputs(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::bell_fill<Rational>(xs, n, Exec::parallel));
    }
}

void BM_CauchyReference(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = inputs(n);
    const auto b = inputs(n, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::reference::cauchy_product<Rational>(a, b));
    }
}

void BM_CauchyParallel(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = inputs(n);
    const auto b = inputs(n, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::cauchy_product<Rational>(a, b, Exec::parallel));
    }
}

}  // namespace

BENCHMARK(BM_BellFillReference)->Arg(20)->Arg(40)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BellFillParallel)->Arg(20)->Arg(40)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CauchyReference)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CauchyParallel)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
