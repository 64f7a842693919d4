#include <benchmark/benchmark.h>

#include "wradius/analysis.hpp"
#include "wradius/bounds.hpp"
#include "wradius/generate.hpp"
#include "wradius/range.hpp"
#include "wradius/spectral.hpp"

namespace {

using namespace wradius;

ComplexMatrix sample(std::size_t n) {
    return generate({MatrixKind::ginibre, n, 42, 1.0, {}});
}

void BM_HermitianEigen(benchmark::State& state) {
    const auto h = HermitianMatrix::real_part_of(sample(static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hermitian_eigen(h));
    }
}
BENCHMARK(BM_HermitianEigen)->DenseRange(2, 8, 2);

void BM_HermitianEigenVectors(benchmark::State& state) {
    const auto h = HermitianMatrix::real_part_of(sample(static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hermitian_eigen(h, kDefaultEigenTol, EigenVectors::yes));
    }
}
BENCHMARK(BM_HermitianEigenVectors)->Arg(4)->Arg(8);

void BM_NumericalRadius(benchmark::State& state) {
    const auto a = sample(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(numerical_radius(a));
    }
    state.SetLabel("grid 1024");
}
BENCHMARK(BM_NumericalRadius)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_FullReport(benchmark::State& state) {
    const auto a = sample(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(full_report(a));
    }
}
BENCHMARK(BM_FullReport)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_Analyze(benchmark::State& state) {
    const auto a = sample(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(analyze(a));
    }
}
BENCHMARK(BM_Analyze)->Arg(2)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
