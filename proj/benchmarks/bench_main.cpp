#include <benchmark/benchmark.h>

#include "qfock/fock_operator.hpp"
#include "qfock/quadrature.hpp"
#include "qfock/states.hpp"

using namespace qfock;

namespace {

void BM_QuaternionMultiply(benchmark::State& state) {
    Quaternion p(0.3, -0.7, 0.2, 0.9), q(1.1, 0.4, -0.2, 0.6);
    for (auto _ : state) {
        p = p * q;
        benchmark::DoNotOptimize(p);
        p = p / abs(p);
    }
}
BENCHMARK(BM_QuaternionMultiply);

void BM_OperatorCompose(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const FockOperator a = ladder_a(n);
    const FockOperator d = displacement(Quaternion(0.2, 0.5, -0.3, 0.1), n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(compose(d, compose(a, d)));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OperatorCompose)->Arg(32)->Arg(64)->Arg(96)->Complexity();

void BM_Displacement(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const Quaternion q(0.2, 0.8, -0.4, 0.3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(displacement(q, n));
    }
}
BENCHMARK(BM_Displacement)->Arg(32)->Arg(64)->Arg(96);

void BM_Squeeze(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const Quaternion p(0.1, 0.0, 0.45, 0.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(squeeze(p, n));
    }
}
BENCHMARK(BM_Squeeze)->Arg(32)->Arg(64)->Arg(96);

void BM_GramMatrix(benchmark::State& state) {
    const QuadratureGrid grid =
        QuadratureGrid::make(24, 12, 8, 12, 8.0, MeasureVariant::GaussianWeighted);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gram_matrix(6, grid));
    }
}
BENCHMARK(BM_GramMatrix);

}  // namespace

BENCHMARK_MAIN();
