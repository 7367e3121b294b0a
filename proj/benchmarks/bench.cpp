#include "specmod/flow.hpp"
#include "specmod/moduli.hpp"
#include "specmod/monopole.hpp"

#include <benchmark/benchmark.h>

using namespace specmod;

namespace {

void BM_EisensteinSeries(benchmark::State& state)
{
    const Rational order(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(eisenstein_q(3, order));
    }
}
BENCHMARK(BM_EisensteinSeries)->Arg(30)->Arg(100);

void BM_SeriesProduct(benchmark::State& state)
{
    const Rational order(state.range(0));
    const FracSeries e4 = eisenstein_q(2, order);
    const FracSeries e6 = eisenstein_q(3, order);
    for (auto _ : state) {
        benchmark::DoNotOptimize(e4 * e6);
    }
}
BENCHMARK(BM_SeriesProduct)->Arg(30)->Arg(100);

void BM_ThetaLogDerivative(benchmark::State& state)
{
    const FracSeries t2 = theta_q(2, 30);
    for (auto _ : state) {
        benchmark::DoNotOptimize(t2.log_q_derivative());
    }
}
BENCHMARK(BM_ThetaLogDerivative);

void BM_EvalSeries(benchmark::State& state)
{
    const FracSeries e4 = eisenstein_q(2, 30);
    const Tau tau = Tau::imaginary(1.3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval_series(e4, tau, 1e-10));
    }
}
BENCHMARK(BM_EvalSeries);

void BM_DisguiseContraction(benchmark::State& state)
{
    const TRPoint t{Complex(0.3, 0.1), Complex(1.5, -0.2), Complex(0.4, 0.7)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(contract(gm_matrix_R(t), ramanujan_field(t)));
    }
}
BENCHMARK(BM_DisguiseContraction);

void BM_OmegaFromTheta(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(omega_from_theta(1.5, 30, 1e-10));
    }
}
BENCHMARK(BM_OmegaFromTheta);

void BM_TauFromR(benchmark::State& state)
{
    const SpectralCurve2 c{3.0, 9.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(tau_from_r(c, 30, 1e-9));
    }
}
BENCHMARK(BM_TauFromR);

void BM_FlowRamanujan(benchmark::State& state)
{
    const TRPoint a = ramanujan_solution(Tau::imaginary(2.0), 30, 1e-12);
    const std::array<Complex, 3> start{a.t1, a.t2, a.t3};
    for (auto _ : state) {
        benchmark::DoNotOptimize(integrate(FieldKind::ramanujan, start, 2.0, 1.2, 1e-8));
    }
}
BENCHMARK(BM_FlowRamanujan);

} // namespace

BENCHMARK_MAIN();
