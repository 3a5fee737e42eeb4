// Microbenchmarks for the hot paths: word reduction, assembly, the norm
// kernel, a full optimizer run and the strategy sampler.

#include <benchmark/benchmark.h>

#include "biquad/optimizer.hpp"
#include "biquad/oracle.hpp"
#include "biquad/realize.hpp"
#include "biquad/reduce.hpp"
#include "biquad/spectral.hpp"
#include "biquad/tilted.hpp"

namespace {

biquad::BiasPolynomial chsh() {
    return biquad::build_polynomial(biquad::TiltedParams{1.0, 0.5});
}

void BM_ReduceWord(benchmark::State& state) {
    const biquad::Word w("uvuvuvuv");
    double s = 0.0;
    for (auto _ : state) {
        s += 1e-9; // defeat value caching without branching
        benchmark::DoNotOptimize(biquad::reduce_word(w, s > 0.5 ? 0.25 : s));
    }
}
BENCHMARK(BM_ReduceWord);

void BM_ReducePolynomial(benchmark::State& state) {
    const biquad::BiasPolynomial p = chsh();
    const biquad::AnticommPoint pt{0.3, -0.4};
    for (auto _ : state) benchmark::DoNotOptimize(biquad::reduce_polynomial(p, pt));
}
BENCHMARK(BM_ReducePolynomial);

void BM_Assemble(benchmark::State& state) {
    const biquad::ReducedForm form =
        biquad::reduce_polynomial(chsh(), biquad::AnticommPoint{0.3, -0.4});
    for (auto _ : state) benchmark::DoNotOptimize(biquad::assemble(form));
}
BENCHMARK(BM_Assemble);

void BM_OperatorNorm(benchmark::State& state) {
    const biquad::Mat4 m =
        biquad::assemble(biquad::reduce_polynomial(chsh(), biquad::AnticommPoint{0.3, -0.4}))
            .entries;
    for (auto _ : state) benchmark::DoNotOptimize(biquad::operator_norm(m));
}
BENCHMARK(BM_OperatorNorm);

void BM_SurfacePoint(benchmark::State& state) {
    // One full norm evaluation: reduce + assemble + operator norm.
    const biquad::BiasPolynomial p = chsh();
    const biquad::AnticommPoint pt{0.3, -0.4};
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            biquad::operator_norm(biquad::assemble(biquad::reduce_polynomial(p, pt)).entries));
    }
}
BENCHMARK(BM_SurfacePoint);

void BM_Optimize(benchmark::State& state) {
    const biquad::BiasPolynomial p = chsh();
    const biquad::OptimizerConfig cfg{static_cast<int>(state.range(0)), 6, 1e-8};
    for (auto _ : state) benchmark::DoNotOptimize(biquad::optimize(p, cfg));
}
BENCHMARK(BM_Optimize)->Arg(21)->Arg(51)->Unit(benchmark::kMillisecond);

void BM_OracleSample(benchmark::State& state) {
    const biquad::BiasPolynomial p = chsh();
    const long samples = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(biquad::brute_force_value(p, samples, 42));
    state.SetItemsProcessed(state.iterations() * samples);
}
BENCHMARK(BM_OracleSample)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
