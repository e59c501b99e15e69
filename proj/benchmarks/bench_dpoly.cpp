#include <benchmark/benchmark.h>

#include "dpoly/abel.hpp"
#include "dpoly/egf.hpp"
#include "dpoly/identities.hpp"
#include "dpoly/sequences.hpp"

using namespace dpoly;

namespace {

void BM_SeriesMulBivariate(benchmark::State& state) {
    unsigned order = static_cast<unsigned>(state.range(0));
    EgfSeries a = EgfSeries::geometric(BiPoly::x(), order);
    EgfSeries b = binomial_lambda_series(BiPoly(1), -1, order);
    for (auto _ : state) {
        EgfSeries c = series_mul(a, b);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_SeriesMulBivariate)->Arg(8)->Arg(16)->Arg(24);

void BM_SeriesCompose(benchmark::State& state) {
    unsigned order = static_cast<unsigned>(state.range(0));
    EgfSeries outer = EgfSeries::geometric(BiPoly::x(), order);
    EgfSeries inner = EgfSeries::exp_t(order) - EgfSeries::unit(order);
    for (auto _ : state) {
        EgfSeries c = series_compose(outer, inner);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_SeriesCompose)->Arg(8)->Arg(16);

void BM_SeriesExpBivariate(benchmark::State& state) {
    unsigned order = static_cast<unsigned>(state.range(0));
    EgfSeries inner = binomial_lambda_series(BiPoly(1), +1, order) - EgfSeries::unit(order);
    inner.scale(BiPoly::x());
    for (auto _ : state) {
        EgfSeries c = series_exp(inner);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_SeriesExpBivariate)->Arg(8)->Arg(16);

void BM_DegenBellPolynomial(benchmark::State& state) {
    unsigned n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        Catalog cat; // fresh catalog: measures the full build, not the memo hit
        benchmark::DoNotOptimize(cat.bell_poly(n, true));
    }
}
BENCHMARK(BM_DegenBellPolynomial)->Arg(8)->Arg(12)->Arg(16);

void BM_StirlingTriangle(benchmark::State& state) {
    unsigned n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        Catalog cat;
        benchmark::DoNotOptimize(cat.stirling(StirlingKind::SecondDegenerate, n, n / 2));
    }
}
BENCHMARK(BM_StirlingTriangle)->Arg(16)->Arg(32);

void BM_ThetaOrbit(benchmark::State& state) {
    unsigned depth = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        auto orbit = abel::theta_apply(abel::derangement_egf(), depth);
        benchmark::DoNotOptimize(abel::eval_at_minus_one(orbit));
    }
}
BENCHMARK(BM_ThetaOrbit)->Arg(4)->Arg(8)->Arg(12);

void BM_RegularizedSum(benchmark::State& state) {
    unsigned n = static_cast<unsigned>(state.range(0));
    BiPoly weight = lambda_falling(BiPoly::x(), n, BiPoly::lambda());
    for (auto _ : state) {
        benchmark::DoNotOptimize(abel::regularized_derangement_sum(weight));
    }
}
BENCHMARK(BM_RegularizedSum)->Arg(5)->Arg(10);

void BM_FullSuite(benchmark::State& state) {
    unsigned n_max = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        Catalog cat;
        auto reports = identities::run_suite(identities::all_ids(), n_max, cat);
        benchmark::DoNotOptimize(reports);
    }
}
BENCHMARK(BM_FullSuite)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
