#include <benchmark/benchmark.h>

#include "riemcurv/riemannian.hpp"

using namespace riemcurv;

namespace {

// Dense bivariate series with small rational coefficients: every monomial of
// weighted degree <= order is populated.
GradedSeries dense_series(long order, long salt) {
    GradedSeries s(Alphabet::xi_eta(), order);
    for (long a = 0; a <= order; ++a)
        for (long b = 0; a + 2 * b <= order; ++b) {
            long num = ((a * 7 + b * 13 + salt) % 19) - 9;
            long den = 1 + ((a + 3 * b + salt) % 7);
            if (num == 0) num = 1;
            s.add_term(Monomial({static_cast<unsigned>(a), static_cast<unsigned>(b)}),
                       ExactScalar(make_rat(num, den)));
        }
    return s;
}

void bm_mul_serial(benchmark::State& state) {
    long order = state.range(0);
    GradedSeries f = dense_series(order, 1);
    GradedSeries g = dense_series(order, 5);
    for (auto _ : state) {
        GradedSeries h = GradedSeries::mul_serial(f, g);
        benchmark::DoNotOptimize(h);
    }
}

void bm_mul_parallel(benchmark::State& state) {
    long order = state.range(0);
    GradedSeries f = dense_series(order, 1);
    GradedSeries g = dense_series(order, 5);
    for (auto _ : state) {
        GradedSeries h = GradedSeries::mul_parallel(f, g);
        benchmark::DoNotOptimize(h);
    }
}

void bm_lk_expansion(benchmark::State& state) {
    long order = state.range(0);
    for (auto _ : state) {
        RElement e = lk_bar(4, order);
        benchmark::DoNotOptimize(e);
    }
}

void bm_t_chain(benchmark::State& state) {
    long order = state.range(0);
    RElement e = RElement::basis_element(0, 0, order);
    for (auto _ : state) {
        RElement acted = e;
        for (int i = 0; i < 8; ++i) acted = t_act(acted);
        benchmark::DoNotOptimize(acted);
    }
}

}  // namespace

BENCHMARK(bm_mul_serial)->Arg(16)->Arg(32)->Arg(48)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_mul_parallel)->Arg(16)->Arg(32)->Arg(48)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_lk_expansion)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_t_chain)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
