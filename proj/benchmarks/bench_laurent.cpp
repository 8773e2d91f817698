#include <benchmark/benchmark.h>

#include <qsl2/laurent.hpp>

namespace {

void bm_qbinom(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qsl2::qbinom(n, n / 2));
    }
}
BENCHMARK(bm_qbinom)->Arg(16)->Arg(32)->Arg(64);

void bm_poly_multiply(benchmark::State& state) {
    const long n = state.range(0);
    qsl2::LaurentPoly a = qsl2::qfact(n);
    qsl2::LaurentPoly b = qsl2::qbinom(2 * n, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(bm_poly_multiply)->Arg(8)->Arg(16);

void bm_series_inverse_factorial(benchmark::State& state) {
    const long n = state.range(0);
    qsl2::RationalQ r = qsl2::RationalQ(1) / qsl2::RationalQ(qsl2::qfact_renorm(n));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qsl2::series_from_ratfun(r, 80));
    }
}
BENCHMARK(bm_series_inverse_factorial)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
