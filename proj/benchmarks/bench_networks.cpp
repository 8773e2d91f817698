#include <benchmark/benchmark.h>

#include <qsl2/networks.hpp>

namespace {

void bm_jones_wenzl(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qsl2::jw(n));
    }
}
BENCHMARK(bm_jones_wenzl)->Arg(4)->Arg(6)->Arg(8);

void bm_clasp(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qsl2::intertwiner_A(n, n, n));
    }
}
BENCHMARK(bm_clasp)->Arg(2)->Arg(4);

void bm_theta_network(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qsl2::theta_network(n, n, n));
    }
}
BENCHMARK(bm_theta_network)->Arg(2)->Arg(4);

}  // namespace
