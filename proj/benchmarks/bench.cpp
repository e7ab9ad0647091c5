#include "schauder/schauder.hpp"

#include <benchmark/benchmark.h>

using namespace schauder;

namespace {

void BM_series_eval(benchmark::State& state) {
    const int depth = static_cast<int>(state.range(0));
    SchauderSeries f(0.0, 0.0, named_schedule("takagi"), depth);
    double x = 0.123456789;
    for (auto _ : state) {
        benchmark::DoNotOptimize(f.eval(x));
        x += 1e-9;
    }
}
BENCHMARK(BM_series_eval)->Arg(10)->Arg(20)->Arg(40);

void BM_series_eval_lacunary(benchmark::State& state) {
    SchauderSeries f(0.0, 0.0, named_schedule("lacunary", 0.0, {1, 2, 6, 24}), 24);
    double x = 0.123456789;
    for (auto _ : state) {
        benchmark::DoNotOptimize(f.eval(x));
        x += 1e-9;
    }
}
BENCHMARK(BM_series_eval_lacunary);

void BM_bridge_eval(benchmark::State& state) {
    const auto b = bridge_sample(static_cast<int>(state.range(0)), 42);
    double x = 0.2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(b.series.eval(x));
        x += 1e-9;
    }
}
BENCHMARK(BM_bridge_eval)->Arg(20)->Arg(40);

void BM_eval_grid(benchmark::State& state) {
    SchauderSeries f(0.0, 0.0, named_schedule("takagi"), 30);
    for (auto _ : state) {
        benchmark::DoNotOptimize(f.eval_grid(static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_eval_grid)->Arg(10)->Arg(14);

void BM_analyze(benchmark::State& state) {
    SchauderSeries f(0.0, 0.0, named_schedule("takagi"), 30);
    const SampleGrid grid = f.eval_grid(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(analyze(grid));
    }
}
BENCHMARK(BM_analyze)->Arg(10)->Arg(14);

void BM_cover_count(benchmark::State& state) {
    SchauderSeries f(0.0, 0.0, named_schedule("takagi"), 26);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cover_count(f, 4.0 / 3.0, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_cover_count)->Arg(12)->Arg(16);

void BM_percolation_trial(benchmark::State& state) {
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(percolation_trial(12, 5, 0.9, seed++));
    }
}
BENCHMARK(BM_percolation_trial);

void BM_holder_scan(benchmark::State& state) {
    SchauderSeries f(0.0, 0.0, named_schedule("sqrt_bridge"), 40);
    Evaluator ev = [&f](double x) { return f.eval(x); };
    for (auto _ : state) {
        benchmark::DoNotOptimize(holder_scan(ev, 0.37, Side::Right, 6, 24, 48));
    }
}
BENCHMARK(BM_holder_scan);

} // namespace

BENCHMARK_MAIN();
