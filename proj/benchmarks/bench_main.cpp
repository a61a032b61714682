#include <benchmark/benchmark.h>

#include "tcontract/expression.hpp"
#include "tcontract/commands.hpp"
#include "tcontract/gallery.hpp"

using namespace tcontract;

static void BM_EstimateModulus(benchmark::State& state) {
    auto cfg = gallery_config(gallery_entry("ex2_2"));
    cfg.sampler.sample_count = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(estimate_modulus(cfg.space, cfg.maps, cfg.sampler));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EstimateModulus)->Arg(1000)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

static void BM_PicardSolve(benchmark::State& state) {
    const auto cfg = gallery_config(gallery_entry("ex3_3"));
    const auto options = cfg.solver.solve_options();
    for (auto _ : state) benchmark::DoNotOptimize(picard_solve(cfg.space, cfg.maps, *cfg.solver.x0, options));
}
BENCHMARK(BM_PicardSolve)->Unit(benchmark::kMicrosecond);

static void BM_PhiMinimize(benchmark::State& state) {
    const auto cfg = gallery_config(gallery_entry("ex3_2"));
    const auto grid = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(phi_minimize(cfg.space, cfg.maps, grid));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PhiMinimize)->Arg(1001)->Arg(10001)->Arg(100001)->Unit(benchmark::kMillisecond);

static void BM_ExhaustiveOracle(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto space = random_finite_metric(n, 1);
    OracleOptions options;
    options.threads = static_cast<unsigned>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_and_check(space, options));
}
BENCHMARK(BM_ExhaustiveOracle)
    ->Args({3, 1})
    ->Args({4, 1})
    ->Args({4, 0})
    ->Args({5, 0})
    ->Unit(benchmark::kMillisecond);

static void BM_ExpressionEval(benchmark::State& state) {
    const auto expr = Expression::parse("0.5*sqrt(1 - x^2) + exp(-x)/(1 + x)");
    Real x = 0.25L;
    for (auto _ : state) {
        benchmark::DoNotOptimize(expr(x));
        x += 1e-9L;
    }
}
BENCHMARK(BM_ExpressionEval);

static void BM_GalleryAll(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(cmd_gallery("all"));
}
BENCHMARK(BM_GalleryAll)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
