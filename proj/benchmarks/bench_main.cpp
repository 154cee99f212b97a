#include <benchmark/benchmark.h>

#include "fpdea/dea.hpp"
#include "fpdea/fp.hpp"
#include "fpdea/panel.hpp"
#include "fpdea/rng.hpp"
#include "fpdea/simulation.hpp"

namespace {

fpdea::DmuPanel random_panel(std::size_t n, std::size_t m) {
    fpdea::ReplicationRng rng(12345, n * 10 + m);
    fpdea::DmuPanel panel(n, m, 1);
    for (std::size_t i = 0; i < n; ++i) {
        double lo = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            const double x = 100.0 * rng.uniform_open();
            panel.input(i, j) = x;
            if (j == 0 || x < lo) lo = x;
        }
        panel.output(i, 0) = lo * std::exp(-rng.half_normal(1.0));
    }
    return panel;
}

void bm_ccr_multiplier(benchmark::State& state) {
    const auto panel = random_panel(static_cast<std::size_t>(state.range(0)), 2);
    std::size_t dmu = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fpdea::score_ccr_multiplier(panel, dmu).theta);
        dmu = (dmu + 1) % panel.n_dmus;
    }
}
BENCHMARK(bm_ccr_multiplier)->Arg(100)->Arg(1000);

void bm_score_fp(benchmark::State& state) {
    const auto panel = random_panel(static_cast<std::size_t>(state.range(0)), 3);
    const auto fp = fpdea::FpStructure::all_input_pairs(3);
    std::size_t dmu = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fpdea::score_fp(panel, dmu, fp).theta);
        dmu = (dmu + 1) % panel.n_dmus;
    }
}
BENCHMARK(bm_score_fp)->Arg(100)->Arg(1000);

void bm_envelopment_crs(benchmark::State& state) {
    const auto panel = random_panel(static_cast<std::size_t>(state.range(0)), 2);
    std::size_t dmu = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            fpdea::score_envelopment(panel, dmu, fpdea::Technology::Crs).theta);
        dmu = (dmu + 1) % panel.n_dmus;
    }
}
BENCHMARK(bm_envelopment_crs)->Arg(100)->Arg(1000);

void bm_replication(benchmark::State& state) {
    fpdea::ScenarioConfig cfg;
    cfg.n_inputs = 2;
    cfg.sample_size = static_cast<std::size_t>(state.range(0));
    cfg.inefficiency_sigma = 1.0;
    cfg.n_replications = 1;
    cfg.rng_seed = 7;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fpdea::run_scenario(cfg).ccr.mean_mse);
    }
}
BENCHMARK(bm_replication)->Arg(30)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
