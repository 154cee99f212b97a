#ifndef FPDEA_SIMULATION_HPP
#define FPDEA_SIMULATION_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "fpdea/panel.hpp"

namespace fpdea {

// One cell of the Monte Carlo grid.
struct ScenarioConfig {
    std::size_t n_inputs = 2;
    std::size_t sample_size = 30;
    double inefficiency_sigma = 0.0;  // 0 means no inefficiency
    std::size_t n_replications = 1;
    std::uint64_t rng_seed = 0;

    // Throws InvalidScenario on zero dimensions or counts, or a negative
    // or non-finite sigma.
    void validate() const;
};

// One draw from the data generating process: inputs uniform on [0,100),
// output y = min(x_1..x_M) * exp(-mu) with mu half-normal(sigma).
struct GeneratedSample {
    DmuPanel panel;
    std::vector<double> true_theta;  // exp(-mu_n), length N
};

struct EstimatorStats {
    double mean_mse = 0.0;
    double mean_correlation = 0.0;  // meaningful only when correlation_defined
    bool correlation_defined = false;
};

struct SimulationSummary {
    ScenarioConfig config;
    EstimatorStats ccr;
    EstimatorStats fp;
    EstimatorStats bg;
};

// Deterministic in (cfg.rng_seed, replication_index) regardless of call
// order or threading.
GeneratedSample generate_sample(const ScenarioConfig& cfg, std::size_t replication_index);

// Scores every DMU of every replication with CCR, FP under all input
// pairs declared non-substitutable, and BG with all input weights tied.
// MSE and Pearson correlation against true theta are computed per
// replication and averaged. Estimator failures surface as ScenarioError
// carrying the replication index.
SimulationSummary run_scenario(const ScenarioConfig& cfg);

// run_scenario over the list, output order matching input order. The
// first failing scenario aborts the grid; its error message reports how
// many cells had completed.
std::vector<SimulationSummary> run_grid(const std::vector<ScenarioConfig>& scenarios);

// Per-cell seed derived from a master seed and the cell coordinates, so
// a cell's draws do not depend on its position in the grid.
std::uint64_t cell_seed(std::uint64_t master_seed, std::size_t n_inputs,
                        std::size_t sample_size, double sigma);

// The full 48-cell grid: M in {2,3}, N in {30,50,100,300,500,1000},
// sigma in {0,1,2,3}.
std::vector<ScenarioConfig> paper_grid(std::size_t n_replications,
                                       std::uint64_t master_seed);

// One row per (cell, estimator), header
// M,N,sigma,estimator,mse,correlation,reps,seed. Undefined correlations
// print as NA. Byte-reproducible.
void write_summary_csv(const std::vector<SimulationSummary>& rows, std::ostream& out);

// Two tables keyed "mse" and "correlation", one entry per cell with
// per-estimator values; undefined correlations are null.
void write_summary_json(const std::vector<SimulationSummary>& rows, std::ostream& out);

}  // namespace fpdea

#endif
