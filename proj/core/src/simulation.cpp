#include "fpdea/simulation.hpp"

#include <cmath>
#include <cstring>
#include <optional>
#include <ostream>
#include <string>

#include "json.hpp"

#include "fpdea/dea.hpp"
#include "fpdea/errors.hpp"
#include "fpdea/format.hpp"
#include "fpdea/fp.hpp"
#include "fpdea/parallel.hpp"
#include "fpdea/rng.hpp"

namespace fpdea {

namespace {

double mean_squared_error(const std::vector<double>& est, const std::vector<double>& tru) {
    double acc = 0.0;
    for (std::size_t i = 0; i < est.size(); ++i) {
        const double d = est[i] - tru[i];
        acc += d * d;
    }
    return acc / static_cast<double>(est.size());
}

std::optional<double> pearson(const std::vector<double>& a, const std::vector<double>& b) {
    const auto n = static_cast<double>(a.size());
    double ma = 0.0, mb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ma += a[i];
        mb += b[i];
    }
    ma /= n;
    mb /= n;
    double saa = 0.0, sbb = 0.0, sab = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double da = a[i] - ma;
        const double db = b[i] - mb;
        saa += da * da;
        sbb += db * db;
        sab += da * db;
    }
    if (saa <= 0.0 || sbb <= 0.0) return std::nullopt;
    return sab / std::sqrt(saa * sbb);
}

struct RepStats {
    double mse[3] = {0.0, 0.0, 0.0};
    double corr[3] = {0.0, 0.0, 0.0};
    bool corr_defined[3] = {false, false, false};
};

EstimatorStats reduce(const std::vector<RepStats>& reps, int which) {
    EstimatorStats out;
    bool all_defined = true;
    double mse_sum = 0.0, corr_sum = 0.0;
    for (const RepStats& r : reps) {
        mse_sum += r.mse[which];
        if (r.corr_defined[which])
            corr_sum += r.corr[which];
        else
            all_defined = false;
    }
    const auto n = static_cast<double>(reps.size());
    out.mean_mse = mse_sum / n;
    out.correlation_defined = all_defined && !reps.empty();
    out.mean_correlation = out.correlation_defined ? corr_sum / n : 0.0;
    return out;
}

}  // namespace

void ScenarioConfig::validate() const {
    if (n_inputs == 0) throw InvalidScenario("scenario needs at least one input");
    if (sample_size == 0) throw InvalidScenario("scenario needs at least one DMU");
    if (n_replications == 0) throw InvalidScenario("scenario needs at least one replication");
    if (!(inefficiency_sigma >= 0.0) || !std::isfinite(inefficiency_sigma))
        throw InvalidScenario("inefficiency sigma must be finite and nonnegative");
}

GeneratedSample generate_sample(const ScenarioConfig& cfg, std::size_t replication_index) {
    cfg.validate();
    ReplicationRng rng(cfg.rng_seed, replication_index);
    GeneratedSample out{DmuPanel(cfg.sample_size, cfg.n_inputs, 1),
                        std::vector<double>(cfg.sample_size, 1.0)};
    for (std::size_t n = 0; n < cfg.sample_size; ++n) {
        double lo = 0.0;
        for (std::size_t m = 0; m < cfg.n_inputs; ++m) {
            const double x = 100.0 * rng.uniform_open();
            out.panel.input(n, m) = x;
            if (m == 0 || x < lo) lo = x;
        }
        double theta = 1.0;
        if (cfg.inefficiency_sigma > 0.0)
            theta = std::exp(-rng.half_normal(cfg.inefficiency_sigma));
        out.panel.output(n, 0) = lo * theta;
        out.true_theta[n] = theta;
    }
    return out;
}

SimulationSummary run_scenario(const ScenarioConfig& cfg) {
    cfg.validate();
    const FpStructure all_pairs = FpStructure::all_input_pairs(cfg.n_inputs);
    std::vector<RepStats> reps(cfg.n_replications);

    parallel_for(cfg.n_replications, thread_budget(), [&](std::size_t r) {
        try {
            const GeneratedSample sample = generate_sample(cfg, r);
            const std::size_t n = cfg.sample_size;
            std::vector<double> est[3];
            for (auto& v : est) v.resize(n);
            for (std::size_t d = 0; d < n; ++d) {
                est[0][d] = score_ccr_multiplier(sample.panel, d).theta;
                est[1][d] = score_fp(sample.panel, d, all_pairs).theta;
                est[2][d] = score_barnum(sample.panel, d, all_pairs).theta;
            }
            RepStats& st = reps[r];
            for (int k = 0; k < 3; ++k) {
                st.mse[k] = mean_squared_error(est[k], sample.true_theta);
                if (const auto c = pearson(est[k], sample.true_theta)) {
                    st.corr[k] = *c;
                    st.corr_defined[k] = true;
                }
            }
        } catch (const Error& e) {
            throw ScenarioError("replication " + std::to_string(r) + ": " + e.what(), r);
        }
    });

    SimulationSummary out;
    out.config = cfg;
    out.ccr = reduce(reps, 0);
    out.fp = reduce(reps, 1);
    out.bg = reduce(reps, 2);
    return out;
}

std::vector<SimulationSummary> run_grid(const std::vector<ScenarioConfig>& scenarios) {
    std::vector<SimulationSummary> out;
    out.reserve(scenarios.size());
    for (std::size_t i = 0; i < scenarios.size(); ++i) {
        try {
            out.push_back(run_scenario(scenarios[i]));
        } catch (const ScenarioError& e) {
            throw ScenarioError("scenario " + std::to_string(i) + " aborted the grid after " +
                                    std::to_string(out.size()) + " completed cells: " + e.what(),
                                e.replication());
        }
    }
    return out;
}

std::uint64_t cell_seed(std::uint64_t master_seed, std::size_t n_inputs,
                        std::size_t sample_size, double sigma) {
    std::uint64_t h = mix_bits(master_seed + 0x9e3779b97f4a7c15ull);
    h = mix_bits(h ^ static_cast<std::uint64_t>(n_inputs));
    h = mix_bits(h ^ static_cast<std::uint64_t>(sample_size));
    std::uint64_t sig_bits;
    static_assert(sizeof sig_bits == sizeof sigma);
    std::memcpy(&sig_bits, &sigma, sizeof sig_bits);
    return mix_bits(h ^ sig_bits);
}

std::vector<ScenarioConfig> paper_grid(std::size_t n_replications, std::uint64_t master_seed) {
    std::vector<ScenarioConfig> out;
    for (std::size_t m : {2, 3})
        for (std::size_t n : {30, 50, 100, 300, 500, 1000})
            for (double sigma : {0.0, 1.0, 2.0, 3.0}) {
                ScenarioConfig cfg;
                cfg.n_inputs = m;
                cfg.sample_size = n;
                cfg.inefficiency_sigma = sigma;
                cfg.n_replications = n_replications;
                cfg.rng_seed = cell_seed(master_seed, m, n, sigma);
                out.push_back(cfg);
            }
    return out;
}

void write_summary_csv(const std::vector<SimulationSummary>& rows, std::ostream& out) {
    out << "M,N,sigma,estimator,mse,correlation,reps,seed\n";
    static const char* names[3] = {"CCR", "FP", "BG"};
    for (const SimulationSummary& row : rows) {
        const EstimatorStats* stats[3] = {&row.ccr, &row.fp, &row.bg};
        for (int k = 0; k < 3; ++k) {
            out << row.config.n_inputs << ',' << row.config.sample_size << ','
                << format_double(row.config.inefficiency_sigma) << ',' << names[k] << ','
                << format_double(stats[k]->mean_mse) << ',';
            if (stats[k]->correlation_defined)
                out << format_double(stats[k]->mean_correlation);
            else
                out << "NA";
            out << ',' << row.config.n_replications << ',' << row.config.rng_seed << '\n';
        }
    }
}

void write_summary_json(const std::vector<SimulationSummary>& rows, std::ostream& out) {
    using json = nlohmann::ordered_json;
    json mse = json::array();
    json corr = json::array();
    for (const SimulationSummary& row : rows) {
        json base;
        base["M"] = row.config.n_inputs;
        base["N"] = row.config.sample_size;
        base["sigma"] = row.config.inefficiency_sigma;
        base["replications"] = row.config.n_replications;
        base["seed"] = row.config.rng_seed;

        json m = base;
        m["ccr"] = row.ccr.mean_mse;
        m["fp"] = row.fp.mean_mse;
        m["bg"] = row.bg.mean_mse;
        mse.push_back(std::move(m));

        json c = base;
        const EstimatorStats* stats[3] = {&row.ccr, &row.fp, &row.bg};
        const char* keys[3] = {"ccr", "fp", "bg"};
        for (int k = 0; k < 3; ++k) {
            if (stats[k]->correlation_defined)
                c[keys[k]] = stats[k]->mean_correlation;
            else
                c[keys[k]] = nullptr;
        }
        corr.push_back(std::move(c));
    }
    json doc;
    doc["mse"] = std::move(mse);
    doc["correlation"] = std::move(corr);
    out << doc.dump(2) << '\n';
}

}  // namespace fpdea
