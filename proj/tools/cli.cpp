#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "fpdea/dea.hpp"
#include "fpdea/errors.hpp"
#include "fpdea/format.hpp"
#include "fpdea/fp.hpp"
#include "fpdea/isoquant.hpp"
#include "fpdea/simulation.hpp"
#include "panel_csv.hpp"

namespace fpdea::cli {

namespace {

struct ScoreOptions {
    std::string input;
    std::string output = "scores.csv";
    std::string estimator = "ccr";
    std::vector<std::string> fp_inputs;
    std::vector<std::string> fp_outputs;
};

struct SimulateOptions {
    long long reps = 1000;
    std::vector<std::string> cells;
    std::uint64_t seed = 0;
    std::string csv = "simulation.csv";
    std::string json = "simulation.json";
};

struct IsoquantOptions {
    std::string input;
    std::string scenario;
    std::string svg = "isoquant.svg";
    std::string csv = "isoquant_vertices.csv";
};

class ExitWith {
  public:
    ExitWith(int code, std::string message) : code_(code), message_(std::move(message)) {}
    int code() const { return code_; }
    const std::string& message() const { return message_; }

  private:
    int code_;
    std::string message_;
};

std::size_t column_index(const std::string& name, char prefix, std::size_t dim) {
    if (name.size() >= 2 && name[0] == prefix) {
        std::size_t idx = 0;
        const auto res = std::from_chars(name.data() + 1, name.data() + name.size(), idx);
        if (res.ec == std::errc() && res.ptr == name.data() + name.size() && idx >= 1 &&
            idx <= dim)
            return idx - 1;
    }
    throw ExitWith(2, "unknown column '" + name + "'");
}

void add_pairs(const std::vector<std::string>& specs, char prefix, std::size_t dim,
               std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    for (const std::string& spec : specs) {
        if (spec == "all") {
            for (std::size_t a = 0; a < dim; ++a)
                for (std::size_t b = a + 1; b < dim; ++b) pairs.push_back({a, b});
            continue;
        }
        const auto comma = spec.find(',');
        if (comma == std::string::npos || spec.find(',', comma + 1) != std::string::npos)
            throw ExitWith(2, "bad pair '" + spec + "', expected two column names");
        const std::size_t a = column_index(spec.substr(0, comma), prefix, dim);
        const std::size_t b = column_index(spec.substr(comma + 1), prefix, dim);
        if (a == b) throw ExitWith(2, "pair '" + spec + "' names the same column twice");
        pairs.push_back({a, b});
    }
}

std::string branch_text(const DmuPanel& panel, const std::optional<SupportBranch>& br) {
    if (!br) return "";
    std::string out;
    for (std::size_t m : br->zeroed_inputs) {
        if (!out.empty()) out += ';';
        out += "x" + std::to_string(m + 1);
    }
    for (std::size_t s : br->zeroed_outputs) {
        if (!out.empty()) out += ';';
        out += "y" + std::to_string(s + 1);
    }
    (void)panel;
    return out;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ExitWith(2, "cannot open " + path + " for writing");
    return out;
}

// key=value list like "M=2,N=30,sigma=1.5,seed=7"
std::map<std::string, std::string> parse_kv(const std::string& spec) {
    std::map<std::string, std::string> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ExitWith(2, "bad cell spec '" + spec + "', expected key=value pairs");
        if (!out.insert({item.substr(0, eq), item.substr(eq + 1)}).second)
            throw ExitWith(2, "duplicate key in '" + spec + "'");
    }
    return out;
}

template <typename T>
T parse_num(const std::map<std::string, std::string>& kv, const std::string& key,
            const std::string& spec) {
    const auto it = kv.find(key);
    if (it == kv.end()) throw ExitWith(2, "missing " + key + " in '" + spec + "'");
    T v{};
    const auto res =
        std::from_chars(it->second.data(), it->second.data() + it->second.size(), v);
    if (res.ec != std::errc() || res.ptr != it->second.data() + it->second.size())
        throw ExitWith(2, "bad value for " + key + " in '" + spec + "'");
    return v;
}

int cmd_score(const ScoreOptions& opt, std::ostream&, std::ostream& err) {
    DmuPanel panel = [&] {
        try {
            return load_panel_csv_file(opt.input);
        } catch (const CsvError& e) {
            throw ExitWith(2, std::string(e.what()));
        }
    }();

    FpStructure fp;
    add_pairs(opt.fp_inputs, 'x', panel.n_inputs, fp.input_pairs);
    add_pairs(opt.fp_outputs, 'y', panel.n_outputs, fp.output_pairs);

    std::vector<std::string> estimators;
    if (opt.estimator == "all")
        estimators = {"ccr", "vrs", "fdh", "fp", "bg"};
    else
        estimators = {opt.estimator};

    std::ostringstream body;
    body << "dmu,theta,estimator,support_branch\n";
    for (const std::string& est : estimators) {
        for (std::size_t n = 0; n < panel.n_dmus; ++n) {
            EfficiencyResult r;
            try {
                if (est == "ccr")
                    r = score_ccr_multiplier(panel, n);
                else if (est == "vrs")
                    r = score_envelopment(panel, n, Technology::Vrs);
                else if (est == "fdh")
                    r = score_envelopment(panel, n, Technology::Fdh);
                else if (est == "fp")
                    r = score_fp(panel, n, fp);
                else
                    r = score_barnum(panel, n, fp);
            } catch (const Error& e) {
                err << "dmu '" << panel.labels[n] << "', estimator " << est << ": "
                    << e.what() << "\n";
                return 3;
            }
            body << panel.labels[n] << ',' << format_double(r.theta) << ',' << est << ','
                 << branch_text(panel, r.support_branch) << '\n';
        }
    }
    open_out(opt.output) << body.str();
    return 0;
}

void print_tables(const std::vector<SimulationSummary>& rows, std::ostream& out) {
    out << "MSE\n";
    out << "M\tN\tsigma\tCCR\tFP\tBG\n";
    for (const SimulationSummary& r : rows) {
        out << r.config.n_inputs << '\t' << r.config.sample_size << '\t'
            << format_double(r.config.inefficiency_sigma) << '\t'
            << format_double(r.ccr.mean_mse) << '\t' << format_double(r.fp.mean_mse)
            << '\t' << format_double(r.bg.mean_mse) << '\n';
    }
    out << "\nCorrelation\n";
    out << "M\tN\tsigma\tCCR\tFP\tBG\n";
    for (const SimulationSummary& r : rows) {
        out << r.config.n_inputs << '\t' << r.config.sample_size << '\t'
            << format_double(r.config.inefficiency_sigma);
        for (const EstimatorStats* st : {&r.ccr, &r.fp, &r.bg}) {
            out << '\t';
            if (st->correlation_defined)
                out << format_double(st->mean_correlation);
            else
                out << "NA";
        }
        out << '\n';
    }
}

int cmd_simulate(const SimulateOptions& opt, std::ostream& out, std::ostream& err) {
    if (opt.reps < 1) throw ExitWith(2, "reps must be >= 1");
    const auto reps = static_cast<std::size_t>(opt.reps);

    std::vector<ScenarioConfig> cells;
    if (opt.cells.empty()) {
        cells = paper_grid(reps, opt.seed);
    } else {
        for (const std::string& spec : opt.cells) {
            const auto kv = parse_kv(spec);
            if (kv.size() != 3 || !kv.count("M") || !kv.count("N") || !kv.count("sigma"))
                throw ExitWith(2, "cell spec '" + spec + "' needs exactly M, N and sigma");
            ScenarioConfig cfg;
            cfg.n_inputs = parse_num<std::size_t>(kv, "M", spec);
            cfg.sample_size = parse_num<std::size_t>(kv, "N", spec);
            cfg.inefficiency_sigma = parse_num<double>(kv, "sigma", spec);
            cfg.n_replications = reps;
            cfg.rng_seed = cell_seed(opt.seed, cfg.n_inputs, cfg.sample_size,
                                     cfg.inefficiency_sigma);
            try {
                cfg.validate();
            } catch (const InvalidScenario& e) {
                throw ExitWith(2, "cell spec '" + spec + "': " + e.what());
            }
            cells.push_back(cfg);
        }
    }

    std::vector<SimulationSummary> rows;
    rows.reserve(cells.size());
    for (const ScenarioConfig& cfg : cells) {
        try {
            rows.push_back(run_scenario(cfg));
        } catch (const ScenarioError& e) {
            err << "scenario M=" << cfg.n_inputs << ",N=" << cfg.sample_size
                << ",sigma=" << format_double(cfg.inefficiency_sigma) << ": " << e.what()
                << "\n";
            return 3;
        }
    }

    {
        auto csv = open_out(opt.csv);
        write_summary_csv(rows, csv);
    }
    {
        auto json = open_out(opt.json);
        write_summary_json(rows, json);
    }
    print_tables(rows, out);
    return 0;
}

int cmd_isoquant(const IsoquantOptions& opt, std::ostream&, std::ostream& err) {
    if (opt.input.empty() == opt.scenario.empty())
        throw ExitWith(2, "pass exactly one of --input or --scenario");

    std::optional<DmuPanel> panel;
    if (!opt.input.empty()) {
        try {
            panel = load_panel_csv_file(opt.input);
        } catch (const CsvError& e) {
            throw ExitWith(2, std::string(e.what()));
        }
        if (panel->n_inputs != 2 || panel->n_outputs != 1)
            throw ExitWith(2, "isoquant needs a two-input, one-output panel; got " +
                                  std::to_string(panel->n_inputs) + " inputs and " +
                                  std::to_string(panel->n_outputs) + " outputs");
    } else {
        const auto kv = parse_kv(opt.scenario);
        if (kv.size() != 4 || !kv.count("M") || !kv.count("N") || !kv.count("sigma") ||
            !kv.count("seed"))
            throw ExitWith(2, "scenario spec '" + opt.scenario +
                                  "' needs exactly M, N, sigma and seed");
        ScenarioConfig cfg;
        cfg.n_inputs = parse_num<std::size_t>(kv, "M", opt.scenario);
        cfg.sample_size = parse_num<std::size_t>(kv, "N", opt.scenario);
        cfg.inefficiency_sigma = parse_num<double>(kv, "sigma", opt.scenario);
        cfg.rng_seed = parse_num<std::uint64_t>(kv, "seed", opt.scenario);
        cfg.n_replications = 1;
        if (cfg.n_inputs != 2) throw ExitWith(2, "isoquant scenarios need M=2");
        try {
            cfg.validate();
        } catch (const InvalidScenario& e) {
            throw ExitWith(2, "scenario spec '" + opt.scenario + "': " + e.what());
        }
        panel = generate_sample(cfg, 0).panel;
    }

    try {
        const std::vector<IsoquantPolyline> lines = {
            build_isoquant(*panel, IsoquantTag::True),
            build_isoquant(*panel, IsoquantTag::Ccr),
            build_isoquant(*panel, IsoquantTag::Fp),
            build_isoquant(*panel, IsoquantTag::Bg)};
        render_svg(lines, *panel, opt.svg);
        auto csv = open_out(opt.csv);
        write_vertex_csv(lines, csv);
    } catch (const IoFailure& e) {
        throw ExitWith(2, std::string(e.what()));
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 3;
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fixed-proportion DEA toolkit"};
    app.require_subcommand(1);

    ScoreOptions score;
    CLI::App* sc = app.add_subcommand("score", "Score a panel CSV with one estimator");
    sc->add_option("--input,-i", score.input, "panel CSV (dmu,x1..xM,y1..yS)")
        ->required();
    sc->add_option("--output,-o", score.output, "per-DMU result CSV");
    sc->add_option("--estimator,-e", score.estimator, "ccr, vrs, fdh, fp, bg or all")
        ->check(CLI::IsMember({"ccr", "vrs", "fdh", "fp", "bg", "all"}));
    sc->add_option("--fp-inputs", score.fp_inputs,
                   "non-substitutable input pair 'x1,x2', repeatable; or 'all'");
    sc->add_option("--fp-outputs", score.fp_outputs,
                   "non-substitutable output pair 'y1,y2', repeatable; or 'all'");

    SimulateOptions sim;
    CLI::App* si = app.add_subcommand("simulate", "Run the Monte Carlo grid");
    si->add_option("--reps,-r", sim.reps, "replications per cell");
    si->add_option("--cells", sim.cells,
                   "cell spec 'M=2,N=30,sigma=0', repeatable; default all 48");
    si->add_option("--seed", sim.seed, "master seed");
    si->add_option("--csv", sim.csv, "summary CSV path");
    si->add_option("--json", sim.json, "summary JSON path");

    IsoquantOptions iso;
    CLI::App* io = app.add_subcommand("isoquant", "Draw unit isoquants for a 2-input panel");
    io->add_option("--input,-i", iso.input, "panel CSV");
    io->add_option("--scenario", iso.scenario, "generate a panel: 'M=2,N=30,sigma=0,seed=7'");
    io->add_option("--svg", iso.svg, "figure path");
    io->add_option("--csv", iso.csv, "vertex CSV path");

    std::vector<const char*> argv;
    argv.push_back("fpdea");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (sc->parsed()) return cmd_score(score, out, err);
        if (si->parsed()) return cmd_simulate(sim, out, err);
        return cmd_isoquant(iso, out, err);
    } catch (const ExitWith& e) {
        err << e.message() << "\n";
        return e.code();
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 3;
    }
}

}  // namespace fpdea::cli
