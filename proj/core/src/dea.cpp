#include "fpdea/dea.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fpdea/fp.hpp"
#include "fpdea/lp.hpp"

namespace fpdea {
namespace {

void check_dmu_index(const DmuPanel& panel, std::size_t dmu_index) {
    if (dmu_index >= panel.n_dmus)
        throw Error("dmu index " + std::to_string(dmu_index) + " out of range");
}

bool has_positive(const DmuPanel& panel, std::size_t dmu_index, bool input_side) {
    const std::size_t dim = input_side ? panel.n_inputs : panel.n_outputs;
    for (std::size_t k = 0; k < dim; ++k) {
        const double v = input_side ? panel.input(dmu_index, k) : panel.output(dmu_index, k);
        if (v > 0.0) return true;
    }
    return false;
}

double clamp_theta(double theta) {
    if (theta > 1.0 && theta - 1.0 <= kEqualTol) return 1.0;
    return theta;
}

double nonneg(double v) { return v < 0.0 ? 0.0 : v; }

}  // namespace

namespace detail {

std::optional<EfficiencyResult> multiplier_restricted(
    const DmuPanel& panel, std::size_t dmu_index,
    const std::vector<char>& keep_inputs, const std::vector<char>& keep_outputs) {
    const std::size_t kM = panel.n_inputs;
    const std::size_t kS = panel.n_outputs;

    std::vector<std::size_t> in_cols, out_cols;
    for (std::size_t m = 0; m < kM; ++m)
        if (keep_inputs[m]) in_cols.push_back(m);
    for (std::size_t s = 0; s < kS; ++s)
        if (keep_outputs[s]) out_cols.push_back(s);

    bool any_input = false, any_output = false;
    for (std::size_t m : in_cols) any_input |= panel.input(dmu_index, m) > 0.0;
    for (std::size_t s : out_cols) any_output |= panel.output(dmu_index, s) > 0.0;
    if (!any_input || !any_output) return std::nullopt;

    // Variables: u over surviving outputs, then v over surviving inputs.
    const std::size_t nu = out_cols.size();
    const std::size_t nv = in_cols.size();
    LinearProgram lp(nu + nv, ObjectiveSense::Maximize);
    for (std::size_t a = 0; a < nu; ++a)
        lp.objective[a] = panel.output(dmu_index, out_cols[a]);
    lp.add_row(ConstraintSense::Equal, 1.0);
    for (std::size_t b = 0; b < nv; ++b)
        lp.at(0, nu + b) = panel.input(dmu_index, in_cols[b]);
    for (std::size_t j = 0; j < panel.n_dmus; ++j) {
        const std::size_t r = lp.add_row(ConstraintSense::LessEqual, 0.0);
        for (std::size_t a = 0; a < nu; ++a) lp.at(r, a) = panel.output(j, out_cols[a]);
        for (std::size_t b = 0; b < nv; ++b) lp.at(r, nu + b) = -panel.input(j, in_cols[b]);
    }

    const LpSolution sol = solve(lp);
    if (sol.status != LpStatus::Optimal)
        throw Error("multiplier program did not solve to optimality");

    EfficiencyResult res;
    res.theta = clamp_theta(sol.objective_value);
    res.output_weights.assign(kS, 0.0);
    res.input_weights.assign(kM, 0.0);
    for (std::size_t a = 0; a < nu; ++a)
        res.output_weights[out_cols[a]] = nonneg(sol.primal[a]);
    for (std::size_t b = 0; b < nv; ++b)
        res.input_weights[in_cols[b]] = nonneg(sol.primal[nu + b]);
    return res;
}

}  // namespace detail

EfficiencyResult score_ccr_multiplier(const DmuPanel& panel, std::size_t dmu_index) {
    panel.validate();
    check_dmu_index(panel, dmu_index);
    auto res = detail::multiplier_restricted(panel, dmu_index,
                                             std::vector<char>(panel.n_inputs, 1),
                                             std::vector<char>(panel.n_outputs, 1));
    if (!res)
        throw DegenerateDmu(panel.labels[dmu_index] +
                            " has no strictly positive input or output");
    return *std::move(res);
}

namespace {

EfficiencyResult envelopment_lp(const DmuPanel& panel, std::size_t dmu_index, bool vrs) {
    const std::size_t kN = panel.n_dmus;
    // Variables: theta, then lambda_1..lambda_N.
    LinearProgram lp(1 + kN, ObjectiveSense::Minimize);
    lp.objective[0] = 1.0;
    for (std::size_t m = 0; m < panel.n_inputs; ++m) {
        const std::size_t r = lp.add_row(ConstraintSense::LessEqual, 0.0);
        lp.at(r, 0) = -panel.input(dmu_index, m);
        for (std::size_t j = 0; j < kN; ++j) lp.at(r, 1 + j) = panel.input(j, m);
    }
    for (std::size_t s = 0; s < panel.n_outputs; ++s) {
        const std::size_t r = lp.add_row(ConstraintSense::GreaterEqual,
                                         panel.output(dmu_index, s));
        for (std::size_t j = 0; j < kN; ++j) lp.at(r, 1 + j) = panel.output(j, s);
    }
    if (vrs) {
        const std::size_t r = lp.add_row(ConstraintSense::Equal, 1.0);
        for (std::size_t j = 0; j < kN; ++j) lp.at(r, 1 + j) = 1.0;
    }

    const LpSolution sol = solve(lp);
    if (sol.status != LpStatus::Optimal)
        throw Error("envelopment program did not solve to optimality");

    EfficiencyResult res;
    res.theta = clamp_theta(sol.objective_value);
    res.intensity_weights.assign(kN, 0.0);
    for (std::size_t j = 0; j < kN; ++j) res.intensity_weights[j] = nonneg(sol.primal[1 + j]);
    return res;
}

EfficiencyResult fdh_enumerate(const DmuPanel& panel, std::size_t dmu_index) {
    const double inf = std::numeric_limits<double>::infinity();
    double best = inf;
    std::size_t best_j = panel.n_dmus;
    for (std::size_t j = 0; j < panel.n_dmus; ++j) {
        bool dominates = true;
        for (std::size_t s = 0; s < panel.n_outputs && dominates; ++s)
            dominates = panel.output(j, s) >= panel.output(dmu_index, s);
        if (!dominates) continue;
        double ratio = 0.0;
        for (std::size_t m = 0; m < panel.n_inputs; ++m) {
            const double x0 = panel.input(dmu_index, m);
            const double xj = panel.input(j, m);
            if (x0 > 0.0)
                ratio = std::max(ratio, xj / x0);
            else if (xj > 0.0) {
                ratio = inf;
                break;
            }
        }
        if (ratio < best) {
            best = ratio;
            best_j = j;
        }
    }
    if (best_j == panel.n_dmus || !std::isfinite(best))
        throw NoDominator(panel.labels[dmu_index] + " has no dominating DMU");

    EfficiencyResult res;
    res.theta = clamp_theta(best);
    res.intensity_weights.assign(panel.n_dmus, 0.0);
    res.intensity_weights[best_j] = 1.0;
    return res;
}

}  // namespace

EfficiencyResult score_envelopment(const DmuPanel& panel, std::size_t dmu_index,
                                   Technology tech) {
    panel.validate();
    check_dmu_index(panel, dmu_index);
    if (!has_positive(panel, dmu_index, true) || !has_positive(panel, dmu_index, false))
        throw DegenerateDmu(panel.labels[dmu_index] +
                            " has no strictly positive input or output");
    switch (tech) {
        case Technology::Crs: return envelopment_lp(panel, dmu_index, false);
        case Technology::Vrs: return envelopment_lp(panel, dmu_index, true);
        case Technology::Fdh: return fdh_enumerate(panel, dmu_index);
    }
    throw Error("unknown technology");
}

EfficiencyResult score_barnum(const DmuPanel& panel, std::size_t dmu_index,
                              const FpStructure& fp) {
    panel.validate();
    check_dmu_index(panel, dmu_index);
    fp.validate(panel.n_inputs, panel.n_outputs);
    if (!has_positive(panel, dmu_index, true) || !has_positive(panel, dmu_index, false))
        throw DegenerateDmu(panel.labels[dmu_index] +
                            " has no strictly positive input or output");

    const FpStructure ties = fp.normalized();
    const std::size_t kM = panel.n_inputs;
    const std::size_t kS = panel.n_outputs;

    // Variables: u_1..u_S then v_1..v_M, as in the unrestricted multiplier
    // model, plus one equality row per tied pair.
    LinearProgram lp(kS + kM, ObjectiveSense::Maximize);
    for (std::size_t s = 0; s < kS; ++s) lp.objective[s] = panel.output(dmu_index, s);
    lp.add_row(ConstraintSense::Equal, 1.0);
    for (std::size_t m = 0; m < kM; ++m) lp.at(0, kS + m) = panel.input(dmu_index, m);
    for (std::size_t j = 0; j < panel.n_dmus; ++j) {
        const std::size_t r = lp.add_row(ConstraintSense::LessEqual, 0.0);
        for (std::size_t s = 0; s < kS; ++s) lp.at(r, s) = panel.output(j, s);
        for (std::size_t m = 0; m < kM; ++m) lp.at(r, kS + m) = -panel.input(j, m);
    }
    for (const auto& [a, b] : ties.input_pairs) {
        const std::size_t r = lp.add_row(ConstraintSense::Equal, 0.0);
        lp.at(r, kS + a) = 1.0;
        lp.at(r, kS + b) = -1.0;
    }
    for (const auto& [a, b] : ties.output_pairs) {
        const std::size_t r = lp.add_row(ConstraintSense::Equal, 0.0);
        lp.at(r, a) = 1.0;
        lp.at(r, b) = -1.0;
    }

    const LpSolution sol = solve(lp);
    if (sol.status != LpStatus::Optimal)
        throw Error("tied-weight multiplier program did not solve to optimality");

    EfficiencyResult res;
    res.theta = clamp_theta(sol.objective_value);
    res.output_weights.assign(kS, 0.0);
    res.input_weights.assign(kM, 0.0);
    for (std::size_t s = 0; s < kS; ++s) res.output_weights[s] = nonneg(sol.primal[s]);
    for (std::size_t m = 0; m < kM; ++m) res.input_weights[m] = nonneg(sol.primal[kS + m]);
    return res;
}

}  // namespace fpdea
