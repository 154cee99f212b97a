#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fpdea/panel.hpp"

namespace fpdea {

struct FpStructure;

// Indices whose weights a fixed-proportion branch forces to zero. Sorted
// ascending.
struct SupportBranch {
    std::vector<std::size_t> zeroed_inputs;
    std::vector<std::size_t> zeroed_outputs;

    bool operator==(const SupportBranch&) const = default;
};

struct EfficiencyResult {
    double theta = 0.0;
    std::vector<double> input_weights;      // v, length M (multiplier runs)
    std::vector<double> output_weights;     // u, length S (multiplier runs)
    std::vector<double> intensity_weights;  // lambda, length N (envelopment runs)
    std::optional<SupportBranch> support_branch;  // populated by FP runs
};

// Input-oriented CCR in multiplier form:
//   max u.y0  s.t.  v.x0 = 1,  u.y_j - v.x_j <= 0 for all j,  u, v >= 0.
EfficiencyResult score_ccr_multiplier(const DmuPanel& panel, std::size_t dmu_index);

// Input-oriented envelopment score. CRS/VRS solve
//   min theta  s.t.  sum_j lambda_j x_j <= theta x0,  sum_j lambda_j y_j >= y0
// (VRS adds sum lambda = 1); FDH enumerates dominating DMUs directly.
EfficiencyResult score_envelopment(const DmuPanel& panel, std::size_t dmu_index,
                                   Technology tech);

// CCR with weights tied equal across each declared pair: v_m = v_mtilde for
// input pairs, u_s = u_stilde for output pairs.
EfficiencyResult score_barnum(const DmuPanel& panel, std::size_t dmu_index,
                              const FpStructure& fp);

namespace detail {

// Multiplier-form CCR restricted to the surviving columns; weights on
// dropped indices are exactly zero in the result. keep masks have panel
// dimensions. Returns nullopt when the evaluated DMU has no surviving
// positive input or no surviving positive output (the caller decides
// whether that is a sentinel or an error).
std::optional<EfficiencyResult> multiplier_restricted(
    const DmuPanel& panel, std::size_t dmu_index,
    const std::vector<char>& keep_inputs, const std::vector<char>& keep_outputs);

}  // namespace detail

}  // namespace fpdea
