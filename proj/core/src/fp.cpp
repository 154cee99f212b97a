#include "fpdea/fp.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "fpdea/lp.hpp"

namespace fpdea {
namespace {

constexpr std::size_t kMaxMaskBits = 63;

std::vector<std::size_t> mask_to_indices(std::uint64_t mask) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; mask != 0; ++i, mask >>= 1)
        if (mask & 1) out.push_back(i);
    return out;
}

// Every minimal zero-mask satisfying the pairwise disjunctions on one side.
std::vector<std::uint64_t> side_masks(
    const std::vector<std::pair<std::size_t, std::size_t>>& pairs, std::size_t dim) {
    std::set<std::uint64_t> acc = {0};
    for (const auto& [a, b] : pairs) {
        std::set<std::uint64_t> next;
        for (std::uint64_t mask : acc) {
            next.insert(mask | (1ull << a));
            next.insert(mask | (1ull << b));
        }
        acc = std::move(next);
    }
    const std::uint64_t full = (1ull << dim) - 1;
    std::vector<std::uint64_t> candidates;
    for (std::uint64_t mask : acc)
        if (mask != full) candidates.push_back(mask);

    std::vector<std::uint64_t> minimal;
    for (std::uint64_t mask : candidates) {
        bool has_subset = false;
        for (std::uint64_t other : candidates)
            if (other != mask && (other & mask) == other) {
                has_subset = true;
                break;
            }
        if (!has_subset) minimal.push_back(mask);
    }
    return minimal;
}

}  // namespace

FpStructure FpStructure::all_input_pairs(std::size_t n_inputs) {
    FpStructure fp;
    for (std::size_t a = 0; a < n_inputs; ++a)
        for (std::size_t b = a + 1; b < n_inputs; ++b)
            fp.input_pairs.emplace_back(a, b);
    return fp;
}

void FpStructure::validate(std::size_t n_inputs, std::size_t n_outputs) const {
    for (const auto& [a, b] : input_pairs) {
        if (a >= n_inputs || b >= n_inputs)
            throw InvalidFpStructure("input pair index out of range");
        if (a == b) throw InvalidFpStructure("input pair must name two distinct inputs");
    }
    for (const auto& [a, b] : output_pairs) {
        if (a >= n_outputs || b >= n_outputs)
            throw InvalidFpStructure("output pair index out of range");
        if (a == b) throw InvalidFpStructure("output pair must name two distinct outputs");
    }
}

FpStructure FpStructure::normalized() const {
    auto canon = [](std::vector<std::pair<std::size_t, std::size_t>> pairs) {
        for (auto& [a, b] : pairs)
            if (a > b) std::swap(a, b);
        std::sort(pairs.begin(), pairs.end());
        pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
        return pairs;
    };
    FpStructure out;
    out.input_pairs = canon(input_pairs);
    out.output_pairs = canon(output_pairs);
    return out;
}

std::vector<SupportBranch> enumerate_branches(const FpStructure& fp,
                                              std::size_t n_inputs,
                                              std::size_t n_outputs) {
    fp.validate(n_inputs, n_outputs);
    if (n_inputs > kMaxMaskBits || n_outputs > kMaxMaskBits)
        throw InvalidFpStructure("too many columns for branch enumeration");
    const FpStructure norm = fp.normalized();

    const std::vector<std::uint64_t> in_masks = side_masks(norm.input_pairs, n_inputs);
    const std::vector<std::uint64_t> out_masks = side_masks(norm.output_pairs, n_outputs);
    if (in_masks.empty() || out_masks.empty())
        throw NoFeasibleBranch("every branch zeroes an entire side");

    std::vector<SupportBranch> branches;
    branches.reserve(in_masks.size() * out_masks.size());
    for (std::uint64_t im : in_masks)
        for (std::uint64_t om : out_masks)
            branches.push_back({mask_to_indices(im), mask_to_indices(om)});
    std::sort(branches.begin(), branches.end(),
              [](const SupportBranch& a, const SupportBranch& b) {
                  if (a.zeroed_inputs != b.zeroed_inputs)
                      return a.zeroed_inputs < b.zeroed_inputs;
                  return a.zeroed_outputs < b.zeroed_outputs;
              });
    return branches;
}

EfficiencyResult score_fp(const DmuPanel& panel, std::size_t dmu_index,
                          const FpStructure& fp) {
    panel.validate();
    if (dmu_index >= panel.n_dmus)
        throw Error("dmu index " + std::to_string(dmu_index) + " out of range");
    const std::vector<SupportBranch> branches =
        enumerate_branches(fp, panel.n_inputs, panel.n_outputs);

    EfficiencyResult best;
    best.theta = 0.0;
    const SupportBranch* winner = nullptr;
    for (const SupportBranch& branch : branches) {
        std::vector<char> keep_in(panel.n_inputs, 1), keep_out(panel.n_outputs, 1);
        for (std::size_t m : branch.zeroed_inputs) keep_in[m] = 0;
        for (std::size_t s : branch.zeroed_outputs) keep_out[s] = 0;
        auto res = detail::multiplier_restricted(panel, dmu_index, keep_in, keep_out);
        if (!res) continue;
        if (res->theta > best.theta) {
            best = *std::move(res);
            winner = &branch;
        }
    }
    if (winner == nullptr || best.theta <= 0.0)
        throw DegenerateDmu(panel.labels[dmu_index] +
                            " has no branch with a positive surviving input and output");
    best.support_branch = *winner;
    return best;
}

}  // namespace fpdea
