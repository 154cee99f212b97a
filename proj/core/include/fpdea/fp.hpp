#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "fpdea/dea.hpp"
#include "fpdea/panel.hpp"

namespace fpdea {

// Declares which input pairs are non-substitutable and which output pairs
// are non-transformable. Pairs are unordered; index order and duplicates do
// not matter.
struct FpStructure {
    std::vector<std::pair<std::size_t, std::size_t>> input_pairs;
    std::vector<std::pair<std::size_t, std::size_t>> output_pairs;

    // Every distinct input pair, for the fully fixed-proportion case.
    static FpStructure all_input_pairs(std::size_t n_inputs);

    // Throws InvalidFpStructure on an out-of-range index or a self-pair.
    void validate(std::size_t n_inputs, std::size_t n_outputs) const;

    // Canonical copy: each pair ordered low-high, lists sorted, duplicates
    // dropped.
    FpStructure normalized() const;
};

// All minimal ways to satisfy the disjunctions: per pair at least one side's
// weight is forced to zero; branches zeroing a superset of another branch are
// dropped; ordered lexicographically by zeroed index sets.
std::vector<SupportBranch> enumerate_branches(const FpStructure& fp,
                                              std::size_t n_inputs,
                                              std::size_t n_outputs);

// FP-constrained efficiency: best CCR score over the support branches.
// support_branch records the winning branch (lexicographically first on
// ties).
EfficiencyResult score_fp(const DmuPanel& panel, std::size_t dmu_index,
                          const FpStructure& fp);

}  // namespace fpdea
