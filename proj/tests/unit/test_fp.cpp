#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "fpdea/dea.hpp"
#include "fpdea/fp.hpp"
#include "panel_gen.hpp"
#include "test_rng.hpp"

using namespace fpdea;

namespace {

using IndexSet = std::vector<std::size_t>;

// Reduced-panel CCR over one zero-pattern; nullopt when the evaluated DMU
// keeps no positive input or output.
std::optional<double> pattern_score(const DmuPanel& p, std::size_t dmu,
                                    const IndexSet& zero_in, const IndexSet& zero_out) {
    std::vector<std::size_t> in_cols, out_cols;
    for (std::size_t m = 0; m < p.n_inputs; ++m)
        if (std::find(zero_in.begin(), zero_in.end(), m) == zero_in.end())
            in_cols.push_back(m);
    for (std::size_t s = 0; s < p.n_outputs; ++s)
        if (std::find(zero_out.begin(), zero_out.end(), s) == zero_out.end())
            out_cols.push_back(s);
    if (in_cols.empty() || out_cols.empty()) return std::nullopt;

    DmuPanel sub(p.n_dmus, in_cols.size(), out_cols.size());
    for (std::size_t n = 0; n < p.n_dmus; ++n) {
        for (std::size_t a = 0; a < in_cols.size(); ++a)
            sub.input(n, a) = p.input(n, in_cols[a]);
        for (std::size_t b = 0; b < out_cols.size(); ++b)
            sub.output(n, b) = p.output(n, out_cols[b]);
    }
    bool any_in = false, any_out = false;
    for (std::size_t a = 0; a < in_cols.size(); ++a) any_in |= sub.input(dmu, a) > 0.0;
    for (std::size_t b = 0; b < out_cols.size(); ++b) any_out |= sub.output(dmu, b) > 0.0;
    if (!any_in || !any_out) return std::nullopt;
    return score_ccr_multiplier(sub, dmu).theta;
}

bool satisfies(const IndexSet& zeroed,
               const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    for (const auto& [a, b] : pairs) {
        const bool za = std::find(zeroed.begin(), zeroed.end(), a) != zeroed.end();
        const bool zb = std::find(zeroed.begin(), zeroed.end(), b) != zeroed.end();
        if (!za && !zb) return false;
    }
    return true;
}

IndexSet mask_indices(unsigned mask, std::size_t dim) {
    IndexSet out;
    for (std::size_t i = 0; i < dim; ++i)
        if (mask & (1u << i)) out.push_back(i);
    return out;
}

}  // namespace

TEST_CASE("branch enumeration") {
    SUBCASE("one input pair splits into two branches") {
        FpStructure fp;
        fp.input_pairs = {{0, 1}};
        const auto branches = enumerate_branches(fp, 2, 1);
        REQUIRE(branches.size() == 2);
        CHECK(branches[0].zeroed_inputs == IndexSet{0});
        CHECK(branches[1].zeroed_inputs == IndexSet{1});
        CHECK(branches[0].zeroed_outputs.empty());
    }
    SUBCASE("no disjunctions leave the single empty branch") {
        const auto branches = enumerate_branches(FpStructure{}, 3, 2);
        REQUIRE(branches.size() == 1);
        CHECK(branches[0].zeroed_inputs.empty());
        CHECK(branches[0].zeroed_outputs.empty());
    }
    SUBCASE("full mutual non-substitutability keeps one input per branch") {
        const FpStructure fp = FpStructure::all_input_pairs(3);
        const auto branches = enumerate_branches(fp, 3, 1);
        REQUIRE(branches.size() == 3);
        CHECK(branches[0].zeroed_inputs == IndexSet{0, 1});
        CHECK(branches[1].zeroed_inputs == IndexSet{0, 2});
        CHECK(branches[2].zeroed_inputs == IndexSet{1, 2});
    }
    SUBCASE("pair order and duplicates do not matter") {
        FpStructure a, b;
        a.input_pairs = {{0, 1}, {1, 0}, {0, 1}};
        b.input_pairs = {{0, 1}};
        CHECK(enumerate_branches(a, 2, 1) == enumerate_branches(b, 2, 1));
    }
    SUBCASE("input and output disjunctions combine as a product") {
        FpStructure fp;
        fp.input_pairs = {{0, 1}};
        fp.output_pairs = {{0, 1}};
        const auto branches = enumerate_branches(fp, 2, 2);
        REQUIRE(branches.size() == 4);
        CHECK(branches[0].zeroed_inputs == IndexSet{0});
        CHECK(branches[0].zeroed_outputs == IndexSet{0});
        CHECK(branches[3].zeroed_inputs == IndexSet{1});
        CHECK(branches[3].zeroed_outputs == IndexSet{1});
    }
    SUBCASE("bad structures are rejected") {
        FpStructure fp;
        fp.input_pairs = {{0, 2}};
        CHECK_THROWS_AS(enumerate_branches(fp, 2, 1), InvalidFpStructure);
        fp.input_pairs = {{1, 1}};
        CHECK_THROWS_AS(enumerate_branches(fp, 2, 1), InvalidFpStructure);
    }
}

TEST_CASE("fp scoring picks the best branch") {
    DmuPanel p(2, 2, 1);
    p.input(0, 0) = 1;  p.input(0, 1) = 1;  p.output(0, 0) = 1;
    p.input(1, 0) = 1;  p.input(1, 1) = 2;  p.output(1, 0) = 1;
    FpStructure fp;
    fp.input_pairs = {{0, 1}};

    const EfficiencyResult r = score_fp(p, 1, fp);
    CHECK(r.theta == doctest::Approx(1.0).epsilon(1e-9));
    REQUIRE(r.support_branch.has_value());
    CHECK(r.support_branch->zeroed_inputs == IndexSet{1});
    CHECK(r.input_weights[1] == 0.0);
    CHECK(r.input_weights[0] > 0.0);
}

TEST_CASE("no disjunctions reduce fp to plain CCR") {
    testing::TestRng rng(53);
    const DmuPanel p = testing::random_panel(rng, 8, 3, 2);
    for (std::size_t n = 0; n < p.n_dmus; ++n) {
        const EfficiencyResult a = score_fp(p, n, FpStructure{});
        const EfficiencyResult b = score_ccr_multiplier(p, n);
        CHECK(a.theta == doctest::Approx(b.theta).epsilon(1e-12));
        REQUIRE(a.support_branch.has_value());
        CHECK(a.support_branch->zeroed_inputs.empty());
    }
}

TEST_CASE("exact fit on fixed-proportion data without inefficiency") {
    testing::TestRng rng(59);
    for (std::size_t m : {2u, 3u}) {
        const DmuPanel p = testing::leontief_panel(rng, 20, m, false);
        const FpStructure fp = FpStructure::all_input_pairs(m);
        for (std::size_t n = 0; n < p.n_dmus; ++n)
            CHECK(std::fabs(score_fp(p, n, fp).theta - 1.0) <= 1e-9);
    }
}

TEST_CASE("fp agrees with the exhaustive zero-pattern oracle") {
    testing::TestRng rng(61);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t m = 2 + rng.below(2);
        const std::size_t s = 1 + rng.below(2);
        const DmuPanel p = testing::random_panel(rng, 7, m, s);
        FpStructure fp;
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = a + 1; b < m; ++b)
                if (rng.below(2) == 0) fp.input_pairs.push_back({a, b});
        if (s == 2 && rng.below(2) == 0) fp.output_pairs.push_back({0, 1});

        for (std::size_t n = 0; n < p.n_dmus; ++n) {
            double want = 0.0;
            for (unsigned im = 0; im < (1u << m); ++im) {
                const IndexSet zin = mask_indices(im, m);
                if (!satisfies(zin, fp.input_pairs)) continue;
                for (unsigned om = 0; om < (1u << s); ++om) {
                    const IndexSet zout = mask_indices(om, s);
                    if (!satisfies(zout, fp.output_pairs)) continue;
                    const auto got = pattern_score(p, n, zin, zout);
                    if (got) want = std::max(want, *got);
                }
            }
            CHECK(std::fabs(score_fp(p, n, fp).theta - want) <= 1e-9);
        }
    }
}

TEST_CASE("returned weights satisfy every disjunction exactly") {
    testing::TestRng rng(67);
    const DmuPanel p = testing::random_panel(rng, 10, 3, 2);
    FpStructure fp;
    fp.input_pairs = {{0, 1}, {1, 2}};
    fp.output_pairs = {{0, 1}};
    for (std::size_t n = 0; n < p.n_dmus; ++n) {
        const EfficiencyResult r = score_fp(p, n, fp);
        for (const auto& [a, b] : fp.input_pairs)
            CHECK(r.input_weights[a] * r.input_weights[b] == 0.0);
        for (const auto& [a, b] : fp.output_pairs)
            CHECK(r.output_weights[a] * r.output_weights[b] == 0.0);
        CHECK(r.theta <= score_ccr_multiplier(p, n).theta + 1e-6);
    }
}

TEST_CASE("fp keeps the CCR invariances") {
    testing::TestRng rng(71);
    const DmuPanel p = testing::random_panel(rng, 9, 2, 1);
    const FpStructure fp = FpStructure::all_input_pairs(2);

    SUBCASE("units invariance") {
        DmuPanel scaled = p;
        for (std::size_t n = 0; n < p.n_dmus; ++n) scaled.input(n, 0) *= 12.5;
        for (std::size_t n = 0; n < p.n_dmus; ++n)
            CHECK(std::fabs(score_fp(p, n, fp).theta -
                            score_fp(scaled, n, fp).theta) <= 1e-6);
    }
    SUBCASE("frontier growth monotonicity") {
        DmuPanel grown(10, 2, 1);
        std::copy(p.inputs.begin(), p.inputs.end(), grown.inputs.begin());
        std::copy(p.outputs.begin(), p.outputs.end(), grown.outputs.begin());
        grown.input(9, 0) = 3.0;
        grown.input(9, 1) = 4.0;
        grown.output(9, 0) = 80.0;
        for (std::size_t n = 0; n < p.n_dmus; ++n)
            CHECK(score_fp(grown, n, fp).theta <= score_fp(p, n, fp).theta + 1e-6);
    }
}

TEST_CASE("a DMU dead on every branch is degenerate") {
    DmuPanel p(2, 2, 1);
    p.input(0, 0) = 1;  p.input(0, 1) = 2;  p.output(0, 0) = 0;
    p.input(1, 0) = 1;  p.input(1, 1) = 1;  p.output(1, 0) = 1;
    CHECK_THROWS_AS(score_fp(p, 0, FpStructure::all_input_pairs(2)), DegenerateDmu);
}
