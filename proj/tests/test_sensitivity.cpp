#include <gtest/gtest.h>

#include "sspahp/errors.hpp"
#include "sspahp/sensitivity.hpp"
#include "support.hpp"

using namespace sspahp;

namespace {

struct Problem {
    DecisionMatrix matrix;
    WeightVector weights;
    CriteriaHierarchy hierarchy;
};

// Three dimensions over seven criteria, criteria C1..C7 in hierarchy order.
Problem problem(std::uint64_t seed) {
    testsupport::Gen gen(seed);
    Problem p;
    p.matrix = gen.matrix(9, 7);
    p.weights = gen.weights(p.matrix);
    p.hierarchy.dimensions = {{"G1", "a", {{"x", {"C1", "C2"}}, {"y", {"C3"}}}},
                              {"G2", "b", {{"x", {"C4", "C5"}}}},
                              {"G3", "c", {{"x", {"C6"}}, {"y", {"C7"}}}}};
    for (std::size_t j = 0; j < 7; ++j) p.hierarchy.objectives[p.matrix.criterion_ids[j]] = p.matrix.objectives[j];
    return p;
}

}  // namespace

TEST(Grid, StepsAndErrors) {
    EXPECT_EQ(make_grid(0.25), (std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0}));
    EXPECT_EQ(make_grid(0.05).size(), 21u);
    EXPECT_EQ(make_grid(0.05).back(), 1.0);
    EXPECT_THROW(make_grid(0.3), InputError);
    EXPECT_THROW(make_grid(0.0), InputError);
}

TEST(Subsets, BinaryOrderWithLastDimensionLowest) {
    const std::vector<std::string> ids{"G1", "G2", "G3"};
    const auto s = all_subsets(ids);
    ASSERT_EQ(s.size(), 8u);
    EXPECT_TRUE(s[0].empty());
    EXPECT_EQ(s[1], (GroupSubset{"G3"}));
    EXPECT_EQ(s[2], (GroupSubset{"G2"}));
    EXPECT_EQ(s[3], (GroupSubset{"G2", "G3"}));
    EXPECT_EQ(s[4], (GroupSubset{"G1"}));
    EXPECT_EQ(s[7], (GroupSubset{"G1", "G2", "G3"}));
    EXPECT_EQ(subset_label(s[0]), "none");
    EXPECT_EQ(subset_label(s[5]), "G1+G3");
}

TEST(Trajectory, SpanAndTrend) {
    const std::vector<int> flat{4, 4, 4}, rising{3, 3, 4, 4, 6, 7}, mixed{2, 1, 3};
    const auto a = summarize_trajectory(flat);
    EXPECT_EQ(a.span, 0);
    EXPECT_TRUE(a.stable);
    EXPECT_EQ(a.trend, RankTrend::Constant);
    const auto b = summarize_trajectory(rising);
    EXPECT_EQ(b.min_rank, 3);
    EXPECT_EQ(b.max_rank, 7);
    EXPECT_EQ(b.span, 4);
    EXPECT_FALSE(b.stable);
    EXPECT_EQ(b.trend, RankTrend::Worsening);
    EXPECT_EQ(summarize_trajectory(mixed).trend, RankTrend::Mixed);
}

TEST(Sweep, ShapeBaselineAndEmptySubset) {
    const auto p = problem(901);
    const auto r = run_sweep(p.matrix, p.weights, p.hierarchy, {});
    ASSERT_EQ(r.subsets.size(), 8u);
    ASSERT_EQ(r.s_grid.size(), 21u);
    const auto baseline =
        evaluate(p.matrix, p.weights, SustainabilityCoefficients::uniform(7, 0.0));
    for (std::size_t k = 0; k < r.subsets.size(); ++k) {
        EXPECT_EQ(r.at(k, 0).ranking, baseline.ranking);
        EXPECT_EQ(r.at(k, 0).utilities, baseline.utilities);
    }
    for (std::size_t g = 0; g < r.s_grid.size(); ++g) EXPECT_EQ(r.at(0, g).ranking, baseline.ranking);
    for (const auto& row : stability_report(r)) EXPECT_GE(row.span, 0);
}

TEST(Sweep, ContainmentMonotonicity) {
    const auto p = problem(902);
    const auto r = run_sweep(p.matrix, p.weights, p.hierarchy, {});
    for (std::size_t a = 0; a < r.subsets.size(); ++a)
        for (std::size_t b = 0; b < r.subsets.size(); ++b) {
            if ((a & b) != a) continue;  // subset bits: a contained in b
            for (std::size_t g = 0; g < r.s_grid.size(); ++g)
                for (std::size_t i = 0; i < p.matrix.alternatives(); ++i)
                    EXPECT_LE(r.at(b, g).utilities[i], r.at(a, g).utilities[i] + 1e-12);
        }
}

TEST(Sweep, DeterministicAcrossThreadCounts) {
    const auto p = problem(903);
    SweepSpec one, many;
    one.threads = 1;
    many.threads = 4;
    const auto a = run_sweep(p.matrix, p.weights, p.hierarchy, one);
    const auto b = run_sweep(p.matrix, p.weights, p.hierarchy, many);
    for (std::size_t k = 0; k < a.subsets.size(); ++k)
        for (std::size_t g = 0; g < a.s_grid.size(); ++g) {
            EXPECT_EQ(a.at(k, g).utilities, b.at(k, g).utilities);
            EXPECT_EQ(a.at(k, g).ranking, b.at(k, g).ranking);
        }
}

TEST(Sweep, SpecValidation) {
    const auto p = problem(904);
    SweepSpec spec;
    spec.s_grid = {0.0, 0.5, 0.5};
    EXPECT_THROW(run_sweep(p.matrix, p.weights, p.hierarchy, spec), InputError);
    spec = {};
    spec.group_subsets = {{"G1"}, {"G1"}};
    EXPECT_THROW(run_sweep(p.matrix, p.weights, p.hierarchy, spec), InputError);
    spec.group_subsets = {{"G9"}};
    EXPECT_THROW(run_sweep(p.matrix, p.weights, p.hierarchy, spec), InputError);
}

TEST(Compare, SelfAgreementAndMismatch) {
    const auto p = problem(905);
    const auto r = run_sweep(p.matrix, p.weights, p.hierarchy, {});
    const auto ranks = final_rankings(r);
    for (const auto& row : compare_rankings(ranks, ranks)) {
        EXPECT_EQ(row.weighted_spearman, 1.0);
        EXPECT_EQ(row.pearson, 1.0);
    }
    const std::vector<SubsetRanking> shorter(ranks.begin(), ranks.begin() + 2);
    EXPECT_THROW(compare_rankings(ranks, shorter), InputError);
}

TEST(Compare, RandomRankingsMatchOracle) {
    testsupport::Gen gen(906);
    for (int trial = 0; trial < 50; ++trial) {
        const std::vector<SubsetRanking> a{{{}, gen.permutation_ranks(16)}};
        const std::vector<SubsetRanking> b{{{}, gen.permutation_ranks(16)}};
        const auto row = compare_rankings(a, b).front();
        EXPECT_NEAR(row.weighted_spearman, testsupport::spearman_oracle(a[0].ranks, b[0].ranks), 1e-12);
        EXPECT_NEAR(row.pearson, testsupport::pearson_oracle(a[0].ranks, b[0].ranks), 1e-12);
    }
}
