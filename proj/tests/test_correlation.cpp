#include <gtest/gtest.h>

#include <algorithm>

#include "sspahp/correlation.hpp"
#include "sspahp/errors.hpp"
#include "support.hpp"

using namespace sspahp;

TEST(RankFromScores, Examples) {
    const std::vector<double> a{0.9, 0.1, 0.5}, b{0.5, 0.5}, c{0.3, 0.7};
    EXPECT_EQ(rank_from_scores(a, Orientation::HigherBetter, TieRule::InputOrder),
              (std::vector<double>{1, 3, 2}));
    EXPECT_EQ(rank_from_scores(b, Orientation::HigherBetter, TieRule::Average),
              (std::vector<double>{1.5, 1.5}));
    EXPECT_EQ(rank_from_scores(c, Orientation::LowerBetter, TieRule::InputOrder),
              (std::vector<double>{1, 2}));
    EXPECT_EQ(rank_from_scores(b, Orientation::HigherBetter, TieRule::InputOrder),
              (std::vector<double>{1, 2}));
}

TEST(WeightedSpearman, IdenticalIsExactlyOne) {
    testsupport::Gen gen(808);
    for (std::size_t n = 2; n <= 20; ++n) {
        const auto r = gen.permutation_ranks(n);
        EXPECT_EQ(weighted_spearman(r, r), 1.0);
    }
}

TEST(WeightedSpearman, ReversedPairIsNotClamped) {
    const std::vector<double> x{1, 2}, y{2, 1};
    EXPECT_DOUBLE_EQ(weighted_spearman(x, y), 1.0 - 36.0 / 18.0);
    const std::vector<double> up{1, 2, 3, 4, 5}, down{5, 4, 3, 2, 1};
    EXPECT_DOUBLE_EQ(weighted_spearman(up, down), testsupport::spearman_oracle(up, down));
}

TEST(WeightedSpearman, ArgumentErrors) {
    const std::vector<double> a{1, 2, 3}, b{1, 2}, one{1}, bad{1, 2, 7};
    EXPECT_THROW(weighted_spearman(a, b), InputError);
    EXPECT_THROW(weighted_spearman(one, one), InputError);
    EXPECT_THROW(weighted_spearman(a, bad), InputError);
}

TEST(Pearson, Examples) {
    const std::vector<double> a{1, 2, 3}, b{1, 3, 2}, down{3, 2, 1}, flat{2, 2, 2};
    EXPECT_EQ(pearson(a, a), 1.0);
    EXPECT_EQ(pearson(a, down), -1.0);
    EXPECT_NEAR(pearson(a, b), 0.5, 1e-15);
    EXPECT_THROW(pearson(a, flat), NumericalError);
}

TEST(CorrelationProperty, MatchesFormulaOracle) {
    testsupport::Gen gen(809);
    for (int trial = 0; trial < 100; ++trial) {
        const auto x = gen.permutation_ranks(16);
        const auto y = gen.permutation_ranks(16);
        EXPECT_NEAR(weighted_spearman(x, y), testsupport::spearman_oracle(x, y), 1e-12);
        EXPECT_NEAR(pearson(x, y), testsupport::pearson_oracle(x, y), 1e-12);
        EXPECT_EQ(pearson(x, y), pearson(y, x));
        EXPECT_NEAR(weighted_spearman(x, y), weighted_spearman(y, x), 1e-12);

        std::vector<double> reversed(x.size());
        std::transform(x.begin(), x.end(), reversed.begin(), [](double r) { return 17.0 - r; });
        EXPECT_EQ(pearson(x, reversed), -1.0);

        std::vector<double> affine(x.size());
        const double a = gen.uniform(0.1, 10.0), b = gen.uniform(-5.0, 5.0);
        std::transform(y.begin(), y.end(), affine.begin(), [&](double r) { return a * r + b; });
        EXPECT_NEAR(pearson(x, affine), pearson(x, y), 1e-12);
    }
}
