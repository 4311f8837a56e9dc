#include <set>

#include <gtest/gtest.h>

#include "altperm/oracle.hpp"

using namespace altperm;
using namespace altperm::oracle;

TEST(Oracle, AlternatingCounts)
{
    const Count want[] = {1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936};
    for (int n = 1; n <= 9; ++n) {
        EXPECT_EQ(count_alternating(n, false), want[n]) << n;
        EXPECT_EQ(count_alternating(n, true), want[n]) << n;
    }
}

TEST(Oracle, HandCountedExamples)
{
    // n = 3: the alternating permutations are 213 and 312; only 213 is its own inverse.
    EXPECT_EQ(count_doubly_alternating(3, DoubleVariant::alt_alt), 1U);
    EXPECT_EQ(alternating_by_cycle_type(3, false).at(Partition{2, 1}), 1U);
    EXPECT_EQ(alternating_by_cycle_type(3, false).at(Partition{3}), 1U);
    // n = 4: {2143, 4231} are the doubly alternating permutations.
    EXPECT_EQ(count_doubly_alternating(4, DoubleVariant::alt_alt), 2U);
    EXPECT_EQ(count_alternating_involutions(4, false), 2U);
    const auto fixed = alternating_by_fixed_points(4, false);
    EXPECT_EQ(fixed[0], 2U);
    EXPECT_EQ(fixed[1], 2U);
    EXPECT_EQ(fixed[2], 1U);
    const auto pairs = descent_pair_counts(3);
    EXPECT_EQ(pairs.at({Composition{2, 1}, Composition{2, 1}}), 1U);
}

TEST(Oracle, MultisetWords)
{
    const std::vector<int> w1{1, 1, 4, 2, 2, 1, 4, 3, 4, 3};
    const std::vector<int> w2{2, 2, 1, 3, 3, 4, 1, 4, 1, 4};
    EXPECT_TRUE(is_ab_alternating(w1, {1, 3}, false));
    EXPECT_FALSE(is_ab_alternating(w1, {1, 3}, true));
    EXPECT_TRUE(is_ab_alternating(w2, {1, 3}, true));
    EXPECT_FALSE(is_ab_alternating(w2, {1, 3}, false));
    EXPECT_FALSE(is_ab_alternating(w1, {}, false));
    EXPECT_EQ(count_multiset_alternating(Composition{3, 3, 3}, {}, false), 30U);
    EXPECT_EQ(count_multiset_alternating(Composition{1, 1, 1, 1, 1}, {}, false), 16U);
}

TEST(Oracle, SytDescents)
{
    EXPECT_EQ(count_alternating_syt(SkewShape(Partition{2, 1}), false), 1U);
    EXPECT_EQ(count_alternating_syt(SkewShape(Partition{3}), false), 0U);
    EXPECT_EQ(count_alternating_syt(SkewShape(Partition{3, 3, 3}), false), 2U);
}

TEST(Oracle, BoundsAreEnforced)
{
    EXPECT_THROW(count_alternating(10, false), OracleLimitError);
    EXPECT_THROW(count_doubly_alternating(9, DoubleVariant::alt_alt), OracleLimitError);
    EXPECT_THROW(count_multiset_alternating(Composition{13}, {}, false), OracleLimitError);
    Bounds wide;
    wide.sn_max = 10;
    EXPECT_EQ(count_alternating_involutions(4, false, wide), 2U);
}
