#include <gtest/gtest.h>

#include "octosieve/exact_rank.hpp"

namespace octosieve {
namespace {

using Matrix = std::vector<std::vector<long long>>;

TEST(ExactRank, SmallCases) {
    EXPECT_EQ(exact_rank(Matrix{}), 0u);
    EXPECT_EQ(exact_rank(Matrix{{0, 0}, {0, 0}}), 0u);
    EXPECT_EQ(exact_rank(Matrix{{1, 2}, {2, 4}}), 1u);
    EXPECT_EQ(exact_rank(Matrix{{1, 2}, {3, 4}}), 2u);
    EXPECT_EQ(exact_rank(Matrix{{0, 1, 2}, {0, 2, 4}, {1, 0, 0}}), 2u);
    EXPECT_EQ(exact_rank(Matrix{{2, 4, 6}, {1, 3, 5}, {3, 7, 11}}), 2u);
    EXPECT_EQ(exact_rank(Matrix{{1, 0, 0, 0}, {0, 0, 1, 0}}), 2u);
}

TEST(ExactRank, NearlySingularIsExact) {
    // det = -1
    EXPECT_EQ(exact_rank(Matrix{{1000000, 999999}, {999999, 999998}}), 2u);
    EXPECT_EQ(exact_rank(Matrix{{1000000, 999999}, {2000000, 1999998}}), 1u);
}

TEST(ExactRank, OverflowIsReported) {
    const long long big = 3'000'000'000'000LL;
    EXPECT_THROW((void)exact_rank(Matrix{{big, 1}, {1, big}}), std::overflow_error);
}

}  // namespace
}  // namespace octosieve
