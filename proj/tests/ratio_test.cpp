#include <gtest/gtest.h>

#include "coursewise/ratio.hpp"

namespace coursewise {
namespace {

TEST(Ratio, ParsesDecimalsExactly) {
    EXPECT_EQ(Ratio::parse("0.33"), (Ratio{33, 100}));
    EXPECT_EQ(Ratio::parse("1"), (Ratio{1, 1}));
    EXPECT_EQ(Ratio::parse(".5"), (Ratio{5, 10}));
    EXPECT_EQ(Ratio::parse("1.10"), (Ratio{110, 100}));
    EXPECT_EQ(Ratio::parse("2/6"), (Ratio{2, 6}));
}

TEST(Ratio, RejectsGarbage) {
    for (const char* bad : {"", ".", "abc", "0.3x", "1/0", "/3", "-0.5", "1e-3"}) {
        EXPECT_THROW(Ratio::parse(bad), std::invalid_argument) << bad;
    }
}

TEST(Ratio, PercentRoundsHalfUp) {
    EXPECT_EQ((Ratio{48, 100}).percent(), 48u);
    EXPECT_EQ((Ratio{485, 1000}).percent(), 49u);
    EXPECT_EQ((Ratio{1, 3}).percent(), 33u);
    EXPECT_EQ((Ratio{2, 3}).percent(), 67u);
    EXPECT_EQ((Ratio{1, 200}).percent(), 1u);
    EXPECT_EQ((Ratio{2, 2}).percent(), 100u);
    EXPECT_EQ((Ratio{0, 7}).percent(), 0u);
}

TEST(Ratio, CompareValueIgnoresRepresentation) {
    EXPECT_EQ(compare_value(Ratio{2, 6}, Ratio{1, 3}), std::strong_ordering::equal);
    EXPECT_NE((Ratio{2, 6}), (Ratio{1, 3}));
    EXPECT_EQ(compare_value(Ratio{1, 2}, Ratio{2, 3}), std::strong_ordering::less);
}

TEST(Ratio, CeilCount) {
    EXPECT_EQ(ceil_count(Ratio{33, 100}, 6), 2u);
    EXPECT_EQ(ceil_count(Ratio{2, 6}, 6), 2u);
    EXPECT_EQ(ceil_count(Ratio{1, 6}, 6), 1u);
    EXPECT_EQ(ceil_count(Ratio{5, 100}, 6000), 300u);
    EXPECT_EQ(ceil_count(Ratio{1, 1}, 0), 0u);
}

TEST(Ratio, ThresholdRange) {
    EXPECT_TRUE(is_valid_threshold(Ratio{1, 1}));
    EXPECT_TRUE(is_valid_threshold(Ratio{1, 1000}));
    EXPECT_FALSE(is_valid_threshold(Ratio{0, 1}));
    EXPECT_FALSE(is_valid_threshold(Ratio{11, 10}));
}

}  // namespace
}  // namespace coursewise
