#include <gtest/gtest.h>

#include <cstdint>
#include <limits>
#include <vector>

#include "opq/errors.hpp"
#include "opq/exactnum.hpp"

using opq::HalfInt;

namespace {

// Pascal's triangle, built row by row; independent of the multiplicative
// formula used by opq::binomial.
std::vector<std::vector<std::uint64_t>> pascal(int rows)
{
    std::vector<std::vector<std::uint64_t>> t(rows + 1);
    for (int n = 0; n <= rows; ++n) {
        t[n].assign(n + 1, 1);
        for (int k = 1; k < n; ++k) {
            t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
        }
    }
    return t;
}

} // namespace

TEST(HalfInt, Arithmetic)
{
    EXPECT_EQ(HalfInt::from_twice(5) - HalfInt(2), HalfInt::from_twice(1));
    EXPECT_EQ(opq::compare(HalfInt::from_twice(5), HalfInt::from_twice(5)), opq::Ordering::equal);
    const HalfInt sum = HalfInt::from_twice(3) + HalfInt::from_twice(1);
    EXPECT_EQ(sum, HalfInt(2));
    EXPECT_TRUE(sum.is_integer());
    EXPECT_EQ(-HalfInt::from_twice(3), HalfInt::from_twice(-3));
}

TEST(HalfInt, TextForm)
{
    EXPECT_EQ(HalfInt::from_twice(5).to_string(), "5/2");
    EXPECT_EQ(HalfInt::from_twice(-1).to_string(), "-1/2");
    EXPECT_EQ(HalfInt(3).to_string(), "3");
    EXPECT_EQ(HalfInt::parse("5/2"), HalfInt::from_twice(5));
    EXPECT_EQ(HalfInt::parse("-7/2"), HalfInt::from_twice(-7));
    EXPECT_EQ(HalfInt::parse("4"), HalfInt(4));
    EXPECT_EQ(HalfInt::parse("0"), HalfInt(0));
    for (const char* bad : {"", "2.5", "5/3", "4/2", "a", "1/2x", "/2", "1//2"}) {
        EXPECT_THROW(HalfInt::parse(bad), opq::ParseError) << bad;
    }
    EXPECT_THROW(HalfInt::parse("99999999999999999999"), opq::OverflowError);
}

TEST(HalfInt, TextRoundTrip)
{
    for (std::int64_t t = -1000; t <= 1000; ++t) {
        const HalfInt h = HalfInt::from_twice(t);
        ASSERT_EQ(h.twice(), t);
        ASSERT_EQ(HalfInt::parse(h.to_string()), h);
        ASSERT_EQ(h.is_integer(), t % 2 == 0);
    }
}

TEST(HalfInt, CompareMatchesSubtractionSign)
{
    for (std::int64_t a = -1000; a <= 1000; a += 7) {
        for (std::int64_t b = -1000; b <= 1000; b += 11) {
            const HalfInt x = HalfInt::from_twice(a);
            const HalfInt y = HalfInt::from_twice(b);
            const std::int64_t diff = (x - y).twice();
            const auto expected = diff < 0   ? opq::Ordering::less
                                  : diff > 0 ? opq::Ordering::greater
                                             : opq::Ordering::equal;
            ASSERT_EQ(opq::compare(x, y), expected) << a << " " << b;
        }
    }
}

TEST(HalfInt, OverflowIsDetected)
{
    constexpr auto max = std::numeric_limits<std::int64_t>::max();
    constexpr auto min = std::numeric_limits<std::int64_t>::min();
    EXPECT_THROW(HalfInt::from_twice(max) + HalfInt::from_twice(1), opq::OverflowError);
    EXPECT_THROW(HalfInt::from_twice(min) - HalfInt::from_twice(1), opq::OverflowError);
    EXPECT_THROW(-HalfInt::from_twice(min), opq::OverflowError);
    EXPECT_THROW(HalfInt::from_twice(min).abs(), opq::OverflowError);
    EXPECT_THROW(HalfInt(max / 2 + 1), opq::OverflowError);
}

TEST(Binomial, Values)
{
    EXPECT_EQ(opq::binomial(4, 2), 6u);
    EXPECT_EQ(opq::binomial(2, -1), 0u);
    EXPECT_EQ(opq::binomial(2, 3), 0u);
    EXPECT_EQ(opq::binomial(-1, -1), 0u);
    EXPECT_EQ(opq::binomial(0, 0), 1u);
    const auto t = pascal(10);
    EXPECT_EQ(t[10][5], 252u);
    EXPECT_EQ(opq::binomial(10, 5), t[10][5]);
}

TEST(Binomial, PascalRecurrence)
{
    const auto t = pascal(60);
    for (int n = 0; n <= 60; ++n) {
        for (int k = 0; k <= n; ++k) {
            ASSERT_EQ(opq::binomial(n, k), t[n][k]) << n << " " << k;
        }
    }
    for (int n = 2; n <= 60; ++n) {
        for (int k = 1; k < n; ++k) {
            ASSERT_EQ(opq::binomial(n, k), opq::binomial(n - 1, k - 1) + opq::binomial(n - 1, k));
        }
    }
}

TEST(Binomial, Overflow)
{
    EXPECT_EQ(opq::binomial(67, 33), 14226520737620288370ull);
    EXPECT_THROW(opq::binomial(68, 34), opq::OverflowError);
    EXPECT_THROW(opq::binomial(1000, 500), opq::OverflowError);
}
