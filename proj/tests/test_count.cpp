#include "runbound/count.hpp"

#include <gtest/gtest.h>

using runbound::BinomialCache;
using runbound::Count;

namespace {

// n! / (t! (n-t)!) straight from factorials; shares nothing with Pascal's rule.
Count binomial_by_factorials(unsigned n, unsigned t) {
    return runbound::factorial(n) / (runbound::factorial(t) * runbound::factorial(n - t));
}

}  // namespace

TEST(Binomial, Examples) {
    EXPECT_EQ(runbound::binomial(0, 0), 1);
    EXPECT_EQ(runbound::binomial(5, 2), 10);
    EXPECT_EQ(binomial_by_factorials(17, 8), 24310);
    EXPECT_EQ(runbound::binomial(17, 8), 24310);
}

TEST(Binomial, CacheMatchesFactorialFormula) {
    const BinomialCache c(40);
    for (unsigned n = 0; n <= 40; ++n)
        for (unsigned t = 0; t <= n; ++t) ASSERT_EQ(c(n, t), binomial_by_factorials(n, t)) << n << "," << t;
}

TEST(Binomial, RowsSumToPowersOfTwo) {
    const BinomialCache c(64);
    for (unsigned n = 0; n <= 64; ++n) {
        Count s = 0;
        for (const auto& v : c.row(n)) s += v;
        EXPECT_EQ(s, Count(1) << n);
        EXPECT_EQ(c(n, 0), 1);
        EXPECT_EQ(c(n, n), 1);
    }
}

TEST(Binomial, RejectsOutOfRange) {
    const BinomialCache c(5);
    EXPECT_THROW(c(6, 0), runbound::usage_error);
    EXPECT_THROW(c(3, 4), runbound::usage_error);
    EXPECT_THROW(runbound::binomial(2, 3), runbound::usage_error);
}

TEST(Decimal, ParsesStrictly) {
    EXPECT_EQ(runbound::parse_decimal("6402373705728000"), runbound::factorial(18));
    EXPECT_EQ(runbound::parse_decimal("-5"), -5);
    EXPECT_THROW(runbound::parse_decimal(""), runbound::parse_error);
    EXPECT_THROW(runbound::parse_decimal("12a"), runbound::parse_error);
    EXPECT_THROW(runbound::parse_decimal("1,000"), runbound::parse_error);
    EXPECT_THROW(runbound::parse_decimal("-"), runbound::parse_error);
}

TEST(Factorial, Values) {
    EXPECT_EQ(runbound::factorial(0), 1);
    EXPECT_EQ(runbound::factorial(10), 3628800);
    EXPECT_EQ(runbound::factorial(25).str(), "15511210043330985984000000");
}
