#include "runbound/egf.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace runbound;
using namespace runbound::egf;

namespace {

// Euler zigzag numbers by the boustrophedon (Seidel) triangle. No series
// arithmetic involved.
std::vector<Count> zigzag(unsigned N) {
    std::vector<Count> e{1}, row{1};
    for (unsigned n = 1; n <= N; ++n) {
        std::vector<Count> next{0};
        for (auto it = row.rbegin(); it != row.rend(); ++it) next.push_back(next.back() + *it);
        row = std::move(next);
        e.push_back(row.back());
    }
    return e;
}

Series tan_oracle(unsigned N) {
    const auto e = zigzag(N);
    Series s(N);
    for (unsigned n = 1; n <= N; n += 2) s[n] = e[n];
    return s;
}

Series sec_oracle(unsigned N) {
    const auto e = zigzag(N);
    Series s(N);
    for (unsigned n = 0; n <= N; n += 2) s[n] = e[n];
    return s;
}

Series random_series(std::mt19937& rng, unsigned N, bool unit_constant) {
    std::uniform_int_distribution<int> d(-20, 20);
    Series s(N);
    for (unsigned n = 0; n <= N; ++n) s[n] = d(rng);
    if (unit_constant) s[0] = 1;
    return s;
}

Series dp_row(const UTable& t, unsigned j) { return from_counts(t.row(j)); }

}  // namespace

TEST(Series, FromCounts) {
    const std::vector<Count> u2{1, 2, 5, 17, 70};
    EXPECT_EQ(from_counts(u2), (Series{0, 1, 2, 5, 17, 70}));
    EXPECT_EQ(from_counts(std::vector<Count>{}), Series(0));
    EXPECT_EQ(from_counts(std::vector<Count>{1, 0, 0}), (Series{0, 1, 0, 0}));
}

TEST(Series, MulExamples) {
    const Series e = exp_series(10);
    const Series sq = e * e;
    for (unsigned n = 0; n <= 10; ++n) EXPECT_EQ(sq[n], Count(1) << n);
    EXPECT_TRUE((e * Series(10)).is_zero());

    const auto [tan, sec] = tan_sec_series(5);
    EXPECT_EQ(tan * sec, (Series{0, 1, 0, 5, 0, 61}));
    // sec' = sec * tan, with sec taken from the zigzag oracle.
    EXPECT_EQ(derivative(sec_oracle(6)), (tan_oracle(5) * sec_oracle(5)));
}

TEST(Series, OrderMismatchRejected) {
    EXPECT_THROW(Series(3) * Series(4), usage_error);
    EXPECT_THROW(Series(3) + Series(4), usage_error);
    EXPECT_THROW(Series(3) - Series(2), usage_error);
    EXPECT_THROW(Series(2).truncated(3), usage_error);
}

TEST(Series, RecipExamples) {
    EXPECT_EQ(recip(q_series(1, 6)), exp_series(6));
    EXPECT_EQ(recip(one(5)), one(5));
    EXPECT_EQ(recip(q_series(2, 5)), (Series{1, 1, 2, 5, 17, 70}));
    EXPECT_THROW(recip(Series{2, 1}), usage_error);
    EXPECT_THROW(recip(Series{0, 1}), usage_error);
}

TEST(Series, DerivativeExamples) {
    EXPECT_EQ(derivative(exp_series(6)), exp_series(5));
    EXPECT_EQ(derivative(identity(4)), one(3));
    const Series tan = tan_sec_series(12).tan;
    const Series t11 = tan.truncated(11);
    EXPECT_EQ(derivative(tan), one(11) + t11 * t11);
    EXPECT_THROW(derivative(Series(0)), usage_error);
    EXPECT_THROW(derivative(Series(2), 3), usage_error);
}

TEST(Series, AddSubScaleExamples) {
    const Series d = u_closed_form(3, 5) - u_closed_form(2, 5);
    EXPECT_EQ(d, (Series{0, 0, 0, 1, 6, 41}));
    const Series a{3, -1, 4};
    EXPECT_EQ(a + Series(2), a);
    const auto [tan, sec] = tan_sec_series(5);
    EXPECT_EQ(Count(2) * (tan + sec - one(5)) - identity(5), (Series{0, 1, 2, 4, 10, 32}));
}

TEST(Series, AlgebraProperties) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const unsigned N = rng() % 12;
        const Series a = random_series(rng, N, false), b = random_series(rng, N, false),
                     c = random_series(rng, N, false);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * one(N), a);
        ASSERT_EQ(a * (b + c), a * b + a * c);
        const Series u = random_series(rng, N, true);
        ASSERT_EQ(u * recip(u), one(N));
        if (N >= 1) { ASSERT_EQ(derivative(a * b), derivative(a) * b.truncated(N - 1) + a.truncated(N - 1) * derivative(b)); }
    }
}

TEST(QSeries, Examples) {
    EXPECT_EQ(q_series(2, 5), (Series{1, -1, 0, 1, -1, 0}));
    EXPECT_EQ(q_series(1, 3), (Series{1, -1, 1, -1}));
    EXPECT_EQ(q_series(4, 6), (Series{1, -1, 0, 0, 0, 1, -1}));
}

TEST(QSeries, SatisfiesLinearOde) {
    for (unsigned k = 1; k <= 8; ++k) EXPECT_TRUE(linear_ode_residual(k, q_series(k, 20)).is_zero()) << k;
    EXPECT_FALSE(linear_ode_residual(3, q_series(2, 20)).is_zero());
    EXPECT_THROW(linear_ode_residual(5, q_series(5, 4)), usage_error);
}

TEST(ClosedForm, Examples) {
    EXPECT_EQ(u_closed_form(4, 5), (Series{0, 1, 2, 6, 24, 119}));
    EXPECT_EQ(u_closed_form(1, 4), (Series{0, 1, 1, 1, 1}));
    EXPECT_EQ(u_closed_form(3, 18)[18].str(), "3630626729775362");
}

TEST(ClosedForm, MatchesDp) {
    for (unsigned k = 1; k <= 10; ++k) EXPECT_EQ(u_closed_form(k, 16), dp_row(compute_u_table(k, 16), k)) << k;
}

TEST(UjFromY, MatchesDpRows) {
    EXPECT_EQ(u_j_from_y(2, 1, 12), dp_row(compute_u_table(2, 12), 1));
    EXPECT_EQ(u_j_from_y(3, 2, 12)[0], 0);
    EXPECT_EQ(u_j_from_y(4, 1, 12), dp_row(compute_u_table(4, 12), 1));
    for (unsigned k = 2; k <= 7; ++k) {
        const UTable t = compute_u_table(k, 10);
        for (unsigned j = 1; j < k; ++j) EXPECT_EQ(u_j_from_y(k, j, 10), dp_row(t, j)) << k << "," << j;
    }
}

TEST(UjFromY, RejectsBadArguments) {
    EXPECT_THROW(u_j_from_y(4, 1, q_series(4, 12), 12), usage_error);  // needs order 15
    EXPECT_NO_THROW(u_j_from_y(4, 1, q_series(4, 15), 12));
    EXPECT_THROW(u_j_from_y(1, 1, 5), usage_error);
    EXPECT_THROW(u_j_from_y(3, 3, 5), usage_error);
    EXPECT_THROW(u_j_from_y(3, 0, 5), usage_error);
}

TEST(TanSec, Examples) {
    const auto ts = tan_sec_series(5);
    EXPECT_EQ(ts.tan, (Series{0, 1, 0, 2, 0, 16}));
    EXPECT_EQ(tan_sec_series(4).sec, (Series{1, 0, 1, 0, 5}));
    const auto big = tan_sec_series(24);
    EXPECT_EQ(big.tan, tan_oracle(24));
    EXPECT_EQ(big.sec, sec_oracle(24));
    const Series s = sin_series(20), c = cos_series(20);
    EXPECT_EQ(s * s + c * c, one(20));
}

TEST(OdeResidualU, ZeroOnDpSeries) {
    for (unsigned k = 1; k <= 5; ++k) {
        const auto res = ode_residual_u(k, u_series(compute_u_table(k, 14)));
        for (unsigned j = 1; j <= k; ++j) EXPECT_TRUE(res[j].is_zero()) << k << "," << j;
    }
}

TEST(OdeResidualU, KOneIsExponentialMinusOne) {
    const std::vector<Series> s{Series(8), exp_series(8) - one(8)};
    EXPECT_TRUE(ode_residual_u(1, s)[1].is_zero());
}

TEST(OdeResidualU, SensitiveToPerturbation) {
    auto s = u_series(compute_u_table(2, 10));
    s[1][4] += 1;
    const auto res = ode_residual_u(2, s);
    EXPECT_FALSE(res[1].is_zero() && res[2].is_zero());
}

TEST(OdeResidualU, RejectsMalformedInput) {
    auto s = u_series(compute_u_table(2, 6));
    EXPECT_THROW(ode_residual_u(3, s), usage_error);
    s[0][1] = 1;
    EXPECT_THROW(ode_residual_u(2, s), usage_error);
    auto t = u_series(compute_u_table(2, 6));
    t[2] = Series(5);
    EXPECT_THROW(ode_residual_u(2, t), usage_error);
}

TEST(OdeResidualB, ZeroOnDpSeries) {
    for (unsigned k = 1; k <= 4; ++k) {
        const auto res = ode_residual_b(k, b_series(compute_b_table(k, 12)));
        for (unsigned i = 1; i <= k; ++i)
            for (unsigned j = 1; j <= k; ++j) EXPECT_TRUE(res[i][j].is_zero()) << k << "," << i << "," << j;
    }
}

TEST(OdeResidualB, TanSecSolutionForKTwo) {
    const unsigned N = 18;
    const auto [tan, sec] = tan_sec_series(N);
    const Series b12 = tan + sec - one(N);
    SeriesGrid g(3, std::vector<Series>(3, Series(N)));
    g[1][1] = tan;
    g[1][2] = g[2][1] = b12;
    g[2][2] = Count(2) * b12 - identity(N);
    const auto res = ode_residual_b(2, g);
    for (unsigned i = 1; i <= 2; ++i)
        for (unsigned j = 1; j <= 2; ++j) EXPECT_TRUE(res[i][j].is_zero());

    std::swap(g[1][2], g[2][2]);
    const auto bad = ode_residual_b(2, g);
    bool all_zero = true;
    for (unsigned i = 1; i <= 2; ++i)
        for (unsigned j = 1; j <= 2; ++j) all_zero = all_zero && bad[i][j].is_zero();
    EXPECT_FALSE(all_zero);
}

TEST(OdeResidualB, ResidualGridSymmetricForSymmetricInput) {
    auto g = b_series(compute_b_table(3, 10));
    g[1][2][5] += 3;
    g[2][1][5] += 3;
    const auto res = ode_residual_b(3, g);
    for (unsigned i = 1; i <= 3; ++i)
        for (unsigned j = 1; j <= 3; ++j) EXPECT_EQ(res[i][j], res[j][i]);
}

TEST(K3Autonomous, ZeroOnB322) {
    const auto g = b_series(compute_b_table(3, 12));
    const Series res = k3_autonomous_residual(g[2][2]);
    EXPECT_EQ(res.order(), 9u);
    EXPECT_TRUE(res.is_zero());
    // Hand check of the constant term: y'(0)=1, y''(0)=2, y'''(0)=4.
    EXPECT_EQ(g[2][2][1], 1);
    EXPECT_EQ(g[2][2][2], 2);
    EXPECT_EQ(g[2][2][3], 4);
}

TEST(K3Autonomous, ControlsAndErrors) {
    EXPECT_EQ(k3_autonomous_residual(Series(5)), constant(-5, 2));
    const auto g2 = b_series(compute_b_table(2, 12));
    EXPECT_FALSE(k3_autonomous_residual(g2[2][2]).is_zero());
    EXPECT_THROW(k3_autonomous_residual(Series(2)), usage_error);
}
