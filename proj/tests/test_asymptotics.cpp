#include "graph_euler/asymptotics.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace graph_euler;

TEST(Asymptotics, PartialSumConvergesToTarget)
{
    EXPECT_LT(std::abs(to_double(e14_partial_sum(30)) - e_minus_quarter), 1e-8);
    EXPECT_LT(std::abs(to_double(e14_partial_sum_odd(30)) - e_plus_quarter), 1e-8);
    EXPECT_EQ(e14_partial_sum(0), 1);
    // eta_{2,1} = 1, eta_{2,2} = 3: 1 - 1/2 + 3/8
    EXPECT_EQ(e14_partial_sum(2), make_rational(7, 8));
}

TEST(Asymptotics, PartialSumMatchesExponentialSeriesDirectly)
{
    // The counts eta_{2,m} have exponential generating function exp(t + t^2),
    // so the sum is that function at t = -1/2.  Expand exp(-s/2 + s^2/4) in
    // doubles through m c_m = -c_{m-1}/2 + c_{m-2}/2 and evaluate at s = 1.
    double direct = 0;
    std::vector<double> c{1.0};
    for (int m = 1; m <= 40; ++m)
        c.push_back((-0.5 * c[m - 1] + (m >= 2 ? 0.5 * c[m - 2] : 0.0)) / m);
    for (double v : c)
        direct += v;
    EXPECT_NEAR(direct, e_minus_quarter, 1e-12);
    EXPECT_NEAR(to_double(e14_partial_sum(40)), direct, 1e-12);
}

TEST(Asymptotics, ReferenceRatiosTrendTowardTarget)
{
    std::vector<double> ratios;
    for (int n = 12; n <= 15; ++n) {
        const auto& row = reference_row(n);
        ratios.push_back(to_double(Rational(row.e_value()) / row.chi_value()));
    }
    for (std::size_t i = 1; i < ratios.size(); ++i)
        EXPECT_GT(ratios[i], ratios[i - 1]);
    EXPECT_LT(std::abs(ratios.back() - e_minus_quarter), 0.1);
}

TEST(Asymptotics, ScaleFunctions)
{
    EXPECT_THROW(static_cast<void>(b_n(1)), std::domain_error);
    EXPECT_THROW(static_cast<void>(l_n(1)), std::domain_error);
    EXPECT_NO_THROW(static_cast<void>(b_tilde_n(1)));
    EXPECT_NO_THROW(static_cast<void>(l_tilde_n(1)));
    // Gamma(3/2) = sqrt(pi)/2
    EXPECT_EQ(gamma_half_coeff(2), make_rational(1, 2));
    EXPECT_NEAR(b_n(2), -std::tgamma(1.5) / (std::sqrt(2 * std::numbers::pi) * std::pow(std::log(2.0), 2)), 1e-12);
    EXPECT_LT(b_n(10), 0);
    EXPECT_GT(l_n(3), 0);
}

TEST(Asymptotics, PnFromChiHat)
{
    const auto chi_hat = chi_hat_all(6);
    EXPECT_EQ(p_n(0, chi_hat), 1);
    EXPECT_EQ(p_n(1, chi_hat), make_rational(-1, 24));
    EXPECT_EQ(p_n(4), p_n(4, chi_hat));
    EXPECT_THROW(static_cast<void>(p_n(7, chi_hat)), std::invalid_argument);
}

TEST(Asymptotics, RowsUseComputedTableFirst)
{
    const auto table = compute_euler_table(5);
    const auto rows = ratio_report(table);
    ASSERT_EQ(rows.size(), 15u);
    EXPECT_FALSE(rows[0].b.has_value());
    for (std::size_t i = 1; i < rows.size(); ++i) {
        EXPECT_TRUE(rows[i].ratio_e_over_chi.has_value());
        EXPECT_TRUE(rows[i].conjecture_residual.has_value());
    }
    EXPECT_DOUBLE_EQ(*rows[1].ratio_e_over_chi, -24.0);
    EXPECT_TRUE(rows[3].e_hat.has_value());
    EXPECT_FALSE(rows[6].e_hat.has_value());
}
