#include "graph_euler/euler.hpp"
#include "graph_euler/reference_table.hpp"

#include <gtest/gtest.h>

using namespace graph_euler;

namespace {

// Shared across tests: ranks 2..9 take well under a second.
const EulerTable& table()
{
    static const EulerTable t = compute_euler_table(9);
    return t;
}

// Direct expansion of prod_n (1 - s_n hbar^n)^{-s_n e_{n+1}} by binomial series,
// with s_n = 1 (even) or (-1)^n (odd); no logarithms involved.
std::vector<Rational> expand_product(const std::vector<Integer>& e_by_rank, std::size_t max_index, bool odd)
{
    std::vector<Rational> series(max_index + 1, Rational(0));
    series[0] = 1;
    for (std::size_t n = 1; n <= max_index; ++n) {
        const Rational s = odd && n % 2 ? Rational(-1) : Rational(1);
        const Rational e = s * Rational(e_by_rank[n + 1]);
        std::vector<Rational> factor(max_index + 1, Rational(0));
        Rational binom = 1;
        Rational sp = 1;
        for (std::size_t j = 0; j * n <= max_index; ++j) {
            factor[j * n] = binom * sp;
            binom = binom * (e + Rational(static_cast<long>(j))) / Rational(static_cast<long>(j + 1));
            sp *= s;
        }
        std::vector<Rational> next(max_index + 1, Rational(0));
        for (std::size_t a = 0; a <= max_index; ++a)
            for (std::size_t b = 0; a + b <= max_index; ++b)
                next[a + b] += series[a] * factor[b];
        series = std::move(next);
    }
    return series;
}

} // namespace

TEST(Euler, EHatSmallValues)
{
    const auto& t = table();
    const std::vector<long> expected{1, 1, 2, 4, 6, 10, 16, 23, 13};
    for (std::size_t n = 0; n < expected.size(); ++n)
        EXPECT_EQ(t.e_hat[n], expected[n]) << n;
}

TEST(Euler, ReproducesReferenceTable)
{
    const auto& t = table();
    for (std::int64_t rank = 2; rank <= t.max_rank; ++rank) {
        const auto& ref = reference_row(static_cast<int>(rank));
        EXPECT_EQ(t.chi(rank), ref.chi_value()) << rank;
        EXPECT_EQ(t.e(rank), ref.e_value()) << rank;
        EXPECT_EQ(t.e_odd(rank), ref.e_odd_value()) << rank;
    }
}

TEST(Euler, SequencesAreIntegral)
{
    const auto& t = table();
    for (auto& v : t.e_hat)
        EXPECT_TRUE(is_integral(v));
    for (auto& v : t.e_hat_odd)
        EXPECT_TRUE(is_integral(v));
}

TEST(Euler, ProductFormulaRoundTrip)
{
    const auto& t = table();
    const auto last = static_cast<std::size_t>(t.max_rank - 1);
    EXPECT_EQ(e_hat_from_product_formula(t.e_out, last), t.e_hat);
    EXPECT_EQ(e_hat_odd_from_product_formula(t.e_out_odd, last), t.e_hat_odd);
}

TEST(Euler, ProductFormulaMatchesDirectExpansion)
{
    const auto& t = table();
    const auto last = static_cast<std::size_t>(t.max_rank - 1);
    EXPECT_EQ(expand_product(t.e_out, last, false), t.e_hat);
    EXPECT_EQ(expand_product(t.e_out_odd, last, true), t.e_hat_odd);
}

TEST(Euler, ChiSeriesRoundTrip)
{
    const auto chi_hat = chi_hat_all(10);
    auto logs = chi_out_from_chi_hat(chi_hat);
    EXPECT_EQ(hbar_exp(logs), chi_hat);
    EXPECT_EQ(hbar_log(chi_hat)[1], make_rational(-1, 24));
}

TEST(Euler, ChiHatFirstTerms)
{
    const auto chi_hat = chi_hat_all(2);
    EXPECT_EQ(chi_hat[0], 1);
    EXPECT_EQ(chi_hat[1], make_rational(-1, 24));
    // exp(-hbar/24 - hbar^2/48) to second order
    EXPECT_EQ(chi_hat[2], make_rational(1, 1152) - make_rational(1, 48));
}

TEST(Euler, LeggedForestRouteAgrees)
{
    const auto& t = table();
    for (std::int64_t n = 0; n <= 5; ++n)
        EXPECT_EQ(e_hat_crosscheck(n), t.e_hat[static_cast<std::size_t>(n)]) << n;
}

TEST(Euler, RequiresEnoughTruncation)
{
    const Series f = forest_series(5);
    EXPECT_THROW(static_cast<void>(e_hat(3, f)), std::invalid_argument);
    EXPECT_EQ(e_hat(2, f), 2);
}

TEST(Euler, NonIntegralInputIsRejected)
{
    std::vector<Rational> bad{1, make_rational(1, 2), 0};
    EXPECT_THROW(static_cast<void>(e_out_from_e_hat(bad)), IntegralityError);
}

TEST(Euler, GeneralizedBinomial)
{
    EXPECT_EQ(generalized_binomial(5, 2), 10);
    EXPECT_EQ(generalized_binomial(make_rational(-1, 2), 2), make_rational(3, 8));
    EXPECT_EQ(generalized_binomial(make_rational(7, 3), 0), 1);
}
