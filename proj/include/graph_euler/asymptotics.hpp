#ifndef GRAPH_EULER_ASYMPTOTICS_HPP
#define GRAPH_EULER_ASYMPTOTICS_HPP

#include "graph_euler/euler.hpp"
#include "graph_euler/partitions.hpp"
#include "graph_euler/rational.hpp"
#include "graph_euler/reference_table.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

namespace graph_euler {

inline const double e_minus_quarter = std::exp(-0.25);
inline const double e_plus_quarter = std::exp(0.25);

/// c with Gamma(n - 1/2) = c sqrt(pi), i.e. prod_{j=1}^{n-1} (j - 1/2).
inline Rational gamma_half_coeff(std::int64_t n)
{
    if (n < 1)
        throw std::invalid_argument("gamma_half_coeff: n must be positive");
    Rational c = 1;
    for (std::int64_t j = 1; j < n; ++j)
        c *= make_rational(2 * j - 1, 2);
    return c;
}

/// B_n = -Gamma(n - 1/2) / (sqrt(2 pi) log^2 n), n >= 2.
inline double b_n(std::int64_t n)
{
    if (n < 2)
        throw std::domain_error("b_n: defined for n >= 2");
    const double logn = std::log(static_cast<double>(n));
    return -std::exp(std::lgamma(static_cast<double>(n) - 0.5)) / (std::sqrt(2 * std::numbers::pi) * logn * logn);
}

/// L_n = log n / log log n, n >= 2 (positive from n = 3 on).
inline double l_n(std::int64_t n)
{
    if (n < 2)
        throw std::domain_error("l_n: defined for n >= 2");
    const double logn = std::log(static_cast<double>(n));
    return logn / std::log(logn);
}

/// Variant of B_n with log^2(n+1) in the denominator; finite for n >= 1.
inline double b_tilde_n(std::int64_t n)
{
    if (n < 1)
        throw std::domain_error("b_tilde_n: defined for n >= 1");
    const double log1 = std::log(static_cast<double>(n) + 1);
    return -std::exp(std::lgamma(static_cast<double>(n) - 0.5)) / (std::sqrt(2 * std::numbers::pi) * log1 * log1);
}

/// Variant of L_n: log(n+1) / log log(n+e); finite for n >= 1.
inline double l_tilde_n(std::int64_t n)
{
    if (n < 1)
        throw std::domain_error("l_tilde_n: defined for n >= 1");
    return std::log(static_cast<double>(n) + 1) / std::log(std::log(static_cast<double>(n) + std::numbers::e));
}

/// P_n = sum_m chi_hat_{n-m} binom(-(n-m)/2, m) eta_{2,m}, given chi_hat_0..chi_hat_n.
inline Rational p_n(std::int64_t n, const std::vector<Rational>& chi_hat)
{
    if (n < 0)
        throw std::invalid_argument("p_n: negative index");
    if (chi_hat.size() <= static_cast<std::size_t>(n))
        throw std::invalid_argument("p_n: chi_hat values missing");
    Rational total = 0;
    for (std::int64_t m = 0; m <= n; ++m)
        total += chi_hat[static_cast<std::size_t>(n - m)]
                 * generalized_binomial(make_rational(-(n - m), 2), static_cast<std::uint64_t>(m))
                 * Rational(eta_km(2, static_cast<std::uint64_t>(m)));
    return total;
}

inline Rational p_n(std::int64_t n) { return p_n(n, chi_hat_all(n)); }

/// S_M = sum_{m=0}^{M} (-1)^m eta_{2,m} / (2^m m!), which tends to e^{-1/4}.
inline Rational e14_partial_sum(std::int64_t max_m)
{
    if (max_m < 0)
        throw std::invalid_argument("e14_partial_sum: negative bound");
    Rational total = 0;
    for (std::int64_t m = 0; m <= max_m; ++m) {
        Rational term(eta_km(2, static_cast<std::uint64_t>(m)));
        term /= Rational(power(Integer(2), static_cast<std::uint64_t>(m)) * factorial(static_cast<std::uint64_t>(m)));
        total += m % 2 ? Rational(-term) : term;
    }
    return total;
}

/// Same sum with the signed counts eta_odd_{2,m}; tends to e^{1/4}.
inline Rational e14_partial_sum_odd(std::int64_t max_m)
{
    if (max_m < 0)
        throw std::invalid_argument("e14_partial_sum_odd: negative bound");
    Rational total = 0;
    for (std::int64_t m = 0; m <= max_m; ++m) {
        Rational term(eta_odd_km(2, static_cast<std::uint64_t>(m)));
        term /= Rational(power(Integer(2), static_cast<std::uint64_t>(m)) * factorial(static_cast<std::uint64_t>(m)));
        total += m % 2 ? Rational(-term) : term;
    }
    return total;
}

/// One line of the asymptotic report.  n indexes e_hat_n, chi_hat_n and P_n;
/// the ratio columns refer to Out(F_n) and are filled where both values are
/// known (computed, or else published).
struct AsymptoticRow {
    std::int64_t n = 0;
    std::optional<double> b;
    std::optional<double> l;
    std::optional<Rational> p;
    std::optional<Rational> e_hat;
    std::optional<Rational> chi_hat;
    std::optional<double> ratio_e_over_chi;
    std::optional<double> ratio_e_odd_over_chi;
    /// ratio_e_over_chi / e^{-1/4} - (1 - 29/(32 n)); reported, never asserted
    std::optional<double> conjecture_residual;
};

inline double to_double(const Rational& q) { return q.get_d(); }

/// Rows n = 1..max_n.  chi_hat and e_hat may be shorter than max_n + 1; the
/// table, when given, supplies Out(F_n) values ahead of the published ones.
inline std::vector<AsymptoticRow> asymptotic_rows(std::int64_t max_n, const std::vector<Rational>& chi_hat,
                                                  const std::vector<Rational>& e_hat, const EulerTable* table = nullptr)
{
    std::vector<AsymptoticRow> rows;
    for (std::int64_t n = 1; n <= max_n; ++n) {
        AsymptoticRow row;
        row.n = n;
        if (n >= 2) {
            row.b = b_n(n);
            row.l = l_n(n);
        }
        const auto idx = static_cast<std::size_t>(n);
        if (idx < chi_hat.size()) {
            row.chi_hat = chi_hat[idx];
            row.p = p_n(n, chi_hat);
        }
        if (idx < e_hat.size())
            row.e_hat = e_hat[idx];
        std::optional<Rational> chi, e, e_odd;
        if (table && n >= 2 && n <= table->max_rank) {
            chi = table->chi(n);
            e = Rational(table->e(n));
            e_odd = Rational(table->e_odd(n));
        } else if (n >= 2 && n <= reference_table.back().rank) {
            const auto& ref = reference_row(static_cast<int>(n));
            chi = ref.chi_value();
            e = Rational(ref.e_value());
            e_odd = Rational(ref.e_odd_value());
        }
        if (chi && *chi != 0) {
            row.ratio_e_over_chi = to_double(*e / *chi);
            row.ratio_e_odd_over_chi = to_double(*e_odd / *chi);
            row.conjecture_residual = *row.ratio_e_over_chi / e_minus_quarter - (1 - 29.0 / (32.0 * static_cast<double>(n)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Report for a computed table, extended with the published ranks up to 15.
inline std::vector<AsymptoticRow> ratio_report(const EulerTable& table)
{
    const std::int64_t max_n = std::max<std::int64_t>(table.max_rank, reference_table.back().rank);
    return asymptotic_rows(max_n, table.chi_hat, table.e_hat, &table);
}

} // namespace graph_euler

#endif
