#ifndef GRAPH_EULER_EULER_HPP
#define GRAPH_EULER_EULER_HPP

#include "graph_euler/forest_engine.hpp"
#include "graph_euler/partitions.hpp"
#include "graph_euler/series.hpp"
#include "graph_euler/treegen.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace graph_euler {

/// A value that must be an integer came out fractional.
class IntegralityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two independent routes to the same number disagree.
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Series in hbar are stored with hbar = u^2, so coefficient n sits at u^{2n}.

inline Series hbar_series(const std::vector<Rational>& coeffs)
{
    if (coeffs.empty())
        throw std::invalid_argument("hbar_series: empty coefficient list");
    Series s(Truncation::in_u(2 * static_cast<std::int64_t>(coeffs.size() - 1)));
    for (std::size_t n = 0; n < coeffs.size(); ++n)
        s.accumulate({2 * static_cast<std::int64_t>(n), {}}, coeffs[n]);
    return s;
}

inline std::vector<Rational> hbar_coefficients(const Series& s)
{
    if (!s.truncation().u_max)
        throw std::invalid_argument("hbar_coefficients: series must be truncated in u");
    std::vector<Rational> out(static_cast<std::size_t>(*s.truncation().u_max / 2 + 1));
    for (auto& [m, c] : s.terms()) {
        if (!m.x.empty() || m.u < 0 || m.u % 2 != 0)
            throw std::invalid_argument("hbar_coefficients: series is not a power series in u^2");
        out[static_cast<std::size_t>(m.u / 2)] = c;
    }
    return out;
}

/// Coefficients of log(sum_n a_n hbar^n), a_0 = 1.
inline std::vector<Rational> hbar_log(const std::vector<Rational>& coeffs)
{
    return hbar_coefficients(log(hbar_series(coeffs)));
}

/// Coefficients of exp(sum_n a_n hbar^n), a_0 = 0.
inline std::vector<Rational> hbar_exp(const std::vector<Rational>& coeffs)
{
    return hbar_coefficients(exp(hbar_series(coeffs)));
}

namespace detail {

inline Rational eta_weighted_coefficient(std::int64_t n, const Series& f, Orientation orientation, const char* op)
{
    if (n < 0)
        throw std::invalid_argument(std::string(op) + ": negative index");
    if (!f.truncation().u_max || *f.truncation().u_max < 2 * n)
        throw std::invalid_argument(std::string(op) + ": forest series truncated below u^" + std::to_string(2 * n));
    Rational total = 0;
    for (auto& [m, c] : f.terms()) {
        if (m.u != 2 * n)
            continue;
        total += c * (orientation == Orientation::even ? eta(m.x) : eta_odd(m.x));
    }
    return total;
}

} // namespace detail

/// sum_lambda eta_lambda [u^{2n} x^lambda] F for F = forest_series(U), U >= 2n.
inline Rational e_hat(std::int64_t n, const Series& forest)
{
    return detail::eta_weighted_coefficient(n, forest, Orientation::even, "e_hat");
}

/// Odd counterpart, with F = forest_series_odd(U) and the signed matching counts.
inline Rational e_hat_odd(std::int64_t n, const Series& forest_odd)
{
    return detail::eta_weighted_coefficient(n, forest_odd, Orientation::odd, "e_hat_odd");
}

/// The values e_hat(0..max_index) (or their odd counterparts) from one run of
/// the forest engine at U = 2 max_index.
inline std::vector<Rational> e_hat_sequence(std::int64_t max_index, Orientation orientation, unsigned threads = 1)
{
    if (max_index < 0)
        throw std::invalid_argument("e_hat_sequence: negative index");
    ForestEngine engine(2 * max_index, orientation, threads);
    EtaCache etas(static_cast<std::uint64_t>(6 * std::max<std::int64_t>(max_index, 1)));
    std::vector<Rational> out;
    for (std::int64_t n = 0; n <= max_index; ++n) {
        Rational v = orientation == Orientation::even
                         ? engine.weighted_sum(2 * n, [&](const Partition& p) { return etas.eta(p); })
                         : engine.weighted_sum(2 * n, [&](const Partition& p) { return etas.eta_odd(p); });
        if (!is_integral(v))
            throw IntegralityError("e_hat(" + std::to_string(n) + ") = " + to_string(v) + " is not an integer");
        out.push_back(v);
    }
    return out;
}

namespace detail {

inline std::vector<Integer> invert_log_coefficients(const std::vector<Rational>& e_hat, bool odd)
{
    if (e_hat.empty() || e_hat[0] != 1)
        throw std::invalid_argument("Euler characteristic inversion needs e_hat_0 = 1");
    for (std::size_t n = 0; n < e_hat.size(); ++n)
        if (!is_integral(e_hat[n]))
            throw IntegralityError("e_hat(" + std::to_string(n) + ") = " + to_string(e_hat[n]) + " is not an integer");
    const auto tilde = hbar_log(e_hat);
    const std::size_t max_index = e_hat.size() - 1;
    MobiusTable mu(std::max<std::size_t>(max_index, 1));
    // Indexed by rank; entries 0 and 1 are unused.
    std::vector<Integer> by_rank(max_index + 2, 0);
    for (std::size_t n = 1; n <= max_index; ++n) {
        Rational sum = 0;
        for (std::size_t d = 1; d <= n; ++d) {
            if (n % d || mu(d) == 0)
                continue;
            Rational term = tilde[n / d] * make_rational(mu(d), static_cast<long>(d));
            if (odd && (n / d) % 2 == 1)
                term = -term;
            sum += term;
        }
        if (odd && n % 2 == 1)
            sum = -sum;
        if (!is_integral(sum))
            throw IntegralityError(std::string(odd ? "e_odd" : "e") + "(Out F_" + std::to_string(n + 1)
                                   + ") = " + to_string(sum) + " is not an integer");
        by_rank[n + 1] = sum.get_num();
    }
    return by_rank;
}

} // namespace detail

/// e(Out F_{n+1}) for n = 1..N from e_hat_0..e_hat_N, via the log
/// coefficients and Moebius inversion.  Indexed by rank.
inline std::vector<Integer> e_out_from_e_hat(const std::vector<Rational>& e_hat)
{
    return detail::invert_log_coefficients(e_hat, false);
}

/// Odd counterpart: e_odd(Out F_{n+1}) = (-1)^n sum_{d|n} mu(d)/d (-1)^{n/d} tilde_{n/d}.
inline std::vector<Integer> e_out_odd_from_e_hat_odd(const std::vector<Rational>& e_hat_odd)
{
    return detail::invert_log_coefficients(e_hat_odd, true);
}

/// e(Out F_n) for 2 <= n <= max_rank, indexed by rank.
inline std::vector<Integer> e_out_all(std::int64_t max_rank, unsigned threads = 1)
{
    if (max_rank < 2)
        throw std::invalid_argument("e_out_all: rank bound must be at least 2");
    return e_out_from_e_hat(e_hat_sequence(max_rank - 1, Orientation::even, threads));
}

inline std::vector<Integer> e_out_odd_all(std::int64_t max_rank, unsigned threads = 1)
{
    if (max_rank < 2)
        throw std::invalid_argument("e_out_odd_all: rank bound must be at least 2");
    return e_out_odd_from_e_hat_odd(e_hat_sequence(max_rank - 1, Orientation::odd, threads));
}

/// chi_hat_0..chi_hat_N with
/// chi_hat_n = [u^{2n}] sum_m (2m-1)!! [x^{2m}] exp(u^{-2} V(u x)).
inline std::vector<Rational> chi_hat_all(std::int64_t max_index)
{
    if (max_index < 0)
        throw std::invalid_argument("chi_hat_all: negative index");
    const std::int64_t u_max = 2 * max_index;
    const auto weight = static_cast<std::uint64_t>(6 * std::max<std::int64_t>(max_index, 1));
    Series exponent = shift_u(substitute_scale(univariate_tree_series(weight), 1, Truncation::both(u_max + 2, weight)), -2);
    Series legs = exp(exponent.require_power_series("chi_hat_all"));
    std::vector<Rational> out(static_cast<std::size_t>(max_index) + 1, Rational(0));
    for (auto& [m, c] : legs.terms()) {
        if (m.u % 2 != 0)
            continue;
        const auto ones = m.x.multiplicity(1);
        if (ones % 2 != 0)
            continue;
        out[static_cast<std::size_t>(m.u / 2)] += c * odd_double_factorial(ones / 2);
    }
    return out;
}

/// chi_n = chi(Out F_{n+1}) for n = 1..N (entry 0 is unused), as the log
/// coefficients of the chi_hat series.
inline std::vector<Rational> chi_out_from_chi_hat(const std::vector<Rational>& chi_hat)
{
    auto logs = hbar_log(chi_hat);
    logs[0] = 0;
    return logs;
}

inline std::vector<Rational> chi_out_all(std::int64_t max_index)
{
    if (max_index < 1)
        throw std::invalid_argument("chi_out_all: index bound must be at least 1");
    return chi_out_from_chi_hat(chi_hat_all(max_index));
}

/// q (q-1) ... (q-m+1) / m!
inline Rational generalized_binomial(const Rational& q, std::uint64_t m)
{
    Rational out = 1;
    for (std::uint64_t i = 0; i < m; ++i)
        out *= (q - static_cast<long>(i)) / Rational(static_cast<long>(i + 1));
    return out;
}

/// e_hat_n through the legged-forest route: the eta-weighted coefficient of
/// u^{2n} in T_hat(u^2 e^{-W(u x)}) H(u, x), summed over deranged partitions.
inline Rational e_hat_crosscheck(std::int64_t n)
{
    if (n < 0)
        throw std::invalid_argument("e_hat_crosscheck: negative index");
    if (n == 0)
        return 1;
    const std::int64_t u_max = 2 * n;
    const auto weight = static_cast<std::uint64_t>(6 * n);
    const Truncation target = Truncation::both(u_max, weight);
    const Truncation wide = Truncation::both(u_max + 2, weight);

    const Series v = tree_series(weight);
    const Series w = substitute_scale(w_series(weight), 1, wide);

    Series h1(target);
    for (std::int64_t k = 2; k <= u_max; ++k) {
        Series term = shift_u(substitute_scale(v, static_cast<Partition::Part>(k), Truncation::both(u_max + 2 * k, weight)), -2 * k);
        h1 = add(h1, scale(term, make_rational(1, k)));
    }
    h1.require_power_series("h1");
    const Series h2 = truncate(scale(w, make_rational(1, 2)), target);
    Series shifted = subtract(exp(w), Series::constant(1, wide));
    shifted = subtract(shifted, Series::monomial(make_rational(1, 2), 2, Partition::power(2, 1), wide));
    const Series h3 = shift_u(shifted, -2).require_power_series("h3");
    const Series h_exponent = add(add(h1, h2), h3);
    for (auto& [m, c] : h_exponent.terms())
        if (m.u <= 0)
            throw ConsistencyError("e_hat_crosscheck: exponent of H has a term without a positive power of u");
    const Series h = exp(h_exponent);

    const auto chi_hat = chi_hat_all(n);
    MobiusTable mu(static_cast<std::size_t>(std::max<std::int64_t>(u_max, 2)));
    Series t(target);
    for (const Partition& delta : partitions_of_weight_at_most(static_cast<std::uint64_t>(u_max))) {
        if (!delta.is_deranged())
            continue;
        const auto size = static_cast<std::int64_t>(delta.size());
        for (std::int64_t r = size; r <= u_max; r += 2) {
            const std::int64_t m = (r - size) / 2;
            Rational c = chi_hat[static_cast<std::size_t>(m)];
            for (auto [k, mk] : delta.entries())
                c *= generalized_binomial(make_rational(m * mu(k), static_cast<long>(k)), mk);
            t.accumulate({r, delta}, c);
        }
    }

    const Series product = mul(t, h);
    Rational total = 0;
    for (auto& [m, c] : product.terms())
        if (m.u == u_max && m.x.is_deranged())
            total += c * eta(m.x);
    return total;
}

/// e_hat_0..e_hat_N regenerated from e(Out F_2..F_{N+1}) by expanding
/// prod_k (1 - hbar^k)^{-e(Out F_{k+1})}.
inline std::vector<Rational> e_hat_from_product_formula(const std::vector<Integer>& e_by_rank, std::size_t max_index)
{
    std::vector<Rational> log_coeffs(max_index + 1, Rational(0));
    for (std::size_t k = 1; k <= max_index; ++k) {
        if (k + 1 >= e_by_rank.size())
            throw std::invalid_argument("e_hat_from_product_formula: missing e(Out F_" + std::to_string(k + 1) + ")");
        for (std::size_t m = 1; k * m <= max_index; ++m)
            log_coeffs[k * m] += Rational(e_by_rank[k + 1]) / Rational(static_cast<long>(m));
    }
    return hbar_exp(log_coeffs);
}

/// Odd counterpart: prod_k (1 - (-hbar)^k)^{-(-1)^k e_odd(Out F_{k+1})}.
inline std::vector<Rational> e_hat_odd_from_product_formula(const std::vector<Integer>& e_odd_by_rank, std::size_t max_index)
{
    std::vector<Rational> log_coeffs(max_index + 1, Rational(0));
    for (std::size_t k = 1; k <= max_index; ++k) {
        if (k + 1 >= e_odd_by_rank.size())
            throw std::invalid_argument("e_hat_odd_from_product_formula: missing e_odd(Out F_" + std::to_string(k + 1) + ")");
        for (std::size_t m = 1; k * m <= max_index; ++m) {
            // (-1)^k from the exponent, (-1)^{km} from (-hbar)^{km}
            const bool negative = (k + k * m) % 2 == 1;
            Rational term = Rational(e_odd_by_rank[k + 1]) / Rational(static_cast<long>(m));
            log_coeffs[k * m] += negative ? Rational(-term) : term;
        }
    }
    return hbar_exp(log_coeffs);
}

/// Everything the pipeline produces for ranks 2..max_rank.
struct EulerTable {
    std::int64_t max_rank = 0;
    std::vector<Rational> e_hat;      // index n = 0..max_rank-1
    std::vector<Rational> e_hat_odd;  // index n = 0..max_rank-1
    std::vector<Rational> chi_hat;    // index n = 0..max_rank-1
    std::vector<Integer> e_out;       // index = rank, 2..max_rank
    std::vector<Integer> e_out_odd;   // index = rank, 2..max_rank
    std::vector<Rational> chi_out;    // index = rank, 2..max_rank

    const Rational& chi(std::int64_t rank) const { return chi_out.at(static_cast<std::size_t>(rank)); }
    const Integer& e(std::int64_t rank) const { return e_out.at(static_cast<std::size_t>(rank)); }
    const Integer& e_odd(std::int64_t rank) const { return e_out_odd.at(static_cast<std::size_t>(rank)); }
};

/// Builds the table from the three basic sequences (each of length max_rank).
inline EulerTable assemble_euler_table(std::vector<Rational> e_hat_values, std::vector<Rational> e_hat_odd_values,
                                       std::vector<Rational> chi_hat_values)
{
    const std::size_t len = e_hat_values.size();
    if (len < 2 || e_hat_odd_values.size() != len || chi_hat_values.size() != len)
        throw std::invalid_argument("assemble_euler_table: sequences must share a length of at least 2");
    EulerTable table;
    table.max_rank = static_cast<std::int64_t>(len);
    table.e_out = e_out_from_e_hat(e_hat_values);
    table.e_out_odd = e_out_odd_from_e_hat_odd(e_hat_odd_values);
    const auto chi = chi_out_from_chi_hat(chi_hat_values);
    table.chi_out.assign(len + 1, Rational(0));
    for (std::size_t n = 1; n < len; ++n)
        table.chi_out[n + 1] = chi[n];
    table.e_hat = std::move(e_hat_values);
    table.e_hat_odd = std::move(e_hat_odd_values);
    table.chi_hat = std::move(chi_hat_values);
    return table;
}

inline EulerTable compute_euler_table(std::int64_t max_rank, unsigned threads = 1)
{
    if (max_rank < 2)
        throw std::invalid_argument("compute_euler_table: rank bound must be at least 2");
    return assemble_euler_table(e_hat_sequence(max_rank - 1, Orientation::even, threads),
                                e_hat_sequence(max_rank - 1, Orientation::odd, threads),
                                chi_hat_all(max_rank - 1));
}

} // namespace graph_euler

#endif
