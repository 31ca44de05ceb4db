#ifndef GRAPH_EULER_TREEGEN_HPP
#define GRAPH_EULER_TREEGEN_HPP

#include "graph_euler/partitions.hpp"
#include "graph_euler/series.hpp"

#include <cstdint>
#include <stdexcept>

namespace graph_euler {

/// Cycle index series of rooted trees, sum_n mu(n)/n log(1 + x_n).
inline Series rooted_tree_series(std::uint64_t max_weight)
{
    if (max_weight < 1)
        throw std::invalid_argument("rooted_tree_series: weight bound must be at least 1");
    MobiusTable mu(max_weight);
    Series r(Truncation::in_x(max_weight));
    for (std::uint64_t n = 1; n <= max_weight; ++n)
        if (mu(n) != 0)
            r = add(r, scale(log1p_var(static_cast<Partition::Part>(n), max_weight), make_rational(mu(n), static_cast<long>(n))));
    return r;
}

/// Unrooted trees with at least three leaves, written out term by term:
/// x_1 + x_1^2/2 - x_2/2 - (1 + x_1) sum_k mu(k)/k log(1 + x_k).
inline Series tree_series(std::uint64_t max_weight)
{
    if (max_weight < 3)
        throw std::invalid_argument("tree_series: weight bound must be at least 3");
    MobiusTable mu(max_weight);
    Series v(Truncation::in_x(max_weight));
    v.accumulate({0, Partition::power(1, 1)}, 1);
    v.accumulate({0, Partition::power(1, 2)}, make_rational(1, 2));
    v.accumulate({0, Partition::power(2, 1)}, make_rational(-1, 2));
    for (std::uint64_t k = 1; k <= max_weight; ++k) {
        if (mu(k) == 0)
            continue;
        for (std::uint64_t m = 1; k * m <= max_weight; ++m) {
            // -mu(k)/k * (-1)^{m+1}/m
            Rational c = make_rational(mu(k) * (m % 2 ? -1 : 1), static_cast<long>(k * m));
            auto xk = Partition::power(static_cast<Partition::Part>(k), static_cast<Partition::Part>(m));
            v.accumulate({0, xk}, c);
            v.accumulate({0, xk | Partition::power(1, 1)}, c);
        }
    }
    return v;
}

/// Rooted trees whose automorphisms fix no leaf:
/// W = -sum_{k>=2} mu(k)/k log(1 + x_k).
inline Series w_series(std::uint64_t max_weight)
{
    if (max_weight < 2)
        throw std::invalid_argument("w_series: weight bound must be at least 2");
    MobiusTable mu(max_weight);
    Series w(Truncation::in_x(max_weight));
    for (std::uint64_t k = 2; k <= max_weight; ++k)
        if (mu(k) != 0)
            w = add(w, scale(log1p_var(static_cast<Partition::Part>(k), max_weight), make_rational(-mu(k), static_cast<long>(k))));
    return w;
}

/// The one-variable specialisation V(x) = x + x^2/2 - (1 + x) log(1 + x),
/// stored in x_1.
inline Series univariate_tree_series(std::uint64_t max_weight)
{
    Series v(Truncation::in_x(max_weight));
    v.accumulate({0, Partition::power(1, 1)}, 1);
    v.accumulate({0, Partition::power(1, 2)}, make_rational(1, 2));
    for (std::uint64_t m = 1; m <= max_weight; ++m) {
        Rational c = make_rational(m % 2 ? -1 : 1, static_cast<long>(m));
        v.accumulate({0, Partition::power(1, static_cast<Partition::Part>(m))}, c);
        v.accumulate({0, Partition::power(1, static_cast<Partition::Part>(m + 1))}, c);
    }
    return v;
}

enum class Orientation { even, odd };

/// sum_{k=1}^{U} s_k u^{-2k} V((u x)_[k]) / k truncated at u^U, with s_k = 1
/// for the even complex and (-1)^{k+1} for the odd one.  Every term has
/// u-degree at least k >= 1, so the exponential below is well defined.
inline Series forest_exponent(std::int64_t u_max, Orientation orientation = Orientation::even)
{
    if (u_max < 0)
        throw std::invalid_argument("forest_exponent: negative u bound");
    const auto weight = static_cast<std::uint64_t>(3 * std::max<std::int64_t>(u_max, 1));
    const Truncation target = Truncation::both(u_max, weight);
    Series exponent(target);
    if (u_max == 0)
        return exponent;
    const Series v = tree_series(weight);
    for (std::int64_t k = 1; k <= u_max; ++k) {
        Series term = substitute_scale(v, static_cast<Partition::Part>(k), Truncation::both(u_max + 2 * k, weight));
        term = shift_u(term, -2 * k);
        const int sign = (orientation == Orientation::odd && k % 2 == 0) ? -1 : 1;
        exponent = add(exponent, scale(term, make_rational(sign, k)));
    }
    return exponent.require_power_series("forest_exponent");
}

/// Cycle index series of forests glued from trees, F = exp(forest_exponent).
inline Series forest_series(std::int64_t u_max, Orientation orientation = Orientation::even)
{
    return exp(forest_exponent(u_max, orientation)).require_power_series("forest_series");
}

inline Series forest_series_odd(std::int64_t u_max) { return forest_series(u_max, Orientation::odd); }

} // namespace graph_euler

#endif
