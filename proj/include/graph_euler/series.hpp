#ifndef GRAPH_EULER_SERIES_HPP
#define GRAPH_EULER_SERIES_HPP

#include "graph_euler/partition.hpp"
#include "graph_euler/rational.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <iterator>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace graph_euler {

/// u^uExp x^xPart.  The u exponent may be negative inside a single
/// computation; values handed across module boundaries never are.
struct Monomial {
    std::int64_t u = 0;
    Partition x;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Per-axis truncation of a series.  An unset bound means "exact on that axis".
struct Truncation {
    std::optional<std::int64_t> u_max;
    std::optional<std::uint64_t> x_weight_max;

    static Truncation exact() { return {}; }
    static Truncation in_u(std::int64_t u_max) { return {u_max, std::nullopt}; }
    static Truncation in_x(std::uint64_t weight) { return {std::nullopt, weight}; }
    static Truncation both(std::int64_t u_max, std::uint64_t weight) { return {u_max, weight}; }

    bool admits(std::int64_t u, std::uint64_t weight) const noexcept
    {
        return (!u_max || u <= *u_max) && (!x_weight_max || weight <= *x_weight_max);
    }

    /// The tighter bound on each axis.
    friend Truncation tighter(const Truncation& a, const Truncation& b)
    {
        auto pick = [](auto x, auto y) -> decltype(x) {
            if (!x)
                return y;
            if (!y)
                return x;
            return std::min(*x, *y);
        };
        return {pick(a.u_max, b.u_max), pick(a.x_weight_max, b.x_weight_max)};
    }

    friend bool operator==(const Truncation&, const Truncation&) = default;
};

/// Raised when a coefficient is requested beyond the bounds where the series
/// is known.
class TruncationError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Sparse truncated power series in u and x_1, x_2, ... over the rationals.
///
/// Terms are kept in canonical monomial order with no stored zeros, and every
/// stored monomial satisfies the truncation.  Values are immutable once
/// built; all operations below are free functions returning new series.
class Series {
public:
    using Terms = std::map<Monomial, Rational>;

    explicit Series(Truncation t = {}) : trunc_(t) {}

    static Series constant(const Rational& c, Truncation t = {})
    {
        Series s(t);
        s.accumulate({0, {}}, c);
        return s;
    }

    static Series monomial(const Rational& c, std::int64_t u, Partition x, Truncation t = {})
    {
        Series s(t);
        s.accumulate({u, std::move(x)}, c);
        return s;
    }

    const Truncation& truncation() const noexcept { return trunc_; }
    const Terms& terms() const& noexcept { return terms_; }
    // By value on rvalues, so `for (auto& t : make().terms())` stays valid.
    Terms terms() && { return std::move(terms_); }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    bool admits(const Monomial& m) const noexcept { return trunc_.admits(m.u, m.x.size()); }

    /// Adds c to the coefficient of m; monomials outside the truncation are
    /// discarded and zero results are erased.
    void accumulate(const Monomial& m, const Rational& c)
    {
        if (c == 0 || !admits(m))
            return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    void accumulate(Monomial&& m, const Rational& c)
    {
        if (c == 0 || !admits(m))
            return;
        auto [it, inserted] = terms_.try_emplace(std::move(m), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    Rational coefficient(std::int64_t u, const Partition& x) const
    {
        if (!admits({u, x}))
            throw TruncationError("coefficient of u^" + std::to_string(u) + " x^" + x.to_string()
                                  + " lies outside the series truncation");
        auto it = terms_.find(Monomial{u, x});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational constant_term() const { return coefficient(0, {}); }

    std::int64_t min_u() const
    {
        std::int64_t lo = 0;
        bool first = true;
        for (auto& [m, c] : terms_) {
            lo = first ? m.u : std::min(lo, m.u);
            first = false;
        }
        return lo;
    }

    /// Rejects negative u exponents in a series that is truncated in u.
    const Series& require_power_series(const char* what) const
    {
        if (trunc_.u_max && !terms_.empty() && min_u() < 0)
            throw std::logic_error(std::string(what) + ": negative power of u escaped an intermediate computation");
        return *this;
    }

    friend bool operator==(const Series& a, const Series& b)
    {
        return a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
    }

    /// Coefficientwise equality, ignoring the truncation records.
    bool same_terms(const Series& other) const { return terms_ == other.terms_; }

private:
    Terms terms_;
    Truncation trunc_;
};

inline Rational coefficient(const Series& s, std::int64_t u, const Partition& x)
{
    return s.coefficient(u, x);
}

inline Series truncate(const Series& s, Truncation t)
{
    Series out(t);
    for (auto& [m, c] : s.terms())
        out.accumulate(m, c);
    return out;
}

inline Series add(const Series& a, const Series& b)
{
    Series out(tighter(a.truncation(), b.truncation()));
    for (auto& [m, c] : a.terms())
        out.accumulate(m, c);
    for (auto& [m, c] : b.terms())
        out.accumulate(m, c);
    return out;
}

inline Series scale(const Series& s, const Rational& factor)
{
    Series out(s.truncation());
    if (factor == 0)
        return out;
    for (auto& [m, c] : s.terms())
        out.accumulate(m, c * factor);
    return out;
}

inline Series negate(const Series& s) { return scale(s, -1); }

inline Series subtract(const Series& a, const Series& b) { return add(a, negate(b)); }

namespace detail {

inline void multiply_into(Series& out, std::span<const std::pair<Monomial, Rational>> a, const Series& b)
{
    const Truncation& t = out.truncation();
    for (auto& [ma, ca] : a) {
        const std::uint64_t wa = ma.x.size();
        for (auto& [mb, cb] : b.terms()) {
            const std::int64_t u = ma.u + mb.u;
            const std::uint64_t w = wa + mb.x.size();
            if (!t.admits(u, w))
                continue;
            out.accumulate(Monomial{u, ma.x | mb.x}, ca * cb);
        }
    }
}

} // namespace detail

/// Truncated product.  With threads > 1 the terms of `a` are split into
/// contiguous chunks whose partial products are summed in chunk order; exact
/// arithmetic makes the result identical to the sequential product.
inline Series mul(const Series& a, const Series& b, unsigned threads = 1)
{
    const Truncation t = tighter(a.truncation(), b.truncation());
    std::vector<std::pair<Monomial, Rational>> lhs(a.terms().begin(), a.terms().end());
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(lhs.size() / 64 + 1)));
    if (threads == 1) {
        Series out(t);
        detail::multiply_into(out, lhs, b);
        return out;
    }
    std::vector<Series> partial(threads, Series(t));
    std::vector<std::thread> pool;
    const std::size_t chunk = (lhs.size() + threads - 1) / threads;
    for (unsigned i = 0; i < threads; ++i) {
        const std::size_t lo = std::min(lhs.size(), i * chunk);
        const std::size_t hi = std::min(lhs.size(), lo + chunk);
        pool.emplace_back([&, i, lo, hi] {
            detail::multiply_into(partial[i], std::span(lhs).subspan(lo, hi - lo), b);
        });
    }
    for (auto& th : pool)
        th.join();
    Series out(t);
    for (auto& p : partial)
        for (auto& [m, c] : p.terms())
            out.accumulate(m, c);
    return out;
}

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return subtract(a, b); }
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }

namespace detail {

// Grade used by exp and log: the u exponent when the series is truncated in
// u, the x-weight otherwise.
struct Grading {
    bool by_u;
    std::int64_t max_grade;

    static Grading of(const Truncation& t, const char* op)
    {
        if (t.u_max)
            return {true, *t.u_max};
        if (t.x_weight_max)
            return {false, static_cast<std::int64_t>(*t.x_weight_max)};
        throw std::domain_error(std::string(op) + " needs a truncated series");
    }

    std::int64_t grade(const Monomial& m) const
    {
        return by_u ? m.u : static_cast<std::int64_t>(m.x.size());
    }
};

using GradedParts = std::vector<std::vector<std::pair<Monomial, Rational>>>;

inline GradedParts split_by_grade(const Series& s, const Grading& g, bool allow_constant, const char* op)
{
    GradedParts parts(static_cast<std::size_t>(std::max<std::int64_t>(g.max_grade, 0) + 1));
    for (auto& [m, c] : s.terms()) {
        const std::int64_t gr = g.grade(m);
        const bool is_constant = m.u == 0 && m.x.empty();
        if (is_constant && allow_constant)
            continue;
        if (is_constant)
            throw std::domain_error(std::string(op) + ": nonzero constant term");
        if (gr <= 0)
            throw std::domain_error(std::string(op) + ": monomial u^" + std::to_string(m.u) + " x^" + m.x.to_string()
                                    + " has non-positive grade");
        if (gr <= g.max_grade)
            parts[static_cast<std::size_t>(gr)].emplace_back(m, c);
    }
    return parts;
}

inline void accumulate_product(std::map<Monomial, Rational>& acc, const Truncation& t,
                               const std::vector<std::pair<Monomial, Rational>>& a,
                               const std::vector<std::pair<Monomial, Rational>>& b, const Rational& factor)
{
    for (auto& [ma, ca] : a) {
        Rational fa = ca * factor;
        for (auto& [mb, cb] : b) {
            const std::int64_t u = ma.u + mb.u;
            if (!t.admits(u, ma.x.size() + mb.x.size()))
                continue;
            acc[Monomial{u, ma.x | mb.x}] += fa * cb;
        }
    }
}

inline std::vector<std::pair<Monomial, Rational>> drain(std::map<Monomial, Rational>& acc, const Rational& factor)
{
    std::vector<std::pair<Monomial, Rational>> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0)
            out.emplace_back(m, c * factor);
    acc.clear();
    return out;
}

} // namespace detail

/// exp(s) = sum_j s^j / j!, computed grade by grade through
/// E_r = (1/r) sum_j j S_j E_{r-j}.
inline Series exp(const Series& s)
{
    const Truncation& t = s.truncation();
    const auto grading = detail::Grading::of(t, "exp");
    auto parts = detail::split_by_grade(s, grading, false, "exp");

    detail::GradedParts e(parts.size());
    e[0].emplace_back(Monomial{}, Rational(1));
    std::map<Monomial, Rational> acc;
    for (std::size_t r = 1; r < parts.size(); ++r) {
        for (std::size_t j = 1; j <= r; ++j)
            if (!parts[j].empty() && !e[r - j].empty())
                detail::accumulate_product(acc, t, parts[j], e[r - j], Rational(static_cast<long>(j)));
        e[r] = detail::drain(acc, make_rational(1, static_cast<long>(r)));
    }
    Series out(t);
    for (auto& grade : e)
        for (auto& [m, c] : grade)
            out.accumulate(m, c);
    return out;
}

/// The unique L with exp(L) = s, via the derivative recurrence
/// L_r = S_r - (1/r) sum_{j<r} j L_j S_{r-j}.
inline Series log(const Series& s)
{
    const Truncation& t = s.truncation();
    if (s.constant_term() != 1)
        throw std::domain_error("log: constant term must be 1");
    const auto grading = detail::Grading::of(t, "log");
    auto parts = detail::split_by_grade(s, grading, true, "log");

    detail::GradedParts l(parts.size());
    std::map<Monomial, Rational> acc;
    for (std::size_t r = 1; r < parts.size(); ++r) {
        for (std::size_t j = 1; j < r; ++j)
            if (!l[j].empty() && !parts[r - j].empty())
                detail::accumulate_product(acc, t, l[j], parts[r - j], Rational(-static_cast<long>(j)));
        for (auto& [m, c] : acc)
            c /= static_cast<unsigned long>(r);
        for (auto& [m, c] : parts[r])
            acc[m] += c;
        l[r] = detail::drain(acc, Rational(1));
    }
    Series out(t);
    for (auto& grade : l)
        for (auto& [m, c] : grade)
            out.accumulate(m, c);
    return out;
}

/// log(1 + x_k) = sum_m (-1)^{m+1} x_k^m / m, truncated at x-weight D.
inline Series log1p_var(Partition::Part k, std::uint64_t max_weight)
{
    if (k == 0)
        throw std::invalid_argument("log1p_var: variable index must be positive");
    Series out(Truncation::in_x(max_weight));
    for (Partition::Part m = 1; std::uint64_t(m) * k <= max_weight; ++m)
        out.accumulate({0, Partition::power(k, m)}, make_rational(m % 2 ? 1 : -1, static_cast<long>(m)));
    return out;
}

/// x_i -> x_{k i}; u untouched.
inline Series rescale_parts(const Series& s, Partition::Part k, Truncation t)
{
    Series out(t);
    for (auto& [m, c] : s.terms())
        out.accumulate({m.u, m.x.scaled(k)}, c);
    return out;
}

/// x_i -> u^{k i} x_{k i}, i.e. x^lambda -> u^{k|lambda|} x^{k lambda}.
inline Series substitute_scale(const Series& s, Partition::Part k, Truncation t)
{
    Series out(t);
    for (auto& [m, c] : s.terms()) {
        if (m.u != 0)
            throw std::invalid_argument("substitute_scale expects a series in x only");
        const auto w = static_cast<std::int64_t>(m.x.size());
        if (t.u_max && w * k > *t.u_max)
            continue;
        out.accumulate({w * k, m.x.scaled(k)}, c);
    }
    return out;
}

/// Same substitution; the x-weight bound scales with k and u is left exact.
inline Series substitute_scale(const Series& s, Partition::Part k)
{
    Truncation t;
    if (s.truncation().x_weight_max)
        t.x_weight_max = *s.truncation().x_weight_max * k;
    return substitute_scale(s, k, t);
}

/// Multiplies by u^d.  The u bound moves with the terms.
inline Series shift_u(const Series& s, std::int64_t d)
{
    Truncation t = s.truncation();
    if (t.u_max) {
        if (*t.u_max + d < 0)
            throw std::invalid_argument("shift_u: u bound would become negative");
        *t.u_max += d;
    }
    Series out(t);
    for (auto& [m, c] : s.terms())
        out.accumulate({m.u + d, m.x}, c);
    return out;
}

/// Sets x_k = 0 for every k > max_index.
inline Series drop_variables_above(const Series& s, Partition::Part max_index)
{
    Series out(s.truncation());
    for (auto& [m, c] : s.terms())
        if (m.x.largest_part() <= max_index)
            out.accumulate(m, c);
    return out;
}

} // namespace graph_euler

#endif
