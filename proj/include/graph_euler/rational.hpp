#ifndef GRAPH_EULER_RATIONAL_HPP
#define GRAPH_EULER_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace graph_euler {

// GMP keeps mpq_class canonical (lowest terms, positive denominator) after
// every arithmetic operation; values built from raw parts must go through
// make_rational() so that the same holds.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den = 1)
{
    return make_rational(Integer(num), Integer(den));
}

inline Integer parse_integer(std::string_view text)
{
    Integer z;
    if (text.empty() || z.set_str(std::string(text), 10) != 0)
        throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
    return z;
}

/// "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Accepts "p" or "p/q".
inline Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text));
    return make_rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline Integer factorial(std::uint64_t n)
{
    Integer z;
    mpz_fac_ui(z.get_mpz_t(), n);
    return z;
}

inline Integer binomial(std::uint64_t n, std::uint64_t k)
{
    Integer z;
    mpz_bin_uiui(z.get_mpz_t(), n, k);
    return z;
}

inline Integer power(const Integer& base, std::uint64_t e)
{
    Integer z;
    mpz_pow_ui(z.get_mpz_t(), base.get_mpz_t(), e);
    return z;
}

/// (2r-1)!! = 1*3*...*(2r-1); equals 1 for r = 0.
inline Integer odd_double_factorial(std::uint64_t r)
{
    if (r == 0)
        return 1;
    Integer z;
    mpz_2fac_ui(z.get_mpz_t(), 2 * r - 1);
    return z;
}

} // namespace graph_euler

#endif
