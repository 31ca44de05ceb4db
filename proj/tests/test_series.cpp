#include "graph_euler/series.hpp"
#include "graph_euler/series_json.hpp"

#include <gtest/gtest.h>

using namespace graph_euler;

namespace {

Partition P(std::initializer_list<Partition::Part> parts) { return Partition::from_parts(parts); }

Series poly(Truncation t, std::initializer_list<std::tuple<std::int64_t, Partition, Rational>> terms)
{
    Series s(t);
    for (auto& [u, x, c] : terms)
        s.accumulate({u, x}, c);
    return s;
}

} // namespace

TEST(Rational, CanonicalFormAndParsing)
{
    EXPECT_EQ(make_rational(6, -4), make_rational(-3, 2));
    EXPECT_EQ(to_string(make_rational(10, 5)), "2");
    EXPECT_EQ(parse_rational("-6389072441/1393459200"), make_rational(-6389072441L, 1393459200L));
    EXPECT_EQ(to_string(parse_rational("4/6")), "2/3");
    EXPECT_THROW(parse_rational("1/0"), std::domain_error);
    EXPECT_THROW(parse_integer("12x"), std::invalid_argument);
    EXPECT_EQ(odd_double_factorial(0), 1);
    EXPECT_EQ(odd_double_factorial(4), 105);
    EXPECT_EQ(binomial(10, 3), 120);
    EXPECT_EQ(factorial(20), parse_integer("2432902008176640000"));
}

TEST(Partition, StructureAndOrder)
{
    const auto p = P({1, 3, 1, 2});
    EXPECT_EQ(p.size(), 7u);
    EXPECT_EQ(p.length(), 4u);
    EXPECT_EQ(p.multiplicity(1), 2u);
    EXPECT_FALSE(p.is_deranged());
    EXPECT_TRUE(P({2, 3}).is_deranged());
    EXPECT_EQ(p.parts(), (std::vector<Partition::Part>{3, 2, 1, 1}));
    EXPECT_EQ(Partition::from_multiplicities({{1, 2}, {3, 1}, {2, 1}}), p);
    EXPECT_EQ(P({2, 1}) | P({1}), P({2, 1, 1}));
    EXPECT_EQ(P({2, 1}).scaled(3), P({6, 3}));
    EXPECT_EQ(p.without_ones(), P({3, 2}));
    EXPECT_LT(P({2, 1}), P({3}));
    EXPECT_THROW(P({0}), std::invalid_argument);
}

TEST(Series, ArithmeticRespectsTruncation)
{
    const auto t = Truncation::both(3, 3);
    const Series a = poly(t, {{0, {}, 1}, {1, P({1}), 2}});
    const Series b = poly(t, {{1, P({1}), -1}, {2, P({2}), make_rational(1, 3)}});
    const Series sum = a + b;
    EXPECT_EQ(sum.coefficient(1, P({1})), 1);
    const Series prod = a * b;
    EXPECT_EQ(prod.coefficient(2, P({1, 1})), -2);
    EXPECT_EQ(prod.coefficient(3, P({2, 1})), make_rational(2, 3));
    // u^2 x_1^2 times u^2 x_2 would be u^4, beyond the bound.
    for (auto& [m, c] : (prod * prod).terms())
        EXPECT_TRUE(t.admits(m.u, m.x.size()));
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_THROW(static_cast<void>(prod.coefficient(4, P({}))), TruncationError);
}

TEST(Series, ThreadedProductIsIdentical)
{
    const auto t = Truncation::in_x(10);
    Series a = log1p_var(1, 10) + log1p_var(2, 10) + log1p_var(3, 10);
    a = a * a;
    EXPECT_TRUE(mul(a, a, 1).same_terms(mul(a, a, 4)));
    EXPECT_EQ(mul(a, a, 3).truncation(), t);
}

TEST(Series, ExpLogRoundTrip)
{
    const auto t = Truncation::in_x(8);
    const Series s = poly(t, {{0, P({1}), make_rational(1, 2)}, {0, P({2}), -3}, {0, P({1, 1, 1}), make_rational(5, 7)}});
    const Series e = exp(s);
    EXPECT_EQ(e.constant_term(), 1);
    EXPECT_TRUE(log(e).same_terms(s));
    EXPECT_TRUE(exp(log(e)).same_terms(e));
}

TEST(Series, ExpOfLog1pIsOnePlusVariable)
{
    const Series s = exp(log1p_var(2, 12));
    EXPECT_TRUE(s.same_terms(poly(Truncation::in_x(12), {{0, {}, 1}, {0, P({2}), 1}})));
}

TEST(Series, ExpLogErrors)
{
    const Series constant = poly(Truncation::in_x(4), {{0, {}, 1}});
    EXPECT_THROW(static_cast<void>(exp(constant)), std::domain_error);
    EXPECT_THROW(static_cast<void>(log(poly(Truncation::in_x(4), {{0, {}, 2}}))), std::domain_error);
    EXPECT_THROW(static_cast<void>(exp(poly(Truncation::exact(), {{0, P({1}), 1}}))), std::domain_error);
}

TEST(Series, SubstitutionsAndShift)
{
    const Series s = poly(Truncation::in_x(3), {{0, P({1}), 1}, {0, P({2, 1}), 2}});
    const Series sub = substitute_scale(s, 2);
    EXPECT_EQ(sub.coefficient(2, P({2})), 1);
    EXPECT_EQ(sub.coefficient(6, P({4, 2})), 2);
    EXPECT_EQ(sub.truncation().x_weight_max, 6u);
    const Series shifted = shift_u(poly(Truncation::in_u(5), {{3, {}, 1}}), -2);
    EXPECT_EQ(shifted.coefficient(1, {}), 1);
    EXPECT_EQ(shifted.truncation().u_max, 3);
    EXPECT_THROW(static_cast<void>(shift_u(poly(Truncation::in_u(5), {{1, {}, 1}}), -2).require_power_series("t")),
                 std::logic_error);
    EXPECT_TRUE(drop_variables_above(s, 1).same_terms(poly(Truncation::in_x(3), {{0, P({1}), 1}})));
    EXPECT_EQ(rescale_parts(s, 3, Truncation::in_x(9)).coefficient(0, P({6, 3})), 2);
}

TEST(SeriesJson, RoundTripAndValidation)
{
    const Series s = poly(Truncation::both(6, 9),
                          {{0, {}, 1}, {2, P({3, 1}), parse_rational("-123456789012345678901234567890/7")}, {5, P({2, 2}), 3}});
    const Series back = parse_series(serialize_series(s));
    EXPECT_EQ(back, s);
    EXPECT_EQ(back.truncation(), s.truncation());
    EXPECT_THROW(parse_series("{"), SeriesFormatError);
    EXPECT_THROW(parse_series(R"({"version":99,"uMax":null,"xWeightMax":null,"terms":[]})"), SeriesFormatError);
    // A term outside the declared bound is rejected.
    EXPECT_THROW(parse_series(R"({"version":1,"uMax":1,"xWeightMax":null,"terms":[[2,[],"1","1"]]})"), SeriesFormatError);
}
