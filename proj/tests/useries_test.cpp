#include <vector>

#include <gtest/gtest.h>

#include "altperm/useries.hpp"

using namespace altperm;

namespace {

std::vector<Rational> ints(std::initializer_list<long> v)
{
    std::vector<Rational> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

}  // namespace

TEST(Series, Arithmetic)
{
    const auto t = ESeries::t(6);
    const auto one = ESeries::one(6);
    EXPECT_EQ(rational_coefficients((one + t) * (one - t)), ints({1, 0, -1, 0, 0, 0, 0}));
    EXPECT_EQ(rational_coefficients(plus_minus_ratio(4)), ints({1, 2, 2, 2, 2}));
    const auto geo = one / (one - E() * t);
    for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(geo[n], E().pow(static_cast<unsigned>(n))) << n;
    EXPECT_EQ(series_arith(one, t, SeriesOp::sub), one - t);
}

TEST(Series, DivisionNeedsRationalUnit)
{
    const auto t = ESeries::t(4);
    EXPECT_THROW(ESeries::one(4) / t, SeriesError);
    EXPECT_THROW(ESeries::one(4) / (E() * ESeries::one(4)), SeriesError);
}

TEST(Series, Transcendentals)
{
    const auto L = half_log_ratio(7);
    const std::vector<Rational> want{0, 1, 0, Rational(1, 3), 0, Rational(1, 5), 0, Rational(1, 7)};
    EXPECT_EQ(rational_coefficients(L), want);
    const auto at = arctan_t(7);
    const std::vector<Rational> want_at{0, 1, 0, Rational(-1, 3), 0, Rational(1, 5), 0, Rational(-1, 7)};
    EXPECT_EQ(rational_coefficients(at), want_at);
    const auto t = ESeries::t(8);
    EXPECT_EQ(series_log(series_exp(t)), t);
    EXPECT_EQ(series_fn(t, SeriesFn::exp).parity_part(true), series_sinh(t));
    EXPECT_EQ((ESeries::one(3) + ESeries::t(3)).parity_part(false), ESeries::one(3));
    const auto s = series_sqrt(ESeries::one(8) + t);
    EXPECT_EQ(s * s, ESeries::one(8) + t);
}

TEST(Series, PowerWithEulerExponent)
{
    const auto a = series_pow(ESeries::one(5) + ESeries::t(5), E());
    EXPECT_EQ(a[1], E());
    EXPECT_EQ(a[2], EulerPoly(Rational(1, 2)) * (E() * E() - E()));
    EXPECT_EQ(umbral_coefficients(a)[0], 1);
    EXPECT_EQ(umbral_coefficients(a)[1], 1);
    EXPECT_EQ(umbral_coefficients(a)[2], 0);
    EXPECT_EQ(umbral_coefficients(a)[3], Rational(1, 6));
    EXPECT_EQ(series_pow(plus_minus_ratio(5), EulerPoly{}), ESeries::one(5));
}

TEST(Series, RamanujanCoefficients)
{
    const auto exponent = EulerPoly(Rational(1, 4)) * (E() * E() + EulerPoly(1));
    const auto f2 = series_pow(plus_minus_ratio(8), exponent);
    EXPECT_EQ(umbral_coefficients(f2), ints({1, 1, 1, 2, 5, 17, 72, 367, 2179}));
}

TEST(Series, UmbralIdentityIsOnePlusT)
{
    const std::size_t order = 40;
    const auto at = E() * arctan_t(order);
    const auto t = ESeries::t(order);
    const auto lhs = series_sinh(at) + series_cosh(at) / series_sqrt(ESeries::one(order) + t * t);
    const auto c = umbral_coefficients(lhs);
    EXPECT_EQ(c[0], 1);
    EXPECT_EQ(c[1], 1);
    for (std::size_t n = 2; n <= order; ++n) EXPECT_EQ(c[n], 0) << n;
}

TEST(Series, ExpEArctanThirdCoefficient)
{
    const auto s = series_exp(E() * arctan_t(4));
    EXPECT_EQ(s[3], EulerPoly(Rational(1, 6)) * (E().pow(3) - EulerPoly(2) * E()));
    EXPECT_EQ(umbral_eval(s[3]), 0);
}

TEST(Series, QSubstitution)
{
    const auto a = arctan_t(5);
    const auto q = substitute_qt(a);
    for (std::size_t i = 0; i <= 5; ++i) EXPECT_EQ(q[i], QPoly::monomial(a[i], i)) << i;
    EXPECT_EQ(lift_q(ESeries::one(3)), QESeries::one(3));
    // exp(E(arctan qt - arctan t)) at q = 1 is 1.
    const auto diff = E() * (substitute_qt(a) - lift_q(a));
    const auto ex = series_exp(diff);
    for (std::size_t i = 0; i <= 5; ++i) {
        EulerPoly at_one;
        for (const auto& c : ex[i].coeffs()) at_one += c;
        EXPECT_EQ(at_one, i == 0 ? EulerPoly(1) : EulerPoly{}) << i;
    }
}

TEST(Series, ZeroSeriesUmbralizesToZero)
{
    for (const auto& c : umbral_coefficients(ESeries(5))) EXPECT_EQ(c, 0);
}
