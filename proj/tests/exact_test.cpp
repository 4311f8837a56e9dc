#include <algorithm>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "altperm/exact.hpp"
#include "altperm/useries.hpp"

using namespace altperm;

namespace {

// Brute-force counts over S_n.
std::vector<long> brute_alternating(int n_max)
{
    std::vector<long> out{1};
    for (int n = 1; n <= n_max; ++n) {
        std::vector<int> w(static_cast<std::size_t>(n));
        std::iota(w.begin(), w.end(), 1);
        long c = 0;
        do {
            bool ok = true;
            for (int i = 0; i + 1 < n && ok; ++i) ok = (i % 2 == 0) ? w[i] > w[i + 1] : w[i] < w[i + 1];
            c += ok;
        } while (std::next_permutation(w.begin(), w.end()));
        out.push_back(c);
    }
    return out;
}

std::vector<long> brute_derangements(int n_max)
{
    std::vector<long> out{1};
    for (int n = 1; n <= n_max; ++n) {
        std::vector<int> w(static_cast<std::size_t>(n));
        std::iota(w.begin(), w.end(), 1);
        long c = 0;
        do {
            bool ok = true;
            for (int i = 0; i < n && ok; ++i) ok = w[i] != i + 1;
            c += ok;
        } while (std::next_permutation(w.begin(), w.end()));
        out.push_back(c);
    }
    return out;
}

}  // namespace

TEST(EulerNumbers, SmallValues)
{
    const auto e = euler_numbers(4);
    ASSERT_EQ(e.size(), 5U);
    const int want[] = {1, 1, 1, 2, 5};
    for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(e[i], want[i]);
    EXPECT_EQ(euler_numbers(0).size(), 1U);
    EXPECT_EQ(euler_numbers(0)[0], 1);
}

TEST(EulerNumbers, MatchBruteForce)
{
    const auto brute = brute_alternating(9);
    for (std::size_t n = 0; n < brute.size(); ++n) EXPECT_EQ(euler_number(n), brute[n]) << "n=" << n;
    EXPECT_EQ(euler_number(9), 7936);
}

TEST(EulerNumbers, SecTanSeriesAgrees)
{
    const auto a = euler_numbers(30);
    const auto b = sec_tan_euler_numbers(30);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t n = 0; n < a.size(); ++n) EXPECT_EQ(a[n], b[n]) << "n=" << n;
}

TEST(Umbral, Evaluation)
{
    const EulerPoly x = E();
    const EulerPoly one(1);
    EXPECT_EQ(umbral_eval((x * x - one).pow(2)), 4);
    EXPECT_EQ(umbral_eval(one), 1);
    EXPECT_EQ(umbral_eval(EulerPoly(Rational(1, 2)) * (x * x + x)), 1);
    EXPECT_EQ(umbral_eval(EulerPoly{}), 0);
}

TEST(Umbral, IsLinearNotMultiplicative)
{
    const EulerPoly x = E();
    EXPECT_EQ(umbral_eval(x * x), 1);
    EXPECT_EQ(umbral_eval(x) * umbral_eval(x), 1);
    EXPECT_EQ(umbral_eval(x.pow(4)), 5);
    EXPECT_NE(umbral_eval(x.pow(2)) * umbral_eval(x.pow(2)), umbral_eval(x.pow(4)));
}

TEST(Derangements, MatchBruteForce)
{
    const auto d = derangement_numbers(8);
    const auto brute = brute_derangements(8);
    for (std::size_t n = 0; n < brute.size(); ++n) EXPECT_EQ(d[n], brute[n]) << "n=" << n;
    EXPECT_EQ(d[6], 265);
    EXPECT_EQ(derangement_numbers(0).size(), 1U);
}

TEST(Polynomial, DivisionWithRemainder)
{
    const EulerPoly x = E();
    const EulerPoly p = x.pow(2) * (x * x + EulerPoly(1));
    const auto [q, r] = divmod(p, x * x + EulerPoly(1));
    EXPECT_TRUE(r.is_zero());
    EXPECT_EQ(q, x.pow(2));
    EXPECT_TRUE(divides(x, p));
    EXPECT_FALSE(divides(x + EulerPoly(1), p));
}

TEST(Polynomial, Printing)
{
    const EulerPoly x = E();
    EXPECT_EQ(to_string(EulerPoly{}), "0");
    EXPECT_NE(to_string(x.pow(3) - x).find("E^3"), std::string::npos);
}

TEST(Rational, Helpers)
{
    EXPECT_EQ(make_rational(6, 4), Rational(3, 2));
    EXPECT_TRUE(is_integer(make_rational(4, 2)));
    EXPECT_FALSE(is_integer(Rational(1, 2)));
    EXPECT_EQ(to_string(make_rational(-3, 6)), "-1/2");
    EXPECT_EQ(factorial(5), 120);
    EXPECT_EQ(binomial(6, 2), 15);
}
