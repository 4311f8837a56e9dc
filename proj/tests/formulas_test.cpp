#include <numeric>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "altperm/formulas.hpp"
#include "altperm/oracle.hpp"

using namespace altperm;

namespace {

Rational oracle_count(oracle::Count c) { return Rational(static_cast<unsigned long>(c)); }

oracle::DoubleVariant to_oracle(DoubleVariant v)
{
    switch (v) {
    case DoubleVariant::alt_alt: return oracle::DoubleVariant::alt_alt;
    case DoubleVariant::alt_ralt: return oracle::DoubleVariant::alt_ralt;
    case DoubleVariant::ralt_ralt: return oracle::DoubleVariant::ralt_ralt;
    case DoubleVariant::ralt_alt: return oracle::DoubleVariant::ralt_alt;
    }
    return oracle::DoubleVariant::alt_alt;
}

constexpr DoubleVariant kVariants[] = {DoubleVariant::alt_alt, DoubleVariant::alt_ralt, DoubleVariant::ralt_ralt,
                                       DoubleVariant::ralt_alt};

std::vector<Integer> ints(std::initializer_list<long> v)
{
    std::vector<Integer> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

EulerPoly poly(std::initializer_list<long> coeffs_low_to_high, long den)
{
    std::vector<Rational> c;
    for (long x : coeffs_low_to_high) c.push_back(make_rational(x, den));
    return EulerPoly(std::move(c));
}

}  // namespace

TEST(Doubly, Examples)
{
    EXPECT_EQ(doubly_alternating(3, DoubleVariant::alt_alt).value, 1);
    EXPECT_EQ(doubly_alternating(4, DoubleVariant::alt_alt).value, 2);
    EXPECT_EQ(doubly_alternating(4, DoubleVariant::alt_ralt).value, 1);
    EXPECT_EQ(parse_double_variant(to_string(DoubleVariant::ralt_alt)), DoubleVariant::ralt_alt);
    EXPECT_THROW(parse_double_variant("sideways"), std::invalid_argument);
}

TEST(Doubly, MatchesOracleByEveryRoute)
{
    for (int n = 1; n <= 8; ++n)
        for (auto v : kVariants) {
            const auto r = doubly_alternating(n, v);
            EXPECT_EQ(r.value, oracle_count(oracle::count_doubly_alternating(n, to_oracle(v)))) << n << " " << to_string(v);
            EXPECT_TRUE(r.consistent()) << n << " " << to_string(v);
            EXPECT_GE(r.crosschecks.size(), 2U);
        }
}

TEST(Doubly, DifferenceRelations)
{
    // alt-ralt(n) is f(n) - f(n-2) for even n and f(n) for odd n.
    for (int n = 4; n <= 16; n += 2) {
        EXPECT_EQ(doubly_alternating(n, DoubleVariant::alt_ralt).value,
                  doubly_alternating(n, DoubleVariant::alt_alt).value - doubly_alternating(n - 2, DoubleVariant::alt_alt).value)
            << n;
    }
    for (int n = 1; n <= 15; n += 2)
        EXPECT_EQ(doubly_alternating(n, DoubleVariant::alt_ralt).value, doubly_alternating(n, DoubleVariant::alt_alt).value);
}

TEST(Shapes, Examples)
{
    EXPECT_EQ(alt_shape(SkewShape(Partition{2, 1}), false).value, 1);
    for (int n = 2; n <= 8; ++n) EXPECT_EQ(alt_shape(SkewShape(Partition{n}), false).value, 0);
    EXPECT_EQ(alt_shape(SkewShape(Partition{3, 3, 3}), false).value, 2);
    EXPECT_EQ(umbral_poly_shape(SkewShape(Partition{1}), Pattern::odd()), E());
    EXPECT_THROW(alt_shape(SkewShape(), false), std::invalid_argument);
}

TEST(Shapes, MatchSytOracle)
{
    for (int n = 1; n <= 8; ++n)
        for (const auto& lam : partitions_of(n))
            for (bool rev : {false, true})
                EXPECT_EQ(alt_shape(SkewShape(lam), rev).value, oracle_count(oracle::count_alternating_syt(SkewShape(lam), rev)))
                    << lam.to_string() << " rev=" << rev;
}

TEST(Staircase, Examples)
{
    EXPECT_EQ(hook_product(staircase_partition(4)), 45);
    EXPECT_EQ(staircase(2).value, 1);
    const auto s3 = staircase(3);
    EXPECT_EQ(s3.value, 1);
    ASSERT_TRUE(s3.pre_umbral);
    EXPECT_EQ(*s3.pre_umbral, EulerPoly(make_rational(1, 3)) * E() * (E() * E() + EulerPoly(1)));
    for (int m = 2; m <= 6; ++m) {
        const auto r = staircase(m);
        EXPECT_TRUE(r.consistent()) << m;
        if (m <= 5) {
            EXPECT_EQ(r.value, oracle_count(oracle::count_alternating_syt(SkewShape(staircase_partition(m)), false))) << m;
        }
    }
    EXPECT_THROW(staircase(1), std::invalid_argument);
}

TEST(Staircase, FactorsOfDeltaFour)
{
    const auto p = umbral_poly_shape(SkewShape(staircase_partition(4)), Pattern::odd());
    EXPECT_TRUE(divides(E() * E() + EulerPoly(1), p));
    EXPECT_EQ(factor_probe(p, 3), (std::vector<std::pair<int, int>>{{0, 2}, {1, 1}, {2, 1}}));
}

TEST(Square, Examples)
{
    EXPECT_EQ(square(1).value, 1);
    const auto r = square(3);
    EXPECT_EQ(r.value, 2);
    EXPECT_TRUE(r.consistent());
    EXPECT_EQ(r.crosschecks.size(), 2U);
    EXPECT_EQ(oracle::count_alternating_syt(SkewShape(Partition{3, 3, 3}), false), 2U);
    const EulerPoly four = E() * E() + EulerPoly(4), sixteen = E() * E() + EulerPoly(16);
    const EulerPoly want = EulerPoly(make_rational(1, 8640)) * E().pow(3) * four * four * sixteen;
    EXPECT_EQ(*r.pre_umbral, want);
    EXPECT_EQ(umbral_poly_shape(SkewShape(Partition{3, 3, 3}), Pattern::odd()), want);
    EXPECT_THROW(square(2), std::invalid_argument);
    EXPECT_TRUE(square(5).consistent());
}

TEST(CycleType, Examples)
{
    EXPECT_EQ(b_cycle_type(Partition{2, 1}, false).value, 1);
    EXPECT_EQ(b_cycle_type(Partition{1}, false).value, 1);
    for (int n = 2; n <= 8; ++n)
        EXPECT_EQ(b_cycle_type(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)), false).value, 0);
    EXPECT_EQ(b_cycle_type(Partition{2}, false).value, 1);
    EXPECT_EQ(b_cycle_type(Partition{2}, true).value, 0);
}

TEST(CycleType, MatchesOracle)
{
    for (int n = 1; n <= 8; ++n)
        for (bool rev : {false, true}) {
            const auto by_type = oracle::alternating_by_cycle_type(n, rev);
            Rational total;
            for (const auto& rho : partitions_of(n)) {
                const auto it = by_type.find(rho);
                const auto r = b_cycle_type(rho, rev);
                EXPECT_EQ(r.value, it == by_type.end() ? Rational(0) : oracle_count(it->second)) << rho.to_string();
                EXPECT_TRUE(r.consistent()) << rho.to_string();
                total += r.value;
            }
            EXPECT_EQ(total, Rational(euler_number(static_cast<std::size_t>(n))));
        }
}

TEST(NCycle, ClosedForms)
{
    EXPECT_EQ(b_ncycle_closed(3, false).value, 1);
    EXPECT_EQ(b_ncycle_closed(4, false).value, 1);
    for (int p : {3, 5, 7, 11}) {
        const Integer sign = ((p - 1) / 2) % 2 ? -1 : 1;
        const Rational want = Rational(euler_number(static_cast<std::size_t>(p)) - sign) / p;
        EXPECT_EQ(b_ncycle_closed(p, false).value, want) << p;
    }
    for (int n = 1; n <= 12; ++n)
        for (bool rev : {false, true}) {
            const auto r = b_ncycle_closed(n, rev);
            EXPECT_TRUE(r.consistent()) << n;
            EXPECT_EQ(r.value, b_cycle_type(Partition{n}, rev).value) << n << " rev=" << rev;
        }
}

TEST(Fm, Series)
{
    EXPECT_EQ(fm_series(2, 8, false), ints({1, 1, 1, 2, 5, 17, 72, 367, 2179}));
    EXPECT_EQ(fm_series(1, 6, false), ints({1, 1, 0, 0, 0, 0, 0}));
    for (int m = 1; m <= 10; ++m)
        for (bool rev : {false, true}) {
            const auto N = static_cast<std::size_t>(10 / m);
            const auto s = fm_series(m, N, rev);
            for (std::size_t r = 1; r <= N; ++r)
                EXPECT_EQ(Rational(s[r]), b_cycle_type(Partition(std::vector<int>(r, m)), rev).value)
                    << "m=" << m << " r=" << r << " rev=" << rev;
        }
}

TEST(CycleIndicator, Examples)
{
    const auto z = cycle_indicator_truncated(4, 10, false);
    EXPECT_EQ(z.at(Partition{2, 1}), 1);
    EXPECT_EQ(z.at(Partition{1}), 1);
    EXPECT_THROW(cycle_indicator_truncated(7, 4, false), std::invalid_argument);
}

TEST(CycleIndicator, MatchesCycleTypes)
{
    for (bool rev : {false, true}) {
        const auto z = cycle_indicator_truncated(4, 10, rev);
        for (int n = 1; n <= 10; ++n)
            for (const auto& lam : partitions_of(n, 4)) {
                const auto it = z.find(lam);
                const Integer got = it == z.end() ? Integer(0) : it->second;
                EXPECT_EQ(Rational(got), b_cycle_type(lam, rev).value) << lam.to_string() << " rev=" << rev;
            }
        const auto full = cycle_indicator_truncated(6, 6, rev);
        for (int n = 1; n <= 6; ++n) {
            Integer sum = 0;
            for (const auto& [lam, c] : full)
                if (lam.size() == n) sum += c;
            EXPECT_EQ(sum, euler_number(static_cast<std::size_t>(n))) << n;
        }
    }
}

TEST(Involutions, Series)
{
    const auto c = involutions_series(9, false);
    EXPECT_EQ(c, ints({1, 1, 1, 1, 2, 3, 6, 11, 24, 51}));
    EXPECT_EQ(involutions_series(9, true), c);
    for (int n = 1; n <= 9; ++n)
        EXPECT_EQ(Rational(c[static_cast<std::size_t>(n)]), oracle_count(oracle::count_alternating_involutions(n, false))) << n;
}

TEST(FixedPoints, Examples)
{
    const auto d = fixed_point_series(4, false);
    EXPECT_EQ(d[4][0], 2);
    EXPECT_EQ(d[4][1], 2);
    EXPECT_EQ(d[4][2], 1);
    EXPECT_EQ(d[3][0], 1);
    EXPECT_EQ(d[3][1], 1);
    // 21 is the only alternating permutation of [2], and it is a derangement.
    EXPECT_EQ(d[2][0], 1);
    EXPECT_EQ(d[2][1], 0);
}

TEST(FixedPoints, MatchOracle)
{
    for (bool rev : {false, true}) {
        const auto table = fixed_point_series(8, rev);
        for (int n = 1; n <= 8; ++n) {
            const auto want = oracle::alternating_by_fixed_points(n, rev);
            for (int k = 0; k <= n; ++k)
                EXPECT_EQ(Rational(table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]),
                          oracle_count(want[static_cast<std::size_t>(k)]))
                    << "n=" << n << " k=" << k << " rev=" << rev;
        }
    }
}

TEST(FixedPoints, NoFixedPointAndOneFixedPointAgree)
{
    const auto d = fixed_point_series(16, false), ds = fixed_point_series(16, true);
    for (std::size_t n = 3; n <= 16; ++n) EXPECT_EQ(d[n][0], d[n][1]) << n;
    for (std::size_t n = 2; n <= 16; ++n) EXPECT_EQ(ds[n][0], ds[n][1]) << n;
}

TEST(FixedPoints, DerangementIdentities)
{
    const auto rows = conjecture_check(12);
    EXPECT_FALSE(rows.empty());
    for (const auto& row : rows) EXPECT_TRUE(row.equal) << row.n << " " << row.statement;
    const auto d = fixed_point_series(5, true);
    EXPECT_EQ(d[5][3], 1);
    EXPECT_THROW(conjecture_check(3), std::invalid_argument);
}

TEST(Asymptotics, Coefficients)
{
    EXPECT_EQ(asymptotic_coeffs(AsyKind::a, 3),
              (std::vector<Rational>{1, Rational(1, 3), Rational(-13, 90), Rational(467, 5670)}));
    EXPECT_EQ(asymptotic_coeffs(AsyKind::b, 3),
              (std::vector<Rational>{1, Rational(5, 6), Rational(-37, 360), Rational(281, 9072)}));
    EXPECT_EQ(asymptotic_coeffs(AsyKind::c, 3),
              (std::vector<Rational>{1, Rational(-1, 6), Rational(23, 360), Rational(-1493, 45360)}));
    EXPECT_EQ(parse_asy_kind("b"), AsyKind::b);
    EXPECT_THROW(parse_asy_kind("d"), std::invalid_argument);
}

TEST(Asymptotics, Sanity)
{
    const auto s = asymptotic_sanity(9, 2, AsyKind::a);
    EXPECT_EQ(s.exact, fixed_point_series(9, false)[9][0]);
    EXPECT_LT(s.relative_error, 0.01);
    EXPECT_LT(s.relative_error, 1e-5);
    EXPECT_LT(asymptotic_sanity(5, 0, AsyKind::a).relative_error, 0.1);
    EXPECT_TRUE(asymptotic_error_decreases(AsyKind::a, 0, {7, 9, 11, 13}));
    EXPECT_TRUE(asymptotic_error_decreases(AsyKind::b, 3, {8, 10, 12, 14}));
    EXPECT_TRUE(asymptotic_error_decreases(AsyKind::c, 3, {8, 10, 12, 14}));
    EXPECT_THROW(asymptotic_sanity(8, 1, AsyKind::a), std::invalid_argument);
    EXPECT_THROW(asymptotic_sanity(9, 5, AsyKind::a), std::invalid_argument);
}

TEST(Multiset, Examples)
{
    const auto r = multiset_count(Composition{3, 3, 3}, {}, false);
    EXPECT_EQ(r.value, 30);
    EXPECT_TRUE(r.consistent());
    EXPECT_EQ(*r.pre_umbral, poly({0, 0, 0, -8, 0, 12, 0, -6, 0, 1}, 216));
    for (int n = 1; n <= 8; ++n) {
        const Composition ones(std::vector<int>(static_cast<std::size_t>(n), 1));
        EXPECT_EQ(multiset_count(ones, {}, false).value, Rational(euler_number(static_cast<std::size_t>(n))));
    }
    EXPECT_THROW(multiset_count(Composition{2, 2}, {3}, false), std::invalid_argument);
}

TEST(Multiset, MatchesOracle)
{
    for (int n = 1; n <= 7; ++n)
        for (const auto& alpha : compositions_of(n)) {
            const int k = static_cast<int>(alpha.length());
            if (k > 4) continue;
            for (int mask = 0; mask < (1 << k); ++mask) {
                std::set<int> a;
                for (int i = 0; i < k; ++i)
                    if (mask >> i & 1) a.insert(i + 1);
                for (bool rev : {false, true}) {
                    const auto r = multiset_count(alpha, a, rev);
                    EXPECT_EQ(r.value, oracle_count(oracle::count_multiset_alternating(alpha, a, rev)))
                        << alpha.to_string() << " mask=" << mask << " rev=" << rev;
                    EXPECT_TRUE(r.consistent());
                }
            }
        }
}

TEST(EhTable, Entries)
{
    const auto t = eh_specialization_table(6);
    EXPECT_TRUE(t.identities_hold);
    ASSERT_EQ(t.rows.size(), 6U);
    for (std::size_t p = 0; p < 3; ++p) {
        EXPECT_EQ(t.rows[0].e[p], E());
        EXPECT_EQ(t.rows[0].h[p], E());
    }
    EXPECT_EQ(t.rows[2].h[0], poly({0, -2, 0, 1}, 6));
    EXPECT_EQ(t.rows[3].h[2], poly({-3, 0, -2, 0, 1}, 24));
    EXPECT_EQ(t.rows[3].e[2], poly({9, 0, -14, 0, 1}, 24));
    EXPECT_EQ(t.rows[4].e[1], poly({0, -11, 0, -10, 0, 1}, 120));
    EXPECT_EQ(t.rows[4].e[2], poly({0, 89, 0, -30, 0, 1}, 120));
    // Direct substitution as an independent route.
    EXPECT_EQ(t.rows[4].e[2], substitute(elementary_e(5), Pattern::even_ralt()));
    EXPECT_EQ(t.rows[2].h[0], substitute(complete_h(3), Pattern::odd()));
}
