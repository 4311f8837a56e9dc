// Closed forms and generating functions for alternating permutations refined
// by inverse, shape, cycle type, fixed points and multiset content.
//
// Every function that can be computed more than one way records each route in
// its CountReport; callers (and the verify suites) compare them.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "altperm/exact.hpp"
#include "altperm/perms.hpp"
#include "altperm/symfunc.hpp"
#include "altperm/useries.hpp"

namespace altperm {

struct CountReport {
    int n = 0;
    Rational value;
    std::string route;
    std::vector<std::pair<std::string, Rational>> crosschecks;
    /// The polynomial in E that `value` is the umbral evaluation of, when there is one.
    std::optional<EulerPoly> pre_umbral;

    bool consistent() const
    {
        return std::all_of(crosschecks.begin(), crosschecks.end(), [&](const auto& c) { return c.second == value; });
    }
};

enum class DoubleVariant { alt_alt, alt_ralt, ralt_ralt, ralt_alt };

inline std::string to_string(DoubleVariant v)
{
    switch (v) {
    case DoubleVariant::alt_alt: return "alt_alt";
    case DoubleVariant::alt_ralt: return "alt_ralt";
    case DoubleVariant::ralt_ralt: return "ralt_ralt";
    case DoubleVariant::ralt_alt: return "ralt_alt";
    }
    return "?";
}

inline DoubleVariant parse_double_variant(const std::string& s)
{
    for (auto v : {DoubleVariant::alt_alt, DoubleVariant::alt_ralt, DoubleVariant::ralt_ralt, DoubleVariant::ralt_alt})
        if (to_string(v) == s) return v;
    throw std::invalid_argument("unknown variant '" + s + "' (expected alt_alt, alt_ralt, ralt_ralt or ralt_alt)");
}

namespace detail {

/// Counts must come out as nonnegative integers; anything else is a bug.
inline Integer require_count(const Rational& r, const char* what)
{
    if (!is_integer(r) || sgn(r) < 0)
        throw std::logic_error(std::string(what) + " produced " + to_string(r) + ", not a nonnegative integer");
    return r.get_num();
}

inline Integer require_integer(const Rational& r, const char* what)
{
    if (!is_integer(r)) throw std::logic_error(std::string(what) + " produced non-integer " + to_string(r));
    return r.get_num();
}

inline EulerPoly ep(long num, long den = 1) { return EulerPoly(make_rational(num, den)); }

inline EulerPoly e_pow(std::size_t k) { return EulerPoly::monomial(Rational(1), k); }

/// ((1+t)/(1-t))^c.
inline ESeries ratio_power(std::size_t order, const EulerPoly& c) { return series_pow(plus_minus_ratio(order), c); }

inline ESeries exp_e_arctan(std::size_t order) { return series_exp(E() * arctan_t(order)); }

/// sqrt(1 + t^2).
inline ESeries sqrt_one_plus_t2(std::size_t order)
{
    const auto t = ESeries::t(order);
    return series_sqrt(ESeries::one(order) + t * t);
}

/// E^l -> (-1)^{(n-l)/2} E^l: turns f[E,0,E,0,...] into f[E,0,-E,0,...] for f
/// homogeneous of degree n in the odd power sums.
inline EulerPoly odd_sign_twist(const EulerPoly& p, int n)
{
    std::vector<Rational> c = p.coeffs();
    for (std::size_t l = 0; l < c.size(); ++l) {
        if (is_zero(c[l])) continue;
        const long gap = n - static_cast<long>(l);
        if (gap % 2) throw std::logic_error("sign twist applied to a polynomial of the wrong parity");
        if ((gap / 2) % 2) c[l] = -c[l];
    }
    return EulerPoly(std::move(c));
}

/// Fraction-free (Bareiss) determinant over Q[E].
inline EulerPoly determinant(std::vector<std::vector<EulerPoly>> m)
{
    const std::size_t n = m.size();
    if (n == 0) return EulerPoly(1);
    EulerPoly prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap_with = k + 1;
            while (swap_with < n && m[swap_with][k].is_zero()) ++swap_with;
            if (swap_with == n) return {};
            std::swap(m[k], m[swap_with]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                auto [q, r] = divmod(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
                if (!r.is_zero()) throw std::logic_error("Bareiss step left a remainder");
                m[i][j] = std::move(q);
            }
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Shapes

/// Number of alternating (reverse alternating) SYT of a skew shape.
inline CountReport alt_shape(const SkewShape& shape, bool reverse)
{
    const int n = shape.size();
    if (n < 1) throw std::invalid_argument("shape must be nonempty");
    const EulerPoly poly = substitute(skew_schur_in_p(shape), Pattern::for_size(n, reverse));
    CountReport r{n, umbral_eval(poly), "schur_specialization", {}, poly};
    detail::require_count(r.value, "alt_shape");
    return r;
}

/// The pre-umbral polynomial s_shape[pattern], for factorization experiments.
inline EulerPoly umbral_poly_shape(const SkewShape& shape, const Pattern& pat)
{
    return substitute(skew_schur_in_p(shape), pat);
}

/// Multiplicity of E (j = 0) or of E^2 + j^2 (j > 0) as a factor of p.
inline int factor_multiplicity(EulerPoly p, int j)
{
    if (p.is_zero()) throw std::invalid_argument("factor multiplicity of the zero polynomial");
    const EulerPoly f = j == 0 ? E() : E() * E() + detail::ep(static_cast<long>(j) * j);
    int mult = 0;
    for (;;) {
        auto [q, r] = divmod(p, f);
        if (!r.is_zero()) return mult;
        p = std::move(q);
        ++mult;
    }
}

/// (j, multiplicity) for every candidate factor E, E^2+1, ..., E^2+max_j^2 that divides p.
inline std::vector<std::pair<int, int>> factor_probe(const EulerPoly& p, int max_j)
{
    std::vector<std::pair<int, int>> out;
    for (int j = 0; j <= max_j; ++j)
        if (int m = factor_multiplicity(p, j); m > 0) out.emplace_back(j, m);
    return out;
}

inline Partition staircase_partition(int m)
{
    std::vector<int> parts;
    for (int i = m - 1; i >= 1; --i) parts.push_back(i);
    return Partition(std::move(parts));
}

/// alt(delta_m) = ralt(delta_m), delta_m = (m-1, m-2, ..., 1).
inline CountReport staircase(int m)
{
    if (m < 2) throw std::invalid_argument("staircase needs m >= 2");
    const int k = m / 2;
    EulerPoly poly = detail::e_pow(static_cast<std::size_t>(k));
    for (int j = 1; j <= m - 2; ++j) {
        const int exponent = m % 2 == 0 ? k - (j + 1) / 2 : k - j / 2;
        poly *= (E() * E() + detail::ep(static_cast<long>(j) * j)).pow(static_cast<unsigned>(exponent));
    }
    const Partition delta = staircase_partition(m);
    poly.scale(make_rational(1, hook_product(delta)));
    CountReport r{delta.size(), umbral_eval(poly), "product_over_hooks", {}, poly};
    detail::require_count(r.value, "staircase");
    r.crosschecks.emplace_back("alt_shape", alt_shape(SkewShape(delta), false).value);
    r.crosschecks.emplace_back("ralt_shape", alt_shape(SkewShape(delta), true).value);
    return r;
}

/// alt(p x p) = ralt(p x p) for odd p.
inline CountReport square(int p)
{
    if (p < 1 || p % 2 == 0) throw std::invalid_argument("square needs an odd side length p >= 1");
    const int n = p * p;
    const Partition box(std::vector<int>(static_cast<std::size_t>(p), p));

    EulerPoly product = detail::e_pow(static_cast<std::size_t>(p));
    for (int i = 1; i <= p - 1; ++i)
        product *= (E() * E() + detail::ep(4L * i * i)).pow(static_cast<unsigned>(p - i));
    product.scale(make_rational(1, hook_product(box)));
    CountReport r{n, umbral_eval(product), "product_over_hooks", {}, product};
    detail::require_count(r.value, "square");

    // Jacobi-Trudi with h_j[E,0,E,0,...] = a_j(E), ((1+t)/(1-t))^{E/2} = sum a_j t^j.
    const auto a = detail::ratio_power(static_cast<std::size_t>(2 * p), detail::ep(1, 2) * E());
    std::vector<std::vector<EulerPoly>> m(static_cast<std::size_t>(p), std::vector<EulerPoly>(static_cast<std::size_t>(p)));
    for (int i = 1; i <= p; ++i)
        for (int j = 1; j <= p; ++j) {
            const int idx = p - i + j;
            if (idx >= 0) m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = a[static_cast<std::size_t>(idx)];
        }
    const EulerPoly det = detail::odd_sign_twist(detail::determinant(std::move(m)), n);
    r.crosschecks.emplace_back("hankel_determinant", umbral_eval(det));
    if (p <= 5) r.crosschecks.emplace_back("alt_shape", alt_shape(SkewShape(box), false).value);
    return r;
}

// ---------------------------------------------------------------------------
// Doubly alternating permutations

namespace detail {

/// sum_r E_j^2 L(t)^j / j! over j of the given parity, with numeric E_j.
inline ESeries squared_euler_sum(std::size_t order, bool odd)
{
    const ESeries L = half_log_ratio(order);
    ESeries acc(order), power = ESeries::one(order);
    for (std::size_t j = 0; j <= order; ++j) {
        if ((j % 2 == 1) == odd) {
            const Integer ej = euler_number(j);
            acc = acc + EulerPoly(Rational(ej * ej) / Rational(factorial(static_cast<unsigned>(j)))) * power;
        }
        power = power * L;
    }
    return acc;
}

/// Coefficients f(0..order) of both w and w^{-1} alternating.
inline std::vector<Rational> doubly_series(std::size_t order)
{
    const auto t = ESeries::t(order);
    const auto one_minus_t2 = ESeries::one(order) - t * t;
    const auto odd_part = squared_euler_sum(order, true);
    const auto even_part = squared_euler_sum(order, false) / series_sqrt(one_minus_t2);
    return rational_coefficients(odd_part + even_part);
}

/// Coefficients f*(0..order): w alternating, w^{-1} reverse alternating.
inline std::vector<Rational> doubly_twisted_series(std::size_t order)
{
    const auto t = ESeries::t(order);
    const auto one_minus_t2 = ESeries::one(order) - t * t;
    const auto odd_part = squared_euler_sum(order, true);
    const auto even_part = squared_euler_sum(order, false) * series_sqrt(one_minus_t2);
    return rational_coefficients(odd_part + even_part);
}

inline bool first_reversed(DoubleVariant v) { return v == DoubleVariant::ralt_ralt || v == DoubleVariant::ralt_alt; }
inline bool second_reversed(DoubleVariant v) { return v == DoubleVariant::alt_ralt || v == DoubleVariant::ralt_ralt; }

}  // namespace detail

/// Number of w in S_n with w and w^{-1} alternating or reverse alternating as
/// the variant says (first half constrains w, second half w^{-1}).
inline CountReport doubly_alternating(int n, DoubleVariant variant)
{
    if (n < 1) throw std::invalid_argument("doubly_alternating needs n >= 1");
    const bool rw = detail::first_reversed(variant), rinv = detail::second_reversed(variant);
    const bool twisted = rw != rinv;

    const auto order = static_cast<std::size_t>(n);
    const auto series = twisted ? detail::doubly_twisted_series(order) : detail::doubly_series(order);
    CountReport r{n, series[order], "series", {}, std::nullopt};
    detail::require_count(r.value, "doubly_alternating");

    r.crosschecks.emplace_back("inner_product", inner_product(skew_schur_in_p(tau_shape(n, rw)), skew_schur_in_p(tau_shape(n, rinv))));

    Rational psum(0);
    for (const auto& mu : partitions_of(n)) {
        const Integer a = foulkes_character(n, mu, rw), b = foulkes_character(n, mu, rinv);
        if (a != 0 && b != 0) psum += Rational(a * b) / Rational(z_of(mu));
    }
    r.crosschecks.emplace_back("character_sum", psum);

    if (twisted && n % 2 == 0) {
        const auto f = detail::doubly_series(order);
        r.crosschecks.emplace_back("difference", f[order] - f[order - 2]);
    } else if (twisted) {
        r.crosschecks.emplace_back("untwisted_series", detail::doubly_series(order)[order]);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Cycle type

/// Number of alternating (reverse alternating) permutations of cycle type rho.
inline CountReport b_cycle_type(const Partition& rho, bool reverse)
{
    if (rho.empty()) throw std::invalid_argument("cycle type must be nonempty");
    const int n = rho.size();
    const SymP L = gr_L(rho);
    const EulerPoly poly = substitute(L, Pattern::for_size(n, reverse));
    CountReport r{n, umbral_eval(poly), "lyndon_specialization", {}, poly};
    detail::require_count(r.value, "b_cycle_type");
    r.crosschecks.emplace_back("inner_product", inner_product(L, skew_schur_in_p(tau_shape(n, reverse))));
    return r;
}

/// Divisor-sum closed form for n-cycles.
inline CountReport b_ncycle_closed(int n, bool reverse)
{
    if (n < 1) throw std::invalid_argument("b_ncycle_closed needs n >= 1");
    Rational value;
    std::string route;
    if (n == 2) {
        value = reverse ? 0 : 1;
        route = "n_equals_2";
    } else if (n % 2 == 1) {
        for (int d : divisors(n)) {
            const int mu = mobius(d);
            if (mu == 0) continue;
            const int sign = ((d - 1) / 2) % 2 ? -mu : mu;
            value += Rational(Integer(sign) * euler_number(static_cast<std::size_t>(n / d)));
        }
        value /= n;
        route = "odd_divisor_sum";
    } else {
        int h = n;
        while (h % 2 == 0) h /= 2;
        if (h == 1) {
            value = Rational(euler_number(static_cast<std::size_t>(n)) - 1) / n;
            route = "power_of_two";
        } else {
            for (int d : divisors(h)) {
                const int mu = mobius(d);
                if (mu != 0) value += Rational(Integer(mu) * euler_number(static_cast<std::size_t>(n / d)));
            }
            value /= n;
            route = "even_divisor_sum";
        }
    }
    CountReport r{n, value, route, {}, std::nullopt};
    detail::require_count(r.value, "b_ncycle_closed");
    r.crosschecks.emplace_back("lyndon_specialization", b_cycle_type(Partition{n}, reverse).value);
    return r;
}

/// The generating function sum_r b(m^r) t^r (or b*) before umbral evaluation.
inline ESeries fm_generating_function(int m, std::size_t order, bool reverse)
{
    if (m < 1) throw std::invalid_argument("fm needs m >= 1");
    if (m == 1) {
        const auto x = E() * arctan_t(order);
        const auto root = detail::sqrt_one_plus_t2(order);
        return reverse ? series_sinh(x) + root * series_cosh(x) : series_sinh(x) + series_cosh(x) / root;
    }
    if (m == 2) {
        const auto f2 = detail::ratio_power(order, detail::ep(1, 4) * (E() * E() + detail::ep(1)));
        if (!reverse) return f2;
        return f2 / (ESeries::one(order) + ESeries::t(order));
    }
    EulerPoly c;
    if (m % 2 == 1) {
        for (int d : divisors(m)) {
            const int mu = mobius(d);
            if (mu == 0) continue;
            const int sign = ((d - 1) / 2) % 2 ? -mu : mu;
            c += detail::ep(sign) * detail::e_pow(static_cast<std::size_t>(m / d));
        }
        c.scale(make_rational(1, m));
        return series_exp(c * arctan_t(order));
    }
    int h = m;
    while (h % 2 == 0) h /= 2;
    if (h == 1) {
        c = detail::e_pow(static_cast<std::size_t>(m)) - detail::ep(1);
    } else {
        for (int d : divisors(h))
            if (int mu = mobius(d); mu != 0) c += detail::ep(mu) * detail::e_pow(static_cast<std::size_t>(m / d));
    }
    c.scale(make_rational(1, 2 * m));
    return detail::ratio_power(order, c);
}

/// b(m^r) (or b*(m^r)) for r = 0..N.
inline std::vector<Integer> fm_series(int m, std::size_t N, bool reverse)
{
    std::vector<Integer> out;
    for (const auto& v : umbral_coefficients(fm_generating_function(m, N, reverse)))
        out.push_back(detail::require_count(v, "fm_series"));
    return out;
}

/// b(lambda) (or b*(lambda)) for every lambda with parts <= M and |lambda| <= N,
/// read off the product of one factor series per part size.
inline std::map<Partition, Integer> cycle_indicator_truncated(int M, int N, bool reverse)
{
    if (M < 1 || M > 6 || N < 0 || N > 12)
        throw std::invalid_argument("cycle indicator expansion is limited to 1 <= M <= 6 and 0 <= N <= 12");
    using Monomial = std::vector<int>;  // multiplicities m_1..m_M at indices 1..M
    auto expand = [&](bool odd_total) {
        std::map<Monomial, EulerPoly> acc{{Monomial(static_cast<std::size_t>(M) + 1, 0), EulerPoly(1)}};
        for (int m = 1; m <= M; ++m) {
            const auto order = static_cast<std::size_t>(N / m);
            ESeries factor;
            if (m == 1) {
                factor = detail::exp_e_arctan(order);
                if (!odd_total) {
                    const auto root = detail::sqrt_one_plus_t2(order);
                    factor = reverse ? root * factor : factor / root;
                }
            } else if (m == 2) {
                factor = detail::ratio_power(order, odd_total ? detail::ep(1, 4) * E() * E()
                                                               : detail::ep(1, 4) * (E() * E() + detail::ep(1)));
                if (!odd_total && reverse) factor = factor / (ESeries::one(order) + ESeries::t(order));
            } else if (odd_total && (m & (m - 1)) == 0) {
                // p_{2r} vanishes under the odd pattern, so the -1 in the
                // exponent of F_m drops out for m = 2^k.
                factor = detail::ratio_power(order, make_rational(1, 2 * m) * detail::e_pow(static_cast<std::size_t>(m)));
            } else {
                factor = fm_generating_function(m, order, false);
            }
            std::map<Monomial, EulerPoly> next;
            for (const auto& [mono, c] : acc) {
                int weight = 0;
                for (int i = 1; i <= M; ++i) weight += i * mono[static_cast<std::size_t>(i)];
                for (int r = 0; weight + r * m <= N; ++r) {
                    const EulerPoly& f = factor[static_cast<std::size_t>(r)];
                    if (f.is_zero()) continue;
                    Monomial nm = mono;
                    nm[static_cast<std::size_t>(m)] = r;
                    next[nm] += c * f;
                }
            }
            acc = std::move(next);
        }
        return acc;
    };
    const auto odd = expand(true), even = expand(false);
    std::map<Partition, Integer> out;
    for (const auto* part : {&odd, &even})
        for (const auto& [mono, c] : *part) {
            const Partition lambda = Partition::from_multiplicities(mono);
            if ((lambda.size() % 2 == 1) != (part == &odd)) continue;
            out[lambda] = detail::require_count(umbral_eval(c), "cycle_indicator_truncated");
        }
    return out;
}

/// c(0..N) (or c*), alternating (reverse alternating) involutions. Three
/// specializations are computed and must agree.
inline std::vector<Integer> involutions_series(std::size_t N, bool reverse)
{
    const auto one = ESeries::one(N);
    const auto t = ESeries::t(N);
    const auto x = E() * arctan_t(N);
    const auto at_t2 = [](const ESeries& s) { return s.dilate(EulerPoly(1), 2); };
    const auto ratio_e2 = at_t2(series_pow((one + t) / (one - t), detail::ep(1, 4) * E() * E()));
    const auto ratio_e2_plus = detail::ratio_power(N, detail::ep(1, 4) * (E() * E() + detail::ep(1)));

    // Closed forms in sinh and cosh.
    const auto inv_fourth_root = series_pow(one - t * t * t * t, detail::ep(-1, 4));
    const auto closed = series_sinh(x) * ratio_e2 + inv_fourth_root * series_cosh(x) * ratio_e2;

    // Cycle indicators at t_1 = t, t_2 = t^2.
    const auto odd = (series_exp(x) * ratio_e2).parity_part(true);
    const auto root = detail::sqrt_one_plus_t2(N);
    const auto z_even = (series_exp(x) / root * at_t2(ratio_e2_plus)).parity_part(false);
    const auto zstar_even = (root * series_exp(x) * at_t2(ratio_e2_plus / (one + t))).parity_part(false);

    const auto c = umbral_coefficients(closed);
    const auto cz = umbral_coefficients(odd + z_even);
    const auto cstar = umbral_coefficients(odd + zstar_even);
    if (c != cz || c != cstar) throw std::logic_error("involution generating functions disagree");
    std::vector<Integer> out;
    for (const auto& v : reverse ? cstar : c) out.push_back(detail::require_count(v, "involutions_series"));
    return out;
}

// ---------------------------------------------------------------------------
// Fixed points

/// table[n][k] = d_k(n) (or d*_k(n)) for n <= N, k <= n.
inline std::vector<std::vector<Integer>> fixed_point_series(std::size_t N, bool reverse)
{
    const auto one = ESeries::one(N);
    const auto t = ESeries::t(N);
    const auto x = E() * arctan_t(N);
    const QESeries num = substitute_qt(series_exp(x));  // exp(E atan(qt))
    const QESeries base = num * lift_q(series_exp(-x) / (one - E() * t));
    const auto root = detail::sqrt_one_plus_t2(N);
    const QESeries root_t = lift_q(root), root_qt = substitute_qt(root);

    const auto odd = base.parity_part(true);
    const auto even = (reverse ? base * root_qt / root_t : base * root_t / root_qt).parity_part(false);
    const auto coeffs = umbral_coefficients(odd + even);

    std::vector<std::vector<Integer>> table;
    for (std::size_t n = 0; n <= N; ++n) {
        std::vector<Integer> row;
        const auto& qpoly = coeffs[n];
        if (qpoly.degree() > static_cast<long>(n)) throw std::logic_error("fixed point count beyond n");
        for (std::size_t k = 0; k <= n; ++k) row.push_back(detail::require_count(qpoly[k], "fixed_point_series"));
        table.push_back(std::move(row));
    }
    return table;
}

struct ConjectureRow {
    int n;
    std::string statement;
    Integer lhs;
    Integer rhs;
    bool equal;
};

namespace detail {

inline int max_nonzero_index(const std::vector<Integer>& row)
{
    for (std::size_t k = row.size(); k-- > 0;)
        if (row[k] != 0) return static_cast<int>(k);
    return -1;
}

}  // namespace detail

/// Checks, for n <= n_max, that the largest k with d_k(n) != 0 is ceil(n/2)
/// (n >= 4) and ceil((n+1)/2) for d* (n >= 5), and the derangement identities
/// d_{ceil(n/2)}(n) = D_{floor(n/2)} and d*_{ceil((n+1)/2)}(n) = D_{floor((n-1)/2)}.
inline std::vector<ConjectureRow> conjecture_check(int n_max)
{
    if (n_max < 4) throw std::invalid_argument("conjecture_check needs n_max >= 4");
    const auto N = static_cast<std::size_t>(n_max);
    const auto d = fixed_point_series(N, false), dstar = fixed_point_series(N, true);
    const auto D = derangement_numbers(N);
    std::vector<ConjectureRow> rows;
    for (int n = 4; n <= n_max; ++n) {
        const auto un = static_cast<std::size_t>(n);
        const int top = (n + 1) / 2;
        const int max_k = detail::max_nonzero_index(d[un]);
        rows.push_back({n, "max_k", Integer(max_k), Integer(top), max_k == top});
        const Integer& lhs = d[un][static_cast<std::size_t>(top)];
        const Integer& rhs = D[static_cast<std::size_t>(n / 2)];
        rows.push_back({n, "derangements", lhs, rhs, lhs == rhs});
        if (n < 5) continue;
        const int top_star = (n + 2) / 2;
        const int max_k_star = detail::max_nonzero_index(dstar[un]);
        rows.push_back({n, "max_k_reverse", Integer(max_k_star), Integer(top_star), max_k_star == top_star});
        const Integer& lhs_star = dstar[un][static_cast<std::size_t>(top_star)];
        const Integer& rhs_star = D[static_cast<std::size_t>((n - 1) / 2)];
        rows.push_back({n, "derangements_reverse", lhs_star, rhs_star, lhs_star == rhs_star});
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Asymptotics of alternating derangements

enum class AsyKind { a, b, c };

inline AsyKind parse_asy_kind(const std::string& s)
{
    if (s == "a") return AsyKind::a;
    if (s == "b") return AsyKind::b;
    if (s == "c") return AsyKind::c;
    throw std::invalid_argument("unknown asymptotic kind '" + s + "' (expected a, b or c)");
}

/// Coefficients of x^0, x^2, ..., x^{2K} in exp(1 - atan(x)/x), times
/// sqrt(1+x^2) for kind b and divided by it for kind c.
inline std::vector<Rational> asymptotic_coeffs(AsyKind kind, std::size_t K)
{
    const std::size_t order = 2 * K + 2;
    ESeries g(order);
    for (std::size_t j = 1; 2 * j <= order; ++j) {
        const Rational v = make_rational(j % 2 ? 1 : -1, static_cast<unsigned long>(2 * j + 1));
        g[2 * j] = EulerPoly(v);
    }
    ESeries s = series_exp(g);
    if (kind != AsyKind::a) {
        const auto root = detail::sqrt_one_plus_t2(order);
        s = kind == AsyKind::b ? s * root : s / root;
    }
    const auto coeffs = rational_coefficients(s);
    std::vector<Rational> out;
    for (std::size_t k = 0; k <= K; ++k) out.push_back(coeffs[2 * k]);
    return out;
}

struct AsymptoticSample {
    int n;
    Integer exact;
    mpf_class approximation;
    mpf_class relative_error;
};

/// d_0(n) (kind a: n odd; b: n even) or d*_0(n) (kind c: n even) against
/// (1/e) sum_{k <= K} coeff_k E_{n-2k}, in 256-bit floating point.
inline AsymptoticSample asymptotic_sanity(int n, std::size_t K, AsyKind kind)
{
    if (n < 5) throw std::invalid_argument("asymptotic_sanity needs n >= 5");
    if (K > 4) throw std::invalid_argument("asymptotic_sanity supports K <= 4");
    if ((kind == AsyKind::a) != (n % 2 == 1))
        throw std::invalid_argument(kind == AsyKind::a ? "kind a needs odd n" : "kinds b and c need even n");
    constexpr mp_bitcnt_t bits = 256;
    const auto table = fixed_point_series(static_cast<std::size_t>(n), kind == AsyKind::c);
    const Integer exact = table[static_cast<std::size_t>(n)][0];

    mpf_class e(0, bits), term(1, bits);
    for (unsigned k = 0; k < 80; ++k) {
        e += term;
        term /= k + 1;
    }
    const auto coeffs = asymptotic_coeffs(kind, K);
    mpf_class sum(0, bits);
    for (std::size_t k = 0; k <= K && 2 * static_cast<int>(k) <= n; ++k)
        sum += mpf_class(coeffs[k], bits) * mpf_class(euler_number(static_cast<std::size_t>(n) - 2 * k), bits);
    mpf_class approx(sum / e, bits);
    mpf_class err(abs(approx - mpf_class(exact, bits)) / mpf_class(exact, bits), bits);
    return {n, exact, approx, err};
}

/// True iff the relative error strictly decreases along `ns`.
inline bool asymptotic_error_decreases(AsyKind kind, std::size_t K, const std::vector<int>& ns)
{
    std::optional<mpf_class> prev;
    for (int n : ns) {
        const auto s = asymptotic_sanity(n, K, kind);
        if (prev && !(s.relative_error < *prev)) return false;
        prev = s.relative_error;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Multisets

/// e_i and h_i under one of the three patterns, for i <= i_max.
struct EhRow {
    int i;
    std::array<EulerPoly, 3> e;  // ODD, EVEN_ALT, EVEN_RALT
    std::array<EulerPoly, 3> h;
};

struct EhTable {
    std::vector<EhRow> rows;
    /// Series values agree with direct substitution into e_i and h_i.
    bool identities_hold = true;
};

namespace detail {

/// sum_i e_i[pat] t^i for pat = ODD, EVEN_ALT, EVEN_RALT; h swaps the two even ones.
inline std::array<ESeries, 3> e_generating_functions(std::size_t order)
{
    const auto base = exp_e_arctan(order);
    const auto root = sqrt_one_plus_t2(order);
    return {base, root * base, base / root};
}

}  // namespace detail

inline EhTable eh_specialization_table(int i_max)
{
    if (i_max < 1) throw std::invalid_argument("table needs i_max >= 1");
    const auto gf = detail::e_generating_functions(static_cast<std::size_t>(i_max));
    const std::array<Pattern, 3> pats{Pattern::odd(), Pattern::even_alt(), Pattern::even_ralt()};
    EhTable table;
    for (int i = 1; i <= i_max; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        EhRow row{i, {gf[0][ui], gf[1][ui], gf[2][ui]}, {gf[0][ui], gf[2][ui], gf[1][ui]}};
        if (i <= 14) {
            const SymP e = elementary_e(i), h = complete_h(i);
            for (std::size_t p = 0; p < 3; ++p)
                if (substitute(e, pats[p]) != row.e[p] || substitute(h, pats[p]) != row.h[p]) table.identities_hold = false;
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

/// N(alpha, A) (or N*): alpha-permutations a_1 > a_2 < a_3 > ... where equal
/// letters j count as a descent iff j is in A.
inline CountReport multiset_count(const Composition& alpha, const std::set<int>& a_set, bool reverse)
{
    const int n = alpha.size();
    const int k = static_cast<int>(alpha.length());
    if (n < 1) throw std::invalid_argument("alpha must be nonempty");
    for (int i : a_set)
        if (i < 1 || i > k) throw std::invalid_argument("A must be a subset of [k]");

    const int pat_index = n % 2 ? 0 : (reverse ? 2 : 1);
    const int h_index = pat_index == 0 ? 0 : 3 - pat_index;
    int largest = 0;
    for (int part : alpha.parts()) largest = std::max(largest, part);
    const auto gf = detail::e_generating_functions(static_cast<std::size_t>(largest));
    EulerPoly poly(1);
    for (int i = 1; i <= k; ++i) {
        const auto part = static_cast<std::size_t>(alpha[static_cast<std::size_t>(i - 1)]);
        poly *= a_set.count(i) ? gf[static_cast<std::size_t>(pat_index)][part] : gf[static_cast<std::size_t>(h_index)][part];
    }
    CountReport r{n, umbral_eval(poly), "eh_series", {}, poly};
    detail::require_count(r.value, "multiset_count");

    // Rows for i in A give s = prod_A h prod_B e, the image of prod_A e prod_B h
    // under omega, which trades the two even patterns.
    const bool shape_reverse = n % 2 == 0 ? !reverse : reverse;
    r.crosschecks.emplace_back("skew_shape", alt_shape(multiset_shape(alpha, a_set), shape_reverse).value);
    return r;
}

}  // namespace altperm
