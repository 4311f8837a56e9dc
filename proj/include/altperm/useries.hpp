// Truncated power series in t whose coefficients are E-polynomials (ESeries)
// or polynomials in a marker q over E-polynomials (QESeries).
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "altperm/exact.hpp"

namespace altperm {

/// Raised for a division by a non-invertible series or a composition whose
/// argument has the wrong constant term.
class SeriesError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline std::optional<Rational> as_rational(const Rational& r) { return r; }

template <class C>
std::optional<Rational> as_rational(const Polynomial<C>& p)
{
    if (!p.is_constant()) return std::nullopt;
    return as_rational(p.constant_term());
}

/// Terms t^0..t^N of a power series; N is the truncation order. Results of
/// binary operations are truncated at the smaller order of the operands.
template <class C>
class TruncatedSeries {
public:
    using coeff_type = C;

    explicit TruncatedSeries(std::size_t order = 0) : c_(order + 1, C(0)) {}
    TruncatedSeries(std::size_t order, std::vector<C> coeffs) : c_(std::move(coeffs)) { c_.resize(order + 1, C(0)); }

    static TruncatedSeries constant(std::size_t order, const C& value)
    {
        TruncatedSeries s(order);
        s.c_[0] = value;
        return s;
    }
    static TruncatedSeries one(std::size_t order) { return constant(order, C(1)); }
    /// c * t^k.
    static TruncatedSeries monomial(std::size_t order, const C& c, std::size_t k)
    {
        TruncatedSeries s(order);
        if (k <= order) s.c_[k] = c;
        return s;
    }
    static TruncatedSeries t(std::size_t order) { return monomial(order, C(1), 1); }

    std::size_t order() const noexcept { return c_.size() - 1; }
    const C& operator[](std::size_t k) const { return c_.at(k); }
    C& operator[](std::size_t k) { return c_.at(k); }
    const std::vector<C>& coeffs() const noexcept { return c_; }

    TruncatedSeries truncated(std::size_t order) const
    {
        return TruncatedSeries(std::min(order, this->order()), std::vector<C>(c_.begin(), c_.begin() + static_cast<long>(std::min(order, this->order())) + 1));
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        const std::size_t n = std::min(a.order(), b.order());
        TruncatedSeries r(n);
        for (std::size_t i = 0; i <= n; ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        const std::size_t n = std::min(a.order(), b.order());
        TruncatedSeries r(n);
        for (std::size_t i = 0; i <= n; ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a)
    {
        TruncatedSeries r(a.order());
        for (std::size_t i = 0; i <= a.order(); ++i) r.c_[i] = -a.c_[i];
        return r;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        const std::size_t n = std::min(a.order(), b.order());
        TruncatedSeries r(n);
        for (std::size_t i = 0; i <= n; ++i) {
            if (is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; i + j <= n; ++j) {
                if (is_zero(b.c_[j])) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }
    /// Coefficientwise product with a scalar of the coefficient ring.
    friend TruncatedSeries operator*(const C& s, const TruncatedSeries& a)
    {
        TruncatedSeries r(a.order());
        for (std::size_t i = 0; i <= a.order(); ++i) r.c_[i] = s * a.c_[i];
        return r;
    }
    friend TruncatedSeries operator*(const Rational& s, const TruncatedSeries& a) requires(!std::is_same_v<C, Rational>)
    {
        TruncatedSeries r(a);
        for (auto& v : r.c_) v.scale(s);
        return r;
    }
    friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b.inverse(); }
    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    /// 1/a; the constant term must be a nonzero rational.
    TruncatedSeries inverse() const
    {
        const auto u = as_rational(c_[0]);
        if (!u || is_zero(*u))
            throw SeriesError("series inversion needs a nonzero rational constant term");
        const Rational inv_u = 1 / *u;
        const Rational neg_inv_u = -inv_u;
        TruncatedSeries r(order());
        r.c_[0] = C(inv_u);
        for (std::size_t n = 1; n <= order(); ++n) {
            C acc(0);
            for (std::size_t k = 1; k <= n; ++k) {
                if (is_zero(c_[k])) continue;
                acc += c_[k] * r.c_[n - k];
            }
            r.c_[n] = C(neg_inv_u) * acc;
        }
        return r;
    }

    /// d/dt; the order drops by one (but never below 0).
    TruncatedSeries derivative() const
    {
        const std::size_t n = order() == 0 ? 0 : order() - 1;
        TruncatedSeries r(n);
        for (std::size_t k = 1; k <= order(); ++k) r.c_[k - 1] = C(static_cast<long>(k)) * c_[k];
        return r;
    }

    /// Antiderivative with zero constant term, at order `order() + 1`.
    TruncatedSeries integral() const
    {
        TruncatedSeries r(order() + 1);
        for (std::size_t k = 0; k <= order(); ++k) r.c_[k + 1] = C(make_rational(1, static_cast<unsigned long>(k + 1))) * c_[k];
        return r;
    }

    /// Keeps only the odd (or even) powers of t.
    TruncatedSeries parity_part(bool odd) const
    {
        TruncatedSeries r(*this);
        for (std::size_t k = odd ? 0 : 1; k <= order(); k += 2) r.c_[k] = C(0);
        return r;
    }

    /// t -> c t^k composition for a scalar c; the order is kept.
    TruncatedSeries dilate(const C& c, std::size_t k) const
    {
        TruncatedSeries r(order());
        C pw(1);
        for (std::size_t i = 0; i * k <= order(); ++i) {
            r.c_[i * k] = pw * c_[i];
            pw = pw * c;
        }
        return r;
    }

private:
    std::vector<C> c_;
};

using ESeries = TruncatedSeries<EulerPoly>;
using QPoly = Polynomial<EulerPoly>;
using QESeries = TruncatedSeries<QPoly>;

template <class C>
bool is_zero(const TruncatedSeries<C>& s)
{
    for (const auto& c : s.coeffs())
        if (!is_zero(c)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Composition with named series

template <class C>
TruncatedSeries<C> series_exp(const TruncatedSeries<C>& a)
{
    if (!is_zero(a[0])) throw SeriesError("exp needs a series with zero constant term");
    const std::size_t n = a.order();
    TruncatedSeries<C> b(n);
    b[0] = C(1);
    for (std::size_t m = 1; m <= n; ++m) {
        C acc(0);
        for (std::size_t k = 1; k <= m; ++k) {
            if (is_zero(a[k])) continue;
            acc += C(static_cast<long>(k)) * a[k] * b[m - k];
        }
        b[m] = C(make_rational(1, static_cast<unsigned long>(m))) * acc;
    }
    return b;
}

template <class C>
TruncatedSeries<C> series_log(const TruncatedSeries<C>& a)
{
    const auto u = as_rational(a[0]);
    if (!u || *u != 1) throw SeriesError("log needs a series with constant term 1");
    return (a.derivative() / a.truncated(a.order() == 0 ? 0 : a.order() - 1)).integral().truncated(a.order());
}

template <class C>
TruncatedSeries<C> series_sqrt(const TruncatedSeries<C>& a)
{
    const auto u = as_rational(a[0]);
    if (!u || *u != 1) throw SeriesError("sqrt needs a series with constant term 1");
    return series_exp(C(make_rational(1, 2)) * series_log(a));
}

template <class C>
TruncatedSeries<C> series_sinh(const TruncatedSeries<C>& a)
{
    return C(make_rational(1, 2)) * (series_exp(a) - series_exp(-a));
}

template <class C>
TruncatedSeries<C> series_cosh(const TruncatedSeries<C>& a)
{
    return C(make_rational(1, 2)) * (series_exp(a) + series_exp(-a));
}

template <class C>
TruncatedSeries<C> series_arctan(const TruncatedSeries<C>& a)
{
    if (!is_zero(a[0])) throw SeriesError("arctan needs a series with zero constant term");
    if (a.order() == 0) return TruncatedSeries<C>(0);
    const auto da = a.derivative();
    const auto lower = a.truncated(a.order() - 1);
    const auto denom = TruncatedSeries<C>::one(a.order() - 1) + lower * lower;
    return (da / denom).integral();
}

/// a^exponent = exp(exponent * log a); the constant term of a must be 1.
template <class C>
TruncatedSeries<C> series_pow(const TruncatedSeries<C>& a, const EulerPoly& exponent)
{
    const auto u = as_rational(a[0]);
    if (!u || *u != 1) throw SeriesError("power needs a series with constant term 1");
    return series_exp(C(exponent) * series_log(a));
}

enum class SeriesFn { exp, log, sqrt, sinh, cosh, arctan };

template <class C>
TruncatedSeries<C> series_fn(const TruncatedSeries<C>& a, SeriesFn fn)
{
    switch (fn) {
    case SeriesFn::exp: return series_exp(a);
    case SeriesFn::log: return series_log(a);
    case SeriesFn::sqrt: return series_sqrt(a);
    case SeriesFn::sinh: return series_sinh(a);
    case SeriesFn::cosh: return series_cosh(a);
    case SeriesFn::arctan: return series_arctan(a);
    }
    throw std::logic_error("unknown series function");
}

enum class SeriesOp { add, sub, mul, div };

template <class C>
TruncatedSeries<C> series_arith(const TruncatedSeries<C>& a, const TruncatedSeries<C>& b, SeriesOp op)
{
    switch (op) {
    case SeriesOp::add: return a + b;
    case SeriesOp::sub: return a - b;
    case SeriesOp::mul: return a * b;
    case SeriesOp::div: return a / b;
    }
    throw std::logic_error("unknown series op");
}

/// t -> q t: the t^i coefficient picks up q^i.
inline QESeries substitute_qt(const ESeries& a)
{
    QESeries r(a.order());
    for (std::size_t i = 0; i <= a.order(); ++i) r[i] = QPoly::monomial(a[i], i);
    return r;
}

/// Promotes an ESeries to a QESeries with no q dependence.
inline QESeries lift_q(const ESeries& a)
{
    QESeries r(a.order());
    for (std::size_t i = 0; i <= a.order(); ++i) r[i] = QPoly(a[i]);
    return r;
}

/// Replaces E^k by E_k in every coefficient. The only umbralization point
/// for series pipelines.
inline std::vector<Rational> umbral_coefficients(const ESeries& a)
{
    std::vector<Rational> out;
    out.reserve(a.order() + 1);
    for (const auto& c : a.coeffs()) out.push_back(umbral_eval(c));
    return out;
}

/// Per t^i, a polynomial in q with rational coefficients.
inline std::vector<Polynomial<Rational>> umbral_coefficients(const QESeries& a)
{
    std::vector<Polynomial<Rational>> out;
    out.reserve(a.order() + 1);
    for (const auto& c : a.coeffs()) out.push_back(umbral_eval(c));
    return out;
}

/// Constant terms of E-free coefficients; throws if any coefficient involves E.
inline std::vector<Rational> rational_coefficients(const ESeries& a)
{
    std::vector<Rational> out;
    for (const auto& c : a.coeffs()) {
        if (!c.is_constant()) throw SeriesError("series coefficient depends on E");
        out.push_back(c.constant_term());
    }
    return out;
}

// Common building blocks -----------------------------------------------------

/// L(t) = (1/2) log((1+t)/(1-t)) = t + t^3/3 + t^5/5 + ...
inline ESeries half_log_ratio(std::size_t order)
{
    const auto t = ESeries::t(order);
    const auto one = ESeries::one(order);
    return EulerPoly(make_rational(1, 2)) * series_log((one + t) / (one - t));
}

inline ESeries arctan_t(std::size_t order) { return series_arctan(ESeries::t(order)); }

/// (1+t)/(1-t).
inline ESeries plus_minus_ratio(std::size_t order)
{
    const auto t = ESeries::t(order);
    const auto one = ESeries::one(order);
    return (one + t) / (one - t);
}

/// E_0..E_{n_max} read off sec x + tan x = (1 + sin x)/cos x.
inline std::vector<Integer> sec_tan_euler_numbers(std::size_t n_max)
{
    ESeries sin_x(n_max), cos_x(n_max);
    for (std::size_t k = 0; k <= n_max; ++k) {
        const Rational inv_fact = make_rational(1, factorial(static_cast<unsigned>(k)));
        const Rational signed_term = (k / 2) % 2 == 0 ? inv_fact : Rational(-inv_fact);
        if (k % 2 == 0) cos_x[k] = EulerPoly(signed_term);
        else sin_x[k] = EulerPoly(signed_term);
    }
    const auto gf = (ESeries::one(n_max) + sin_x) / cos_x;
    std::vector<Integer> out;
    const auto coeffs = rational_coefficients(gf);
    for (std::size_t k = 0; k <= n_max; ++k) {
        const Rational v = coeffs[k] * Rational(factorial(static_cast<unsigned>(k)));
        if (!is_integer(v)) throw std::logic_error("sec + tan produced a non-integer Euler number");
        out.push_back(v.get_num());
    }
    return out;
}

}  // namespace altperm
