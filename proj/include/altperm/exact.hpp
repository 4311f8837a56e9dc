// Exact scalars, dense polynomials, Euler numbers and umbral evaluation.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace altperm {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms. Throws on a zero denominator.
inline Rational make_rational(const Integer& num, const Integer& den = 1)
{
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& r)
{
    if (is_integer(r)) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline Integer factorial(unsigned n)
{
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline Integer binomial(unsigned n, unsigned k)
{
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

template <class C>
class Polynomial;

template <class C>
bool is_zero(const Polynomial<C>& p);

/// Dense univariate polynomial; coeffs()[k] is the coefficient of x^k.
/// Trailing zeros are never stored, so the zero polynomial has no coefficients.
template <class C>
class Polynomial {
public:
    using coeff_type = C;

    Polynomial() = default;
    Polynomial(const C& constant) : c_{constant} { trim(); }  // NOLINT: scalars promote
    Polynomial(long constant) requires(!std::is_same_v<C, long>) : c_{C(constant)} { trim(); }  // NOLINT
    explicit Polynomial(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<C> coeffs) : c_(coeffs) { trim(); }

    /// The indeterminate itself.
    static Polynomial x() { return Polynomial(std::vector<C>{C(0), C(1)}); }
    static Polynomial monomial(const C& coeff, std::size_t k)
    {
        std::vector<C> v(k + 1, C(0));
        v[k] = coeff;
        return Polynomial(std::move(v));
    }

    const std::vector<C>& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    C operator[](std::size_t k) const { return k < c_.size() ? c_[k] : C(0); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    C constant_term() const { return (*this)[0]; }

    Polynomial& operator+=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const Polynomial& o)
    {
        *this = *this * o;
        return *this;
    }
    Polynomial& scale(const Rational& s)
    {
        if (sgn(s) == 0) {
            c_.clear();
            return *this;
        }
        for (auto& v : c_) v *= s;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a)
    {
        for (auto& v : a.c_) v = -v;
        return a;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<C> r(a.c_.size() + b.c_.size() - 1, C(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (altperm::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (altperm::is_zero(b.c_[j])) continue;
                r[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(Polynomial a, const Rational& s) requires(!std::is_same_v<C, Rational>)
    {
        return a.scale(s);
    }
    friend Polynomial operator*(const Rational& s, Polynomial a) requires(!std::is_same_v<C, Rational>)
    {
        return a.scale(s);
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    Polynomial pow(unsigned e) const
    {
        Polynomial r(C(1)), base = *this;
        while (e) {
            if (e & 1U) r *= base;
            e >>= 1U;
            if (e) base *= base;
        }
        return r;
    }

    /// Drops every term of degree above `max_degree`.
    Polynomial truncated(std::size_t max_degree) const
    {
        if (c_.size() <= max_degree + 1) return *this;
        return Polynomial(std::vector<C>(c_.begin(), c_.begin() + static_cast<long>(max_degree) + 1));
    }

private:
    void trim()
    {
        while (!c_.empty() && altperm::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<C> c_;
};

template <class C>
bool is_zero(const Polynomial<C>& p)
{
    return p.is_zero();
}

/// Polynomial in the umbral symbol E. Nothing here replaces E^k by E_k
/// implicitly; that happens only in umbral_eval.
using EulerPoly = Polynomial<Rational>;

inline EulerPoly E() { return EulerPoly::x(); }

inline std::string to_string(const EulerPoly& p, const char* var = "E")
{
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = p.degree(); k >= 0; --k) {
        Rational c = p[static_cast<std::size_t>(k)];
        if (is_zero(c)) continue;
        if (!first) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) os << "-";
        Rational a = abs(c);
        if (k == 0 || a != 1) os << to_string(a);
        if (k > 0) {
            if (a != 1) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

/// Quotient and remainder of exact division over the rationals.
inline std::pair<EulerPoly, EulerPoly> divmod(const EulerPoly& num, const EulerPoly& den)
{
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem = num.coeffs();
    const long dd = den.degree();
    if (num.degree() < dd) return {EulerPoly{}, num};
    std::vector<Rational> quo(static_cast<std::size_t>(num.degree() - dd + 1), Rational(0));
    const Rational lead = den[static_cast<std::size_t>(dd)];
    for (long k = num.degree() - dd; k >= 0; --k) {
        Rational q = rem[static_cast<std::size_t>(k + dd)] / lead;
        quo[static_cast<std::size_t>(k)] = q;
        if (is_zero(q)) continue;
        for (long j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= q * den[static_cast<std::size_t>(j)];
    }
    return {EulerPoly(std::move(quo)), EulerPoly(std::move(rem))};
}

inline bool divides(const EulerPoly& factor, const EulerPoly& p) { return divmod(p, factor).second.is_zero(); }

// ---------------------------------------------------------------------------
// Euler numbers

/// E_0..E_{n_max} from the boustrophedon (Seidel-Entringer-Arnold) triangle,
/// using integer additions only.
inline std::vector<Integer> euler_numbers(std::size_t n_max)
{
    std::vector<Integer> out{Integer(1)};
    std::vector<Integer> row{Integer(1)};
    for (std::size_t n = 1; n <= n_max; ++n) {
        std::vector<Integer> next(n + 1);
        next[0] = 0;
        for (std::size_t k = 1; k <= n; ++k) next[k] = next[k - 1] + row[n - k];
        row = std::move(next);
        out.push_back(row[n]);
    }
    return out;
}

namespace detail {

class EulerTable {
public:
    const Integer& get(std::size_t k)
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (k >= values_.size()) values_ = euler_numbers(std::max<std::size_t>(2 * k, 64));
        return values_[k];
    }

private:
    std::mutex mu_;
    std::vector<Integer> values_ = euler_numbers(128);
};

inline EulerTable& euler_table()
{
    static EulerTable table;
    return table;
}

}  // namespace detail

/// E_k, from a shared memoized table.
inline Integer euler_number(std::size_t k) { return detail::euler_table().get(k); }

/// sum_k c_k E_k. The last step of any umbral computation.
inline Rational umbral_eval(const EulerPoly& p)
{
    Rational acc(0);
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        const Rational& c = p.coeffs()[k];
        if (is_zero(c)) continue;
        acc += c * Rational(euler_number(k));
    }
    return acc;
}

/// Umbralizes every coefficient of a polynomial in an auxiliary variable.
inline Polynomial<Rational> umbral_eval(const Polynomial<EulerPoly>& p)
{
    std::vector<Rational> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(umbral_eval(c));
    return Polynomial<Rational>(std::move(out));
}

/// D_0..D_{n_max}: D_n = n D_{n-1} + (-1)^n.
inline std::vector<Integer> derangement_numbers(std::size_t n_max)
{
    std::vector<Integer> d{Integer(1)};
    for (std::size_t n = 1; n <= n_max; ++n) {
        Integer next = Integer(static_cast<unsigned long>(n)) * d.back();
        if (n % 2 == 0) next += 1;
        else next -= 1;
        d.push_back(next);
    }
    return d;
}

}  // namespace altperm
