// Homogeneous symmetric functions in the power-sum basis.
//
// A SymP of degree n is sum_lambda c_lambda p_lambda over partitions of n.
// Skew Schur functions are expanded through Murnaghan-Nakayama characters,
// which covers straight shapes, ribbons and disconnected shapes alike.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "altperm/exact.hpp"
#include "altperm/perms.hpp"
#include "altperm/useries.hpp"

namespace altperm {

/// z_lambda = prod_i i^{m_i} m_i!.
inline Integer z_of(const Partition& lambda)
{
    Integer z = 1;
    const auto m = lambda.multiplicities();
    for (std::size_t i = 1; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        Integer ip;
        mpz_ui_pow_ui(ip.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(m[i]));
        z *= ip * factorial(static_cast<unsigned>(m[i]));
    }
    return z;
}

inline int mobius(int n)
{
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

inline std::vector<int> divisors(int n)
{
    std::vector<int> d;
    for (int i = 1; i <= n; ++i)
        if (n % i == 0) d.push_back(i);
    return d;
}

class SymP {
public:
    using Terms = std::map<Partition, Rational, std::greater<>>;

    explicit SymP(int degree = 0) : degree_(degree) {}

    /// The power sum p_lambda.
    static SymP p(const Partition& lambda)
    {
        SymP f(lambda.size());
        f.terms_.emplace(lambda, Rational(1));
        return f;
    }
    static SymP one() { return p(Partition{}); }

    int degree() const noexcept { return degree_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coefficient(const Partition& lambda) const
    {
        auto it = terms_.find(lambda);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Adds c * p_lambda.
    void add_term(const Partition& lambda, const Rational& c)
    {
        if (lambda.size() != degree_) throw std::invalid_argument("term degree does not match symmetric function degree");
        if (altperm::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(lambda, c);
        if (!inserted) {
            it->second += c;
            if (altperm::is_zero(it->second)) terms_.erase(it);
        }
    }

    SymP& operator+=(const SymP& o)
    {
        check_degree(o);
        for (const auto& [lam, c] : o.terms_) add_term(lam, c);
        return *this;
    }
    SymP& operator-=(const SymP& o)
    {
        check_degree(o);
        for (const auto& [lam, c] : o.terms_) add_term(lam, -c);
        return *this;
    }
    friend SymP operator+(SymP a, const SymP& b) { return a += b; }
    friend SymP operator-(SymP a, const SymP& b) { return a -= b; }
    friend SymP operator*(const Rational& s, const SymP& f)
    {
        SymP r(f.degree_);
        for (const auto& [lam, c] : f.terms_) r.add_term(lam, s * c);
        return r;
    }
    /// p_lambda p_mu = p_{lambda union mu}.
    friend SymP operator*(const SymP& f, const SymP& g)
    {
        SymP r(f.degree_ + g.degree_);
        for (const auto& [a, ca] : f.terms_)
            for (const auto& [b, cb] : g.terms_) {
                std::vector<int> parts = a.parts();
                parts.insert(parts.end(), b.parts().begin(), b.parts().end());
                r.add_term(Partition::from_parts(std::move(parts)), ca * cb);
            }
        return r;
    }
    friend bool operator==(const SymP&, const SymP&) = default;

    /// f(x^s): every p_j becomes p_{js}.
    SymP power_substituted(int s) const
    {
        SymP r(degree_ * s);
        for (const auto& [lam, c] : terms_) {
            std::vector<int> parts = lam.parts();
            for (int& x : parts) x *= s;
            r.add_term(Partition(std::move(parts)), c);
        }
        return r;
    }

    /// Value at p_j = values[j-1].
    Rational evaluate(const std::vector<Rational>& values) const
    {
        Rational acc(0);
        for (const auto& [lam, c] : terms_) {
            Rational term = c;
            for (int part : lam.parts()) {
                if (static_cast<std::size_t>(part) > values.size()) throw std::out_of_range("missing power-sum value");
                term *= values[static_cast<std::size_t>(part - 1)];
            }
            acc += term;
        }
        return acc;
    }

    std::string to_string() const
    {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [lam, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + altperm::to_string(c) + ")p[" + lam.to_string() + "]";
        }
        return s;
    }

private:
    void check_degree(const SymP& o) const
    {
        if (o.degree_ != degree_) throw std::invalid_argument("symmetric functions of different degrees");
    }

    int degree_;
    Terms terms_;
};

/// Hall inner product, <p_lambda, p_mu> = delta z_lambda.
inline Rational inner_product(const SymP& f, const SymP& g)
{
    if (f.degree() != g.degree()) throw std::invalid_argument("inner product of symmetric functions of different degrees");
    Rational acc(0);
    const SymP& small = f.terms().size() <= g.terms().size() ? f : g;
    const SymP& large = &small == &f ? g : f;
    for (const auto& [lam, c] : small.terms()) {
        const Rational other = large.coefficient(lam);
        if (is_zero(other)) continue;
        acc += Rational(z_of(lam)) * c * other;
    }
    return acc;
}

/// h_n = sum_lambda z_lambda^{-1} p_lambda.
inline SymP complete_h(int n)
{
    SymP f(n);
    for (const auto& lam : partitions_of(n)) f.add_term(lam, make_rational(1, z_of(lam)));
    return f;
}

/// e_n = sum_lambda (-1)^{n - l(lambda)} z_lambda^{-1} p_lambda.
inline SymP elementary_e(int n)
{
    SymP f(n);
    for (const auto& lam : partitions_of(n)) {
        const bool negative = (n - static_cast<int>(lam.length())) % 2 != 0;
        const Rational c = make_rational(negative ? -1 : 1, z_of(lam));
        f.add_term(lam, c);
    }
    return f;
}

// ---------------------------------------------------------------------------
// Murnaghan-Nakayama

namespace detail {

/// chi^{outer/inner}(rest), removing border strips from `outer` while it still
/// contains `inner`. Both vectors share one fixed length (padded with zeros).
class MnEvaluator {
public:
    explicit MnEvaluator(std::vector<int> inner) : inner_(std::move(inner)) {}

    Integer eval(const std::vector<int>& outer, const std::vector<int>& rest)
    {
        if (rest.empty()) return outer == inner_ ? Integer(1) : Integer(0);
        auto key = std::make_pair(outer, rest);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        const int len = static_cast<int>(outer.size());
        const int r = rest.front();
        const std::vector<int> tail(rest.begin() + 1, rest.end());
        std::vector<int> beta(outer.size());
        for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = outer[static_cast<std::size_t>(i)] + (len - 1 - i);

        Integer total = 0;
        for (int i = 0; i < len; ++i) {
            const int from = beta[static_cast<std::size_t>(i)];
            const int to = from - r;
            if (to < 0) continue;
            int height = 0;
            bool blocked = false;
            for (int j = 0; j < len; ++j) {
                const int bj = beta[static_cast<std::size_t>(j)];
                if (bj == to) blocked = true;
                if (bj > to && bj < from) ++height;
            }
            if (blocked) continue;
            std::vector<int> nb = beta;
            nb[static_cast<std::size_t>(i)] = to;
            std::sort(nb.begin(), nb.end(), std::greater<>());
            std::vector<int> next(outer.size());
            bool contains_inner = true;
            for (int j = 0; j < len; ++j) {
                next[static_cast<std::size_t>(j)] = nb[static_cast<std::size_t>(j)] - (len - 1 - j);
                if (next[static_cast<std::size_t>(j)] < inner_[static_cast<std::size_t>(j)]) contains_inner = false;
            }
            if (!contains_inner) continue;
            const Integer sub = eval(next, tail);
            if (height % 2) total -= sub;
            else total += sub;
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

private:
    std::vector<int> inner_;
    std::map<std::pair<std::vector<int>, std::vector<int>>, Integer> memo_;
};

inline std::pair<std::vector<int>, std::vector<int>> padded(const SkewShape& shape)
{
    std::vector<int> outer = shape.outer().parts(), inner = shape.inner().parts();
    inner.resize(outer.size(), 0);
    return {outer, inner};
}

}  // namespace detail

/// chi^{shape}(rho) by the Murnaghan-Nakayama rule.
inline Integer mn_character(const SkewShape& shape, const Partition& rho)
{
    if (shape.size() != rho.size()) throw std::invalid_argument("character argument size does not match shape size");
    auto [outer, inner] = detail::padded(shape);
    detail::MnEvaluator mn(std::move(inner));
    return mn.eval(outer, rho.parts());
}

/// s_{shape} = sum_rho z_rho^{-1} chi^{shape}(rho) p_rho.
inline SymP skew_schur_in_p(const SkewShape& shape)
{
    const int n = shape.size();
    auto [outer, inner] = detail::padded(shape);
    detail::MnEvaluator mn(std::move(inner));
    SymP f(n);
    for (const auto& rho : partitions_of(n)) {
        const Integer chi = mn.eval(outer, rho.parts());
        if (chi != 0) f.add_term(rho, make_rational(chi, z_of(rho)));
    }
    return f;
}

/// Closed-form character values of tau_n and tau'_n.
inline Integer foulkes_character(int n, const Partition& mu, bool primed)
{
    if (mu.size() != n) throw std::invalid_argument("mu is not a partition of n");
    int odd = 0, even = 0;
    for (int part : mu.parts()) (part % 2 ? odd : even) += 1;
    const int k = n / 2;
    if (n % 2 == 1) {
        if (even > 0) return 0;
        const int r = (odd - 1) / 2;
        const Integer e = euler_number(static_cast<std::size_t>(odd));
        return (k + r) % 2 ? Integer(-e) : e;
    }
    // For even n the sign (-1)^e attaches to tau'_n: tau_2 is a column, so
    // chi^{tau_2}((2)) = -1.
    const int r = odd / 2;
    const int sign_exp = primed ? k + r + even : k + r;
    const Integer e = euler_number(static_cast<std::size_t>(odd));
    return sign_exp % 2 ? Integer(-e) : e;
}

// ---------------------------------------------------------------------------
// Gessel-Reutenauer functions

/// L_m = (1/m) sum_{d | m} mu(d) p_d^{m/d}.
inline SymP gr_L_cycle(int m)
{
    SymP f(m);
    for (int d : divisors(m)) {
        const int mu = mobius(d);
        if (mu == 0) continue;
        f.add_term(Partition(std::vector<int>(static_cast<std::size_t>(m / d), d)), make_rational(mu, m));
    }
    return f;
}

/// L_{<m^r>} from r L_{<m^r>} = sum_{s=1}^r L_m(x^s) L_{<m^{r-s}>}.
inline SymP gr_L_power(int m, int r)
{
    const SymP lm = gr_L_cycle(m);
    std::vector<SymP> h{SymP::one()};
    for (int j = 1; j <= r; ++j) {
        SymP acc(m * j);
        for (int s = 1; s <= j; ++s) acc += lm.power_substituted(s) * h[static_cast<std::size_t>(j - s)];
        h.push_back(make_rational(1, j) * acc);
    }
    return h[static_cast<std::size_t>(r)];
}

/// L_lambda = prod_m L_{<m^{m_m}>}.
inline SymP gr_L(const Partition& lambda)
{
    SymP f = SymP::one();
    const auto mult = lambda.multiplicities();
    for (std::size_t m = 1; m < mult.size(); ++m)
        if (mult[m] > 0) f = f * gr_L_power(static_cast<int>(m), mult[m]);
    return f;
}

// ---------------------------------------------------------------------------
// Power-sum substitutions

/// An assignment p_j -> value(j), periodic in j.
class Pattern {
public:
    Pattern(std::string name, std::vector<EulerPoly> cycle) : name_(std::move(name)), cycle_(std::move(cycle))
    {
        if (cycle_.empty()) throw std::invalid_argument("pattern needs at least one value");
    }

    /// [E, 0, -E, 0, E, ...]
    static Pattern odd() { return {"ODD", {E(), EulerPoly{}, -E(), EulerPoly{}}}; }
    /// [E, -1, -E, 1, ...]
    static Pattern even_alt() { return {"EVEN_ALT", {E(), EulerPoly(-1), -E(), EulerPoly(1)}}; }
    /// [E, 1, -E, -1, ...]
    static Pattern even_ralt() { return {"EVEN_RALT", {E(), EulerPoly(1), -E(), EulerPoly(-1)}}; }
    /// [E, E, E, ...]
    static Pattern all_e() { return {"ALL_E", {E()}}; }

    /// The pattern that turns <f, s_{tau_n}> (or s_{tau'_n} when reverse) into f[pattern].
    static Pattern for_size(int n, bool reverse)
    {
        if (n % 2) return odd();
        return reverse ? even_ralt() : even_alt();
    }

    const std::string& name() const noexcept { return name_; }
    const EulerPoly& value(int j) const { return cycle_[static_cast<std::size_t>(j - 1) % cycle_.size()]; }

private:
    std::string name_;
    std::vector<EulerPoly> cycle_;
};

/// f[pattern]: the ring homomorphism p_j -> value(j). The result is pre-umbral.
inline EulerPoly substitute(const SymP& f, const Pattern& pat)
{
    EulerPoly acc;
    for (const auto& [lam, c] : f.terms()) {
        EulerPoly term(c);
        for (int part : lam.parts()) {
            term *= pat.value(part);
            if (term.is_zero()) break;
        }
        acc += term;
    }
    return acc;
}

/// Checks the Carlitz generating function through t^N at `trials` seeded
/// random rational points (p_1, ..., p_N), in both of its forms:
///   sum_n s_{tau'_n} t^n = (1 + sum (-1)^n h_{2n+1} t^{2n+1}) / sum (-1)^n h_{2n} t^{2n}
///   sum_n s_{tau_n}  t^n = (1 + sum (-1)^n e_{2n+1} t^{2n+1}) / sum (-1)^n e_{2n} t^{2n}
/// (tau_n = tau'_n for odd n).
inline bool carlitz_identity_check(int N, int trials, std::uint64_t seed)
{
    if (N < 1) throw std::invalid_argument("carlitz check needs N >= 1");
    std::vector<SymP> h, e, s, s_primed;
    for (int n = 0; n <= N; ++n) {
        h.push_back(n == 0 ? SymP::one() : complete_h(n));
        e.push_back(n == 0 ? SymP::one() : elementary_e(n));
        s.push_back(n == 0 ? SymP::one() : skew_schur_in_p(tau_shape(n, false)));
        s_primed.push_back(n == 0 ? SymP::one() : skew_schur_in_p(tau_shape(n, true)));
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-20, 20), den(1, 12);
    const auto order = static_cast<std::size_t>(N);

    auto side_by_side = [&](const std::vector<SymP>& ribbons, const std::vector<SymP>& basis,
                            const std::vector<Rational>& pv) {
        ESeries lhs(order), numer(order), denom(order);
        for (int n = 0; n <= N; ++n) {
            const auto idx = static_cast<std::size_t>(n);
            lhs[idx] = EulerPoly(ribbons[idx].evaluate(pv));
            const Rational v = basis[idx].evaluate(pv);
            const Rational signed_v = (n / 2) % 2 ? Rational(-v) : v;
            if (n % 2) numer[idx] = EulerPoly(signed_v);
            else denom[idx] = EulerPoly(signed_v);
        }
        numer[0] = EulerPoly(1);
        return lhs == numer / denom;
    };

    for (int trial = 0; trial < trials; ++trial) {
        std::vector<Rational> pv;
        for (int j = 0; j < N; ++j) pv.push_back(make_rational(num(rng), den(rng)));
        if (!side_by_side(s_primed, h, pv) || !side_by_side(s, e, pv)) return false;
    }
    return true;
}

}  // namespace altperm
