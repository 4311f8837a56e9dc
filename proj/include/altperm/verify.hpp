// Self-checks: closed forms against brute-force enumeration ("oracle"),
// alternative computation routes against each other ("routes"), and
// generating-function identities ("identities").
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "altperm/exact.hpp"
#include "altperm/formulas.hpp"
#include "altperm/oracle.hpp"
#include "altperm/perms.hpp"
#include "altperm/symfunc.hpp"
#include "altperm/useries.hpp"

namespace altperm::verify {

struct Check {
    std::string suite;
    std::string name;
    bool passed = false;
    /// First counterexample when the check failed.
    std::string detail;
};

struct Options {
    int max_n = 7;
    std::uint64_t seed = 1;
};

namespace detail {

/// Collects checks; a check body returns "" on success or a counterexample.
class Recorder {
public:
    explicit Recorder(std::string suite) : suite_(std::move(suite)) {}

    void run(const std::string& name, const std::function<std::string()>& body)
    {
        std::string detail = body();
        checks_.push_back({suite_, name, detail.empty(), std::move(detail)});
    }

    std::vector<Check> take() { return std::move(checks_); }

private:
    std::string suite_;
    std::vector<Check> checks_;
};

inline Rational count(oracle::Count c) { return Rational(static_cast<unsigned long>(c)); }

inline std::string report_mismatch(const std::string& what, const CountReport& r, const Rational& expected)
{
    std::ostringstream os;
    os << what << ": got " << to_string(r.value) << " via " << r.route << ", expected " << to_string(expected);
    for (const auto& [route, v] : r.crosschecks) os << "; " << route << " = " << to_string(v);
    return os.str();
}

inline std::string inconsistent(const std::string& what, const CountReport& r)
{
    if (r.consistent()) return "";
    return report_mismatch(what + " (routes disagree)", r, r.value);
}

inline std::string set_to_string(const std::set<int>& s)
{
    std::string out = "{";
    for (int x : s) out += (out.size() > 1 ? "," : "") + std::to_string(x);
    return out + "}";
}

inline std::vector<std::set<int>> subsets(int k)
{
    std::vector<std::set<int>> out;
    for (int mask = 0; mask < (1 << k); ++mask) {
        std::set<int> s;
        for (int i = 0; i < k; ++i)
            if (mask >> i & 1) s.insert(i + 1);
        out.push_back(std::move(s));
    }
    return out;
}

inline oracle::DoubleVariant to_oracle(DoubleVariant v)
{
    switch (v) {
    case DoubleVariant::alt_alt: return oracle::DoubleVariant::alt_alt;
    case DoubleVariant::alt_ralt: return oracle::DoubleVariant::alt_ralt;
    case DoubleVariant::ralt_ralt: return oracle::DoubleVariant::ralt_ralt;
    case DoubleVariant::ralt_alt: return oracle::DoubleVariant::ralt_alt;
    }
    throw std::logic_error("unknown variant");
}

constexpr DoubleVariant kVariants[] = {DoubleVariant::alt_alt, DoubleVariant::alt_ralt, DoubleVariant::ralt_ralt,
                                       DoubleVariant::ralt_alt};

}  // namespace detail

/// Closed forms against exhaustive enumeration for 1 <= n <= max_n. Throws
/// OracleLimitError when max_n exceeds an oracle's bound.
inline std::vector<Check> oracle_suite(const Options& opt)
{
    const oracle::Bounds bounds;
    const int max_n = opt.max_n;
    if (max_n > bounds.inverse_pair_max)
        throw OracleLimitError("oracle suite: --max-n " + std::to_string(max_n) + " exceeds the enumeration bound " +
                               std::to_string(bounds.inverse_pair_max) + "; use a smaller --max-n");
    detail::Recorder rec("oracle");
    using detail::count;

    rec.run("euler_numbers", [&] {
        for (int n = 1; n <= max_n; ++n)
            if (count(oracle::count_alternating(n, false)) != Rational(euler_number(static_cast<std::size_t>(n))))
                return "E_" + std::to_string(n) + " disagrees with the alternating count";
        return std::string();
    });
    rec.run("descent_pairs", [&] {
        for (int n = 1; n <= max_n; ++n) {
            const auto pairs = oracle::descent_pair_counts(n);
            const auto comps = compositions_of(n);
            std::vector<SymP> ribbons;
            for (const auto& a : comps) ribbons.push_back(skew_schur_in_p(ribbon_shape(a)));
            for (std::size_t i = 0; i < comps.size(); ++i)
                for (std::size_t j = 0; j < comps.size(); ++j) {
                    auto it = pairs.find({comps[j], comps[i]});
                    const Rational want = it == pairs.end() ? Rational(0) : count(it->second);
                    if (inner_product(ribbons[i], ribbons[j]) != want)
                        return "<s_B(" + comps[i].to_string() + "), s_B(" + comps[j].to_string() + ")>";
                }
        }
        return std::string();
    });
    rec.run("doubly_alternating", [&] {
        for (int n = 1; n <= max_n; ++n)
            for (auto v : detail::kVariants) {
                const auto r = doubly_alternating(n, v);
                const Rational want = count(oracle::count_doubly_alternating(n, detail::to_oracle(v)));
                if (r.value != want || !r.consistent())
                    return detail::report_mismatch("n=" + std::to_string(n) + " " + to_string(v), r, want);
            }
        return std::string();
    });
    rec.run("shapes", [&] {
        for (int n = 1; n <= max_n; ++n)
            for (const auto& lam : partitions_of(n))
                for (bool rev : {false, true}) {
                    const SkewShape shape(lam);
                    const auto r = alt_shape(shape, rev);
                    const Rational want = count(oracle::count_alternating_syt(shape, rev));
                    if (r.value != want)
                        return detail::report_mismatch(std::string(rev ? "ralt" : "alt") + "(" + lam.to_string() + ")", r, want);
                }
        return std::string();
    });
    rec.run("cycle_type", [&] {
        for (int n = 1; n <= max_n; ++n)
            for (bool rev : {false, true}) {
                const auto by_type = oracle::alternating_by_cycle_type(n, rev);
                for (const auto& rho : partitions_of(n)) {
                    const auto it = by_type.find(rho);
                    const Rational want = it == by_type.end() ? Rational(0) : count(it->second);
                    const auto r = b_cycle_type(rho, rev);
                    if (r.value != want || !r.consistent())
                        return detail::report_mismatch(std::string(rev ? "b*" : "b") + "(" + rho.to_string() + ")", r, want);
                }
            }
        return std::string();
    });
    rec.run("fixed_points", [&] {
        for (bool rev : {false, true}) {
            const auto table = fixed_point_series(static_cast<std::size_t>(max_n), rev);
            for (int n = 1; n <= max_n; ++n) {
                const auto want = oracle::alternating_by_fixed_points(n, rev);
                for (int k = 0; k <= n; ++k)
                    if (Rational(table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]) != count(want[static_cast<std::size_t>(k)]))
                        return std::string(rev ? "d*_" : "d_") + std::to_string(k) + "(" + std::to_string(n) + ")";
            }
        }
        return std::string();
    });
    rec.run("involutions", [&] {
        for (bool rev : {false, true}) {
            const auto c = involutions_series(static_cast<std::size_t>(max_n), rev);
            for (int n = 1; n <= max_n; ++n)
                if (Rational(c[static_cast<std::size_t>(n)]) != count(oracle::count_alternating_involutions(n, rev)))
                    return std::string(rev ? "c*(" : "c(") + std::to_string(n) + ")";
        }
        return std::string();
    });
    rec.run("multisets", [&] {
        for (int n = 1; n <= max_n; ++n)
            for (const auto& alpha : compositions_of(n)) {
                if (alpha.length() > 4) continue;
                for (const auto& a : detail::subsets(static_cast<int>(alpha.length())))
                    for (bool rev : {false, true}) {
                        const auto r = multiset_count(alpha, a, rev);
                        const Rational want = count(oracle::count_multiset_alternating(alpha, a, rev));
                        if (r.value != want || !r.consistent())
                            return detail::report_mismatch(std::string(rev ? "N*(" : "N(") + alpha.to_string() + ", A=" +
                                                               detail::set_to_string(a) + ")",
                                                           r, want);
                    }
            }
        return std::string();
    });
    return rec.take();
}

/// Every multi-route computation agrees with itself.
inline std::vector<Check> routes_suite(const Options& opt)
{
    detail::Recorder rec("routes");
    const int max_n = std::max(opt.max_n, 1);

    rec.run("staircase", [&] {
        for (int m = 2; m <= 6; ++m)
            if (auto d = detail::inconsistent("staircase m=" + std::to_string(m), staircase(m)); !d.empty()) return d;
        return std::string();
    });
    rec.run("square", [&] { return detail::inconsistent("square p=3", square(3)); });
    rec.run("doubly_alternating", [&] {
        for (int n = 1; n <= std::max(max_n, 12); ++n)
            for (auto v : detail::kVariants)
                if (auto d = detail::inconsistent("n=" + std::to_string(n) + " " + to_string(v), doubly_alternating(n, v)); !d.empty())
                    return d;
        return std::string();
    });
    rec.run("ncycle", [&] {
        for (int n = 1; n <= 12; ++n)
            for (bool rev : {false, true})
                if (auto d = detail::inconsistent("b(" + std::to_string(n) + ")", b_ncycle_closed(n, rev)); !d.empty()) return d;
        return std::string();
    });
    rec.run("fm_series", [&] {
        for (int m = 1; m <= 10; ++m)
            for (bool rev : {false, true}) {
                const auto series = fm_series(m, static_cast<std::size_t>(10 / m), rev);
                for (int r = 1; r * m <= 10; ++r) {
                    const Partition rho(std::vector<int>(static_cast<std::size_t>(r), m));
                    if (Rational(series[static_cast<std::size_t>(r)]) != b_cycle_type(rho, rev).value)
                        return "F_" + std::to_string(m) + (rev ? "*" : "") + " coefficient " + std::to_string(r);
                }
            }
        return std::string();
    });
    rec.run("cycle_indicator", [&] {
        for (bool rev : {false, true})
            for (const auto& [lam, v] : cycle_indicator_truncated(4, 10, rev)) {
                if (lam.empty()) continue;
                if (Rational(v) != b_cycle_type(lam, rev).value)
                    return std::string(rev ? "Z*" : "Z") + " coefficient at (" + lam.to_string() + ")";
            }
        return std::string();
    });
    rec.run("involutions", [&] {
        // Throws if the closed form and the two cycle-indicator specializations disagree.
        involutions_series(16, false);
        return std::string();
    });
    rec.run("eh_table", [&] { return eh_specialization_table(12).identities_hold ? std::string() : "e/h specializations"; });
    rec.run("multiset_333", [&] { return detail::inconsistent("N((3,3,3), {})", multiset_count(Composition{3, 3, 3}, {}, false)); });
    return rec.take();
}

/// Series and symmetric-function identities.
inline std::vector<Check> identities_suite(const Options& opt)
{
    detail::Recorder rec("identities");

    rec.run("euler_two_ways", [&] {
        return euler_numbers(30) == sec_tan_euler_numbers(30) ? std::string() : "boustrophedon vs sec+tan";
    });
    rec.run("f2_coefficients", [&] {
        const std::vector<Integer> want{1, 1, 1, 2, 5, 17, 72, 367, 2179};
        return fm_series(2, 8, false) == want ? std::string() : "F_2 through t^8";
    });
    rec.run("f1_is_one_plus_t", [&] {
        const auto c = fm_series(1, 40, false);
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i] != (i <= 1 ? 1 : 0)) return "coefficient of t^" + std::to_string(i);
        return std::string();
    });
    rec.run("doubly_relations", [&] {
        for (int n = 1; n <= 16; ++n)
            if (auto d = detail::inconsistent("f*(" + std::to_string(n) + ")", doubly_alternating(n, DoubleVariant::alt_ralt)); !d.empty())
                return d;
        return std::string();
    });
    rec.run("f2_star", [&] {
        const auto f = fm_series(2, 16, false), fs = fm_series(2, 16, true);
        for (std::size_t r = 1; r <= 16; ++r)
            if (fs[r] != f[r] - fs[r - 1]) return "F_2* = F_2/(1+t) at t^" + std::to_string(r);
        return std::string();
    });
    rec.run("foulkes_characters", [&] {
        for (int n = 1; n <= 10; ++n)
            for (const auto& mu : partitions_of(n))
                for (bool primed : {false, true})
                    if (foulkes_character(n, mu, primed) != mn_character(tau_shape(n, primed), mu))
                        return "n=" + std::to_string(n) + " mu=(" + mu.to_string() + ")" + (primed ? " primed" : "");
        return std::string();
    });
    rec.run("lyndon_sum", [&] {
        for (int n = 1; n <= 8; ++n) {
            SymP sum(n);
            for (const auto& lam : partitions_of(n)) sum += gr_L(lam);
            if (sum != SymP::p(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)))) return "n=" + std::to_string(n);
        }
        return std::string();
    });
    rec.run("carlitz", [&] {
        for (std::uint64_t s = 0; s < 3; ++s)
            if (!carlitz_identity_check(8, 3, opt.seed + s)) return "seed " + std::to_string(opt.seed + s);
        return std::string();
    });
    rec.run("ncycle_reverse", [&] {
        for (int n = 3; n <= 10; ++n)
            if (b_cycle_type(Partition{n}, false).value != b_cycle_type(Partition{n}, true).value) return "b(" + std::to_string(n) + ") != b*";
        if (b_cycle_type(Partition{2}, false).value == b_cycle_type(Partition{2}, true).value) return std::string("b(2) = b*(2)");
        return std::string();
    });
    rec.run("d0_equals_d1", [&] {
        // Fails at n = 2 for d: the only alternating permutation 21 is a derangement.
        for (bool rev : {false, true}) {
            const auto t = fixed_point_series(16, rev);
            for (std::size_t n = rev ? 2 : 3; n <= 16; ++n)
                if (t[n][0] != t[n][1]) return std::string(rev ? "d*" : "d") + " at n=" + std::to_string(n);
        }
        return std::string();
    });
    rec.run("conjecture", [&] {
        for (const auto& row : conjecture_check(12))
            if (!row.equal) return row.statement + " at n=" + std::to_string(row.n);
        return std::string();
    });
    rec.run("conservation", [&] {
        for (int n = 1; n <= 8; ++n) {
            const Rational en(euler_number(static_cast<std::size_t>(n)));
            Rational by_type, by_shape;
            for (const auto& rho : partitions_of(n)) by_type += b_cycle_type(rho, false).value;
            for (const auto& lam : partitions_of(n))
                by_shape += alt_shape(SkewShape(lam), false).value * Rational(hook_length_count(lam));
            Rational by_fixed;
            const auto table = fixed_point_series(static_cast<std::size_t>(n), false);
            for (const auto& v : table[static_cast<std::size_t>(n)]) by_fixed += Rational(v);
            if (by_type != en || by_shape != en || by_fixed != en) return "n=" + std::to_string(n);
        }
        return std::string();
    });
    rec.run("multiset_invariance", [&] {
        for (int n = 1; n <= 7; n += 2)
            for (const auto& alpha : compositions_of(n)) {
                if (alpha.length() > 4) continue;
                std::vector<int> sorted = alpha.parts();
                std::sort(sorted.begin(), sorted.end());
                const Rational base = multiset_count(Composition(sorted), {}, false).value;
                for (const auto& a : detail::subsets(static_cast<int>(alpha.length())))
                    if (multiset_count(alpha, a, false).value != base) return "alpha=(" + alpha.to_string() + ")";
            }
        return std::string();
    });
    return rec.take();
}

inline std::vector<Check> run_suite(const std::string& suite, const Options& opt)
{
    if (suite == "oracle") return oracle_suite(opt);
    if (suite == "routes") return routes_suite(opt);
    if (suite == "identities") return identities_suite(opt);
    if (suite == "all") {
        auto all = oracle_suite(opt);
        for (auto* f : {&routes_suite, &identities_suite}) {
            auto more = (*f)(opt);
            all.insert(all.end(), more.begin(), more.end());
        }
        return all;
    }
    throw std::invalid_argument("unknown suite '" + suite + "' (expected all, oracle, routes or identities)");
}

}  // namespace altperm::verify
