// Brute-force enumeration oracles. Every closed form in the library is
// checked against these at small sizes; none of them use symmetric functions.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "altperm/perms.hpp"

namespace altperm::oracle {

using Count = std::uint64_t;

/// Sizes past which the exhaustive sweeps refuse to run.
struct Bounds {
    int sn_max = 9;            // sweeps over S_n
    int inverse_pair_max = 8;  // sweeps looking at both w and w^{-1}
    int syt_max = 14;          // SYT enumeration
    int multiset_max = 12;     // multiset word enumeration
};

namespace detail {

inline void require(int n, int bound, const char* what)
{
    if (n > bound)
        throw OracleLimitError(std::string(what) + " oracle: n = " + std::to_string(n) + " exceeds bound " +
                               std::to_string(bound) + " (raise the bound explicitly to run it)");
}

/// Visits every permutation of [n] as a word.
template <class F>
void for_each_perm(int n, F&& f)
{
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    do {
        f(std::span<const int>(w));
    } while (std::next_permutation(w.begin(), w.end()));
}

inline std::vector<int> inverse_word(std::span<const int> w)
{
    std::vector<int> inv(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) inv[static_cast<std::size_t>(w[i] - 1)] = static_cast<int>(i + 1);
    return inv;
}

}  // namespace detail

/// Which of w and w^{-1} must be alternating (alt) or reverse alternating (ralt);
/// the first half of the name constrains w, the second w^{-1}.
enum class DoubleVariant { alt_alt, alt_ralt, ralt_ralt, ralt_alt };

inline bool first_reversed(DoubleVariant v) { return v == DoubleVariant::ralt_ralt || v == DoubleVariant::ralt_alt; }
inline bool second_reversed(DoubleVariant v) { return v == DoubleVariant::alt_ralt || v == DoubleVariant::ralt_ralt; }

inline Count count_alternating(int n, bool reverse, const Bounds& b = {})
{
    detail::require(n, b.sn_max, "alternating");
    Count c = 0;
    detail::for_each_perm(n, [&](std::span<const int> w) { c += alternates(w, reverse); });
    return c;
}

/// #alternating (reverse alternating) w in S_n, keyed by cycle type.
inline std::map<Partition, Count> alternating_by_cycle_type(int n, bool reverse, const Bounds& b = {})
{
    detail::require(n, b.sn_max, "cycle type");
    std::map<Partition, Count> out;
    detail::for_each_perm(n, [&](std::span<const int> w) {
        if (alternates(w, reverse)) ++out[cycle_type(w)];
    });
    return out;
}

/// Entry k counts alternating (reverse alternating) w in S_n with k fixed points.
inline std::vector<Count> alternating_by_fixed_points(int n, bool reverse, const Bounds& b = {})
{
    detail::require(n, b.sn_max, "fixed point");
    std::vector<Count> out(static_cast<std::size_t>(n) + 1, 0);
    detail::for_each_perm(n, [&](std::span<const int> w) {
        if (alternates(w, reverse)) ++out[static_cast<std::size_t>(fixed_point_count(w))];
    });
    return out;
}

/// #{w : co(w) = beta, co(w^{-1}) = alpha}, keyed by (beta, alpha).
inline std::map<std::pair<Composition, Composition>, Count> descent_pair_counts(int n, const Bounds& b = {})
{
    detail::require(n, b.inverse_pair_max, "descent pair");
    std::map<std::pair<Composition, Composition>, Count> out;
    detail::for_each_perm(n, [&](std::span<const int> w) {
        const auto inv = detail::inverse_word(w);
        ++out[{Composition::from_descent_set(n, descent_set(w)), Composition::from_descent_set(n, descent_set(inv))}];
    });
    return out;
}

inline Count count_doubly_alternating(int n, DoubleVariant v, const Bounds& b = {})
{
    detail::require(n, b.inverse_pair_max, "doubly alternating");
    Count c = 0;
    detail::for_each_perm(n, [&](std::span<const int> w) {
        if (!alternates(w, first_reversed(v))) return;
        const auto inv = detail::inverse_word(w);
        c += alternates(inv, second_reversed(v));
    });
    return c;
}

inline Count count_alternating_involutions(int n, bool reverse, const Bounds& b = {})
{
    detail::require(n, b.sn_max, "involution");
    Count c = 0;
    detail::for_each_perm(n, [&](std::span<const int> w) {
        if (!alternates(w, reverse)) return;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[static_cast<std::size_t>(w[i] - 1)] != static_cast<int>(i + 1)) return;
        ++c;
    });
    return c;
}

inline Count count_syt_with_descent_composition(const SkewShape& shape, const Composition& alpha, const Bounds& b = {})
{
    Count c = 0;
    const auto want = alpha.descent_set();
    for_each_syt(shape, [&](const Tableau& t) { c += tableau_descent_set(t) == want; }, b.syt_max);
    return c;
}

/// Alternating (reverse alternating) SYT of the shape.
inline Count count_alternating_syt(const SkewShape& shape, bool reverse, const Bounds& b = {})
{
    return count_syt_with_descent_composition(shape, alternating_composition(shape.size(), reverse), b);
}

/// a_1 > a_2 < a_3 > ... (reverse: a_1 < a_2 > ...), where equal letters j
/// compare as j > j when j is in `gt_letters` and as j < j otherwise.
inline bool is_ab_alternating(std::span<const int> word, const std::set<int>& gt_letters, bool reverse)
{
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        const bool want_descent = (i % 2 == 0) != reverse;
        const bool descent = word[i] == word[i + 1] ? gt_letters.count(word[i]) > 0 : word[i] > word[i + 1];
        if (descent != want_descent) return false;
    }
    return true;
}

/// Number of (A,B)-alternating alpha-permutations: words with alpha_i copies of
/// letter i, enumerated in lexicographic order.
inline Count count_multiset_alternating(const Composition& alpha, const std::set<int>& a_set, bool reverse,
                                        const Bounds& b = {})
{
    detail::require(alpha.size(), b.multiset_max, "multiset");
    std::vector<int> word;
    for (std::size_t i = 0; i < alpha.length(); ++i) word.insert(word.end(), static_cast<std::size_t>(alpha[i]), static_cast<int>(i + 1));
    Count c = 0;
    do {
        c += is_ab_alternating(word, a_set, reverse);
    } while (std::next_permutation(word.begin(), word.end()));
    return c;
}

}  // namespace altperm::oracle
