// Permutations, partitions, compositions, skew shapes and standard tableaux.
#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "altperm/exact.hpp"

namespace altperm {

/// Raised when an exhaustive enumeration is asked to go past its configured size.
class OracleLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::string join(std::span<const int> v, char sep = ',')
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << sep;
        os << v[i];
    }
    return os.str();
}

// ---------------------------------------------------------------------------

class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
            if (i && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Sorts and drops zeros.
    static Partition from_parts(std::vector<int> parts)
    {
        std::erase(parts, 0);
        std::sort(parts.begin(), parts.end(), std::greater<>());
        return Partition(std::move(parts));
    }
    /// <1^m_1 2^m_2 ...>; mult[i] is the multiplicity of part i (mult[0] ignored).
    static Partition from_multiplicities(std::span<const int> mult)
    {
        std::vector<int> parts;
        for (std::size_t i = mult.size(); i-- > 1;)
            for (int r = 0; r < mult[i]; ++r) parts.push_back(static_cast<int>(i));
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    /// m[i] = number of parts equal to i, for 0 <= i <= largest part.
    std::vector<int> multiplicities() const
    {
        std::vector<int> m(static_cast<std::size_t>(parts_.empty() ? 1 : parts_.front() + 1), 0);
        for (int p : parts_) ++m[static_cast<std::size_t>(p)];
        return m;
    }
    int count_part(int value) const { return static_cast<int>(std::count(parts_.begin(), parts_.end(), value)); }

    Partition conjugate() const
    {
        std::vector<int> c;
        if (parts_.empty()) return {};
        for (int j = 1; j <= parts_.front(); ++j) {
            int len = 0;
            for (int p : parts_)
                if (p >= j) ++len;
            c.push_back(len);
        }
        return Partition(std::move(c));
    }

    std::string to_string() const { return join(parts_); }

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), (n-2,2), ...
inline std::vector<Partition> partitions_of(int n, int max_part = -1)
{
    std::vector<Partition> out;
    if (n < 0) return out;
    if (max_part < 0 || max_part > n) max_part = n;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int cap) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, max_part);
    return out;
}

// ---------------------------------------------------------------------------

class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (int p : parts_)
            if (p < 1) throw std::invalid_argument("composition parts must be positive");
    }
    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

    /// The composition of n whose partial sums are exactly `descents` (sorted, in [1, n-1]).
    static Composition from_descent_set(int n, std::span<const int> descents)
    {
        std::vector<int> parts;
        int prev = 0;
        for (int d : descents) {
            parts.push_back(d - prev);
            prev = d;
        }
        if (n > 0) parts.push_back(n - prev);
        return Composition(std::move(parts));
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int operator[](std::size_t i) const { return parts_.at(i); }

    /// Partial sums alpha_1, alpha_1 + alpha_2, ... excluding the total.
    std::vector<int> descent_set() const
    {
        std::vector<int> d;
        int s = 0;
        for (std::size_t i = 0; i + 1 < parts_.size(); ++i) d.push_back(s += parts_[i]);
        return d;
    }

    std::string to_string() const { return join(parts_); }

    friend auto operator<=>(const Composition&, const Composition&) = default;
    friend bool operator==(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
};

/// All 2^(n-1) compositions of n >= 1, in lexicographic order of descent-set bitmask.
inline std::vector<Composition> compositions_of(int n)
{
    std::vector<Composition> out;
    if (n < 1) return out;
    for (std::uint32_t mask = 0; mask < (1U << (n - 1)); ++mask) {
        std::vector<int> d;
        for (int i = 1; i < n; ++i)
            if (mask & (1U << (i - 1))) d.push_back(i);
        out.push_back(Composition::from_descent_set(n, d));
    }
    return out;
}

/// The set {1,3,5,...} (or {2,4,6,...} when reverse) intersected with [n-1].
inline std::vector<int> alternating_descent_set(int n, bool reverse)
{
    std::vector<int> d;
    for (int i = reverse ? 2 : 1; i <= n - 1; i += 2) d.push_back(i);
    return d;
}

inline Composition alternating_composition(int n, bool reverse)
{
    return Composition::from_descent_set(n, alternating_descent_set(n, reverse));
}

// ---------------------------------------------------------------------------

class Perm {
public:
    Perm() = default;
    /// `word` must be a rearrangement of 1..n.
    explicit Perm(std::vector<int> word) : w_(std::move(word))
    {
        std::vector<bool> seen(w_.size() + 1, false);
        for (int a : w_) {
            if (a < 1 || a > static_cast<int>(w_.size()) || seen[static_cast<std::size_t>(a)])
                throw std::invalid_argument("permutation word must be a bijection on [n]");
            seen[static_cast<std::size_t>(a)] = true;
        }
    }
    Perm(std::initializer_list<int> word) : Perm(std::vector<int>(word)) {}
    static Perm identity(int n)
    {
        std::vector<int> w(static_cast<std::size_t>(n));
        std::iota(w.begin(), w.end(), 1);
        return Perm(std::move(w));
    }

    const std::vector<int>& word() const noexcept { return w_; }
    int size() const noexcept { return static_cast<int>(w_.size()); }
    /// w(i) for 1-based i.
    int operator()(int i) const { return w_[static_cast<std::size_t>(i - 1)]; }

    Perm inverse() const
    {
        std::vector<int> inv(w_.size());
        for (std::size_t i = 0; i < w_.size(); ++i) inv[static_cast<std::size_t>(w_[i] - 1)] = static_cast<int>(i + 1);
        Perm p;
        p.w_ = std::move(inv);
        return p;
    }

    std::string to_string() const { return join(w_, ' '); }
    friend bool operator==(const Perm&, const Perm&) = default;

private:
    std::vector<int> w_;
};

inline std::vector<int> descent_set(std::span<const int> w)
{
    std::vector<int> d;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) d.push_back(static_cast<int>(i + 1));
    return d;
}
inline std::vector<int> descent_set(const Perm& w) { return descent_set(std::span<const int>(w.word())); }

inline Composition descent_composition(const Perm& w)
{
    return Composition::from_descent_set(w.size(), descent_set(w));
}

/// a_1 > a_2 < a_3 > ... (or a_1 < a_2 > ... when reverse).
inline bool alternates(std::span<const int> w, bool reverse)
{
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        const bool want_descent = (i % 2 == 0) != reverse;
        if ((w[i] > w[i + 1]) != want_descent) return false;
    }
    return true;
}
inline bool is_alternating(const Perm& w) { return alternates(w.word(), false); }
inline bool is_reverse_alternating(const Perm& w) { return alternates(w.word(), true); }

inline Partition cycle_type(std::span<const int> w)
{
    std::vector<bool> seen(w.size(), false);
    std::vector<int> lens;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(w[j] - 1)) {
            seen[j] = true;
            ++len;
        }
        lens.push_back(len);
    }
    return Partition::from_parts(std::move(lens));
}
inline Partition cycle_type(const Perm& w) { return cycle_type(std::span<const int>(w.word())); }

inline int fixed_point_count(std::span<const int> w)
{
    int k = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] == static_cast<int>(i + 1)) ++k;
    return k;
}
inline int fixed_point_count(const Perm& w) { return fixed_point_count(std::span<const int>(w.word())); }

// ---------------------------------------------------------------------------

/// outer / inner with inner contained in outer, in English notation (row 0 on top).
class SkewShape {
public:
    SkewShape() = default;
    explicit SkewShape(Partition outer, Partition inner = {}) : outer_(std::move(outer)), inner_(std::move(inner))
    {
        if (inner_.length() > outer_.length()) throw std::invalid_argument("inner shape not contained in outer shape");
        for (std::size_t i = 0; i < inner_.length(); ++i)
            if (inner_[i] > outer_[i]) throw std::invalid_argument("inner shape not contained in outer shape");
    }

    const Partition& outer() const noexcept { return outer_; }
    const Partition& inner() const noexcept { return inner_; }
    std::size_t rows() const noexcept { return outer_.length(); }
    int row_start(std::size_t r) const { return inner_[r]; }
    int row_end(std::size_t r) const { return outer_[r]; }
    int row_length(std::size_t r) const { return outer_[r] - inner_[r]; }
    int size() const { return outer_.size() - inner_.size(); }
    bool is_straight() const noexcept { return inner_.empty(); }
    bool contains(long r, long c) const
    {
        if (r < 0 || c < 0 || r >= static_cast<long>(rows())) return false;
        return c >= inner_[static_cast<std::size_t>(r)] && c < outer_[static_cast<std::size_t>(r)];
    }

    SkewShape conjugate() const { return SkewShape(outer_.conjugate(), inner_.conjugate()); }

    /// Same cells, translated so no empty rows remain on top and column 0 is used.
    SkewShape normalized() const
    {
        std::vector<int> o, in;
        std::size_t first = 0, last = rows();
        while (first < last && row_length(first) == 0) ++first;
        while (last > first && row_length(last - 1) == 0) --last;
        if (first == last) return {};
        const int shift = inner_[last - 1];
        for (std::size_t r = first; r < last; ++r) {
            o.push_back(outer_[r] - shift);
            in.push_back(inner_[r] - shift);
        }
        return SkewShape(Partition::from_parts(o), Partition::from_parts(in));
    }

    std::string to_string() const
    {
        if (is_straight()) return "(" + outer_.to_string() + ")";
        return "(" + outer_.to_string() + ")/(" + inner_.to_string() + ")";
    }

    friend auto operator<=>(const SkewShape&, const SkewShape&) = default;
    friend bool operator==(const SkewShape&, const SkewShape&) = default;

private:
    Partition outer_;
    Partition inner_;
};

/// Product of hook lengths of a straight shape.
inline Integer hook_product(const Partition& lambda)
{
    const Partition conj = lambda.conjugate();
    Integer h = 1;
    for (std::size_t i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[i]; ++j) {
            const int arm = lambda[i] - j - 1;
            const int leg = conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
            h *= arm + leg + 1;
        }
    return h;
}

/// Number of SYT of a straight shape, n!/H_lambda.
inline Integer hook_length_count(const Partition& lambda)
{
    return factorial(static_cast<unsigned>(lambda.size())) / hook_product(lambda);
}

/// Border strip with rows of lengths alpha_1..alpha_k from top to bottom;
/// each row starts in the last column of the row below it.
inline SkewShape ribbon_shape(const Composition& alpha)
{
    const std::size_t k = alpha.length();
    if (k == 0) return {};
    std::vector<int> start(k), end(k);
    start[k - 1] = 0;
    end[k - 1] = alpha[k - 1];
    for (std::size_t i = k - 1; i-- > 0;) {
        start[i] = end[i + 1] - 1;
        end[i] = start[i] + alpha[i];
    }
    return SkewShape(Partition::from_parts(end), Partition::from_parts(start));
}

/// The composition (1,2,2,...,2,j) of n, j = 1 for even n and j = 2 for odd n.
inline Composition tau_composition(int n)
{
    if (n < 1) throw std::invalid_argument("tau shape needs n >= 1");
    if (n == 1) return Composition{1};
    std::vector<int> parts{1};
    const int last = n % 2 == 0 ? 1 : 2;
    for (int rest = n - 1 - last; rest > 0; rest -= 2) parts.push_back(2);
    parts.push_back(last);
    return Composition(std::move(parts));
}

/// tau_n, or its conjugate tau'_n when primed.
inline SkewShape tau_shape(int n, bool primed)
{
    SkewShape s = ribbon_shape(tau_composition(n));
    return primed ? s.conjugate().normalized() : s;
}

/// k mutually disconnected components of sizes alpha_1..alpha_k from top to
/// bottom, each lower component strictly to the left of the one above.
/// Component i (1-based) is a single row when i is in `row_set`, else a column.
inline SkewShape multiset_shape(const Composition& alpha, const std::set<int>& row_set)
{
    const int k = static_cast<int>(alpha.length());
    for (int i : row_set)
        if (i < 1 || i > k) throw std::invalid_argument("subset index outside [k]");
    std::vector<std::pair<int, int>> rows_bottom_up;  // (start, end)
    int col = 0;
    for (int i = k; i >= 1; --i) {
        const int len = alpha[static_cast<std::size_t>(i - 1)];
        if (row_set.count(i)) {
            rows_bottom_up.emplace_back(col, col + len);
            col += len;
        } else {
            for (int r = 0; r < len; ++r) rows_bottom_up.emplace_back(col, col + 1);
            col += 1;
        }
    }
    std::vector<int> outer, inner;
    for (auto it = rows_bottom_up.rbegin(); it != rows_bottom_up.rend(); ++it) {
        outer.push_back(it->second);
        inner.push_back(it->first);
    }
    return SkewShape(Partition::from_parts(outer), Partition::from_parts(inner));
}

// ---------------------------------------------------------------------------

/// A filling of a skew shape; rows()[r][j] is the entry in column row_start(r) + j.
class Tableau {
public:
    Tableau() = default;
    /// Throws unless the filling is standard: 1..n once each, rows and columns increasing.
    Tableau(SkewShape shape, std::vector<std::vector<int>> rows) : shape_(std::move(shape)), rows_(std::move(rows))
    {
        if (rows_.size() != shape_.rows()) throw std::invalid_argument("tableau row count does not match shape");
        const int n = shape_.size();
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (static_cast<int>(rows_[r].size()) != shape_.row_length(r))
                throw std::invalid_argument("tableau row length does not match shape");
            for (std::size_t j = 0; j < rows_[r].size(); ++j) {
                const int v = rows_[r][j];
                if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
                    throw std::invalid_argument("tableau entries must be 1..n, each once");
                seen[static_cast<std::size_t>(v)] = true;
                if (j && rows_[r][j - 1] >= v) throw std::invalid_argument("tableau rows must increase");
                const int c = shape_.row_start(r) + static_cast<int>(j);
                if (r && shape_.contains(static_cast<long>(r) - 1, c) && at(r - 1, c) >= v)
                    throw std::invalid_argument("tableau columns must increase");
            }
        }
    }

    /// Straight-shape convenience: rows given top to bottom.
    static Tableau straight(std::vector<std::vector<int>> rows)
    {
        std::vector<int> lens;
        for (const auto& r : rows) lens.push_back(static_cast<int>(r.size()));
        return Tableau(SkewShape(Partition(lens)), std::move(rows));
    }

    const SkewShape& shape() const noexcept { return shape_; }
    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
    int size() const { return shape_.size(); }
    int at(std::size_t r, int c) const { return rows_[r][static_cast<std::size_t>(c - shape_.row_start(r))]; }

    /// row_of()[v] is the row holding entry v.
    std::vector<int> row_of() const
    {
        std::vector<int> where(static_cast<std::size_t>(size()) + 1, -1);
        for (std::size_t r = 0; r < rows_.size(); ++r)
            for (int v : rows_[r]) where[static_cast<std::size_t>(v)] = static_cast<int>(r);
        return where;
    }

    friend bool operator==(const Tableau&, const Tableau&) = default;

private:
    SkewShape shape_;
    std::vector<std::vector<int>> rows_;
};

/// {i : i+1 sits in a strictly lower row than i}.
inline std::vector<int> tableau_descent_set(const Tableau& t)
{
    const auto row = t.row_of();
    std::vector<int> d;
    for (int i = 1; i < t.size(); ++i)
        if (row[static_cast<std::size_t>(i + 1)] > row[static_cast<std::size_t>(i)]) d.push_back(i);
    return d;
}

inline Composition tableau_descent_composition(const Tableau& t)
{
    return Composition::from_descent_set(t.size(), tableau_descent_set(t));
}

/// Row-insertion RSK: returns (P, Q).
inline std::pair<Tableau, Tableau> rsk(const Perm& w)
{
    std::vector<std::vector<int>> p, q;
    for (int i = 1; i <= w.size(); ++i) {
        int x = w(i);
        std::size_t r = 0;
        for (;; ++r) {
            if (r == p.size()) {
                p.push_back({x});
                q.push_back({i});
                break;
            }
            auto it = std::upper_bound(p[r].begin(), p[r].end(), x);
            if (it == p[r].end()) {
                p[r].push_back(x);
                q[r].push_back(i);
                break;
            }
            std::swap(x, *it);
        }
    }
    return {Tableau::straight(std::move(p)), Tableau::straight(std::move(q))};
}

/// Calls `visit(const Tableau&)` for each standard Young tableau of `shape`,
/// each exactly once. Throws OracleLimitError when |shape| > bound.
template <class Visitor>
void for_each_syt(const SkewShape& shape, Visitor&& visit, int bound = 14)
{
    const int n = shape.size();
    if (n > bound)
        throw OracleLimitError("SYT enumeration of size " + std::to_string(n) + " exceeds oracle bound " +
                               std::to_string(bound));
    const std::size_t rows = shape.rows();
    std::vector<std::vector<int>> fill(rows);
    std::vector<int> filled(rows);  // first unfilled column of each row
    for (std::size_t r = 0; r < rows; ++r) filled[r] = shape.row_start(r);

    std::function<void(int)> place = [&](int v) {
        if (v > n) {
            visit(Tableau(shape, fill));
            return;
        }
        for (std::size_t r = 0; r < rows; ++r) {
            const int c = filled[r];
            if (c >= shape.row_end(r)) continue;
            if (r > 0 && !(c < filled[r - 1] || c >= shape.row_end(r - 1))) continue;
            fill[r].push_back(v);
            ++filled[r];
            place(v + 1);
            --filled[r];
            fill[r].pop_back();
        }
    };
    place(1);
}

inline std::vector<Tableau> enumerate_syt(const SkewShape& shape, int bound = 14)
{
    std::vector<Tableau> out;
    for_each_syt(shape, [&](const Tableau& t) { out.push_back(t); }, bound);
    return out;
}

}  // namespace altperm
