#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rspin {

struct RangeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DivisibilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SplitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IncompatibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotComparableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An n-tuple of monodromies m_1..m_n in {1,..,r}. Construct through
/// validate(); default construction yields an empty placeholder.
struct MonodromyVector {
    int r = 0;
    std::vector<int> marks;

    int n() const { return static_cast<int>(marks.size()); }
    long long total() const {
        return std::accumulate(marks.begin(), marks.end(), 0LL);
    }
    bool operator==(const MonodromyVector&) const = default;
};

/// Checks 1 <= m_i <= r and the genus-zero divisibility constraint
/// (-2 + n - sum m_i) == 0 mod r.
inline MonodromyVector validate(int r, std::vector<int> marks) {
    const int n = static_cast<int>(marks.size());
    if (n < 3) throw SizeError("need at least 3 marks, got " + std::to_string(n));
    if (r < 2) throw SizeError("need r >= 2, got " + std::to_string(r));
    long long sum = 0;
    for (int m : marks) {
        if (m < 1 || m > r)
            throw RangeError("mark " + std::to_string(m) + " outside [1," +
                             std::to_string(r) + "]");
        sum += m;
    }
    long long lhs = -2 + n - sum;
    if (((lhs % r) + r) % r != 0)
        throw DivisibilityError("-2 + n - sum(m) = " + std::to_string(lhs) +
                                " is not divisible by r = " + std::to_string(r));
    return MonodromyVector{r, std::move(marks)};
}

/// Rank of the Witten bundle: -1 + (2 - n + sum m_i)/r. Also the dimension
/// of the tropicalized class.
inline int witten_rank(const MonodromyVector& v) {
    long long num = 2 - v.n() + v.total();
    return static_cast<int>(-1 + num / v.r);
}

/// Dimension of the tropicalized class: ((n-2)(r+1) - sum m_i)/r, an
/// integer by divisibility. Equals (n-3) - witten_rank.
inline int cycle_dimension(const MonodromyVector& v) {
    long long num = static_cast<long long>(v.n() - 2) * (v.r + 1) - v.total();
    return static_cast<int>(num / v.r);
}

/// True iff sum m_i = (n-2)(r+1), i.e. the invariant degree matches the
/// moduli dimension.
inline bool is_numerical(const MonodromyVector& v) {
    return v.total() == static_cast<long long>(v.n() - 2) * (v.r + 1);
}

/// Reduces x mod r into the window {1,..,r}.
inline int reduce_mod_r(long long x, int r) {
    long long t = ((x - 1) % r + r) % r;
    return static_cast<int>(t + 1);
}

/// Node monodromy generated by the marks in `side`: the representative of
/// (|side|-1)(r+1) - sum_{i in side} m_i in {1,..,r}.
inline int node_monodromy(const MonodromyVector& v, const std::vector<int>& side) {
    long long sum = 0;
    for (int i : side) sum += v.marks[static_cast<size_t>(i - 1)];
    long long x = static_cast<long long>(side.size() - 1) * (v.r + 1) - sum;
    return reduce_mod_r(x, v.r);
}

/// Node monodromies (m_J, m_Jc) for a proper two-sided split J | J^c.
/// Marks are 1-based.
inline std::pair<int, int> node_monodromies(const MonodromyVector& v,
                                            const std::vector<int>& J) {
    const int n = v.n();
    const int j = static_cast<int>(J.size());
    if (j < 2 || n - j < 2)
        throw SplitError("split must leave at least 2 marks on each side");
    std::vector<bool> in_J(static_cast<size_t>(n) + 1, false);
    for (int i : J) {
        if (i < 1 || i > n) throw SplitError("mark index out of range");
        in_J[static_cast<size_t>(i)] = true;
    }
    std::vector<int> Jc;
    for (int i = 1; i <= n; ++i)
        if (!in_J[static_cast<size_t>(i)]) Jc.push_back(i);
    return {node_monodromy(v, J), node_monodromy(v, Jc)};
}

/// All valid vectors obtained from v by -1 at one slot and +1 at another.
inline std::vector<MonodromyVector> neighbors(const MonodromyVector& v) {
    std::vector<MonodromyVector> out;
    for (int i = 0; i < v.n(); ++i) {
        if (v.marks[static_cast<size_t>(i)] <= 1) continue;
        for (int j = 0; j < v.n(); ++j) {
            if (j == i || v.marks[static_cast<size_t>(j)] >= v.r) continue;
            MonodromyVector w = v;
            --w.marks[static_cast<size_t>(i)];
            ++w.marks[static_cast<size_t>(j)];
            out.push_back(std::move(w));
        }
    }
    return out;
}

enum class Dominance { less, equal, greater, incomparable };

namespace detail {
inline std::vector<int> sorted_desc(const std::vector<int>& m) {
    std::vector<int> s = m;
    std::sort(s.begin(), s.end(), std::greater<int>());
    return s;
}
}  // namespace detail

/// Dominance (majorization) order on same-(n, r, total) vectors, computed
/// on descending-sorted parts. The more balanced vector is the smaller one.
inline Dominance dominance_compare(const MonodromyVector& a, const MonodromyVector& b) {
    if (a.n() != b.n() || a.r != b.r || a.total() != b.total())
        throw IncompatibleError("dominance needs equal n, r and total");
    auto pa = detail::sorted_desc(a.marks);
    auto pb = detail::sorted_desc(b.marks);
    bool le = true, ge = true;
    long long sa = 0, sb = 0;
    for (size_t i = 0; i < pa.size(); ++i) {
        sa += pa[i];
        sb += pb[i];
        if (sa > sb) le = false;
        if (sa < sb) ge = false;
    }
    if (le && ge) return Dominance::equal;
    if (le) return Dominance::less;
    if (ge) return Dominance::greater;
    return Dominance::incomparable;
}

/// A chain of single-unit "cookie" moves witnessing a < b in dominance.
/// chain[0] = b (sorted descending), chain.back() = a; moves[t] records the
/// (donor, recipient) slot of the step chain[t] -> chain[t+1].
struct DominanceWitness {
    std::vector<MonodromyVector> chain;
    std::vector<std::pair<int, int>> moves;
};

inline DominanceWitness dominance_chain(const MonodromyVector& a,
                                        const MonodromyVector& b) {
    Dominance d = dominance_compare(a, b);
    if (d != Dominance::less && d != Dominance::equal)
        throw NotComparableError("dominance_chain requires a <= b");
    auto target = detail::sorted_desc(a.marks);
    auto cur = detail::sorted_desc(b.marks);
    DominanceWitness w;
    w.chain.push_back(MonodromyVector{a.r, cur});
    while (cur != target) {
        int i = 0;
        while (cur[static_cast<size_t>(i)] <= target[static_cast<size_t>(i)]) ++i;
        int j = i + 1;
        while (cur[static_cast<size_t>(j)] >= target[static_cast<size_t>(j)]) ++j;
        --cur[static_cast<size_t>(i)];
        ++cur[static_cast<size_t>(j)];
        // keep the working copy sorted; the donated unit may tie neighbors
        std::sort(cur.begin(), cur.end(), std::greater<int>());
        w.moves.emplace_back(i, j);
        w.chain.push_back(MonodromyVector{a.r, cur});
    }
    return w;
}

}  // namespace rspin
