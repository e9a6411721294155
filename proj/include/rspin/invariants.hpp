#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "rspin/monodromy.hpp"
#include "rspin/rational.hpp"

namespace rspin {

struct IntegralityViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void require_numerical(const MonodromyVector& v, const char* who) {
    if (!is_numerical(v))
        throw PreconditionError(std::string(who) + " requires a numerical vector");
}

/// w_r of a numerical 3-point vector: always 1.
inline Rational three_point(const MonodromyVector& v) {
    require_numerical(v, "three_point");
    if (v.n() != 3) throw PreconditionError("three_point requires n = 3");
    return Rational(1);
}

/// w_r of a numerical 4-point vector:
/// (1/r) min_i { m_i - 1, r - m_i }. A Ramond insertion makes the min 0.
inline Rational four_point(const MonodromyVector& v) {
    require_numerical(v, "four_point");
    if (v.n() != 4) throw PreconditionError("four_point requires n = 4");
    int best = v.r;
    for (int m : v.marks) {
        best = std::min(best, m - 1);
        best = std::min(best, v.r - m);
    }
    return Rational(best, v.r);
}

/// Subset-sum expansion engine:
///   w_r(m) = (1/(2 r^{n-3})) sum_{S : (*1)} (-1)^{1+|S|}
///            prod_{k=1}^{n-3} (sum_S m - (|S|-1)r - k)
/// where S satisfies (*1) iff sum_S m >= (|S|-1)r + n - 2.
inline Rational closed_formula(const MonodromyVector& v) {
    require_numerical(v, "closed_formula");
    const int n = v.n();
    const int r = v.r;
    Integer acc = 0;
    for (std::uint32_t S = 0; S < (1u << n); ++S) {
        long long sum = 0;
        int size = 0;
        for (int i = 0; i < n; ++i)
            if (S & (1u << i)) {
                sum += v.marks[static_cast<size_t>(i)];
                ++size;
            }
        long long base = sum - static_cast<long long>(size - 1) * r;
        if (base < n - 2) continue;
        Integer term = 1;
        for (int k = 1; k <= n - 3; ++k) term *= Integer(base - k);
        acc += (size % 2 == 0) ? -term : term;
    }
    Integer denom = 2;
    for (int k = 0; k < n - 3; ++k) denom *= r;
    return Rational(acc, denom);
}

/// Inner-invariant evaluator used by t_term, so the recursion oracle and
/// the closed-formula cross checks stay on independent pipelines.
using Engine = std::function<Rational(const MonodromyVector&)>;

/// The step term T_r^{i,j,k}: (1/r) (delta_{m_j+m_k >= r+1} w(first)
/// - delta_{m_i+m_k >= r+2} w(second)), where both inner vectors drop
/// marks i, j, k and append the glued monodromy. Indices are 0-based.
inline Rational t_term(const MonodromyVector& v, int i, int j, int k,
                       const Engine& inner) {
    require_numerical(v, "t_term");
    const int n = v.n();
    if (i == j || j == k || i == k || i < 0 || j < 0 || k < 0 || i >= n || j >= n ||
        k >= n)
        throw PreconditionError("t_term needs three distinct indices in range");
    const int mi = v.marks[static_cast<size_t>(i)];
    const int mj = v.marks[static_cast<size_t>(j)];
    const int mk = v.marks[static_cast<size_t>(k)];
    if (mi <= 1) throw PreconditionError("t_term requires m_i > 1");
    if (mj >= v.r) throw PreconditionError("t_term requires m_j < r");

    auto rest = [&](int first_mark, int last_mark) {
        std::vector<int> marks;
        marks.reserve(static_cast<size_t>(n) - 1);
        marks.push_back(first_mark);
        for (int t = 0; t < n; ++t)
            if (t != i && t != j && t != k) marks.push_back(v.marks[static_cast<size_t>(t)]);
        marks.push_back(last_mark);
        return validate(v.r, std::move(marks));
    };

    Rational total = 0;
    if (mj + mk >= v.r + 1) total += inner(rest(mi - 1, mj + mk - v.r));
    if (mi + mk >= v.r + 2) total -= inner(rest(mj, mi + mk - v.r - 1));
    return total / v.r;
}

namespace detail {

inline std::vector<int> sorted_key(const MonodromyVector& v) {
    return sorted_desc(v.marks);
}

struct OracleCache {
    std::map<std::pair<int, std::vector<int>>, Rational> values;
    std::mutex mutex;
};

inline OracleCache& oracle_cache() {
    static OracleCache cache;
    return cache;
}

}  // namespace detail

/// Computes w_r without the closed formula: 3-point base case, Ramond
/// vanishing, and a neighbor walk that pushes the largest sub-r entry up
/// to r, peeling off (n-3) * T at each step. Memoized on (r, sorted marks).
inline Rational recursion_oracle(const MonodromyVector& v) {
    require_numerical(v, "recursion_oracle");
    const int n = v.n();
    if (n == 3) return Rational(1);
    for (int m : v.marks)
        if (m == v.r) return Rational(0);

    auto key = std::make_pair(v.r, detail::sorted_key(v));
    auto& cache = detail::oracle_cache();
    {
        std::lock_guard<std::mutex> lock(cache.mutex);
        auto it = cache.values.find(key);
        if (it != cache.values.end()) return it->second;
    }

    // j: lowest index of a maximal entry (< r, since Ramond was excluded);
    // i: lowest index of a minimal entry > 1, distinct from j.
    int j = 0;
    for (int t = 1; t < n; ++t)
        if (v.marks[static_cast<size_t>(t)] > v.marks[static_cast<size_t>(j)]) j = t;
    int i = -1;
    for (int t = 0; t < n; ++t) {
        if (t == j || v.marks[static_cast<size_t>(t)] <= 1) continue;
        if (i < 0 || v.marks[static_cast<size_t>(t)] < v.marks[static_cast<size_t>(i)]) i = t;
    }
    if (i < 0) throw PreconditionError("recursion_oracle: no donor entry > 1");

    MonodromyVector bumped = v;
    --bumped.marks[static_cast<size_t>(i)];
    ++bumped.marks[static_cast<size_t>(j)];
    int k = 0;
    while (k == i || k == j) ++k;

    Rational step = t_term(v, i, j, k, [](const MonodromyVector& w) {
        return recursion_oracle(w);
    });
    Rational value = recursion_oracle(bumped) + Rational(n - 3) * step;

    std::lock_guard<std::mutex> lock(cache.mutex);
    cache.values.emplace(std::move(key), value);
    return value;
}

/// Default evaluator: base cases where available, closed formula otherwise.
inline Rational invariant(const MonodromyVector& v) {
    require_numerical(v, "invariant");
    if (v.n() == 3) return Rational(1);
    if (v.n() == 4) return four_point(v);
    return closed_formula(v);
}

enum class Vanishing { nonzero, ramond, low_insertion };

/// Exact vanishing classification: w_r(v) > 0 iff n-2 <= m_i <= r-1 for
/// all i.
inline Vanishing vanishes(const MonodromyVector& v) {
    require_numerical(v, "vanishes");
    for (int m : v.marks)
        if (m == v.r) return Vanishing::ramond;
    if (v.n() >= 4)
        for (int m : v.marks)
            if (m <= v.n() - 3) return Vanishing::low_insertion;
    return Vanishing::nonzero;
}

/// (n-3)!/r^{n-3}; the value of w_r when m_1 = n-2 and all entries lie in
/// [n-2, r-1], and the smallest nonzero invariant overall.
inline Rational extremal_value(int n, int r) {
    if (n < 3 || r < 2) throw PreconditionError("extremal_value needs n >= 3, r >= 2");
    Integer num = 1, den = 1;
    for (int k = 2; k <= n - 3; ++k) num *= k;
    for (int k = 0; k < n - 3; ++k) den *= r;
    return Rational(num, den);
}

/// w_r(v) * r^{n-3} / (n-3)!, which is always a nonnegative integer.
inline Integer normalized_integer(const MonodromyVector& v) {
    require_numerical(v, "normalized_integer");
    Rational q = invariant(v) / extremal_value(v.n(), v.r);
    if (denominator(q) != 1)
        throw IntegralityViolation("w_r * r^{n-3}/(n-3)! is not an integer");
    if (q < 0) throw IntegralityViolation("negative invariant");
    return numerator(q);
}

}  // namespace rspin
