#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "rspin/invariants.hpp"
#include "rspin/monodromy.hpp"
#include "rspin/polynomial.hpp"

namespace rspin {

struct PatternMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A wall L_S: the locus sum_{i in S} m_i = (|S|-1) r + n - 3. Subsets are
/// bitmasks over positions 0..n-1.
struct Wall {
    int n = 0;
    std::uint32_t S = 0;
};

/// The set of subsets S of [n] satisfying
///   (*1): sum_{i in S} m_i >= (|S|-1) r + n - 2
/// at some lattice point; constant on a chamber.
struct ActivationPattern {
    int n = 0;
    std::set<std::uint32_t> active;

    bool operator==(const ActivationPattern&) const = default;
    bool operator<(const ActivationPattern& o) const {
        if (n != o.n) return n < o.n;
        return active < o.active;
    }
};

inline bool star1(const MonodromyVector& v, std::uint32_t S) {
    long long sum = 0;
    int size = 0;
    for (int i = 0; i < v.n(); ++i)
        if (S & (1u << i)) {
            sum += v.marks[static_cast<size_t>(i)];
            ++size;
        }
    return sum >= static_cast<long long>(size - 1) * v.r + v.n() - 2;
}

inline bool star2(const MonodromyVector& v, std::uint32_t S) {
    long long sum = 0;
    int size = 0;
    for (int i = 0; i < v.n(); ++i)
        if (S & (1u << i)) {
            sum += v.marks[static_cast<size_t>(i)];
            ++size;
        }
    return sum >= static_cast<long long>(size - 1) * v.r + v.n() - 3;
}

inline ActivationPattern activation_pattern(const MonodromyVector& v) {
    require_numerical(v, "activation_pattern");
    ActivationPattern p;
    p.n = v.n();
    for (std::uint32_t S = 0; S < (1u << v.n()); ++S)
        if (star1(v, S)) p.active.insert(S);
    return p;
}

/// The single S-term of the chamber polynomial:
///   (-1)^{1+|S|} prod_{k=1}^{n-3} (sum_S m - (|S|-1) r - k)
/// in variables (m_1, ..., m_n, r).
inline Polynomial subset_term(int n, std::uint32_t S) {
    const size_t vars = static_cast<size_t>(n) + 1;
    int size = 0;
    Polynomial linear(vars);
    for (int i = 0; i < n; ++i)
        if (S & (1u << i)) {
            linear += Polynomial::variable(vars, static_cast<size_t>(i));
            ++size;
        }
    Polynomial r_part = Polynomial::variable(vars, vars - 1);
    r_part *= Rational(size - 1);
    Polynomial term = Polynomial::constant(vars, (size % 2 == 0) ? -1 : 1);
    for (int k = 1; k <= n - 3; ++k) {
        Polynomial factor = linear;
        factor -= r_part;
        factor -= Polynomial::constant(vars, Rational(k));
        term = term * factor;
    }
    return term;
}

/// N(m, r) = 2 r^{n-3} w_r on the chamber: the signed sum of the active
/// subset terms.
struct ChamberPolynomial {
    ActivationPattern pattern;
    Polynomial poly;
};

inline ChamberPolynomial chamber_polynomial(const ActivationPattern& p) {
    ChamberPolynomial out;
    out.pattern = p;
    out.poly = Polynomial(static_cast<size_t>(p.n) + 1);
    for (std::uint32_t S : p.active) out.poly += subset_term(p.n, S);
    return out;
}

/// One wall per subset S with 2 <= |S| <= n-2; L_S and L_{S^c} are kept
/// distinct (they are distinct hyperplanes).
inline std::vector<Wall> walls(int n) {
    std::vector<Wall> out;
    if (n < 4) return out;
    for (std::uint32_t S = 0; S < (1u << n); ++S) {
        int size = std::popcount(S);
        if (size >= 2 && size <= n - 2) out.push_back(Wall{n, S});
    }
    return out;
}

inline Rational evaluate_chamber(const Polynomial& poly, const MonodromyVector& v) {
    std::vector<Rational> point;
    point.reserve(v.marks.size() + 1);
    for (int m : v.marks) point.emplace_back(m);
    point.emplace_back(v.r);
    return poly.evaluate(point);
}

/// Enumerates all numerical vectors for (n, r) with descending marks.
inline std::vector<MonodromyVector> numerical_vectors_sorted(int n, int r) {
    std::vector<MonodromyVector> out;
    std::vector<int> marks(static_cast<size_t>(n));
    long long target = static_cast<long long>(n - 2) * (r + 1);
    auto rec = [&](auto&& self, int pos, int hi, long long left) -> void {
        if (pos == n) {
            if (left == 0) out.push_back(MonodromyVector{r, marks});
            return;
        }
        int remaining = n - pos - 1;
        for (int m = std::min<long long>(hi, left - remaining); m >= 1; --m) {
            if (static_cast<long long>(m) * (remaining + 1) < left) break;
            marks[static_cast<size_t>(pos)] = m;
            self(self, pos + 1, m, left - m);
        }
    };
    rec(rec, 0, r, target);
    return out;
}

struct ChamberInfo {
    std::vector<MonodromyVector> samples;
    ChamberPolynomial chamber;
    bool verified = false;  // poly evaluated = 2 r^{n-3} w_r at every sample
};

/// Groups numerical lattice points with r <= r_max by activation pattern
/// and certifies each chamber polynomial against the closed formula.
inline std::map<ActivationPattern, ChamberInfo> chamber_scan(int n, int r_max) {
    if (n < 3 || r_max < 2) throw PreconditionError("chamber_scan needs n >= 3, r_max >= 2");
    std::map<ActivationPattern, ChamberInfo> out;
    for (int r = 2; r <= r_max; ++r) {
        for (const MonodromyVector& v : numerical_vectors_sorted(n, r)) {
            ActivationPattern p = activation_pattern(v);
            auto [it, inserted] = out.try_emplace(p);
            if (inserted) {
                it->second.chamber = chamber_polynomial(p);
                it->second.verified = true;
            }
            it->second.samples.push_back(v);
            Rational scale(1);
            for (int k = 0; k < n - 3; ++k) scale *= r;
            if (evaluate_chamber(it->second.chamber.poly, v) !=
                Rational(2) * scale * closed_formula(v))
                it->second.verified = false;
        }
    }
    return out;
}

/// Thick-wall agreement: two chamber polynomials that differ by
/// the activation of S alone agree on the whole lattice strip
///   (|S|-1) r + 1 <= sum_S m <= (|S|-1) r + n - 3.
/// Checked structurally (the difference is exactly the S-term, which has a
/// vanishing factor on the strip) and at the strip lattice points with
/// r <= r_max.
inline bool strip_agreement(const Wall& wall, const ChamberPolynomial& p_low,
                            const ChamberPolynomial& p_high, int r_max = 9) {
    const int n = wall.n;
    if (p_low.pattern.n != n || p_high.pattern.n != n)
        throw PatternMismatch("wall and patterns disagree on n");
    std::set<std::uint32_t> lo = p_low.pattern.active, hi = p_high.pattern.active;
    if (lo.count(wall.S) != 0 || hi.count(wall.S) != 1)
        throw PatternMismatch("patterns must differ by activating S");
    lo.insert(wall.S);
    if (lo != hi) throw PatternMismatch("patterns differ by more than S");

    Polynomial diff = p_high.poly - p_low.poly;
    if (!(diff == subset_term(n, wall.S))) return false;

    const int size = std::popcount(wall.S);
    for (int r = 2; r <= r_max; ++r) {
        for (const MonodromyVector& v : numerical_vectors_sorted(n, r)) {
            long long sum = 0;
            for (int i = 0; i < n; ++i)
                if (wall.S & (1u << i)) sum += v.marks[static_cast<size_t>(i)];
            long long base = sum - static_cast<long long>(size - 1) * r;
            if (base < 1 || base > n - 3) continue;
            if (evaluate_chamber(diff, v) != 0) return false;
        }
    }
    return true;
}

}  // namespace rspin
