#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "rspin/invariants.hpp"
#include "rspin/rational.hpp"
#include "rspin/split_tree.hpp"

namespace rspin {

struct AnchorError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DimensionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct FaceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A vector of Q_[n] in the generating set r^k_{i,j}, {i,j} in [n]\{k}.
/// Coefficient maps differing by a constant shift on all pairs represent
/// the same vector (the generators satisfy sum_{i,j} r^k_{i,j} = 0).
struct FanVector {
    int n = 0;
    int anchor = 0;
    std::vector<std::pair<int, int>> pairs;  // all {i,j} in [n]\{k}, i < j
    std::vector<Rational> coeffs;            // aligned with `pairs`

    FanVector() = default;
    FanVector(int n_, int k) : n(n_), anchor(k) {
        for (int i = 1; i <= n; ++i) {
            if (i == anchor) continue;
            for (int j = i + 1; j <= n; ++j)
                if (j != anchor) pairs.emplace_back(i, j);
        }
        coeffs.assign(pairs.size(), Rational(0));
    }

    Rational& at(int i, int j) {
        if (i > j) std::swap(i, j);
        for (size_t t = 0; t < pairs.size(); ++t)
            if (pairs[t] == std::make_pair(i, j)) return coeffs[t];
        throw AnchorError("pair not in the generating set");
    }

    bool is_zero() const {
        // zero modulo the all-pairs constant shift
        for (const Rational& c : coeffs)
            if (c != coeffs[0]) return false;
        return true;
    }

    /// Canonical representative: shift so the minimum coefficient is 0.
    FanVector normalized() const {
        FanVector out = *this;
        Rational lo = coeffs[0];
        for (const Rational& c : coeffs) lo = std::min(lo, c);
        for (Rational& c : out.coeffs) c -= lo;
        return out;
    }
};

/// The ray generator v_I = sum over pairs inside I of r^k_{i,j}.
inline FanVector ray_vector(int n, MarkMask I, int k) {
    if (I & (MarkMask{1} << (k - 1))) throw AnchorError("anchor mark lies inside I");
    if (!is_valid_split(I, n)) throw SplitError("I is not a valid split side");
    FanVector v(n, k);
    auto marks = mask_to_marks(I);
    for (size_t a = 0; a < marks.size(); ++a)
        for (size_t b = a + 1; b < marks.size(); ++b) v.at(marks[a], marks[b]) = 1;
    return v;
}

/// A dimension-d weighted fan on M_{0,n}^trop: a map from d-edge trees to
/// exact rational weights. `source` is set for tropicalized Witten classes.
struct TropicalCycle {
    int n = 0;
    int r = 0;  // 0 for generic fans with no r-spin origin
    int dim = 0;
    std::optional<MonodromyVector> source;
    std::map<SplitTree, Rational> weights;

    Rational weight(const SplitTree& t) const {
        auto it = weights.find(t);
        return it == weights.end() ? Rational(0) : it->second;
    }
};

/// w_r extended by zero to non-numerical vectors: a factor class whose
/// rank exceeds its moduli dimension has zero Euler class.
inline Rational w_ext(const MonodromyVector& v) {
    return is_numerical(v) ? invariant(v) : Rational(0);
}

/// The weight a tropicalized class assigns to a single tree: the product
/// over vertices of w_ext of the local monodromy vector.
inline Rational tree_weight(const MonodromyVector& v, const SplitTree& t) {
    Rational w(1);
    for (const TreeVertex& u : tree_vertices(t)) {
        w *= w_ext(local_vector(v, u));
        if (w == 0) break;
    }
    return w;
}

/// Tropicalization of the Witten class of v: every tree with
/// cycle_dimension(v) edges, weighted by the product of local invariants.
/// Zero weights are kept so the d-skeleton support is explicit.
inline TropicalCycle tropicalize(const MonodromyVector& v) {
    const int d = cycle_dimension(v);
    if (d < 0 || d > v.n() - 3)
        throw DimensionError("cycle dimension " + std::to_string(d) +
                             " is outside [0, n-3]");
    TropicalCycle c;
    c.n = v.n();
    c.r = v.r;
    c.dim = d;
    c.source = v;
    for (const SplitTree& t : all_trees(v.n(), d)) c.weights[t] = tree_weight(v, t);
    return c;
}

/// The fan of M_{0,n}^trop itself: unit weight on every top-dimensional
/// (trivalent) tree.
inline TropicalCycle unit_weight_fan(int n) {
    TropicalCycle c;
    c.n = n;
    c.dim = n - 3;
    for (const SplitTree& t : all_trees(n, n - 3)) c.weights[t] = 1;
    return c;
}

/// Re-indexes a ray of a 1-dimensional cycle by the side away from mark k.
inline MarkMask ray_side(const SplitTree& t, int k) {
    MarkMask e = t.edges.at(0);
    if (e & (MarkMask{1} << (k - 1))) return full_mask(t.n) & ~e;
    return e;
}

/// Boomerang coefficient B^k_{i,j}: the sum of ray weights over all splits
/// with {i,j} on the side away from the anchor k.
inline Rational boomerang(const TropicalCycle& c, int k, int i, int j) {
    if (c.dim != 1) throw DimensionError("boomerang needs a 1-dimensional cycle");
    if (i == j || i == k || j == k) throw AnchorError("i, j, k must be distinct");
    MarkMask ij = (MarkMask{1} << (i - 1)) | (MarkMask{1} << (j - 1));
    Rational total(0);
    for (const auto& [tree, w] : c.weights) {
        MarkMask side = ray_side(tree, k);
        if ((side & ij) == ij) total += w;
    }
    return total;
}

struct BalanceReport {
    SplitTree face;
    bool balanced = true;
    /// Deviation of each boomerang from the first one (origin check) or of
    /// the weighted normal sum from the face span (generic check).
    std::optional<FanVector> residual;
};

/// Origin balancing of a 1-dimensional cycle: all boomerangs at anchor k
/// must coincide. The verdict is anchor-independent.
inline BalanceReport check_balancing_origin(const TropicalCycle& c, int k) {
    if (c.dim != 1)
        throw DimensionError("check_balancing_origin needs a 1-dimensional cycle");
    BalanceReport rep;
    rep.face = SplitTree{c.n, {}};
    FanVector res(c.n, k);
    std::optional<Rational> ref;
    for (size_t t = 0; t < res.pairs.size(); ++t) {
        auto [i, j] = res.pairs[t];
        Rational b = boomerang(c, k, i, j);
        if (!ref) ref = b;
        res.coeffs[t] = b - *ref;
        if (res.coeffs[t] != 0) rep.balanced = false;
    }
    rep.residual = std::move(res);
    return rep;
}

namespace detail {

inline size_t matrix_rank(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) return 0;
    const size_t cols = rows[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows.size(); ++col) {
        size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (size_t rr = 0; rr < rows.size(); ++rr) {
            if (rr == rank || rows[rr][col] == 0) continue;
            Rational f = rows[rr][col] / rows[rank][col];
            for (size_t cc = col; cc < cols; ++cc) rows[rr][cc] -= f * rows[rank][cc];
        }
        ++rank;
    }
    return rank;
}

/// Exact check that `target` lies in the span of `basis` plus the all-ones
/// relation vector: adjoining the target must not raise the rank.
inline bool in_span_mod_relation(const std::vector<FanVector>& basis,
                                 const FanVector& target) {
    const size_t dim = target.coeffs.size();
    std::vector<std::vector<Rational>> rows;
    for (const FanVector& b : basis) rows.push_back(b.coeffs);
    rows.emplace_back(dim, Rational(1));  // the relation vector
    size_t base_rank = matrix_rank(rows);
    rows.push_back(target.coeffs);
    return matrix_rank(std::move(rows)) == base_rank;
}

}  // namespace detail

/// Generic balancing of a weighted fan along the face tau: the weighted sum
/// of the normal ray generators over all refinements of tau must lie in the
/// span of tau's own rays (modulo the defining relation of Q_[n]).
inline BalanceReport check_balancing_generic(const TropicalCycle& c,
                                             const SplitTree& tau, int k = 0) {
    if (tau.dim() + 1 != c.dim)
        throw FaceError("face must have dim-1 edges");
    if (k == 0) k = c.n;  // mark n is never inside a canonical split side
    BalanceReport rep;
    rep.face = tau;

    std::vector<FanVector> basis;
    for (MarkMask e : tau.edges)
        basis.push_back(ray_vector(c.n, canonical_split(e, c.n), k));

    FanVector sum(c.n, k);
    for (MarkMask e : all_splits(c.n)) {
        bool in_tau = false, compatible = true;
        for (MarkMask f : tau.edges) {
            if (e == f) in_tau = true;
            if (!splits_compatible(e, f)) compatible = false;
        }
        if (in_tau || !compatible) continue;
        std::vector<MarkMask> edges = tau.edges;
        edges.push_back(e);
        Rational w = c.weight(make_tree(c.n, std::move(edges)));
        if (w == 0) continue;
        FanVector v = ray_vector(c.n, e, k);
        for (size_t t = 0; t < sum.coeffs.size(); ++t)
            sum.coeffs[t] += w * v.coeffs[t];
    }
    rep.balanced = detail::in_span_mod_relation(basis, sum);
    rep.residual = sum.normalized();
    return rep;
}

/// Per-vertex face balancing for tropicalized CohFT classes. At each
/// vertex of tau of valence >= 4 whose local class is 1-dimensional, the
/// local tropicalization must balance at the origin, and every refinement
/// weight must factor as (product of the other vertices' invariants) times
/// the local ray weight.
inline BalanceReport check_balancing_face(const TropicalCycle& c, const SplitTree& tau) {
    if (c.dim < 2) throw DimensionError("check_balancing_face needs dim >= 2");
    if (!c.source) throw PreconditionError("face check needs a tropicalized cycle");
    if (tau.dim() != c.dim - 1) throw FaceError("face must have dim-1 edges");

    bool is_face = false;
    for (const auto& [tree, w] : c.weights) {
        if (w == 0) continue;
        bool contains = true;
        for (MarkMask e : tau.edges)
            if (std::find(tree.edges.begin(), tree.edges.end(), e) == tree.edges.end())
                contains = false;
        if (contains) {
            is_face = true;
            break;
        }
    }
    if (!is_face) throw FaceError("tau is not a face of any support tree");

    const MonodromyVector& src = *c.source;
    BalanceReport rep;
    rep.face = tau;

    auto verts = tree_vertices(tau);
    for (size_t ui = 0; ui < verts.size(); ++ui) {
        const TreeVertex& u = verts[ui];
        if (u.valence() < 4) continue;  // trivalent vertices admit no refinement
        MonodromyVector local = local_vector(src, u);
        if (cycle_dimension(local) != 1) continue;

        TropicalCycle local_trop = tropicalize(local);
        if (!check_balancing_origin(local_trop, 1).balanced) {
            rep.balanced = false;
            return rep;
        }

        // prefactor: the other vertices' contributions
        Rational pre(1);
        for (size_t wi = 0; wi < verts.size(); ++wi)
            if (wi != ui) pre *= w_ext(local_vector(src, verts[wi]));

        // every refinement of tau at u corresponds to a 2-sided split of
        // u's flags; flag order matches the local vector: legs first.
        const int val = u.valence();
        std::vector<MarkMask> flag_far(static_cast<size_t>(val));
        for (size_t t = 0; t < u.legs.size(); ++t)
            flag_far[t] = MarkMask{1} << (u.legs[t] - 1);
        for (size_t t = 0; t < u.branches.size(); ++t)
            flag_far[u.legs.size() + t] = u.branches[t];

        for (MarkMask A = 1; A < (MarkMask{1} << val); ++A) {
            int s = mask_size(A);
            if (s < 2 || s > val - 2) continue;
            if (A & MarkMask{1}) continue;  // each flag split counted once
            MarkMask global = 0;
            for (int t = 0; t < val; ++t)
                if (A & (MarkMask{1} << t)) global |= flag_far[static_cast<size_t>(t)];
            std::vector<MarkMask> edges = tau.edges;
            edges.push_back(canonical_split(global, c.n));
            Rational lhs = c.weight(make_tree(c.n, std::move(edges)));

            // the matching local ray: flags of A on one side of the split
            // of the local vector's marks
            MarkMask local_side = 0;
            for (int t = 0; t < val; ++t)
                if (A & (MarkMask{1} << t)) local_side |= MarkMask{1} << t;
            Rational local_w =
                local_trop.weight(make_tree(val, {local_side}));
            if (lhs != pre * local_w) {
                rep.balanced = false;
                return rep;
            }
        }
    }
    return rep;
}

/// WDVV relation for a 1-dimensional class: after pushing forward to the
/// four retained marks, the total weight separating {a,b}|{c,d} must equal
/// the total weight separating {a,d}|{b,c}.
inline bool wdvv_check(const MonodromyVector& v, int a, int b, int cc, int d) {
    if (cycle_dimension(v) != 1)
        throw PreconditionError("wdvv_check needs a 1-dimensional class");
    const int n = v.n();
    if (a == b || a == cc || a == d || b == cc || b == d || cc == d || a < 1 ||
        b < 1 || cc < 1 || d < 1 || a > n || b > n || cc > n || d > n)
        throw PreconditionError("wdvv_check needs four distinct marks");
    TropicalCycle c = tropicalize(v);
    auto separates = [&](const SplitTree& t, int x, int y, int z, int w) {
        MarkMask side = t.edges[0];
        MarkMask xy = (MarkMask{1} << (x - 1)) | (MarkMask{1} << (y - 1));
        MarkMask zw = (MarkMask{1} << (z - 1)) | (MarkMask{1} << (w - 1));
        return ((side & xy) == xy && (side & zw) == 0) ||
               ((side & zw) == zw && (side & xy) == 0);
    };
    Rational lhs(0), rhs(0);
    for (const auto& [tree, w] : c.weights) {
        if (separates(tree, a, b, cc, d)) lhs += w;
        if (separates(tree, a, d, b, cc)) rhs += w;
    }
    return lhs == rhs;
}

}  // namespace rspin
