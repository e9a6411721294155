#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rspin/monodromy.hpp"

namespace rspin {

/// Mark subsets are bitmasks over marks 1..n (mark i <-> bit i-1).
using MarkMask = std::uint32_t;

inline MarkMask full_mask(int n) { return (MarkMask{1} << n) - 1; }

inline int mask_size(MarkMask m) { return std::popcount(m); }

inline std::vector<int> mask_to_marks(MarkMask m) {
    std::vector<int> out;
    for (int i = 0; m != 0; ++i, m >>= 1)
        if (m & 1u) out.push_back(i + 1);
    return out;
}

inline MarkMask marks_to_mask(const std::vector<int>& marks) {
    MarkMask m = 0;
    for (int i : marks) m |= MarkMask{1} << (i - 1);
    return m;
}

/// Orders subsets by their sorted mark lists, lexicographically; this is
/// the ordering used for canonical tree and document output.
inline bool mask_lex_less(MarkMask a, MarkMask b) {
    while (a != 0 && b != 0) {
        int la = std::countr_zero(a), lb = std::countr_zero(b);
        if (la != lb) return la < lb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

/// The canonical representative of a two-sided split {I, I^c} is the side
/// not containing the largest mark n.
inline MarkMask canonical_split(MarkMask m, int n) {
    if (m & (MarkMask{1} << (n - 1))) return full_mask(n) & ~m;
    return m;
}

inline bool is_valid_split(MarkMask m, int n) {
    int s = mask_size(m);
    return s >= 2 && s <= n - 2 && (m & ~full_mask(n)) == 0;
}

/// Two splits lie on a common tree iff their canonical sides are nested or
/// disjoint (neither canonical side contains n, so the union is never full).
inline bool splits_compatible(MarkMask a, MarkMask b) {
    MarkMask c = a & b;
    return c == 0 || c == a || c == b;
}

/// An n-marked tree, stored as the laminar family of its edge splits.
/// Edges are canonical (n not contained) and sorted in mask_lex order.
struct SplitTree {
    int n = 0;
    std::vector<MarkMask> edges;

    int dim() const { return static_cast<int>(edges.size()); }
    bool operator==(const SplitTree&) const = default;
};

inline bool operator<(const SplitTree& a, const SplitTree& b) {
    size_t i = 0;
    for (; i < a.edges.size() && i < b.edges.size(); ++i) {
        if (a.edges[i] != b.edges[i])
            return mask_lex_less(a.edges[i], b.edges[i]);
    }
    return a.edges.size() < b.edges.size();
}

/// Builds a tree from edge splits, canonicalizing sides and ordering, and
/// rejecting non-laminar or duplicated splits.
inline SplitTree make_tree(int n, std::vector<MarkMask> raw_edges) {
    SplitTree t;
    t.n = n;
    for (MarkMask m : raw_edges) {
        MarkMask c = canonical_split(m, n);
        if (!is_valid_split(c, n))
            throw SplitError("split of size " + std::to_string(mask_size(c)) +
                             " is not a valid two-sided split for n = " +
                             std::to_string(n));
        t.edges.push_back(c);
    }
    std::sort(t.edges.begin(), t.edges.end(), mask_lex_less);
    for (size_t i = 0; i < t.edges.size(); ++i)
        for (size_t j = i + 1; j < t.edges.size(); ++j) {
            if (t.edges[i] == t.edges[j]) throw SplitError("duplicate split");
            if (!splits_compatible(t.edges[i], t.edges[j]))
                throw SplitError("splits are not laminar (no common tree)");
        }
    return t;
}

/// A vertex of a SplitTree: the marks attached directly to it, plus the
/// far-side mark set of each incident edge.
struct TreeVertex {
    std::vector<int> legs;           // original marks at this vertex
    std::vector<MarkMask> branches;  // marks beyond each incident edge
    int valence() const { return static_cast<int>(legs.size() + branches.size()); }
};

/// Decomposes a tree into its dim()+1 vertices. The root vertex is the one
/// carrying mark n; every canonical edge subset I contributes the vertex on
/// its own side of the edge.
inline std::vector<TreeVertex> tree_vertices(const SplitTree& t) {
    const int n = t.n;
    const size_t e = t.edges.size();
    // parent[i]: smallest edge strictly containing edge i, or -1 (root side)
    std::vector<int> parent(e, -1);
    for (size_t i = 0; i < e; ++i)
        for (size_t j = 0; j < e; ++j) {
            if (i == j) continue;
            MarkMask a = t.edges[i], b = t.edges[j];
            if ((a & b) == a && a != b) {
                if (parent[i] < 0 ||
                    mask_size(t.edges[static_cast<size_t>(parent[i])]) > mask_size(b))
                    parent[i] = static_cast<int>(j);
            }
        }

    std::vector<TreeVertex> verts(e + 1);  // verts[e] is the root vertex
    std::vector<MarkMask> child_union(e + 1, 0);
    for (size_t i = 0; i < e; ++i) {
        size_t p = parent[i] < 0 ? e : static_cast<size_t>(parent[i]);
        child_union[p] |= t.edges[i];
        // the vertex on the parent's side sees the marks inside edge i
        verts[p].branches.push_back(t.edges[i]);
        // the vertex inside edge i sees everything outside it
        verts[i].branches.push_back(full_mask(n) & ~t.edges[i]);
    }
    for (size_t i = 0; i < e; ++i)
        verts[i].legs = mask_to_marks(t.edges[i] & ~child_union[i]);
    verts[e].legs = mask_to_marks(full_mask(n) & ~child_union[e]);
    return verts;
}

inline int node_monodromy(const MonodromyVector& v, MarkMask side) {
    long long sum = 0;
    for (int i : mask_to_marks(side)) sum += v.marks[static_cast<size_t>(i - 1)];
    long long x = static_cast<long long>(mask_size(side) - 1) * (v.r + 1) - sum;
    return reduce_mod_r(x, v.r);
}

/// The local monodromy vector at a tree vertex: leg marks keep their m_i,
/// each edge flag carries the node monodromy of the near side.
inline MonodromyVector local_vector(const MonodromyVector& v, const TreeVertex& u) {
    std::vector<int> marks;
    marks.reserve(static_cast<size_t>(u.valence()));
    for (int i : u.legs) marks.push_back(v.marks[static_cast<size_t>(i - 1)]);
    for (MarkMask far : u.branches)
        marks.push_back(node_monodromy(v, full_mask(v.n()) & ~far));
    return validate(v.r, std::move(marks));
}

/// All canonical splits of [n], in mask_lex order.
inline std::vector<MarkMask> all_splits(int n) {
    std::vector<MarkMask> out;
    MarkMask top = MarkMask{1} << (n - 1);
    for (MarkMask m = 0; m <= full_mask(n); ++m)
        if (!(m & top) && is_valid_split(m, n)) out.push_back(m);
    std::sort(out.begin(), out.end(), mask_lex_less);
    return out;
}

namespace detail {
inline void extend_trees(int n, int d, const std::vector<MarkMask>& splits,
                         std::vector<MarkMask>& cur, size_t next,
                         std::vector<SplitTree>& out) {
    if (static_cast<int>(cur.size()) == d) {
        SplitTree t;
        t.n = n;
        t.edges = cur;
        out.push_back(std::move(t));
        return;
    }
    for (size_t i = next; i < splits.size(); ++i) {
        bool ok = true;
        for (MarkMask e : cur)
            if (!splits_compatible(e, splits[i])) {
                ok = false;
                break;
            }
        if (!ok) continue;
        cur.push_back(splits[i]);
        extend_trees(n, d, splits, cur, i + 1, out);
        cur.pop_back();
    }
}
}  // namespace detail

/// All d-edge trees on n marks, sorted (edges in mask_lex order guarantee
/// the trees come out in the canonical document order).
inline std::vector<SplitTree> all_trees(int n, int d) {
    std::vector<SplitTree> out;
    if (d == 0) {
        out.push_back(SplitTree{n, {}});
        return out;
    }
    auto splits = all_splits(n);
    std::vector<MarkMask> cur;
    detail::extend_trees(n, d, splits, cur, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace rspin
