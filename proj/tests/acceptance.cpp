// Acceptance battery: one pass/fail line per criterion, exit 1 on any
// failure. All checks are exact rational identities; the printed bounds
// (n, r ranges) are the pinned gates.
#include <algorithm>
#include <bit>
#include <cstdio>
#include <iterator>
#include <string>

#include "rspin/cycle_io.hpp"
#include "rspin/verify.hpp"

using namespace rspin;

namespace {

int g_failures = 0;

void report(int index, const std::string& label, bool pass) {
    std::printf("criterion %02d %-28s %s\n", index, label.c_str(),
                pass ? "PASS" : "FAIL");
    if (!pass) ++g_failures;
}

bool criterion_base_cases() {
    for (int r = 2; r <= 50; ++r)
        for (const auto& v : detail::vectors_of_dimension(3, r, 0))
            if (closed_formula(v) != 1) return false;
    for (int r = 2; r <= 20; ++r)
        for (const auto& v : detail::vectors_of_dimension(4, r, 0))
            if (closed_formula(v) != four_point(v)) return false;
    return true;
}

bool criterion_worked_example() {
    auto v = validate(10, {3, 4, 5, 5, 6});
    auto c = tropicalize(v);
    const std::pair<std::vector<int>, int> scaled[] = {
        {{1, 2}, 4},    {{1, 3}, 3},    {{1, 4}, 3},    {{2, 3}, 2},    {{2, 4}, 2},
        {{3, 4}, 1},    {{1, 2, 3}, 0}, {{1, 2, 4}, 0}, {{1, 3, 4}, 1}, {{2, 3, 4}, 2}};
    if (c.weights.size() != 10) return false;
    for (const auto& [marks, w10] : scaled)
        if (c.weight(make_tree(5, {marks_to_mask(marks)})) * 10 != w10) return false;
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
            if (boomerang(c, 5, i, j) != Rational(2, 5)) return false;
    for (int i = 2; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j)
            if (boomerang(c, 1, i, j) != Rational(7, 10)) return false;
    // the boomerang relation B^5_{1,2} = B^5_{3,4}, both sides 2/5
    return boomerang(c, 5, 1, 2) == Rational(2, 5) &&
           boomerang(c, 5, 3, 4) == Rational(2, 5);
}

bool criterion_divisor_fan() {
    TropicalCycle c;
    c.n = 5;
    c.dim = 1;
    c.weights[make_tree(5, {marks_to_mask({1, 2})})] = -1;
    c.weights[make_tree(5, {marks_to_mask({3, 4})})] = 1;
    c.weights[make_tree(5, {marks_to_mask({1, 2, 3})})] = 1;
    c.weights[make_tree(5, {marks_to_mask({1, 2, 4})})] = 1;
    if (!check_balancing_origin(c, 5).balanced) return false;
    FanVector probe(5, 5);
    for (auto [i, j] : probe.pairs)
        if (boomerang(c, 5, i, j) != 1) return false;
    return true;
}

bool criterion_oracle_equivalence() {
    for (int n = 4; n <= 7; ++n)
        for (int r = 2; r <= 10; ++r)
            for (const auto& v : detail::vectors_of_dimension(n, r, 0))
                if (closed_formula(v) != recursion_oracle(v)) return false;
    return true;
}

bool criterion_balancing() {
    for (int n = 4; n <= 7; ++n)
        for (int r = 2; r <= 9; ++r)
            for (const auto& v : detail::vectors_of_dimension(n, r, 1)) {
                TropicalCycle c = tropicalize(v);
                for (int k = 1; k <= n; ++k)
                    if (!check_balancing_origin(c, k).balanced) return false;
            }
    for (int n = 5; n <= 6; ++n)
        for (int r = 2; r <= 8; ++r)
            for (const auto& v : detail::vectors_of_dimension(n, r, 2)) {
                TropicalCycle c = tropicalize(v);
                for (MarkMask e : all_splits(n)) {
                    SplitTree tau{n, {e}};
                    bool supported = false;
                    for (const auto& [tree, w] : c.weights)
                        if (w != 0 && std::find(tree.edges.begin(), tree.edges.end(),
                                                e) != tree.edges.end()) {
                            supported = true;
                            break;
                        }
                    if (!supported) continue;
                    if (!check_balancing_face(c, tau).balanced) return false;
                }
            }
    return true;
}

bool suite_clean(const char* name, int n_max, int r_max) {
    VerifyOptions opt;
    opt.n_max = n_max;
    opt.r_max = r_max;
    opt.jobs = 4;
    return run_suite(name, opt).failures == 0;
}

bool criterion_recursion() {
    return suite_clean("k-independence", 6, 9);
}

bool criterion_order_structure() {
    return suite_clean("monotonicity", 6, 9) && suite_clean("positivity", 6, 9) &&
           suite_clean("vanishing", 6, 9);
}

bool criterion_integrality() {
    if (!suite_clean("integrality", 6, 9)) return false;
    if (closed_formula(validate(7, {3, 4, 5, 6, 6})) != Rational(2, 49)) return false;
    if (closed_formula(validate(5, {3, 3, 4, 4, 4})) != Rational(2, 25)) return false;
    // normalized integer is exactly 1 on the extremal vectors m_1 = n-2,
    // all entries in [n-2, r-1]
    for (int n = 4; n <= 6; ++n)
        for (int r = 2; r <= 9; ++r)
            for (const auto& v : detail::vectors_of_dimension(n, r, 0)) {
                bool window = true, touches = false;
                for (int m : v.marks) {
                    if (m < n - 2 || m > r - 1) window = false;
                    if (m == n - 2) touches = true;
                }
                if (window && touches && normalized_integer(v) != 1) return false;
            }
    return true;
}

bool criterion_spot_value() {
    auto v = validate(8, {4, 5, 5, 6, 7});
    return closed_formula(v) == Rational(1, 16) &&
           recursion_oracle(v) == Rational(1, 16);
}

bool criterion_chambers() {
    for (int n = 4; n <= 6; ++n) {
        auto chambers = chamber_scan(n, 9);
        for (const auto& [pattern, info] : chambers) {
            if (!info.verified) return false;
            if (info.chamber.poly.total_degree() > n - 3) return false;
        }
        // adjacent pattern pairs: differ by activating exactly one wall set
        for (auto it = chambers.begin(); it != chambers.end(); ++it)
            for (auto jt = std::next(it); jt != chambers.end(); ++jt) {
                const auto& a = it->first.active;
                const auto& b = jt->first.active;
                if (a.size() + 1 != b.size()) continue;
                if (!std::includes(b.begin(), b.end(), a.begin(), a.end())) continue;
                std::vector<std::uint32_t> extra;
                std::set_difference(b.begin(), b.end(), a.begin(), a.end(),
                                    std::back_inserter(extra));
                int size = std::popcount(extra[0]);
                if (size < 2 || size > n - 2) continue;
                if (!strip_agreement(Wall{n, extra[0]}, it->second.chamber,
                                     jt->second.chamber, 9))
                    return false;
            }
    }
    return true;
}

bool criterion_unit_fan() {
    for (int n = 4; n <= 6; ++n) {
        TropicalCycle c = unit_weight_fan(n);
        for (const SplitTree& tau : all_trees(n, n - 4))
            if (!check_balancing_generic(c, tau).balanced) return false;
    }
    return true;
}

}  // namespace

int main() {
    report(1, "base-cases", criterion_base_cases());
    report(2, "worked-example", criterion_worked_example());
    report(3, "divisor-fan", criterion_divisor_fan());
    report(4, "oracle-equivalence", criterion_oracle_equivalence());
    report(5, "balancing", criterion_balancing());
    report(6, "recursion-k-independence", criterion_recursion());
    report(7, "order-structure", criterion_order_structure());
    report(8, "integrality-extremal", criterion_integrality());
    report(9, "spot-value", criterion_spot_value());
    report(10, "chambers", criterion_chambers());
    report(11, "unit-weight-fan", criterion_unit_fan());
    return g_failures == 0 ? 0 : 1;
}
