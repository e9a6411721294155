#pragma once

#include <atomic>
#include <chrono>
#include <string>
#include <thread>
#include <vector>

#include "rspin/chambers.hpp"
#include "rspin/invariants.hpp"
#include "rspin/tropical.hpp"

namespace rspin {

struct UnknownSuite : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SuiteResult {
    std::string name;
    long long cases = 0;
    long long failures = 0;
    std::vector<std::string> reproducers;  // inputs of failed cases
    double seconds = 0.0;
};

struct VerifyOptions {
    int n_max = 6;
    int r_max = 8;
    int jobs = 1;
};

namespace detail {

/// All valid vectors for (n, r) with the given total, descending marks.
inline std::vector<MonodromyVector> vectors_with_total(int n, int r, long long total) {
    std::vector<MonodromyVector> out;
    std::vector<int> marks(static_cast<size_t>(n));
    auto rec = [&](auto&& self, int pos, int hi, long long left) -> void {
        if (pos == n) {
            if (left == 0) out.push_back(MonodromyVector{r, marks});
            return;
        }
        int remaining = n - pos - 1;
        for (int m = static_cast<int>(std::min<long long>(hi, left - remaining)); m >= 1;
             --m) {
            if (static_cast<long long>(m) * (remaining + 1) < left) break;
            marks[static_cast<size_t>(pos)] = m;
            self(self, pos + 1, m, left - m);
        }
    };
    rec(rec, 0, r, total);
    return out;
}

/// Valid vectors whose tropicalization has the requested dimension.
inline std::vector<MonodromyVector> vectors_of_dimension(int n, int r, int d) {
    long long total = static_cast<long long>(n - 2) * (r + 1) -
                      static_cast<long long>(d) * r;
    if (total < n || total > static_cast<long long>(n) * r) return {};
    return vectors_with_total(n, r, total);
}

inline std::vector<MonodromyVector> dimension_sweep(int n_min, int n_max, int r_max,
                                                    int d) {
    std::vector<MonodromyVector> out;
    for (int n = n_min; n <= n_max; ++n)
        for (int r = 2; r <= r_max; ++r)
            for (auto& v : vectors_of_dimension(n, r, d)) out.push_back(std::move(v));
    return out;
}

template <typename Fn>
void parallel_for(long long count, int jobs, Fn&& body) {
    if (jobs <= 1 || count < 2) {
        for (long long i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<long long> next{0};
    auto worker = [&] {
        for (long long i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
    };
    std::vector<std::thread> pool;
    int k = static_cast<int>(std::min<long long>(jobs, count));
    pool.reserve(static_cast<size_t>(k));
    for (int t = 0; t < k; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

inline std::string describe(const MonodromyVector& v) {
    std::string s = "r=" + std::to_string(v.r) + ";m=";
    for (size_t i = 0; i < v.marks.size(); ++i)
        s += (i ? "," : "") + std::to_string(v.marks[i]);
    return s;
}

/// Runs `check` over the work list (check returns true on pass), collecting
/// reproducer strings for failures in work-list order.
template <typename T, typename Check, typename Describe>
SuiteResult run_suite_over(std::string name, int jobs, const std::vector<T>& work,
                           Check&& check, Describe&& describe_case) {
    SuiteResult res;
    res.name = std::move(name);
    res.cases = static_cast<long long>(work.size());
    std::vector<char> failed(work.size(), 0);
    auto t0 = std::chrono::steady_clock::now();
    parallel_for(res.cases, jobs, [&](long long i) {
        if (!check(work[static_cast<size_t>(i)])) failed[static_cast<size_t>(i)] = 1;
    });
    for (size_t i = 0; i < work.size(); ++i)
        if (failed[i]) {
            ++res.failures;
            if (res.reproducers.size() < 20) res.reproducers.push_back(describe_case(work[i]));
        }
    res.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

template <typename Check>
SuiteResult vector_suite(std::string name, const VerifyOptions& opt,
                         std::vector<MonodromyVector> work, Check&& check) {
    return run_suite_over(std::move(name), opt.jobs, work, std::forward<Check>(check),
                          [](const MonodromyVector& v) { return describe(v); });
}

}  // namespace detail

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "base-cases", "formula-vs-oracle", "k-independence", "balancing",
        "face-balancing", "wdvv", "monotonicity", "positivity",
        "vanishing", "integrality", "chambers"};
    return names;
}

/// Runs one verification suite over the (n, r) box of `opt`. Every suite
/// reruns an identity of the theory; zero failures certifies it.
inline SuiteResult run_suite(const std::string& name, const VerifyOptions& opt) {
    using detail::dimension_sweep;
    using detail::vector_suite;

    if (name == "base-cases") {
        // n = 3 is always 1; n = 4 closed formula equals the min rule
        std::vector<MonodromyVector> work = dimension_sweep(3, std::min(opt.n_max, 4),
                                                            opt.r_max, 0);
        return vector_suite(name, opt, std::move(work), [](const MonodromyVector& v) {
            if (v.n() == 3) return closed_formula(v) == 1 && three_point(v) == 1;
            return closed_formula(v) == four_point(v);
        });
    }
    if (name == "formula-vs-oracle") {
        // the subset-sum engine against the independent recursion engine
        std::vector<MonodromyVector> work = dimension_sweep(4, opt.n_max, opt.r_max, 0);
        return vector_suite(name, opt, std::move(work), [](const MonodromyVector& v) {
            return closed_formula(v) == recursion_oracle(v);
        });
    }
    if (name == "k-independence") {
        // the wall-crossing identity for every admissible (i, j), with the
        // same step value for every spectator k
        std::vector<MonodromyVector> work = dimension_sweep(4, opt.n_max, opt.r_max, 0);
        return vector_suite(name, opt, std::move(work), [](const MonodromyVector& v) {
            const int n = v.n();
            for (int i = 0; i < n; ++i) {
                if (v.marks[static_cast<size_t>(i)] <= 1) continue;
                for (int j = 0; j < n; ++j) {
                    if (j == i || v.marks[static_cast<size_t>(j)] >= v.r) continue;
                    MonodromyVector b = v;
                    --b.marks[static_cast<size_t>(i)];
                    ++b.marks[static_cast<size_t>(j)];
                    Rational gap = closed_formula(v) - closed_formula(b);
                    for (int k = 0; k < n; ++k) {
                        if (k == i || k == j) continue;
                        if (gap != Rational(n - 3) * t_term(v, i, j, k, closed_formula))
                            return false;
                    }
                }
            }
            return true;
        });
    }
    if (name == "balancing") {
        // every 1-dimensional tropicalized class balances at the origin,
        // at every anchor
        std::vector<MonodromyVector> work = dimension_sweep(4, opt.n_max, opt.r_max, 1);
        return vector_suite(name, opt, std::move(work), [](const MonodromyVector& v) {
            TropicalCycle c = tropicalize(v);
            for (int k = 1; k <= v.n(); ++k)
                if (!check_balancing_origin(c, k).balanced) return false;
            return true;
        });
    }
    if (name == "face-balancing") {
        // every 2-dimensional class balances along every ray of its support
        std::vector<MonodromyVector> work = dimension_sweep(5, opt.n_max, opt.r_max, 2);
        return vector_suite(name, opt, std::move(work), [](const MonodromyVector& v) {
            TropicalCycle c = tropicalize(v);
            for (MarkMask e : all_splits(v.n())) {
                SplitTree tau{v.n(), {e}};
                bool supported = false;
                for (const auto& [tree, w] : c.weights)
                    if (w != 0 && std::find(tree.edges.begin(), tree.edges.end(), e) !=
                                      tree.edges.end()) {
                        supported = true;
                        break;
                    }
                if (!supported) continue;
                if (!check_balancing_face(c, tau).balanced) return false;
                if (!check_balancing_generic(c, tau).balanced) return false;
            }
            return true;
        });
    }
    if (name == "wdvv") {
        // the four-point exchange identity for 1-dimensional classes
        std::vector<MonodromyVector> work = dimension_sweep(4, opt.n_max, opt.r_max, 1);
        return vector_suite(name, opt, std::move(work), [](const MonodromyVector& v) {
            const int n = v.n();
            for (int a = 1; a <= n; ++a)
                for (int b = a + 1; b <= n; ++b)
                    for (int cc = b + 1; cc <= n; ++cc)
                        for (int d = cc + 1; d <= n; ++d)
                            if (!wdvv_check(v, a, b, cc, d)) return false;
            return true;
        });
    }
    if (name == "monotonicity") {
        // the invariant weakly reverses the dominance order, and the greedy
        // witness chain is a valid path of cookie moves
        struct Pair {
            MonodromyVector a, b;
        };
        std::vector<Pair> work;
        for (int n = 4; n <= opt.n_max; ++n)
            for (int r = 2; r <= opt.r_max; ++r) {
                auto vecs = numerical_vectors_sorted(n, r);
                for (size_t x = 0; x < vecs.size(); ++x)
                    for (size_t y = x + 1; y < vecs.size(); ++y) {
                        Dominance d = dominance_compare(vecs[x], vecs[y]);
                        if (d == Dominance::less) work.push_back({vecs[x], vecs[y]});
                        else if (d == Dominance::greater)
                            work.push_back({vecs[y], vecs[x]});
                    }
            }
        return detail::run_suite_over(
            name, opt.jobs, work,
            [](const Pair& p) {
                if (closed_formula(p.a) < closed_formula(p.b)) return false;
                auto w = dominance_chain(p.a, p.b);
                for (size_t t = 0; t + 1 < w.chain.size(); ++t) {
                    if (w.chain[t].total() != w.chain[t + 1].total()) return false;
                    if (dominance_compare(w.chain[t + 1], w.chain[t]) != Dominance::less)
                        return false;
                }
                return w.chain.back().marks == detail::sorted_desc(p.a.marks);
            },
            [](const Pair& p) {
                return detail::describe(p.a) + " vs " + detail::describe(p.b);
            });
    }
    if (name == "positivity") {
        // w_r > 0 exactly when every entry lies in [n-2, r-1]; nonzero
        // values are bounded below by the extremal value
        std::vector<MonodromyVector> work = dimension_sweep(4, opt.n_max, opt.r_max, 0);
        return vector_suite(name, opt, std::move(work), [](const MonodromyVector& v) {
            bool window = true;
            for (int m : v.marks)
                if (m < v.n() - 2 || m > v.r - 1) window = false;
            Rational w = closed_formula(v);
            if (window) return w >= extremal_value(v.n(), v.r);
            return w == 0;
        });
    }
    if (name == "vanishing") {
        // the classified reason (Ramond / low insertion) forces zero
        std::vector<MonodromyVector> work = dimension_sweep(4, opt.n_max, opt.r_max, 0);
        return vector_suite(name, opt, std::move(work), [](const MonodromyVector& v) {
            switch (vanishes(v)) {
                case Vanishing::nonzero:
                    return closed_formula(v) != 0;
                case Vanishing::ramond:
                case Vanishing::low_insertion:
                    return closed_formula(v) == 0;
            }
            return false;
        });
    }
    if (name == "integrality") {
        // w_r * r^{n-3} / (n-3)! is a nonnegative integer
        std::vector<MonodromyVector> work = dimension_sweep(4, opt.n_max, opt.r_max, 0);
        return vector_suite(name, opt, std::move(work), [](const MonodromyVector& v) {
            try {
                normalized_integer(v);
                return true;
            } catch (const IntegralityViolation&) {
                return false;
            }
        });
    }
    if (name == "chambers") {
        // every activation pattern's polynomial matches 2 r^{n-3} w_r on
        // all of its lattice points, at the degree bound
        std::vector<int> work;
        for (int n = 4; n <= opt.n_max; ++n) work.push_back(n);
        const int r_max = opt.r_max;
        return detail::run_suite_over(
            name, opt.jobs, work,
            [r_max](int n) {
                for (const auto& [pattern, info] : chamber_scan(n, r_max)) {
                    if (!info.verified) return false;
                    if (info.chamber.poly.total_degree() > n - 3) return false;
                }
                return true;
            },
            [](int n) { return "n=" + std::to_string(n); });
    }
    throw UnknownSuite("unknown suite: " + name);
}

/// The full machine-verification battery, one result per suite.
inline std::vector<SuiteResult> run_verification(const VerifyOptions& opt) {
    std::vector<SuiteResult> out;
    for (const std::string& name : suite_names()) out.push_back(run_suite(name, opt));
    return out;
}

}  // namespace rspin
