#include "doctest.h"
#include "rspin/monodromy.hpp"

using namespace rspin;

TEST_CASE("validate accepts only vectors satisfying the divisibility rule") {
    CHECK_NOTHROW(validate(10, {3, 4, 5, 5, 6}));
    CHECK_NOTHROW(validate(2, {1, 1, 1}));
    CHECK_THROWS_AS(validate(10, {3, 4, 5, 5, 5}), DivisibilityError);
    CHECK_THROWS_AS(validate(10, {3, 4, 11, 5, 6}), RangeError);
    CHECK_THROWS_AS(validate(10, {0, 4, 5, 5, 6}), RangeError);
    CHECK_THROWS_AS(validate(10, {3, 4}), SizeError);
    CHECK_THROWS_AS(validate(1, {1, 1, 1}), SizeError);
}

TEST_CASE("rank and dimension split n-3 between them") {
    auto v = validate(10, {3, 4, 5, 5, 6});  // sum 23, n = 5
    CHECK(witten_rank(v) == 1);
    CHECK(cycle_dimension(v) == 1);
    CHECK_FALSE(is_numerical(v));

    auto w = validate(10, {5, 5, 6, 6, 5, 7});  // sum 34; numerical would be 44
    CHECK_FALSE(is_numerical(w));
    CHECK(cycle_dimension(w) == 1);
    auto u = validate(10, {5, 5, 6, 6});  // sum 22 = 2 * 11
    CHECK(is_numerical(u));
    CHECK(cycle_dimension(u) == 0);
    CHECK(witten_rank(u) == u.n() - 3);
}

TEST_CASE("reduce_mod_r lands in {1..r}") {
    CHECK(reduce_mod_r(0, 10) == 10);
    CHECK(reduce_mod_r(10, 10) == 10);
    CHECK(reduce_mod_r(11, 10) == 1);
    CHECK(reduce_mod_r(-3, 10) == 7);
}

TEST_CASE("node monodromies of the running example") {
    auto v = validate(10, {3, 4, 5, 5, 6});
    CHECK(node_monodromies(v, {2, 3, 4}) == std::pair<int, int>{8, 2});
    CHECK(node_monodromies(v, {1, 2}) == std::pair<int, int>{4, 6});
    CHECK(node_monodromies(v, {1, 2, 3}) == std::pair<int, int>{10, 10});
    SUBCASE("the two sides always pair to 0 mod r") {
        for (auto J : std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 5}, {1, 4, 5}}) {
            auto [a, b] = node_monodromies(v, J);
            CHECK((a + b) % v.r == 0);
        }
    }
    CHECK_THROWS_AS(node_monodromies(v, {1}), SplitError);
    CHECK_THROWS_AS(node_monodromies(v, {1, 2, 3, 4}), SplitError);
}

TEST_CASE("neighbors moves one unit and stays valid") {
    auto v = validate(10, {3, 4, 5, 5, 6});
    for (const auto& w : neighbors(v)) {
        CHECK(w.total() == v.total());
        int diff = 0;
        for (int i = 0; i < v.n(); ++i) diff += std::abs(w.marks[i] - v.marks[i]);
        CHECK(diff == 2);
    }
}

TEST_CASE("dominance compare on descending prefix sums") {
    auto balanced = validate(7, {6, 6, 6, 3, 3});
    auto spread = validate(7, {6, 6, 5, 4, 3});
    CHECK(dominance_compare(spread, balanced) == Dominance::less);
    CHECK(dominance_compare(balanced, spread) == Dominance::greater);
    CHECK(dominance_compare(balanced, balanced) == Dominance::equal);

    auto skew = validate(7, {7, 5, 4, 4, 4});
    CHECK(dominance_compare(skew, balanced) == Dominance::incomparable);

    CHECK_THROWS_AS(dominance_compare(balanced, validate(7, {6, 6, 2, 2, 1})),
                    IncompatibleError);  // different total
    CHECK_THROWS_AS(dominance_compare(balanced, validate(21, {6, 6, 6, 3, 3})),
                    IncompatibleError);  // same marks, but r differs
}

TEST_CASE("dominance chain is a path of single cookie moves") {
    auto a = validate(7, {5, 5, 5, 5, 4});
    auto b = validate(7, {7, 7, 7, 2, 1});
    REQUIRE(dominance_compare(a, b) == Dominance::less);
    auto w = dominance_chain(a, b);
    CHECK(w.chain.front().marks == std::vector<int>{7, 7, 7, 2, 1});
    CHECK(w.chain.back().marks == std::vector<int>{5, 5, 5, 5, 4});
    CHECK(w.moves.size() + 1 == w.chain.size());
    for (size_t t = 0; t + 1 < w.chain.size(); ++t) {
        const auto& cur = w.chain[t].marks;
        const auto& nxt = w.chain[t + 1].marks;
        CHECK(std::is_sorted(cur.rbegin(), cur.rend()));
        CHECK(dominance_compare(w.chain[t + 1], w.chain[t]) == Dominance::less);
        long long s1 = 0, s2 = 0;
        for (size_t i = 0; i < cur.size(); ++i) {
            s1 += cur[i];
            s2 += nxt[i];
        }
        CHECK(s1 == s2);
    }
    CHECK_THROWS_AS(dominance_chain(b, a), NotComparableError);
}
