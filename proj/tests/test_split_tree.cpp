#include "doctest.h"
#include "rspin/split_tree.hpp"

using namespace rspin;

TEST_CASE("mask helpers") {
    CHECK(full_mask(5) == 0b11111u);
    CHECK(mask_to_marks(0b01011u) == std::vector<int>{1, 2, 4});
    CHECK(marks_to_mask({1, 2, 4}) == 0b01011u);
    CHECK(mask_size(0b01011u) == 3);
}

TEST_CASE("canonical split avoids the last mark") {
    CHECK(canonical_split(marks_to_mask({3, 4, 5}), 5) == marks_to_mask({1, 2}));
    CHECK(canonical_split(marks_to_mask({1, 2}), 5) == marks_to_mask({1, 2}));
    CHECK(is_valid_split(marks_to_mask({1, 2}), 5));
    CHECK_FALSE(is_valid_split(marks_to_mask({1}), 5));
    CHECK_FALSE(is_valid_split(marks_to_mask({1, 2, 3, 4}), 5));
}

TEST_CASE("mask_lex orders by sorted mark lists") {
    CHECK(mask_lex_less(marks_to_mask({1, 2}), marks_to_mask({1, 3})));
    CHECK(mask_lex_less(marks_to_mask({1, 2}), marks_to_mask({1, 2, 3})));
    CHECK(mask_lex_less(marks_to_mask({1, 2, 4}), marks_to_mask({1, 3})));
    CHECK_FALSE(mask_lex_less(marks_to_mask({2, 3}), marks_to_mask({1, 4})));
}

TEST_CASE("make_tree canonicalizes and rejects bad input") {
    auto t = make_tree(5, {marks_to_mask({3, 4, 5}), marks_to_mask({4, 5})});
    CHECK(t.edges == std::vector<MarkMask>{marks_to_mask({1, 2}), marks_to_mask({1, 2, 3})});
    CHECK_THROWS_AS(make_tree(5, {marks_to_mask({1, 2}), marks_to_mask({2, 3})}),
                    SplitError);  // not laminar
    CHECK_THROWS_AS(make_tree(5, {marks_to_mask({1, 2}), marks_to_mask({3, 4, 5})}),
                    SplitError);  // same split twice
    CHECK_THROWS_AS(make_tree(5, {marks_to_mask({1})}), SplitError);
}

TEST_CASE("split and tree enumeration counts") {
    CHECK(all_splits(4).size() == 3);
    CHECK(all_splits(5).size() == 10);
    CHECK(all_splits(6).size() == 25);
    CHECK(all_trees(5, 0).size() == 1);
    CHECK(all_trees(5, 1).size() == 10);
    CHECK(all_trees(5, 2).size() == 15);   // trivalent trees on 5 marks
    CHECK(all_trees(6, 3).size() == 105);  // trivalent trees on 6 marks
    auto trees = all_trees(5, 2);
    CHECK(std::is_sorted(trees.begin(), trees.end()));
}

TEST_CASE("vertex decomposition of a one-edge tree") {
    auto t = make_tree(5, {marks_to_mask({1, 2})});
    auto verts = tree_vertices(t);
    REQUIRE(verts.size() == 2);
    CHECK(verts[0].legs == std::vector<int>{1, 2});
    CHECK(verts[0].branches == std::vector<MarkMask>{marks_to_mask({3, 4, 5})});
    CHECK(verts[1].legs == std::vector<int>{3, 4, 5});
    CHECK(verts[1].branches == std::vector<MarkMask>{marks_to_mask({1, 2})});
}

TEST_CASE("vertex decomposition of a caterpillar") {
    auto t = make_tree(6, {marks_to_mask({1, 2}), marks_to_mask({1, 2, 3}),
                           marks_to_mask({1, 2, 3, 4})});
    auto verts = tree_vertices(t);
    REQUIRE(verts.size() == 4);
    int total_valence = 0;
    MarkMask legs_seen = 0;
    for (const auto& u : verts) {
        CHECK(u.valence() == 3);
        total_valence += u.valence();
        legs_seen |= marks_to_mask(u.legs);
    }
    CHECK(total_valence == 6 + 2 * 3);
    CHECK(legs_seen == full_mask(6));
}

TEST_CASE("local vectors of the running example") {
    auto v = validate(10, {3, 4, 5, 5, 6});
    auto t = make_tree(5, {marks_to_mask({1, 2})});
    auto verts = tree_vertices(t);
    CHECK(local_vector(v, verts[0]).marks == std::vector<int>{3, 4, 4});
    CHECK(local_vector(v, verts[1]).marks == std::vector<int>{5, 5, 6, 6});
}
