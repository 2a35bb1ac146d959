#include "moonshine/trees.hpp"

#include <catch_amalgamated.hpp>

using namespace moonshine;
using namespace moonshine::trees;

TEST_CASE("brute-force enumeration, hand-checkable values") {
    const std::vector<Int> counts = brute_force_rooted_trees(4);
    REQUIRE(counts.size() == 4);
    CHECK(counts[0] == 1);  // single root
    CHECK(counts[1] == 1);  // root with one child
    CHECK(counts[2] == 2);
    CHECK(counts[3] == 4);  // path, star, two intermediate shapes
    CHECK_THROWS_AS(brute_force_rooted_trees(11), std::invalid_argument);
}

TEST_CASE("functional equation matches the enumeration oracle") {
    const TreeSeries t = solve_tree_equation(8);
    const std::vector<Int> oracle = brute_force_rooted_trees(8);
    for (int n = 1; n <= 8; ++n) {
        INFO("n = " << n);
        CHECK(t.count(n) == oracle[static_cast<size_t>(n - 1)]);
    }
    // frozen oracle values
    const std::vector<Int> expected{1, 1, 2, 4, 9, 20, 48, 115};
    CHECK(t.counts == expected);
}

TEST_CASE("integrality and nonnegativity to order 20") {
    const TreeSeries t = solve_tree_equation(20);
    for (int n = 1; n <= 20; ++n) CHECK(t.count(n) >= 1);
    CHECK(t.count(9) == 286);
    CHECK(t.count(10) == 719);
}

TEST_CASE("idempotence of the fixed point") {
    const TreeSeries t = solve_tree_equation(15);
    const TreeSeries again = resubstitute(t);
    CHECK(t.counts == again.counts);
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(solve_tree_equation(0), std::invalid_argument);
    CHECK_THROWS_AS(brute_force_rooted_trees(0), std::invalid_argument);
}
