#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "l21/graph.hpp"
#include "l21/labeling.hpp"

using namespace l21;

namespace {

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Labeling mk(std::vector<int> labels) {
    Labeling f;
    f.labels = std::move(labels);
    return f;
}

}  // namespace

TEST_CASE("verify finds adjacency and distance-2 violations") {
    Graph p2 = path_graph(2);
    auto vio = verify(p2, mk({0, 1}));
    REQUIRE(vio.size() == 1);
    CHECK(vio[0].u == 0);
    CHECK(vio[0].v == 1);
    CHECK(vio[0].distance == 1);

    Graph p3 = path_graph(3);
    CHECK(verify(p3, mk({0, 3, 0})).size() == 1);
    CHECK(verify(p3, mk({0, 2, 4})).empty());
    CHECK(verify(p3, mk({0, 3, 5})).empty());

    CHECK_THROWS_AS(verify(p3, mk({0, 2})), std::invalid_argument);
    CHECK_THROWS_AS(verify(p3, mk({0, kAbsent, 4})), std::invalid_argument);
    CHECK(verify(p3, mk({0, 7, 0})).size() == 1);  // 0,0 at distance 2
}

TEST_CASE("labeling span and total") {
    Labeling f = mk({2, kAbsent, 5});
    CHECK(!f.total());
    CHECK(f.span() == 3);
    Labeling g = mk({0, 2, 6});
    CHECK(g.total());
    CHECK(g.span() == 6);
}

TEST_CASE("available neighbor labels") {
    CHECK(available_neighbor_labels(1) == std::vector<int>{4, 6});
    CHECK(available_neighbor_labels(3) == std::vector<int>{0, 6});
    CHECK(available_neighbor_labels(5) == std::vector<int>{0, 2});
    CHECK(available_neighbor_labels(0) == std::vector<int>{3, 5});
    CHECK(available_neighbor_labels(2) == std::vector<int>{5});
    CHECK(available_neighbor_labels(4) == std::vector<int>{1});
    CHECK(available_neighbor_labels(6) == std::vector<int>{1, 3});
    for (int x = 0; x <= 6; ++x) {
        auto s = available_neighbor_labels(x);
        if (x % 2 == 1) CHECK(s.size() == 2);
        for (int c : s) {
            CHECK(c % 2 != x % 2);
            CHECK(std::abs(c - x) >= 2);
        }
    }
    // cardinalities: odd labels always 2; evens 2 at the ends, 1 in the middle
    CHECK(available_neighbor_labels(0).size() == 2);
    CHECK(available_neighbor_labels(6).size() == 2);
    CHECK(available_neighbor_labels(2).size() == 1);
    CHECK(available_neighbor_labels(4).size() == 1);
}

TEST_CASE("triangle attach options") {
    CHECK(triangle_attach_options({0, 2, 4, 0}) == std::vector<int>{6});
    CHECK(triangle_attach_options({0, 2, 4, 6}).empty());
    CHECK(triangle_attach_options({6, 0, 2, 4}) == std::vector<int>{5});
    CHECK(triangle_attach_options({kAbsent, 0, 2, kAbsent}) == std::vector<int>{4, 5, 6});
}

TEST_CASE("square attach options") {
    CHECK(square_attach_options({4, 1, 3, 0}).empty());
    auto s1 = square_attach_options({0, 2, 4, 0});
    CHECK(std::find(s1.begin(), s1.end(), std::pair<int, int>{5, 1}) != s1.end());
    CHECK(std::find(s1.begin(), s1.end(), std::pair<int, int>{6, 1}) != s1.end());
    auto s2 = square_attach_options({0, 2, 4, 6});
    CHECK(std::find(s2.begin(), s2.end(), std::pair<int, int>{5, 1}) != s2.end());
    for (auto [c1, c2] : s2) {
        CHECK(std::abs(c1 - c2) >= 2);
        CHECK(std::abs(c1 - 2) >= 2);
        CHECK(std::abs(c2 - 4) >= 2);
        CHECK(c1 != 0);
        CHECK(c1 != 4);
        CHECK(c2 != 6);
        CHECK(c2 != 2);
    }
}

TEST_CASE("edge attachability and the bad windows") {
    CHECK(edge_attachable({0, 2, 4, 0}));
    for (Window4 w : std::vector<Window4>{{4, 1, 3, 0}, {0, 2, 4, 6}, {4, 1, 6, 3}, {5, 1, 4, 6},
                                          {6, 1, 4, 2}}) {
        CHECK(!edge_attachable(w));
    }
}

TEST_CASE("path extendability") {
    CHECK(is_path_extendable({kAbsent, 0, 2, 4, 0, kAbsent}));
    CHECK(is_path_extendable({3, 0, 2, 4, 0, 2}));
    CHECK(!is_path_extendable({kAbsent, 0, 2, 4, 6, kAbsent}));  // contains bad window
    CHECK(!is_path_extendable({kAbsent, 2, 5, 3, 6, kAbsent}));  // window (2,5,3,6) fails
    CHECK(!is_path_extendable({kAbsent, 0, 1, 4, 6, kAbsent}));  // invalid adjacency
    CHECK(!is_path_extendable({kAbsent, 0, 2, 0, 6, kAbsent}));  // distance-2 clash
    CHECK_THROWS_AS(is_path_extendable({0, 2, 4}), std::invalid_argument);
    CHECK_THROWS_AS(is_path_extendable({0, kAbsent, 4, 6}), std::invalid_argument);
}

TEST_CASE("cycle extendability") {
    // hexagon with the repeating pattern is fully attachable
    CHECK(is_cycle_extendable({0, 2, 4, 0, 2, 4}, 1, 0));
    // C4 labeled 0,2,4,6: triangle options on edge (2,4) are empty
    CHECK(!is_cycle_extendable({0, 2, 4, 6}, 1, 0));
    CHECK(!is_cycle_extendable({0, 2, 4, 1}, 1, 0));
    // type 2 exempts the two edges incident to the start vertex
    CHECK(is_cycle_extendable({4, 6, 0, 2}, 2, 0));
    CHECK(is_cycle_extendable({3, 6, 4, 0, 6, 4, 0}, 1, 0));
    // invalid labelings are never extendable
    CHECK(!is_cycle_extendable({0, 2, 0, 2}, 1, 0));
    CHECK(!is_cycle_extendable({0, 1, 4, 6}, 2, 0));
}

TEST_CASE("apply pattern") {
    CHECK(apply_pattern(5, {0, 2, 4}) == std::vector<int>{0, 2, 4, 0, 2});
    CHECK(apply_pattern(4, {6, 4, 0}) == std::vector<int>{6, 4, 0, 6});
    CHECK_THROWS_AS(apply_pattern(0, {6, 4, 0}), std::invalid_argument);
    CHECK_THROWS_AS(apply_pattern(3, {0, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(apply_pattern(3, {0, 2, 2}), std::invalid_argument);
}
