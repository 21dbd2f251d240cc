#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "l21/blocks.hpp"
#include "l21/generators.hpp"
#include "l21/graph.hpp"
#include "l21/outerplanar.hpp"

using namespace l21;

TEST_CASE("extremal family structure") {
    Graph g = gen_gl(4);
    CHECK(g.n() == 10);
    CHECK(g.m() == 14);
    CHECK(g.max_degree() == 3);
    // u adjacent to x1 and y1, v adjacent to x4 and y4
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(0, 6));
    CHECK(g.has_edge(5, 4));
    CHECK(g.has_edge(5, 9));
    // rungs
    for (int i = 1; i <= 4; ++i) CHECK(g.has_edge(i, 5 + i));
    CHECK(g.connected_components().size() == 1);
    CHECK_NOTHROW(outer_embedding(g));

    auto names = gen_gl_names(4);
    CHECK(names[0] == "u");
    CHECK(names[5] == "v");
    CHECK(names[1] == "x1");
    CHECK(names[9] == "y4");

    CHECK_THROWS_AS(gen_gl(0), std::invalid_argument);
}

TEST_CASE("enumeration counts for small n") {
    CHECK(enumerate_2conn_outerplanar(3).size() == 1);
    CHECK(enumerate_2conn_outerplanar(4).size() == 2);
    CHECK(enumerate_2conn_outerplanar(5).size() == 2);
}

TEST_CASE("enumeration members are valid and pairwise distinct") {
    for (int n = 3; n <= 8; ++n) {
        std::set<std::string> seen;
        for (const Graph& g : enumerate_2conn_outerplanar(n)) {
            CHECK(g.n() == n);
            CHECK(g.max_degree() <= 3);
            CHECK_NOTHROW(outer_embedding(g));
            auto bd = block_decomposition(g);
            CHECK(bd.blocks.size() == 1);  // 2-connected
            CHECK(seen.insert(graph6_encode(g)).second);
        }
    }
}

TEST_CASE("random graphs respect the invariants") {
    for (int n = 1; n <= 30; ++n)
        for (std::uint64_t seed = 0; seed < 6; ++seed) {
            Graph g = random_outerplanar(n, seed);
            CHECK(g.n() == n);
            CHECK(g.max_degree() <= 3);
            CHECK(g.connected_components().size() == 1);
            for (const auto& block : block_decomposition(g).blocks)
                CHECK_NOTHROW(outer_embedding(induced_subgraph(g, block)));
        }
}

TEST_CASE("random generation is deterministic in the seed") {
    CHECK(random_outerplanar(20, 5) == random_outerplanar(20, 5));
    CHECK(!(random_outerplanar(20, 5) == random_outerplanar(20, 6)));
}
