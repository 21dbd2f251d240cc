#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "l21/blocks.hpp"
#include "l21/graph.hpp"
#include "l21/outerplanar.hpp"

using namespace l21;

namespace {

Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

}  // namespace

TEST_CASE("graph basics") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 1);
    CHECK(g.n() == 4);
    CHECK(g.m() == 2);
    CHECK(g.has_edge(1, 0));
    CHECK(!g.has_edge(0, 2));
    CHECK(g.degree(1) == 2);
    CHECK(g.max_degree() == 2);
    CHECK(g.neighbors(1) == std::vector<int>{0, 2});
    CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 4), std::out_of_range);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("connected components") {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(3, 4);
    auto comps = g.connected_components();
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<int>{0, 1});
    CHECK(comps[1] == std::vector<int>{2});
    CHECK(comps[2] == std::vector<int>{3, 4});
}

TEST_CASE("induced subgraph keeps local indexing") {
    Graph g = cycle(5);
    Graph sub = induced_subgraph(g, {1, 2, 3});
    CHECK(sub.n() == 3);
    CHECK(sub.m() == 2);
    CHECK(sub.has_edge(0, 1));
    CHECK(sub.has_edge(1, 2));
    CHECK(!sub.has_edge(0, 2));
}

TEST_CASE("edge list parsing round trip") {
    Graph g = parse_edge_list("3 2\n0 1\n1 2\n");
    CHECK(g.n() == 3);
    CHECK(g.m() == 2);
    CHECK(parse_edge_list(to_edge_list(g)) == g);

    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 3\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 1 9\n"), ParseError);
    CHECK(parse_edge_list("# comment\n2 1 # header\n\n0 1\n").m() == 1);
}

TEST_CASE("graph6 known strings") {
    CHECK(graph6_decode("Bg") == path(3));
    Graph tri = cycle(3);
    CHECK(graph6_decode("Bw") == tri);
    CHECK(graph6_encode(tri) == "Bw");
    CHECK(graph6_decode("@") == Graph(1));
    CHECK_THROWS_AS(graph6_decode(""), ParseError);
    CHECK_THROWS_AS(graph6_decode("Bwx"), ParseError);
}

TEST_CASE("graph6 round trip including long form") {
    for (int n : {0, 1, 2, 5, 30, 62, 63, 100}) {
        Graph g(n);
        for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
        if (n > 4) g.add_edge(0, n / 2);
        CHECK(graph6_decode(graph6_encode(g)) == g);
    }
}

TEST_CASE("block decomposition: two triangles joined by a path") {
    // 0-1-2 triangle, 5-6-7 triangle, path 2-3-4-5
    Graph g(8);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(5, 6);
    g.add_edge(6, 7);
    g.add_edge(5, 7);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    auto bd = block_decomposition(g);
    REQUIRE(bd.blocks.size() == 2);
    CHECK(bd.blocks[0] == std::vector<int>{0, 1, 2});
    CHECK(bd.blocks[1] == std::vector<int>{5, 6, 7});
    CHECK(bd.cut_vertices == std::vector<int>{2, 5});
    REQUIRE(bd.branches.size() == 1);
    CHECK(bd.branches[0].front() == 2);
    CHECK(bd.branches[0].back() == 5);
    CHECK(bd.branches[0].size() == 4);
    CHECK(bd.junctions.empty());
    CHECK(bd.block_of(0) == 0);
    CHECK(bd.block_of(3) == -1);
    // block tree: branch node 2 linked to both block nodes
    CHECK(bd.tree_adj.size() == 3);
    std::set<int> nb(bd.tree_adj[2].begin(), bd.tree_adj[2].end());
    CHECK(nb == std::set<int>{0, 1});
}

TEST_CASE("block decomposition: tree with junction") {
    // star at 1 with legs 0, 2, 3-4
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(3, 4);
    auto bd = block_decomposition(g);
    CHECK(bd.blocks.empty());
    CHECK(bd.junctions == std::vector<int>{1});
    CHECK(bd.branches.size() == 3);
    CHECK(bd.cut_vertices.empty());
}

TEST_CASE("outer embedding of a cycle") {
    auto emb = analyze_block(cycle(5));
    CHECK(emb.outer_cycle.size() == 5);
    CHECK(emb.chords.empty());
    REQUIRE(emb.faces.size() == 1);
    CHECK(emb.faces[0].boundary.size() == 5);
}

TEST_CASE("outer embedding of hexagon with one chord") {
    Graph g = cycle(6);
    g.add_edge(0, 2);
    auto emb = analyze_block(g);
    REQUIRE(emb.chords.size() == 1);
    CHECK(emb.chords[0] == std::pair<int, int>{0, 2});
    REQUIRE(emb.faces.size() == 2);
    std::multiset<size_t> sizes{emb.faces[0].boundary.size(), emb.faces[1].boundary.size()};
    CHECK(sizes == std::multiset<size_t>{3, 5});
    CHECK(emb.weak_dual[0] == std::vector<int>{1});
    CHECK(emb.weak_dual[1] == std::vector<int>{0});
}

TEST_CASE("K4 and K2,3 are rejected") {
    Graph k4(4);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) k4.add_edge(i, j);
    CHECK_THROWS_AS(outer_embedding(k4), NotOuterplanar);

    Graph k23(5);  // parts {0,1} and {2,3,4}
    for (int a : {0, 1})
        for (int b : {2, 3, 4}) k23.add_edge(a, b);
    CHECK_THROWS_AS(outer_embedding(k23), NotOuterplanar);
}

TEST_CASE("K4 minus an edge embeds with two triangles") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    auto emb = analyze_block(g);
    REQUIRE(emb.faces.size() == 2);
    CHECK(emb.faces[0].boundary.size() == 3);
    CHECK(emb.faces[1].boundary.size() == 3);
    CHECK(emb.chords.size() == 1);
    CHECK(check_intersecting_three_faces(emb, g));
}

TEST_CASE("face invariants on a dissected octagon") {
    Graph g = cycle(8);
    g.add_edge(0, 3);
    g.add_edge(4, 7);
    auto emb = analyze_block(g);
    REQUIRE(emb.faces.size() == 3);
    int total = 0;
    for (const auto& f : emb.faces) total += static_cast<int>(f.boundary.size());
    CHECK(total == 8 + 2 * 2);
    // middle face {3,4,7,0} has dual degree 2
    int deg2_faces = 0;
    for (const auto& adj : emb.weak_dual)
        if (adj.size() == 2) ++deg2_faces;
    CHECK(deg2_faces == 1);
}
