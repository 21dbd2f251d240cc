#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "l21/generators.hpp"
#include "l21/graph.hpp"
#include "l21/labeler.hpp"

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

void check_labeling(const Graph& g, const Labeling& f) {
    REQUIRE(f.total());
    CHECK(verify(g, f).empty());
    for (int x : f.labels) {
        CHECK(x >= 0);
        CHECK(x <= 6);
    }
}

}  // namespace

TEST_CASE("basic shapes") {
    for (int n : {1, 2, 5, 12}) check_labeling(path(n), label_graph(path(n)));
    for (int n : {3, 4, 5, 6, 7, 11}) check_labeling(cycle(n), label_graph(cycle(n)));
    check_labeling(Graph(3), label_graph(Graph(3)));
}

TEST_CASE("K4 minus an edge") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    Labeling f = label_graph(g);
    check_labeling(g, f);
    // degree-3 vertices take 0 and 2, the degree-2 pair takes 4 and 5
    CHECK(f.labels == std::vector<int>{0, 2, 4, 5});
}

TEST_CASE("max degree above 3 is rejected") {
    Graph star(5);
    for (int i = 1; i < 5; ++i) star.add_edge(0, i);
    CHECK_THROWS_AS(label_graph(star), MaxDegreeExceeded);
}

TEST_CASE("non-outerplanar input is rejected") {
    Graph k4(4);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) k4.add_edge(i, j);
    CHECK_THROWS_AS(label_graph(k4), NotOuterplanar);
}

TEST_CASE("extremal family members get span 6 labelings") {
    for (int l = 1; l <= 12; ++l) {
        Graph g = gen_gl(l);
        check_labeling(g, label_graph(g));
    }
}

TEST_CASE("dissected polygons") {
    Graph g = cycle(8);
    g.add_edge(0, 3);
    g.add_edge(4, 7);
    check_labeling(g, label_graph(g));

    Graph h = cycle(6);
    h.add_edge(0, 2);
    check_labeling(h, label_graph(h));
}

TEST_CASE("blocks joined by branches") {
    // two triangles joined by a path plus a pendant leg
    Graph g(9);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(5, 6);
    g.add_edge(6, 7);
    g.add_edge(5, 7);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(6, 8);
    check_labeling(g, label_graph(g));
}

TEST_CASE("random corpus stays clean in all modes") {
    for (Mode m : {Mode::PaperCases, Mode::CertifiedSearch, Mode::Hybrid}) {
        Strategy strat;
        strat.mode = m;
        for (int n = 1; n <= 40; ++n)
            for (std::uint64_t seed = 0; seed < 5; ++seed) {
                Graph g = random_outerplanar(n, seed);
                Labeling f = label_graph(g, strat);
                check_labeling(g, f);
            }
        CHECK(strat.telemetry.escalations() == 0);
    }
}

TEST_CASE("enumerated 2-connected corpus stays clean") {
    Strategy strat;
    for (int n = 3; n <= 9; ++n)
        for (const Graph& g : enumerate_2conn_outerplanar(n)) check_labeling(g, label_graph(g, strat));
    CHECK(strat.telemetry.escalations() == 0);
}

TEST_CASE("disconnected graphs are labeled per component") {
    Graph g(8);  // triangle + path + isolated vertices
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    check_labeling(g, label_graph(g));
}

TEST_CASE("deterministic output") {
    Graph g = random_outerplanar(25, 7);
    CHECK(label_graph(g).labels == label_graph(g).labels);
}
