#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <vector>

#include "l21/extend.hpp"
#include "l21/labeling.hpp"

using namespace l21;

namespace {

bool valid_context(int p1, int p2, int p3) {
    if (p1 != kAbsent && std::abs(p1 - p2) < 2) return false;
    if (p3 != kAbsent && std::abs(p3 - p2) < 2) return false;
    if (p1 != kAbsent && p1 == p3) return false;
    return true;
}

}  // namespace

TEST_CASE("seed face labelings by residue") {
    CHECK(seed_face_labeling(6) == std::vector<int>{0, 2, 4, 0, 2, 4});
    CHECK(seed_face_labeling(7) == std::vector<int>{3, 6, 4, 0, 6, 4, 0});
    CHECK(seed_face_labeling(5) == std::vector<int>{3, 1, 4, 2, 0});
    CHECK(seed_face_labeling(4) == std::vector<int>{3, 6, 4, 0});
    CHECK(seed_face_labeling(3) == std::vector<int>{0, 2, 4});
    for (int l = 3; l <= 20; ++l) {
        auto f = seed_face_labeling(l);
        CHECK(static_cast<int>(f.size()) == l);
        // l = 2 (mod 3) seeds are only type 2 (start at the first vertex)
        CHECK(is_cycle_extendable(f, l % 3 == 2 ? 2 : 1, 0));
    }
}

TEST_CASE("fill branch greedy") {
    CHECK(fill_branch(0, 4, 2, 3) == std::vector<int>{5, 0});
    CHECK(fill_branch(1, 3, 5, 2) == std::vector<int>{0});
    CHECK(fill_branch(kAbsent, kAbsent, 0, 2) == std::vector<int>{2});
    // first slot: min of [0,6] minus {a1, a2, b-1, b, b+1}
    CHECK(fill_branch(0, 2, 4, 2).front() == 1);
    CHECK(fill_branch(3, 5, 0, 1).empty());
}

TEST_CASE("extend over a face: triangle and square") {
    Strategy strat;

    // window (v1,u1,u2,v2) = (0,2,4,0): the triangle child takes the one option
    CHECK(extend_over_face({0, 2, 4, 0}, 3, strat) == std::vector<int>{6});

    // square child on the same window: min-lex completion u3=1, u4=5
    CHECK(extend_over_face({0, 2, 4, 0}, 4, strat) == std::vector<int>{1, 5});
}

TEST_CASE("chord-aware extend relaxes to the demanded edges") {
    // (2,6,0,4) at l=5 has valid completions, but none keeps both far edges
    // attachable; with no chords the demand relaxes and the call succeeds
    Strategy strict;
    CHECK_THROWS_AS(extend_over_face({2, 6, 0, 4}, 5, strict), NoExtension);

    Strategy strat;
    std::vector<char> no_chords(5, 0);
    auto r = extend_over_face({2, 6, 0, 4}, 5, no_chords, strat);
    CHECK(extension_valid({2, 6, 0, 4}, 5, r, no_chords));
    CHECK(strat.telemetry.relaxed_demand_uses == 1);

    // when a chord sits on a far edge, that edge must stay attachable
    for (int e = 2; e <= 3; ++e) {
        Strategy s2;
        std::vector<char> chords(5, 0);
        chords[e] = 1;
        try {
            auto r2 = extend_over_face({2, 6, 0, 4}, 5, chords, s2);
            CHECK(extension_valid({2, 6, 0, 4}, 5, r2, chords));
        } catch (const NoExtension&) {
        }
    }

    // windows where the full demand is satisfiable take the strict path
    Strategy s3;
    std::vector<char> none(4, 0);
    CHECK(extend_over_face({0, 2, 4, 0}, 4, none, s3) == std::vector<int>{1, 5});
    CHECK(s3.telemetry.relaxed_demand_uses == 0);
}

TEST_CASE("extend requires a path-extendable window") {
    Strategy strat;
    CHECK_THROWS_AS(extend_over_face({2, 5, 3, 6}, 3, strat), NoExtension);
}

TEST_CASE("extend results always pass the checker") {
    for (Mode m : {Mode::PaperCases, Mode::CertifiedSearch, Mode::Hybrid}) {
        for (int l : {3, 4, 5, 6, 7, 8}) {
            Strategy strat;
            strat.mode = m;
            int tried = 0, found = 0;
            for (int v1 = 0; v1 <= 6; ++v1)
                for (int u1 = 0; u1 <= 6; ++u1)
                    for (int u2 = 0; u2 <= 6; ++u2)
                        for (int v2 = 0; v2 <= 6; ++v2) {
                            Window4 w{v1, u1, u2, v2};
                            if (!is_path_extendable({v1, u1, u2, v2})) continue;
                            ++tried;
                            try {
                                auto r = extend_over_face(w, l, strat);
                                ++found;
                                CHECK(extension_valid(w, l, r));
                            } catch (const NoExtension&) {
                            }
                        }
            CHECK(tried > 0);
            CHECK(found > 0);
        }
    }
}

TEST_CASE("pendant-free windows always extend") {
    Strategy strat;
    strat.mode = Mode::CertifiedSearch;
    for (int l : {3, 4, 5, 6, 7, 8, 9, 10})
        for (int u1 = 0; u1 <= 6; ++u1)
            for (int u2 = 0; u2 <= 6; ++u2) {
                if (!edge_attachable({kAbsent, u1, u2, kAbsent})) continue;
                if (std::abs(u1 - u2) < 2) continue;
                CHECK_NOTHROW(extend_over_face({kAbsent, u1, u2, kAbsent}, l, strat));
            }
}

TEST_CASE("tabulated rows agree with the search on feasibility") {
    for (int l : {5, 8, 11}) {
        for (int v1 = -1; v1 <= 6; ++v1)
            for (int u1 = 0; u1 <= 6; ++u1)
                for (int u2 = 0; u2 <= 6; ++u2)
                    for (int v2 = 0; v2 <= 6; ++v2) {
                        Window4 w{v1, u1, u2, v2};
                        if (!is_path_extendable({v1, u1, u2, v2})) continue;
                        Strategy paper, search;
                        paper.mode = Mode::PaperCases;
                        search.mode = Mode::CertifiedSearch;
                        bool a = true, b = true;
                        try {
                            auto r = extend_over_face(w, l, paper);
                            CHECK(extension_valid(w, l, r));
                        } catch (const NoExtension&) {
                            a = false;
                        }
                        try {
                            extend_over_face(w, l, search);
                        } catch (const NoExtension&) {
                            b = false;
                        }
                        CHECK(a == b);
                    }
    }
}

TEST_CASE("attach a face below a labeled 3-path") {
    for (Mode m : {Mode::PaperCases, Mode::Hybrid}) {
        Strategy strat;
        strat.mode = m;
        auto r = attach_block_face(1, 3, 5, 7, std::vector<char>(7, 0), strat);
        CHECK(r == std::vector<int>{5, 0, 6, 2, 0, 6, 3});
        std::vector<char> full(7, 0);
        for (int e = 1; e <= 5; ++e) full[e] = 1;
        CHECK(attach_valid(1, 3, 5, r, full));
    }
}

TEST_CASE("attach results always pass the checker") {
    for (Mode m : {Mode::PaperCases, Mode::CertifiedSearch, Mode::Hybrid}) {
        Strategy strat;
        strat.mode = m;
        for (int l : {3, 4, 5, 6, 7, 8}) {
            std::vector<char> chords(l, 0);
            for (int p1 = -1; p1 <= 6; ++p1)
                for (int p2 = 0; p2 <= 6; ++p2)
                    for (int p3 = -1; p3 <= 6; ++p3) {
                        if (!valid_context(p1, p2, p3)) continue;
                        try {
                            auto r = attach_block_face(p1, p2, p3, l, chords, strat);
                            REQUIRE(static_cast<int>(r.size()) == l);
                            CHECK(attach_valid(p1, p2, p3, r, chords));
                        } catch (const NoExtension&) {
                        }
                    }
        }
    }
}

TEST_CASE("attach always succeeds on chordless faces") {
    Strategy strat;
    strat.mode = Mode::CertifiedSearch;
    for (int l : {3, 4, 5, 6, 7, 8, 9, 10}) {
        std::vector<char> chords(l, 0);
        for (int p1 = -1; p1 <= 6; ++p1)
            for (int p2 = 0; p2 <= 6; ++p2)
                for (int p3 = -1; p3 <= 6; ++p3) {
                    if (!valid_context(p1, p2, p3)) continue;
                    CHECK_NOTHROW(attach_block_face(p1, p2, p3, l, chords, strat));
                }
    }
}

TEST_CASE("dummy context label") {
    CHECK(dummy_context_label(4, 6) == 0);
    CHECK(dummy_context_label(0, 2) == 4);
    CHECK(dummy_context_label(3, 5) == 1);
    CHECK(dummy_context_label(1, 3) == 5);
}

TEST_CASE("telemetry counts fast path activity") {
    Strategy strat;
    attach_block_face(1, 3, 5, 7, std::vector<char>(7, 0), strat);
    CHECK(strat.telemetry.fast_path_hits + strat.telemetry.fast_path_misses > 0);
    CHECK(strat.telemetry.escalations() == 0);
}
