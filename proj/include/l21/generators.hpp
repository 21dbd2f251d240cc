#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "l21/graph.hpp"

namespace l21 {

/// The extremal family G(l): two rails x_1..x_l and y_1..y_l joined by rungs
/// x_i y_i, with end vertices u (adjacent to x_1, y_1) and v (adjacent to
/// x_l, y_l).  Vertex ids: u = 0, x_i = i, v = l+1, y_i = l+1+i.
inline Graph gen_gl(int l) {
    if (l < 1) throw std::invalid_argument("gen_gl: l must be >= 1");
    Graph g(2 * l + 2);
    int u = 0, v = l + 1;
    auto x = [&](int i) { return i; };
    auto y = [&](int i) { return l + 1 + i; };
    for (int i = 1; i < l; ++i) {
        g.add_edge(x(i), x(i + 1));
        g.add_edge(y(i), y(i + 1));
    }
    for (int i = 1; i <= l; ++i) g.add_edge(x(i), y(i));
    g.add_edge(u, x(1));
    g.add_edge(u, y(1));
    g.add_edge(v, x(l));
    g.add_edge(v, y(l));
    return g;
}

inline std::vector<std::string> gen_gl_names(int l) {
    std::vector<std::string> names(2 * l + 2);
    names[0] = "u";
    names[l + 1] = "v";
    for (int i = 1; i <= l; ++i) {
        names[i] = "x" + std::to_string(i);
        names[l + 1 + i] = "y" + std::to_string(i);
    }
    return names;
}

namespace detail {

inline bool poly_chords_cross(int n, std::pair<int, int> a, std::pair<int, int> b) {
    auto inside = [&](int x) { return x > a.first && x < a.second; };
    (void)n;
    return inside(b.first) != inside(b.second);
}

inline std::vector<std::pair<int, int>> transform_chords(
    const std::vector<std::pair<int, int>>& chords, int n, int rot, bool refl) {
    std::vector<std::pair<int, int>> out;
    for (auto [a, b] : chords) {
        int x = refl ? (n - 1 - a + rot) % n : (a + rot) % n;
        int y = refl ? (n - 1 - b + rot) % n : (b + rot) % n;
        out.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

/// All 2-connected outerplanar graphs with max degree 3 on n vertices, up to
/// isomorphism: an n-cycle plus every set of pairwise non-crossing,
/// vertex-disjoint chords, deduplicated under the dihedral symmetries.
inline std::vector<Graph> enumerate_2conn_outerplanar(int n) {
    if (n < 3) throw std::invalid_argument("enumerate_2conn_outerplanar: n must be >= 3");

    std::vector<std::pair<int, int>> cands;
    for (int i = 0; i < n; ++i)
        for (int j = i + 2; j < n; ++j)
            if (!(i == 0 && j == n - 1)) cands.emplace_back(i, j);

    std::vector<Graph> out;
    std::vector<std::pair<int, int>> cur;
    std::vector<char> vertex_used(n, 0);

    auto emit = [&]() {
        // keep only the canonical representative under the dihedral group
        auto sig = cur;
        std::sort(sig.begin(), sig.end());
        for (int rot = 0; rot < n; ++rot)
            for (int refl = 0; refl < 2; ++refl)
                if (detail::transform_chords(cur, n, rot, refl != 0) < sig) return;
        Graph g(n);
        for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
        for (auto [a, b] : cur) g.add_edge(a, b);
        out.push_back(std::move(g));
    };

    auto compatible = [&](const std::pair<int, int>& c) {
        if (vertex_used[c.first] || vertex_used[c.second]) return false;
        for (const auto& d : cur)
            if (detail::poly_chords_cross(n, d, c) || detail::poly_chords_cross(n, c, d)) return false;
        return true;
    };

    std::function<void(size_t)> rec = [&](size_t start) {
        emit();
        for (size_t i = start; i < cands.size(); ++i) {
            if (!compatible(cands[i])) continue;
            cur.push_back(cands[i]);
            vertex_used[cands[i].first] = vertex_used[cands[i].second] = 1;
            rec(i + 1);
            vertex_used[cands[i].first] = vertex_used[cands[i].second] = 0;
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

/// Deterministic random connected outerplanar graph with max degree 3:
/// dissected polygon blocks and path pieces joined by bridges.
inline Graph random_outerplanar(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_outerplanar: n must be >= 1");
    std::mt19937_64 rng(seed);
    auto rnd = [&](int m) { return static_cast<int>(rng() % static_cast<std::uint64_t>(m)); };

    Graph g(n);
    int used = 0;
    while (used < n) {
        int remaining = n - used;
        bool block = remaining >= 3 && rnd(2) == 0;
        int s = block ? 3 + rnd(std::min(6, remaining - 2)) : 1 + rnd(std::min(8, remaining));
        int base = used;
        std::vector<int> connect_candidates;

        if (block) {
            for (int i = 0; i < s; ++i) g.add_edge(base + i, base + (i + 1) % s);
            std::vector<std::pair<int, int>> chords;
            std::vector<char> has_chord(s, 0);
            int chordless = s;
            int tries = s >= 4 ? rnd(s / 2 + 1) : 0;
            for (int t = 0; t < tries; ++t) {
                int i = rnd(s), j = rnd(s);
                if (i > j) std::swap(i, j);
                if (j - i < 2 || (i == 0 && j == s - 1)) continue;
                if (has_chord[i] || has_chord[j]) continue;
                if (chordless - 2 < 2) continue;
                bool cross = false;
                for (auto& c : chords)
                    if (detail::poly_chords_cross(s, c, {i, j}) ||
                        detail::poly_chords_cross(s, {i, j}, c))
                        cross = true;
                if (cross) continue;
                chords.emplace_back(i, j);
                has_chord[i] = has_chord[j] = 1;
                chordless -= 2;
                g.add_edge(base + i, base + j);
            }
            for (int i = 0; i < s; ++i)
                if (!has_chord[i]) connect_candidates.push_back(base + i);
        } else {
            for (int i = 0; i + 1 < s; ++i) g.add_edge(base + i, base + i + 1);
            connect_candidates.push_back(base);
        }

        if (used > 0) {
            std::vector<int> eligible;
            for (int v = 0; v < used; ++v)
                if (g.degree(v) <= 2) eligible.push_back(v);
            int a = eligible[rnd(static_cast<int>(eligible.size()))];
            int c = connect_candidates[rnd(static_cast<int>(connect_candidates.size()))];
            g.add_edge(a, c);
        }
        used += s;
    }
    return g;
}

}  // namespace l21
