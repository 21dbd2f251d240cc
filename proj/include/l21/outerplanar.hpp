#pragma once

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "l21/graph.hpp"

namespace l21 {

struct NotOuterplanar : std::runtime_error {
    NotOuterplanar() : std::runtime_error("not outerplanar") {}
    explicit NotOuterplanar(const std::string& what) : std::runtime_error(what) {}
};

struct Face {
    std::vector<int> boundary;  // cyclic vertex sequence
    std::map<std::pair<int, int>, int> shared_edges;  // chord (u<v) -> adjacent face id
};

/// Outer embedding of one 2-connected block: the Hamiltonian outer cycle,
/// the chord set, and (after faces_and_weak_dual) the inner faces and their
/// weak dual, which is a tree.
struct OuterEmbedding {
    std::vector<int> outer_cycle;
    std::vector<std::pair<int, int>> chords;  // (u<v), sorted
    std::vector<Face> faces;
    std::vector<std::vector<int>> weak_dual;  // adjacency between face ids
    std::vector<int> position;                // vertex -> index in outer_cycle
};

namespace detail {

inline bool chords_cross(const std::vector<int>& pos, std::pair<int, int> e1, std::pair<int, int> e2) {
    int a = pos[e1.first], b = pos[e1.second];
    if (a > b) std::swap(a, b);
    auto strictly_inside = [&](int x) { return x > a && x < b; };
    int c = pos[e2.first], d = pos[e2.second];
    return strictly_inside(c) != strictly_inside(d);
}

/// Enumerate Hamiltonian cycles starting at vertex 0; callback returns true to stop.
inline bool for_each_hamiltonian_cycle(const Graph& g, const std::function<bool(const std::vector<int>&)>& cb) {
    int n = g.n();
    std::vector<int> path{0};
    std::vector<char> on_path(n, 0);
    on_path[0] = 1;
    bool stop = false;

    std::function<void()> rec = [&]() {
        if (stop) return;
        int v = path.back();
        if (static_cast<int>(path.size()) == n) {
            if (g.has_edge(v, 0) && path[1] < path.back()) stop = cb(path);
            return;
        }
        for (int w : g.neighbors(v)) {
            if (on_path[w]) continue;
            on_path[w] = 1;
            path.push_back(w);
            rec();
            path.pop_back();
            on_path[w] = 0;
            if (stop) return;
        }
    };
    rec();
    return stop;
}

}  // namespace detail

/// Outer cycle + chords of a 2-connected block; throws NotOuterplanar.
inline OuterEmbedding outer_embedding(const Graph& block) {
    int n = block.n();
    if (n < 3) throw std::invalid_argument("outer_embedding: block must have >= 3 vertices");
    if (block.m() > 2 * n - 3) throw NotOuterplanar("edge count exceeds 2n-3");

    OuterEmbedding emb;
    bool found = detail::for_each_hamiltonian_cycle(block, [&](const std::vector<int>& cycle) {
        std::vector<int> pos(n);
        for (int i = 0; i < n; ++i) pos[cycle[i]] = i;
        std::vector<std::pair<int, int>> chords;
        for (auto [u, v] : block.edges()) {
            int d = std::abs(pos[u] - pos[v]);
            if (d != 1 && d != n - 1) chords.emplace_back(u, v);
        }
        for (size_t i = 0; i < chords.size(); ++i)
            for (size_t j = i + 1; j < chords.size(); ++j)
                if (detail::chords_cross(pos, chords[i], chords[j])) return false;
        emb.outer_cycle = cycle;
        emb.position = pos;
        emb.chords = std::move(chords);
        return true;
    });
    if (!found) throw NotOuterplanar();
    return emb;
}

/// Inner faces by planar face tracing over the circle-order rotation system,
/// plus the weak dual.  Checks the outerplanar face-count identities.
inline void faces_and_weak_dual(OuterEmbedding& emb, const Graph& block) {
    int n = block.n();
    const auto& pos = emb.position;

    // rotation at v: neighbors ordered by circular position after pos[v]
    std::vector<std::vector<int>> rot(n);
    std::vector<std::map<int, int>> rot_index(n);
    for (int v = 0; v < n; ++v) {
        rot[v] = block.neighbors(v);
        std::sort(rot[v].begin(), rot[v].end(), [&](int a, int b) {
            return (pos[a] - pos[v] + n) % n < (pos[b] - pos[v] + n) % n;
        });
        for (int i = 0; i < static_cast<int>(rot[v].size()); ++i) rot_index[v][rot[v][i]] = i;
    }

    // trace faces: next directed edge after (u,v) is (v,w) with w the
    // predecessor of u in the rotation at v
    std::map<std::pair<int, int>, char> visited;
    std::vector<std::vector<int>> all_faces;
    for (int u = 0; u < n; ++u)
        for (int v : block.neighbors(u)) {
            if (visited.count({u, v})) continue;
            std::vector<int> face;
            int cu = u, cv = v;
            while (!visited.count({cu, cv})) {
                visited[{cu, cv}] = 1;
                face.push_back(cu);
                int idx = rot_index[cv].at(cu);
                int deg = static_cast<int>(rot[cv].size());
                int w = rot[cv][(idx - 1 + deg) % deg];
                cu = cv;
                cv = w;
            }
            all_faces.push_back(std::move(face));
        }

    // drop the outer face: a face of length n traversing the outer cycle
    auto is_outer = [&](const std::vector<int>& f) {
        if (static_cast<int>(f.size()) != n) return false;
        int step = (pos[f[1]] - pos[f[0]] + n) % n;
        if (step != 1 && step != n - 1) return false;
        for (size_t i = 0; i + 1 < f.size(); ++i)
            if ((pos[f[i + 1]] - pos[f[i]] + n) % n != step) return false;
        return true;
    };
    emb.faces.clear();
    bool outer_dropped = false;
    for (auto& f : all_faces) {
        if (!outer_dropped && is_outer(f)) {
            outer_dropped = true;
            continue;
        }
        Face face;
        face.boundary = std::move(f);
        emb.faces.push_back(std::move(face));
    }
    if (!outer_dropped) throw NotOuterplanar("no outer face found in tracing");

    int nf = static_cast<int>(emb.faces.size());
    if (nf != static_cast<int>(emb.chords.size()) + 1)
        throw NotOuterplanar("face count mismatch");
    int total_len = 0;
    for (auto& f : emb.faces) total_len += static_cast<int>(f.boundary.size());
    if (total_len != n + 2 * static_cast<int>(emb.chords.size()))
        throw NotOuterplanar("face length sum mismatch");
    for (auto& f : emb.faces) {
        if (f.boundary.size() < 3) throw NotOuterplanar("degenerate face");
        for (size_t i = 0; i < f.boundary.size(); ++i)
            if (!block.has_edge(f.boundary[i], f.boundary[(i + 1) % f.boundary.size()]))
                throw NotOuterplanar("face boundary not a cycle");
    }

    // weak dual: faces adjacent iff they share a chord
    emb.weak_dual.assign(nf, {});
    std::map<std::pair<int, int>, std::vector<int>> chord_faces;
    for (int fi = 0; fi < nf; ++fi) {
        auto& b = emb.faces[fi].boundary;
        for (size_t i = 0; i < b.size(); ++i) {
            int u = b[i], v = b[(i + 1) % b.size()];
            if (u > v) std::swap(u, v);
            int d = std::abs(pos[u] - pos[v]);
            if (d != 1 && d != n - 1) chord_faces[{u, v}].push_back(fi);
        }
    }
    for (auto& [chord, fs] : chord_faces) {
        if (fs.size() != 2) throw NotOuterplanar("chord not shared by two faces");
        emb.weak_dual[fs[0]].push_back(fs[1]);
        emb.weak_dual[fs[1]].push_back(fs[0]);
        emb.faces[fs[0]].shared_edges[chord] = fs[1];
        emb.faces[fs[1]].shared_edges[chord] = fs[0];
    }
    // the dual of nf nodes with chords() edges and connectivity is a tree
    std::vector<char> seen(nf, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int cnt = 0;
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        ++cnt;
        for (int o : emb.weak_dual[f])
            if (!seen[o]) {
                seen[o] = 1;
                stack.push_back(o);
            }
    }
    if (cnt != nf) throw NotOuterplanar("weak dual disconnected");
}

/// Convenience: embedding with faces computed.
inline OuterEmbedding analyze_block(const Graph& block) {
    OuterEmbedding emb = outer_embedding(block);
    faces_and_weak_dual(emb, block);
    return emb;
}

/// Structural check (2-connected, max degree 3): two inner 3-faces sharing a
/// vertex force the block to be K4 minus an edge (exactly 4 vertices).
inline bool check_intersecting_three_faces(const OuterEmbedding& emb, const Graph& block) {
    if (block.max_degree() > 3) return true;
    int nf = static_cast<int>(emb.faces.size());
    for (int i = 0; i < nf; ++i)
        for (int j = i + 1; j < nf; ++j) {
            if (emb.faces[i].boundary.size() != 3 || emb.faces[j].boundary.size() != 3) continue;
            auto bi = emb.faces[i].boundary, bj = emb.faces[j].boundary;
            std::sort(bi.begin(), bi.end());
            std::sort(bj.begin(), bj.end());
            std::vector<int> common;
            std::set_intersection(bi.begin(), bi.end(), bj.begin(), bj.end(), std::back_inserter(common));
            if (!common.empty() && block.n() != 4) return false;
        }
    return true;
}

}  // namespace l21
