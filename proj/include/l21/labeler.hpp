#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "l21/blocks.hpp"
#include "l21/extend.hpp"
#include "l21/graph.hpp"
#include "l21/labeling.hpp"
#include "l21/outerplanar.hpp"
#include "l21/solver.hpp"

namespace l21 {

struct MaxDegreeExceeded : std::runtime_error {
    explicit MaxDegreeExceeded(int d)
        : std::runtime_error("maximum degree " + std::to_string(d) + " exceeds 3") {}
};

namespace detail {

class Labeler {
public:
    Labeler(const Graph& g, Strategy& strat) : g_(g), strat_(strat), f_(6, g.n()) {}

    Labeling run() {
        if (g_.max_degree() > 3) throw MaxDegreeExceeded(g_.max_degree());
        bd_ = block_decomposition(g_);

        // analyze every block up front; rejects non-outerplanar inputs early
        int nb = static_cast<int>(bd_.blocks.size());
        subs_.reserve(nb);
        embs_.reserve(nb);
        for (int b = 0; b < nb; ++b) {
            subs_.push_back(induced_subgraph(g_, bd_.blocks[b]));
            embs_.push_back(analyze_block(subs_.back()));
        }
        block_labeled_.assign(nb, 0);

        for (const auto& comp : g_.connected_components()) label_component(comp);
        return f_;
    }

private:
    int global_of(int b, int local) const { return bd_.blocks[b][local]; }

    void label_component(const std::vector<int>& comp) {
        std::vector<int> frontier;
        int root_block = -1;
        for (int v : comp) {
            int b = bd_.vertex_block[v];
            if (b != -1) {
                root_block = b;  // comp sorted ascending: first block vertex wins
                break;
            }
        }
        try {
            if (root_block == -1) {
                int root = comp[0];
                greedy_label(root);
                frontier.push_back(root);
            } else {
                label_root_block(root_block);
                frontier = bd_.blocks[root_block];
            }
            bfs_outward(frontier);
        } catch (const NoExtension&) {
            ++strat_.telemetry.solver_escalations;
            solve_component(comp);
        }
    }

    void bfs_outward(std::vector<int> queue) {
        for (size_t h = 0; h < queue.size(); ++h) {
            int v = queue[h];
            for (int w : g_.neighbors(v)) {
                if (f_.labels[w] != kAbsent) continue;
                int b = bd_.vertex_block[w];
                if (b != -1 && !block_labeled_[b]) {
                    attach_whole_block(b, w, v);
                    for (int x : bd_.blocks[b]) queue.push_back(x);
                } else if (b == -1) {
                    greedy_label(w);
                    queue.push_back(w);
                }
            }
        }
    }

    /// Smallest label consistent with all labeled vertices at distance <= 2.
    void greedy_label(int v) {
        std::uint8_t forbidden = 0;
        for (int u : g_.neighbors(v)) {
            if (f_.labels[u] == kAbsent) continue;
            for (int c = std::max(0, f_.labels[u] - 1); c <= std::min(6, f_.labels[u] + 1); ++c)
                forbidden |= static_cast<std::uint8_t>(1 << c);
        }
        for (int u : g_.neighbors(v))
            for (int x : g_.neighbors(u)) {
                if (x == v || f_.labels[x] == kAbsent || g_.has_edge(v, x)) continue;
                forbidden |= static_cast<std::uint8_t>(1 << f_.labels[x]);
            }
        for (int c = 0; c <= 6; ++c)
            if (!(forbidden >> c & 1)) {
                f_.labels[v] = c;
                return;
            }
        throw NoExtension("greedy_label: no label free at vertex " + std::to_string(v));
    }

    void label_root_block(int b) {
        const Graph& sub = subs_[b];
        const OuterEmbedding& emb = embs_[b];
        int n = sub.n();
        block_labeled_[b] = 1;

        if (sub.m() == n) {  // plain cycle
            auto seed = seed_face_labeling(n);
            for (int i = 0; i < n; ++i) f_.labels[global_of(b, emb.outer_cycle[i])] = seed[i];
            return;
        }
        if (n == 4 && sub.m() == 5) {  // K4 minus an edge
            std::vector<int> deg3, deg2;
            for (int v = 0; v < 4; ++v) (sub.degree(v) == 3 ? deg3 : deg2).push_back(v);
            f_.labels[global_of(b, deg3[0])] = 0;
            f_.labels[global_of(b, deg3[1])] = 2;
            f_.labels[global_of(b, deg2[0])] = 4;
            f_.labels[global_of(b, deg2[1])] = 5;
            return;
        }
        int root_face = -1;
        for (int fi = 0; fi < static_cast<int>(emb.faces.size()); ++fi)
            if (emb.faces[fi].boundary.size() >= 4) {
                root_face = fi;
                break;
            }
        if (root_face == -1)
            throw NoExtension("root block has only triangular faces beyond the handled shapes");

        auto boundary = emb.faces[root_face].boundary;
        int l = static_cast<int>(boundary.size());
        auto is_chord = [&](int x, int y) {
            return emb.faces[root_face].shared_edges.count({std::min(x, y), std::max(x, y)}) > 0;
        };
        int mi = -1;
        if (l % 3 == 2) {
            // the seed is only type 2: both edges incident to the start must
            // be chord-free
            for (int i = 0; i < l; ++i) {
                int prev = boundary[(i + l - 1) % l], next = boundary[(i + 1) % l];
                if (is_chord(prev, boundary[i]) || is_chord(boundary[i], next)) continue;
                if (mi == -1 || boundary[i] < boundary[mi]) mi = i;
            }
        } else {
            mi = static_cast<int>(std::min_element(boundary.begin(), boundary.end()) -
                                  boundary.begin());
        }
        try {
            std::vector<int> face_labels;
            if (mi != -1) {
                std::rotate(boundary.begin(), boundary.begin() + mi, boundary.end());
                face_labels = seed_face_labeling(l);
            } else {
                std::vector<char> demand(l, 0);
                for (int e = 0; e < l; ++e)
                    if (is_chord(boundary[e], boundary[(e + 1) % l])) demand[e] = 1;
                auto found = detail::search_cycle(l, demand);
                if (!found) throw NoExtension("root face admits no chord-compatible labeling");
                face_labels = *found;
            }
            for (int i = 0; i < l; ++i) f_.labels[global_of(b, boundary[i])] = face_labels[i];
            label_faces_from(b, root_face);
        } catch (const NoExtension&) {
            block_fallback(b);
        }
    }

    /// BFS over the weak dual from an already-labeled face, extending across
    /// each chord with extend_over_face.
    void label_faces_from(int b, int start_face) {
        const Graph& sub = subs_[b];
        const OuterEmbedding& emb = embs_[b];
        std::vector<char> done(emb.faces.size(), 0);
        done[start_face] = 1;
        std::vector<int> queue{start_face};
        for (size_t h = 0; h < queue.size(); ++h) {
            int fi = queue[h];
            for (const auto& [chord, other] : emb.faces[fi].shared_edges) {
                if (done[other]) continue;
                int u1 = chord.first, u2 = chord.second;  // local ids, u1 < u2
                int v1 = face_neighbor(emb.faces[fi].boundary, u1, u2);
                int v2 = face_neighbor(emb.faces[fi].boundary, u2, u1);
                Window4 w{f_.labels[global_of(b, v1)], f_.labels[global_of(b, u1)],
                          f_.labels[global_of(b, u2)], f_.labels[global_of(b, v2)]};
                auto child = oriented_boundary(emb.faces[other].boundary, u1, u2);
                int l = static_cast<int>(child.size());
                std::vector<char> chord_edge(l, 0);
                for (int e = 1; e < l; ++e) {  // edge 0 is the shared edge itself
                    int x = child[e], y = child[(e + 1) % l];
                    if (emb.faces[other].shared_edges.count({std::min(x, y), std::max(x, y)}))
                        chord_edge[e] = 1;
                }
                auto res = extend_over_face(w, l, chord_edge, strat_);
                for (int i = 2; i < l; ++i) f_.labels[global_of(b, child[i])] = res[i - 2];
                (void)sub;
                done[other] = 1;
                queue.push_back(other);
            }
        }
    }

    /// The boundary neighbour of u other than excl.
    static int face_neighbor(const std::vector<int>& boundary, int u, int excl) {
        int l = static_cast<int>(boundary.size());
        for (int i = 0; i < l; ++i) {
            if (boundary[i] != u) continue;
            int prev = boundary[(i + l - 1) % l], next = boundary[(i + 1) % l];
            return prev == excl ? next : prev;
        }
        throw std::logic_error("face_neighbor: vertex not on boundary");
    }

    /// Boundary rotated/reflected so it starts u1, u2.
    static std::vector<int> oriented_boundary(const std::vector<int>& boundary, int u1, int u2) {
        int l = static_cast<int>(boundary.size());
        for (int i = 0; i < l; ++i) {
            if (boundary[i] != u1) continue;
            std::vector<int> out(l);
            if (boundary[(i + 1) % l] == u2) {
                for (int t = 0; t < l; ++t) out[t] = boundary[(i + t) % l];
            } else {
                for (int t = 0; t < l; ++t) out[t] = boundary[(i - t + l) % l];
            }
            return out;
        }
        throw std::logic_error("oriented_boundary: shared edge not on boundary");
    }

    void attach_whole_block(int b, int entry, int from) {
        const OuterEmbedding& emb = embs_[b];
        block_labeled_[b] = 1;

        int p2 = f_.labels[from];
        std::vector<int> others;
        for (int u : g_.neighbors(from))
            if (u != entry && f_.labels[u] != kAbsent) others.push_back(u);
        int p1, p3;
        if (others.size() >= 2) {
            p1 = f_.labels[others[0]];
            p3 = f_.labels[others[1]];
        } else if (others.size() == 1) {
            p1 = f_.labels[others[0]];
            p3 = dummy_context_label(p2, p1);
        } else {
            p1 = dummy_context_label(p2, kAbsent);
            p3 = dummy_context_label(p2, p1);
        }

        // locate the entry vertex and its unique face
        int le = -1;
        for (int i = 0; i < static_cast<int>(bd_.blocks[b].size()); ++i)
            if (bd_.blocks[b][i] == entry) le = i;
        int entry_face = -1;
        for (int fi = 0; fi < static_cast<int>(emb.faces.size()); ++fi)
            if (std::find(emb.faces[fi].boundary.begin(), emb.faces[fi].boundary.end(), le) !=
                emb.faces[fi].boundary.end()) {
                entry_face = fi;
                break;
            }
        if (entry_face == -1) throw std::logic_error("attach: entry vertex on no face");

        const auto& fb = emb.faces[entry_face].boundary;
        int l = static_cast<int>(fb.size());
        int pos = static_cast<int>(std::find(fb.begin(), fb.end(), le) - fb.begin());
        int na = fb[(pos + l - 1) % l], nb2 = fb[(pos + 1) % l];
        auto is_chord = [&](int x, int y) {
            return emb.faces[entry_face].shared_edges.count({std::min(x, y), std::max(x, y)}) > 0;
        };
        // orientation: u1 is the face neighbour whose far edge (u1, ul) avoids a chord
        auto build = [&](int first) { return oriented_boundary(fb, first, le); };
        auto far_edge_chord = [&](const std::vector<int>& ord) {
            return is_chord(ord[l - 1], ord[0]);
        };
        std::vector<int> ord_a = build(na), ord_b = build(nb2);
        std::vector<int> ord;
        bool ca = far_edge_chord(ord_a), cb = far_edge_chord(ord_b);
        if (ca != cb)
            ord = ca ? ord_b : ord_a;
        else
            ord = na <= nb2 ? ord_a : ord_b;

        std::vector<char> chord_edge(l, 0);
        for (int e = 0; e < l; ++e)
            if (is_chord(ord[e], ord[(e + 1) % l])) chord_edge[e] = 1;

        try {
            auto cyc = attach_block_face(p1, p2, p3, l, chord_edge, strat_);
            for (int i = 0; i < l; ++i) f_.labels[global_of(b, ord[i])] = cyc[i];
            label_faces_from(b, entry_face);
        } catch (const NoExtension&) {
            block_fallback(b);
        }
    }

    /// Whole-block backtracking against the labeled context (second rung of
    /// the escalation ladder).
    void block_fallback(int b) {
        ++strat_.telemetry.block_backtracks;
        for (int v : bd_.blocks[b]) f_.labels[v] = kAbsent;

        std::vector<char> in_set(g_.n(), 0);
        std::vector<int> set;
        auto add = [&](int v) {
            if (!in_set[v]) {
                in_set[v] = 1;
                set.push_back(v);
            }
        };
        for (int v : bd_.blocks[b]) add(v);
        for (int v : bd_.blocks[b])
            for (int u : g_.neighbors(v)) {
                if (f_.labels[u] != kAbsent) add(u);
                for (int x : g_.neighbors(u))
                    if (f_.labels[x] != kAbsent) add(x);
            }
        std::sort(set.begin(), set.end());
        Graph sub = induced_subgraph(g_, set);
        std::vector<int> fixed(set.size(), kAbsent);
        for (size_t i = 0; i < set.size(); ++i) fixed[i] = f_.labels[set[i]];
        auto r = k_feasible(sub, 6, 2, 1, 100000000LL, fixed);
        if (!r.feasible()) throw NoExtension("block fallback infeasible");
        for (size_t i = 0; i < set.size(); ++i) f_.labels[set[i]] = r.witness->labels[i];
    }

    /// Final rung: exact search over the whole component at k = 6.
    void solve_component(const std::vector<int>& comp) {
        for (int v : comp) f_.labels[v] = kAbsent;
        Graph sub = induced_subgraph(g_, comp);
        auto r = k_feasible(sub, 6);
        if (!r.feasible())
            throw NoExtension("component admits no labeling with span 6");
        for (size_t i = 0; i < comp.size(); ++i) f_.labels[comp[i]] = r.witness->labels[i];
        for (int v : comp) {
            int b = bd_.vertex_block[v];
            if (b != -1) block_labeled_[b] = 1;
        }
    }

    const Graph& g_;
    Strategy& strat_;
    Labeling f_;
    BlockDecomposition bd_;
    std::vector<Graph> subs_;
    std::vector<OuterEmbedding> embs_;
    std::vector<char> block_labeled_;
};

}  // namespace detail

/// Constructive span-<=6 labeling of an outerplanar graph with max degree 3.
inline Labeling label_graph(const Graph& g, Strategy& strat) {
    detail::Labeler lab(g, strat);
    return lab.run();
}

inline Labeling label_graph(const Graph& g) {
    Strategy strat;
    return label_graph(g, strat);
}

}  // namespace l21
