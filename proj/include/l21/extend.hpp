#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "l21/graph.hpp"
#include "l21/labeling.hpp"

namespace l21 {

struct NoExtension : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Mode { PaperCases, CertifiedSearch, Hybrid };

struct Telemetry {
    long long fast_path_hits = 0;
    long long fast_path_misses = 0;
    long long relaxed_demand_uses = 0;
    long long block_backtracks = 0;
    long long solver_escalations = 0;
    long long escalations() const { return block_backtracks + solver_escalations; }
};

struct Strategy {
    Mode mode = Mode::Hybrid;
    Telemetry telemetry;
};

namespace detail {

constexpr int kNoLabel = 7;  // "no vertex / no constraint" marker inside chain sequences

inline bool ok_adj(int a, int b) {
    return a == kNoLabel || b == kNoLabel || std::abs(a - b) >= 2;
}
inline bool ok_d2(int a, int b) { return a == kNoLabel || b == kNoLabel || a != b; }

inline bool window_ok(int a, int b, int c, int d) {
    Window4 w{a == kNoLabel ? kAbsent : a, b, c, d == kNoLabel ? kAbsent : d};
    return edge_attachable(w);
}

/// Min-lex label assignment along a chain of positions where every constraint
/// spans at most 4 consecutive positions: adjacency between neighbours,
/// inequality between positions two apart, per-position allowed sets, and
/// optional attachability demands on interior edges.
struct ChainProblem {
    std::vector<int> fixed;        // 0..6 fixed label, kNoLabel fixed-absent, kAbsent free
    std::vector<std::uint8_t> allowed;  // 7-bit label mask for free positions
    std::vector<char> demand;      // demand[j]: window demand on edge (j, j+1)
};

class ChainSolver {
public:
    explicit ChainSolver(const ChainProblem& p) : p_(p), M_(static_cast<int>(p.fixed.size())) {
        if (static_cast<int>(p_.allowed.size()) != M_ || static_cast<int>(p_.demand.size()) + 1 != M_)
            throw std::invalid_argument("chain problem: size mismatch");
        for (int j = 0; j < M_ - 1; ++j)
            if (p_.demand[j] && (j < 1 || j + 2 > M_ - 1))
                throw std::invalid_argument("chain problem: demand needs a full window");
        memo_.assign(static_cast<size_t>(M_ + 1) * 8 * 8 * 8, -1);
    }

    std::optional<std::vector<int>> solve() {
        if (!feasible(0, kNoLabel, kNoLabel, kNoLabel)) return std::nullopt;
        std::vector<int> out(M_);
        int a = kNoLabel, b = kNoLabel, c = kNoLabel;
        for (int i = 0; i < M_; ++i) {
            bool placed = false;
            for (int d : domain(i)) {
                if (!place_ok(i, a, b, c, d)) continue;
                if (!feasible(i + 1, b, c, d)) continue;
                out[i] = d;
                a = b;
                b = c;
                c = d;
                placed = true;
                break;
            }
            if (!placed) return std::nullopt;  // unreachable given root feasibility
        }
        return out;
    }

private:
    std::vector<int> domain(int i) const {
        if (p_.fixed[i] != kAbsent) return {p_.fixed[i]};
        std::vector<int> d;
        for (int x = 0; x <= 6; ++x)
            if (p_.allowed[i] & (1 << x)) d.push_back(x);
        return d;
    }

    bool place_ok(int i, int a, int b, int c, int d) const {
        if (!ok_adj(c, d) || !ok_d2(b, d)) return false;
        if (i >= 3 && p_.demand[i - 2] && !window_ok(a, b, c, d)) return false;
        return true;
    }

    bool feasible(int i, int a, int b, int c) {
        if (i == M_) return true;
        size_t key = ((static_cast<size_t>(i) * 8 + a) * 8 + b) * 8 + c;
        if (memo_[key] != -1) return memo_[key] == 1;
        bool ok = false;
        for (int d : domain(i))
            if (place_ok(i, a, b, c, d) && feasible(i + 1, b, c, d)) {
                ok = true;
                break;
            }
        memo_[key] = ok ? 1 : 0;
        return ok;
    }

    const ChainProblem& p_;
    int M_;
    std::vector<signed char> memo_;
};

inline int to_chain(int label) { return label == kAbsent ? kNoLabel : label; }

inline std::vector<int> evens() { return {0, 2, 4, 6}; }
inline std::vector<int> odds() { return {1, 3, 5}; }

inline bool in(const std::vector<int>& v, int x) {
    return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace detail

/// Type-1 cycle-extendable seed labeling for a face of length l.
inline std::vector<int> seed_face_labeling(int l) {
    if (l < 3) throw std::invalid_argument("seed_face_labeling: l must be >= 3");
    std::vector<int> f;
    if (l % 3 == 0) {
        f = apply_pattern(l, {0, 2, 4});
    } else if (l % 3 == 1) {
        f.push_back(3);
        auto rest = apply_pattern(l - 1, {6, 4, 0});
        f.insert(f.end(), rest.begin(), rest.end());
    } else {
        f = {3, 1};
        auto rest = apply_pattern(l - 2, {4, 2, 0});
        f.insert(f.end(), rest.begin(), rest.end());
    }
    // the l = 2 (mod 3) seed admits no square attachment at the edge labeled
    // (3,1), so it is only type 2; callers must keep that edge chord-free
    int type = l % 3 == 2 ? 2 : 1;
    if (!is_cycle_extendable(f, type, 0))
        throw NoExtension("seed labeling failed the extendability check for l=" + std::to_string(l));
    return f;
}

/// Greedy labels for the q-1 new vertices of a branch starting at a vertex
/// labeled b whose in-graph neighbours carry a1, a2 (kAbsent when missing).
inline std::vector<int> fill_branch(int a1, int a2, int b, int q) {
    if (q < 1) throw std::invalid_argument("fill_branch: q must be >= 1");
    if (b < 0 || b > 6) throw std::invalid_argument("fill_branch: bad start label");
    std::vector<int> out;
    int prev = b;
    std::vector<int> back{a1, a2};
    for (int t = 0; t < q - 1; ++t) {
        int chosen = -1;
        for (int c = 0; c <= 6; ++c) {
            if (std::abs(c - prev) < 2) continue;
            bool bad = false;
            for (int x : back)
                if (x != kAbsent && c == x) bad = true;
            if (bad) continue;
            chosen = c;
            break;
        }
        if (chosen < 0) throw NoExtension("fill_branch: no label available");  // |forbidden| <= 5
        out.push_back(chosen);
        back = {prev};
        prev = chosen;
    }
    return out;
}

/// Postcondition checker for extend_over_face: the cycle labels joined with
/// the window are violation-free in the local subgraph, and every demanded
/// 0-based cycle edge e (joining u_{e+1}, u_{e+2}) stays attachable.  Edges
/// incident to u_1 or u_2 never carry chords (those vertices are already
/// saturated), so only edges 2..l-2 can be demanded.
inline bool extension_valid(const Window4& w, int l, const std::vector<int>& u3_to_ul,
                            const std::vector<char>& demand_edge) {
    if (static_cast<int>(demand_edge.size()) != l) return false;
    if (static_cast<int>(u3_to_ul.size()) != l - 2) return false;
    for (int x : u3_to_ul)
        if (x < 0 || x > 6) return false;
    std::vector<int> cyc(l);  // u1..ul
    cyc[0] = w.w2;
    cyc[1] = w.w3;
    for (int i = 2; i < l; ++i) cyc[i] = u3_to_ul[i - 2];

    int extra = (w.w1 != kAbsent ? 1 : 0) + (w.w4 != kAbsent ? 1 : 0);
    Graph g(l + extra);
    Labeling f(6, l + extra);
    for (int i = 0; i < l; ++i) {
        g.add_edge(i, (i + 1) % l);
        f.labels[i] = cyc[i];
    }
    int next = l;
    if (w.w1 != kAbsent) {
        g.add_edge(next, 0);  // v1 - u1
        f.labels[next++] = w.w1;
    }
    if (w.w4 != kAbsent) {
        g.add_edge(next, 1);  // v2 - u2
        f.labels[next++] = w.w4;
    }
    if (!verify(g, f).empty()) return false;

    for (int e = 2; e <= l - 2; ++e) {  // 0-based edge e joins cyc[e], cyc[e+1]
        if (!demand_edge[e]) continue;
        Window4 win{cyc[e - 1], cyc[e], cyc[e + 1], cyc[(e + 2) % l]};
        if (!edge_attachable(win)) return false;
    }
    return true;
}

/// Full-demand form: every far edge 2..l-2 must stay attachable.
inline bool extension_valid(const Window4& w, int l, const std::vector<int>& u3_to_ul) {
    std::vector<char> far(l, 0);
    for (int e = 2; e <= l - 2; ++e) far[e] = 1;
    return extension_valid(w, l, u3_to_ul, far);
}

namespace detail {

/// Min-lex search for the free labels of a child face over window (v1,u1,u2,v2)
/// with attachability demanded on the flagged 0-based cycle edges.
inline std::optional<std::vector<int>> search_extend(const Window4& w, int l,
                                                     const std::vector<char>& demand_edge) {
    int M = l + 2;  // v2, u2, u3, ..., ul, u1, v1
    ChainProblem p;
    p.fixed.assign(M, kAbsent);
    p.allowed.assign(M, 0x7F);
    p.demand.assign(M - 1, 0);
    p.fixed[0] = to_chain(w.w4);
    p.fixed[1] = w.w3;
    p.fixed[M - 2] = w.w2;
    p.fixed[M - 1] = to_chain(w.w1);
    if (l >= 5) {
        p.allowed[2] &= static_cast<std::uint8_t>(~(1 << w.w2));      // u3 at distance 2 from u1
        p.allowed[l - 1] &= static_cast<std::uint8_t>(~(1 << w.w3));  // ul at distance 2 from u2
    }
    for (int j = 2; j <= l - 2; ++j)  // cycle edge j = chain edge (j, j+1)
        if (demand_edge[j]) p.demand[j] = 1;
    ChainSolver solver(p);
    auto seq = solver.solve();
    if (!seq) return std::nullopt;
    return std::vector<int>(seq->begin() + 2, seq->begin() + l);
}

/// Tabulated child-face labelings for l ≡ 2 (mod 3), keyed on
/// (f(u1), f(u2), f(v2)); u3,u4,u5 explicit, then a repeating even triple.
inline std::optional<std::vector<int>> tabulated_extend(const Window4& w, int l,
                                                        const std::vector<char>& demand_edge) {
    if (l < 5 || l % 3 != 2) return std::nullopt;
    if (w.w4 == kAbsent) return std::nullopt;
    if (w.w1 != kAbsent && w.w1 == w.w4) return std::nullopt;
    struct Row {
        std::array<int, 3> key;    // f(u1), f(u2), f(v2)
        std::array<int, 3> head;   // u3, u4, u5
        std::array<int, 3> tail;   // pattern for u6..ul
    };
    static const std::vector<Row> rows = {
        {{4, 6, 2}, {1, 5, 2}, {4, 6, 2}}, {{0, 6, 2}, {1, 5, 2}, {0, 6, 2}},
        {{6, 0, 4}, {3, 1, 4}, {6, 0, 4}}, {{2, 0, 4}, {3, 1, 4}, {2, 0, 4}},
        {{0, 2, 4}, {5, 1, 4}, {0, 2, 4}}, {{0, 4, 2}, {1, 6, 2}, {0, 4, 2}},
        {{6, 4, 2}, {1, 5, 2}, {6, 4, 2}}, {{0, 4, 6}, {1, 3, 6}, {0, 4, 6}},
        {{2, 4, 6}, {1, 3, 6}, {2, 4, 6}}, {{4, 2, 0}, {5, 3, 0}, {4, 2, 0}},
        {{6, 2, 0}, {5, 3, 0}, {4, 2, 0}},
    };
    for (const auto& r : rows) {
        if (r.key != std::array<int, 3>{w.w2, w.w3, w.w4}) continue;
        std::vector<int> out(r.head.begin(), r.head.end());
        for (int i = 0; i < l - 5; ++i) out.push_back(r.tail[i % 3]);
        if (extension_valid(w, l, out, demand_edge)) return out;
        return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace detail

namespace detail {

inline std::optional<std::vector<int>> try_extend(const Window4& w, int l,
                                                  const std::vector<char>& demand_edge,
                                                  Strategy& strat) {
    if (strat.mode == Mode::PaperCases) {
        if (auto fast = tabulated_extend(w, l, demand_edge)) {
            ++strat.telemetry.fast_path_hits;
            return fast;
        }
        ++strat.telemetry.fast_path_misses;
    }
    auto res = search_extend(w, l, demand_edge);
    if (res && !extension_valid(w, l, *res, demand_edge))
        throw NoExtension("extend_over_face: internal checker rejected a completion");
    return res;
}

}  // namespace detail

/// Labels u_3..u_l of a child face of length l across the shared edge (u1,u2),
/// given the labeled window (v1,u1,u2,v2) and the 0-based cycle edges shared
/// with further faces.  Attachability is first demanded on all far edges plus
/// the chords; some windows (e.g. (2,6,0,4) at l=5) admit no such completion,
/// so on failure the demand relaxes to the chord edges only, which is what
/// later steps actually rely on.  Requires the window to be path-extendable;
/// throws NoExtension when no completion exists.
inline std::vector<int> extend_over_face(const Window4& w, int l,
                                         const std::vector<char>& chord_edge, Strategy& strat) {
    if (l < 3) throw std::invalid_argument("extend_over_face: l must be >= 3");
    if (static_cast<int>(chord_edge.size()) != l)
        throw std::invalid_argument("extend_over_face: chord flags size mismatch");
    if (w.w2 == kAbsent || w.w3 == kAbsent)
        throw std::invalid_argument("extend_over_face: shared edge labels required");
    if (!is_path_extendable({w.w1, w.w2, w.w3, w.w4}))
        throw NoExtension("extend_over_face: window is not path-extendable");

    std::vector<char> full(l, 0);
    for (int e = 2; e <= l - 2; ++e) full[e] = 1;
    for (int e = 0; e < l; ++e)
        if (chord_edge[e]) full[e] = 1;
    if (auto res = detail::try_extend(w, l, full, strat)) return *res;

    if (full != chord_edge) {
        ++strat.telemetry.relaxed_demand_uses;
        if (auto res = detail::search_extend(w, l, chord_edge)) return *res;
    }
    throw NoExtension("extend_over_face: no completion for l=" + std::to_string(l));
}

/// Chord-oblivious form demanding attachability on every far edge; strict (no
/// relaxed fallback).
inline std::vector<int> extend_over_face(const Window4& w, int l, Strategy& strat) {
    if (l < 3) throw std::invalid_argument("extend_over_face: l must be >= 3");
    if (w.w2 == kAbsent || w.w3 == kAbsent)
        throw std::invalid_argument("extend_over_face: shared edge labels required");
    if (!is_path_extendable({w.w1, w.w2, w.w3, w.w4}))
        throw NoExtension("extend_over_face: window is not path-extendable");

    std::vector<char> full(l, 0);
    for (int e = 2; e <= l - 2; ++e) full[e] = 1;
    if (auto res = detail::try_extend(w, l, full, strat)) return *res;
    throw NoExtension("extend_over_face: no completion for l=" + std::to_string(l));
}

/// Postcondition checker for attaching a face cycle u_1..u_l at entry vertex
/// u_2 below the labeled context path p1-p2-p3 (p2 adjacent to u_2):
/// local validity plus attachability on every demanded edge (0-based edge e
/// joins u_{e+1} and u_{e+2 mod l} in 1-based terms).
inline bool attach_valid(int p1, int p2, int p3, const std::vector<int>& cyc,
                         const std::vector<char>& demand_edge) {
    int l = static_cast<int>(cyc.size());
    if (l < 3 || static_cast<int>(demand_edge.size()) != l) return false;
    for (int x : cyc)
        if (x < 0 || x > 6) return false;

    int extra = 1 + (p1 != kAbsent ? 1 : 0) + (p3 != kAbsent ? 1 : 0);
    Graph g(l + extra);
    Labeling f(6, l + extra);
    for (int i = 0; i < l; ++i) {
        g.add_edge(i, (i + 1) % l);
        f.labels[i] = cyc[i];
    }
    int pv2 = l;
    g.add_edge(pv2, 1);  // p2 - u2
    f.labels[pv2] = p2;
    int next = l + 1;
    if (p1 != kAbsent) {
        g.add_edge(next, pv2);
        f.labels[next++] = p1;
    }
    if (p3 != kAbsent) {
        g.add_edge(next, pv2);
        f.labels[next++] = p3;
    }
    if (!verify(g, f).empty()) return false;

    auto at = [&](int i) { return cyc[((i % l) + l) % l]; };
    for (int e = 0; e < l; ++e) {
        if (!demand_edge[e]) continue;
        Window4 w{at(e - 1), at(e), at(e + 1), at(e + 2)};
        if (!edge_attachable(w)) return false;
    }
    return true;
}

namespace detail {

/// Min-lex search for a full face-cycle labeling under the attach context.
inline std::optional<std::vector<int>> search_attach(int p1, int p2, int p3, int l,
                                                     const std::vector<char>& demand_edge) {
    // enumerate u1,u2,u3 and solve the rest as a chain with two phantom
    // positions repeating u1,u2 to close the cycle
    for (int a = 0; a <= 6; ++a) {  // u1
        if (a == p2) continue;      // distance 2 via u2
        for (int b = 0; b <= 6; ++b) {  // u2
            if (std::abs(b - a) < 2) continue;
            if (std::abs(b - p2) < 2) continue;
            if (p1 != kAbsent && b == p1) continue;
            if (p3 != kAbsent && b == p3) continue;
            for (int c = 0; c <= 6; ++c) {  // u3
                if (std::abs(c - b) < 2) continue;
                if (l > 3 ? c == a : std::abs(c - a) < 2) continue;
                if (c == p2) continue;  // distance 2 via u2

                if (l == 3) {
                    std::vector<int> cyc{a, b, c};
                    if (attach_valid(p1, p2, p3, cyc, demand_edge)) return cyc;
                    continue;
                }
                int M = l + 2;
                ChainProblem p;
                p.fixed.assign(M, kAbsent);
                p.allowed.assign(M, 0x7F);
                p.demand.assign(M - 1, 0);
                p.fixed[0] = a;
                p.fixed[1] = b;
                p.fixed[2] = c;
                p.fixed[l] = a;
                p.fixed[l + 1] = b;
                for (int e = 1; e <= l - 1; ++e)
                    if (demand_edge[e]) p.demand[e] = 1;
                if (demand_edge[0]) {
                    // window (ul, u1, u2, u3) constrains only ul
                    std::uint8_t mask = 0;
                    for (int x = 0; x <= 6; ++x)
                        if (edge_attachable(Window4{x, a, b, c})) mask |= static_cast<std::uint8_t>(1 << x);
                    p.allowed[l - 1] &= mask;
                }
                ChainSolver solver(p);
                auto seq = solver.solve();
                if (!seq) continue;
                std::vector<int> cyc(seq->begin(), seq->begin() + l);
                if (attach_valid(p1, p2, p3, cyc, demand_edge)) return cyc;
            }
        }
    }
    return std::nullopt;
}

/// Min-lex labeling of a free-standing cycle u_1..u_l with attachability
/// demanded on the flagged 0-based edges; for root faces whose chord layout
/// rules out the seed orientation.
inline std::optional<std::vector<int>> search_cycle(int l, const std::vector<char>& demand_edge) {
    for (int a = 0; a <= 6; ++a) {      // u1
        for (int b = 0; b <= 6; ++b) {  // u2
            if (std::abs(b - a) < 2) continue;
            for (int c = 0; c <= 6; ++c) {  // u3
                if (std::abs(c - b) < 2) continue;
                if (l > 3 ? c == a : std::abs(c - a) < 2) continue;
                if (l == 3) {
                    std::vector<int> cyc{a, b, c};
                    bool ok = true;
                    for (int e = 0; e < l && ok; ++e) {
                        if (!demand_edge[e]) continue;
                        Window4 w{cyc[(e + 2) % 3], cyc[e], cyc[(e + 1) % 3], cyc[(e + 2) % 3]};
                        ok = edge_attachable(w);
                    }
                    if (ok) return cyc;
                    continue;
                }
                int M = l + 2;
                ChainProblem p;
                p.fixed.assign(M, kAbsent);
                p.allowed.assign(M, 0x7F);
                p.demand.assign(M - 1, 0);
                p.fixed[0] = a;
                p.fixed[1] = b;
                p.fixed[2] = c;
                p.fixed[l] = a;
                p.fixed[l + 1] = b;
                for (int e = 1; e <= l - 1; ++e)
                    if (demand_edge[e]) p.demand[e] = 1;
                if (demand_edge[0]) {
                    std::uint8_t mask = 0;
                    for (int x = 0; x <= 6; ++x)
                        if (edge_attachable(Window4{x, a, b, c})) mask |= static_cast<std::uint8_t>(1 << x);
                    p.allowed[l - 1] &= mask;
                }
                ChainSolver solver(p);
                auto seq = solver.solve();
                if (!seq) continue;
                return std::vector<int>(seq->begin(), seq->begin() + l);
            }
        }
    }
    return std::nullopt;
}

/// Candidate face-cycle labelings following the case constructions for
/// attaching a block below a labeled 3-path; each candidate is validated by
/// attach_valid before use.
inline std::vector<std::vector<int>> attach_candidates(int p1, int p2, int p3, int l) {
    std::vector<std::vector<int>> cands;
    auto pend_has = [&](int x) { return p1 == x || p3 == x; };
    int odd_pend = (p1 != kAbsent && p1 % 2 == 1) + (p3 != kAbsent && p3 % 2 == 1);
    int even_pend = (p1 != kAbsent && p1 % 2 == 0) + (p3 != kAbsent && p3 % 2 == 0);
    bool all_odd = p2 % 2 == 1 && odd_pend == 2;

    auto fill_desc = [&](std::vector<int>& u, int from, int to, std::array<int, 3> pat) {
        // fill u[from] down to u[to] with pat repeating downward
        for (int i = from, t = 0; i >= to; --i, ++t) u[i] = pat[t % 3];
    };

    if (l % 3 == 0) {
        if (p2 % 2 == 0) {
            for (int a : evens()) {
                if (a == p2 || pend_has(a)) continue;
                std::vector<int> rem;
                for (int e : evens())
                    if (e != a && e != p2) rem.push_back(e);
                for (int bi = 0; bi < 2; ++bi) {
                    int bb = rem[bi], cc = rem[1 - bi];
                    std::vector<int> u(l);
                    u[0] = bb;
                    u[1] = a;
                    u[2] = cc;
                    for (int i = 3; i < l; ++i) u[i] = std::array<int, 3>{bb, a, cc}[(i - 3) % 3];
                    cands.push_back(u);
                }
            }
        } else if (even_pend <= 1) {
            for (int a : available_neighbor_labels(p2)) {
                if (pend_has(a)) continue;
                std::vector<int> rem;
                for (int e : evens())
                    if (e != a) rem.push_back(e);
                for (size_t i = 0; i < rem.size(); ++i)
                    for (size_t j = 0; j < rem.size(); ++j) {
                        if (i == j) continue;
                        int bb = rem[i], cc = rem[j];
                        std::vector<int> u(l);
                        u[0] = bb;
                        u[1] = a;
                        u[2] = cc;
                        for (int t = 3; t < l; ++t) u[t] = std::array<int, 3>{bb, a, cc}[(t - 3) % 3];
                        cands.push_back(u);
                    }
            }
        } else {
            for (int u2 : odds()) {
                if (u2 == p2) continue;
                auto av = available_neighbor_labels(u2);
                for (int bi = 0; bi < 2; ++bi) {
                    int aa = av[bi], bb = av[1 - bi];
                    for (int cc : evens()) {
                        if (cc == aa || cc == bb) continue;
                        std::vector<int> u(l);
                        u[0] = aa;
                        u[1] = u2;
                        u[2] = bb;
                        for (int t = 3; t < l; ++t) u[t] = std::array<int, 3>{aa, cc, bb}[(t - 3) % 3];
                        cands.push_back(u);
                    }
                }
            }
        }
    } else if (l % 3 == 1) {
        if (all_odd) {
            std::vector<int> u(l);
            if (p2 == 1) {
                u[1] = 6; u[0] = 3; u[l - 1] = 0; u[l - 2] = 2;
                fill_desc(u, l - 3, 2, {4, 0, 2});
            } else if (p2 == 3) {
                u[1] = 0; u[0] = 5; u[l - 1] = 3; u[l - 2] = 6;
                fill_desc(u, l - 3, 2, {0, 2, 6});
            } else {
                u[1] = 0; u[0] = 3; u[l - 1] = 1; u[l - 2] = 6;
                fill_desc(u, l - 3, 2, {0, 2, 6});
            }
            cands.push_back(u);
        } else if (p2 % 2 == 1) {
            for (int u2 : odds()) {
                if (u2 == p2 || pend_has(u2)) continue;
                auto av = available_neighbor_labels(u2);
                for (int bi = 0; bi < 2; ++bi) {
                    int aa = av[bi], bb = av[1 - bi];
                    for (int cc : evens()) {
                        if (cc == aa || cc == bb) continue;
                        std::vector<int> u(l);
                        u[0] = aa;
                        u[1] = u2;
                        u[2] = bb;
                        u[3] = cc;
                        for (int t = 4; t < l; ++t) u[t] = std::array<int, 3>{aa, bb, cc}[(t - 4) % 3];
                        cands.push_back(u);
                    }
                }
            }
        } else {
            for (int a : evens()) {
                if (a == p2 || pend_has(a)) continue;
                for (int d : available_neighbor_labels(a)) {
                    for (int bb : available_neighbor_labels(d)) {
                        if (bb == a) continue;
                        for (int cc : evens()) {
                            if (cc == a || cc == bb || cc == p2) continue;
                            std::vector<int> u(l);
                            u[0] = d;
                            u[1] = a;
                            for (int t = 2; t <= l - 3; ++t)
                                u[t] = std::array<int, 3>{cc, bb, a}[(t - 2) % 3];
                            u[l - 2] = cc;
                            u[l - 1] = bb;
                            cands.push_back(u);
                        }
                    }
                }
            }
        }
    } else {  // l % 3 == 2
        if (all_odd) {
            std::vector<int> u(l);
            if (p2 == 1) {
                u[1] = 6; u[0] = 3; u[l - 1] = 1; u[l - 2] = 4; u[l - 3] = 0;
                fill_desc(u, l - 4, 2, {6, 4, 0});
            } else if (p2 == 3) {
                u[1] = 6; u[0] = 1; u[l - 1] = 5; u[l - 2] = 0; u[l - 3] = 2;
                fill_desc(u, l - 4, 2, {6, 0, 2});
            } else {
                u[1] = 0; u[0] = 3; u[l - 1] = 5; u[l - 2] = 2; u[l - 3] = 4;
                fill_desc(u, l - 4, 2, {0, 2, 4});
            }
            cands.push_back(u);
        } else if (p2 % 2 == 1) {
            for (int u2 : odds()) {
                if (u2 == p2 || pend_has(u2)) continue;
                for (int u1 : odds()) {
                    if (u1 == u2 || u1 == p2) continue;
                    for (int bb : available_neighbor_labels(u2)) {
                        for (int aa : available_neighbor_labels(u1)) {
                            if (aa == bb) continue;
                            for (int cc : evens()) {
                                if (cc == aa || cc == bb) continue;
                                std::vector<int> u(l);
                                u[0] = u1;
                                u[1] = u2;
                                for (int t = 2; t < l; ++t)
                                    u[t] = std::array<int, 3>{bb, cc, aa}[(t - 2) % 3];
                                cands.push_back(u);
                            }
                        }
                    }
                }
            }
        } else {
            for (int a : evens()) {
                if (a == p2 || pend_has(a)) continue;
                for (int d1 : available_neighbor_labels(a)) {
                    for (int d2 : odds()) {
                        if (d2 == d1) continue;
                        for (int bb : available_neighbor_labels(d2)) {
                            if (bb == a) continue;
                            for (int cc : evens()) {
                                if (cc == a || cc == bb || cc == p2) continue;
                                std::vector<int> u(l);
                                u[0] = d1;
                                u[1] = a;
                                u[2] = cc;
                                u[3] = bb;
                                for (int t = 4; t < l - 1; ++t)
                                    u[t] = std::array<int, 3>{a, cc, bb}[(t - 4) % 3];
                                u[l - 1] = d2;
                                cands.push_back(u);
                            }
                        }
                    }
                }
            }
        }
    }
    return cands;
}

}  // namespace detail

/// Labels the entry face cycle u_1..u_l of a block reached from a labeled
/// 3-path p1-p2-p3 whose middle vertex p2 is adjacent to the entry vertex
/// u_2.  chord_edge[e] marks 0-based cycle edges shared with further faces;
/// those must stay attachable.  The usual demand also covers all type-2
/// window edges; if that fails the demand relaxes to the actual chords only.
inline std::vector<int> attach_block_face(int p1, int p2, int p3, int l,
                                          const std::vector<char>& chord_edge, Strategy& strat) {
    if (l < 3) throw std::invalid_argument("attach_block_face: l must be >= 3");
    if (p2 == kAbsent) throw std::invalid_argument("attach_block_face: p2 required");
    if (static_cast<int>(chord_edge.size()) != l)
        throw std::invalid_argument("attach_block_face: chord flags size mismatch");

    std::vector<char> full(l, 0);
    for (int e = 1; e <= l - 2; ++e) full[e] = 1;
    for (int e = 0; e < l; ++e)
        if (chord_edge[e]) full[e] = 1;

    if (strat.mode != Mode::CertifiedSearch) {
        bool hit = false;
        for (const auto& cand : detail::attach_candidates(p1, p2, p3, l))
            if (attach_valid(p1, p2, p3, cand, full)) {
                ++strat.telemetry.fast_path_hits;
                hit = true;
                return cand;
            }
        if (!hit) ++strat.telemetry.fast_path_misses;
    }

    if (auto res = detail::search_attach(p1, p2, p3, l, full)) return *res;

    ++strat.telemetry.relaxed_demand_uses;
    std::vector<char> relaxed(chord_edge.begin(), chord_edge.end());
    if (auto res = detail::search_attach(p1, p2, p3, l, relaxed)) return *res;
    throw NoExtension("attach_block_face: no labeling for l=" + std::to_string(l));
}

/// Dummy third context label when a branch provides fewer than three labeled
/// predecessors: same parity as the last label, distinct from the last two.
inline int dummy_context_label(int last, int second_last) {
    if (last < 0 || last > 6) throw std::invalid_argument("dummy_context_label: bad label");
    for (int c = last % 2 == 0 ? 0 : 1; c <= 6; c += 2)
        if (c != last && c != second_last) return c;
    throw std::logic_error("dummy_context_label: unreachable");
}

}  // namespace l21
