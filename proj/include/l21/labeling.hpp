#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "l21/graph.hpp"

namespace l21 {

constexpr int kAbsent = -1;

struct Labeling {
    int k = 6;
    std::vector<int> labels;  // kAbsent when unassigned

    Labeling() = default;
    Labeling(int k_, int n) : k(k_), labels(n, kAbsent) {}

    bool total() const {
        return std::none_of(labels.begin(), labels.end(), [](int x) { return x == kAbsent; });
    }
    int span() const {
        int lo = 7 * 1000, hi = -1;
        for (int x : labels)
            if (x != kAbsent) {
                lo = std::min(lo, x);
                hi = std::max(hi, x);
            }
        return hi < 0 ? 0 : hi - lo;
    }
};

struct Violation {
    int u, v;
    int distance;  // 1 or 2
    int label_u, label_v;
};

/// All L(2,1) violations: adjacent pairs with |f(u)-f(v)| < p and distance-2
/// pairs with |f(u)-f(v)| < q.  Throws if the labeling is partial.
inline std::vector<Violation> verify(const Graph& g, const Labeling& f, int p = 2, int q = 1) {
    if (static_cast<int>(f.labels.size()) != g.n())
        throw std::invalid_argument("verify: labeling size mismatch");
    if (!f.total()) throw std::invalid_argument("verify: labeling is partial");

    std::vector<Violation> out;
    for (auto [u, v] : g.edges())
        if (std::abs(f.labels[u] - f.labels[v]) < p)
            out.push_back({u, v, 1, f.labels[u], f.labels[v]});

    std::set<std::pair<int, int>> seen;
    for (int w = 0; w < g.n(); ++w) {
        const auto& nb = g.neighbors(w);
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j) {
                int u = nb[i], v = nb[j];
                if (g.has_edge(u, v)) continue;  // distance 1, not 2
                if (!seen.insert({u, v}).second) continue;
                if (std::abs(f.labels[u] - f.labels[v]) < q)
                    out.push_back({u, v, 2, f.labels[u], f.labels[v]});
            }
    }
    return out;
}

/// Labels usable on a new neighbor of a vertex labeled x, restricted to the
/// opposite parity: L_x (even options) for odd x, M_x (odd options) for even x.
inline std::vector<int> available_neighbor_labels(int x) {
    if (x < 0 || x > 6) throw std::invalid_argument("label out of range");
    std::vector<int> out;
    int start = (x % 2 == 1) ? 0 : 1;
    for (int y = start; y <= 6; y += 2)
        if (std::abs(x - y) >= 2) out.push_back(y);
    return out;
}

/// Four consecutive labels along a path; the middle edge is (w2,w3).
/// w1 / w4 may be kAbsent when the path ends without a pendant.
struct Window4 {
    int w1 = kAbsent, w2 = kAbsent, w3 = kAbsent, w4 = kAbsent;
};

/// Legal labels for a new vertex adjacent to both middle vertices of w.
inline std::vector<int> triangle_attach_options(const Window4& w) {
    std::vector<int> out;
    for (int c = 0; c <= 6; ++c) {
        if (std::abs(c - w.w2) < 2 || std::abs(c - w.w3) < 2) continue;
        if (w.w1 != kAbsent && c == w.w1) continue;
        if (w.w4 != kAbsent && c == w.w4) continue;
        out.push_back(c);
    }
    return out;
}

/// Legal (c1,c2) for the two interior vertices of a length-3 path attached
/// across the middle edge of w.
inline std::vector<std::pair<int, int>> square_attach_options(const Window4& w) {
    std::vector<std::pair<int, int>> out;
    for (int c1 = 0; c1 <= 6; ++c1) {
        if (std::abs(c1 - w.w2) < 2 || c1 == w.w3) continue;
        if (w.w1 != kAbsent && c1 == w.w1) continue;
        for (int c2 = 0; c2 <= 6; ++c2) {
            if (std::abs(c1 - c2) < 2) continue;
            if (std::abs(c2 - w.w3) < 2 || c2 == w.w2) continue;
            if (w.w4 != kAbsent && c2 == w.w4) continue;
            out.emplace_back(c1, c2);
        }
    }
    return out;
}

inline bool edge_attachable(const Window4& w) {
    return !triangle_attach_options(w).empty() && !square_attach_options(w).empty();
}

namespace detail {

/// Validity of a label sequence read along a path: consecutive labels differ
/// by >= 2 and labels two apart differ.  kAbsent entries impose nothing.
inline bool path_labels_valid(const std::vector<int>& f) {
    int m = static_cast<int>(f.size());
    for (int i = 0; i + 1 < m; ++i)
        if (f[i] != kAbsent && f[i + 1] != kAbsent && std::abs(f[i] - f[i + 1]) < 2) return false;
    for (int i = 0; i + 2 < m; ++i)
        if (f[i] != kAbsent && f[i + 2] != kAbsent && f[i] == f[i + 2]) return false;
    return true;
}

}  // namespace detail

/// Path-extendability test for a labeled path u, u_1, ..., u_l, v where the
/// first and last entries are the pendants (kAbsent when missing).  True iff
/// the labeling is valid along the path and every interior edge
/// (u_i, u_{i+1}) admits both a triangle and a square attachment.
inline bool is_path_extendable(const std::vector<int>& f) {
    int m = static_cast<int>(f.size());
    if (m < 4) throw std::invalid_argument("is_path_extendable: need at least 4 entries");
    for (int i = 1; i + 1 < m; ++i)
        if (f[i] == kAbsent) throw std::invalid_argument("is_path_extendable: interior label missing");
    if (!detail::path_labels_valid(f)) return false;
    for (int i = 1; i + 2 < m; ++i) {
        Window4 w{f[i - 1], f[i], f[i + 1], f[i + 2]};
        if (!edge_attachable(w)) return false;
    }
    return true;
}

/// Cycle-extendability for a labeled cycle u_1..u_l given 0-based start index.
/// Type 1 demands attachability at every cyclic edge; type 2 exempts the two
/// edges incident to the start vertex.
inline bool is_cycle_extendable(const std::vector<int>& f, int type, int start = 0) {
    int l = static_cast<int>(f.size());
    if (l < 3) throw std::invalid_argument("is_cycle_extendable: need cycle length >= 3");
    if (type != 1 && type != 2) throw std::invalid_argument("is_cycle_extendable: type must be 1 or 2");
    if (start < 0 || start >= l) throw std::invalid_argument("is_cycle_extendable: bad start index");
    for (int x : f)
        if (x == kAbsent) throw std::invalid_argument("is_cycle_extendable: partial labeling");

    auto at = [&](int i) { return f[((i % l) + l) % l]; };
    for (int i = 0; i < l; ++i) {
        if (std::abs(at(i) - at(i + 1)) < 2) return false;
        if (l >= 4 && at(i) == at(i + 2)) return false;  // i, i+2 at distance 2
    }
    for (int i = 0; i < l; ++i) {
        // edge (u_i, u_{i+1}) in cyclic terms
        if (type == 2) {
            int a = ((i - start) % l + l) % l;  // offset of edge start from u_1
            if (a == 0 || a == l - 1) continue;  // edges incident to the start vertex
        }
        Window4 w{at(i - 1), at(i), at(i + 1), at(i + 2)};
        if (!edge_attachable(w)) return false;
    }
    return true;
}

/// Repeats an even pairwise-distinct triple to the requested length.
inline std::vector<int> apply_pattern(int count, std::array<int, 3> t) {
    if (count < 1) throw std::invalid_argument("apply_pattern: count must be >= 1");
    for (int x : t)
        if (x % 2 != 0 || x < 0 || x > 6)
            throw std::invalid_argument("apply_pattern: " + std::to_string(x) + " not in {0,2,4,6}");
    if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2])
        throw std::invalid_argument("apply_pattern: entries must be distinct");
    std::vector<int> out(count);
    for (int i = 0; i < count; ++i) out[i] = t[i % 3];
    return out;
}

}  // namespace l21
