#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "l21/graph.hpp"
#include "l21/labeling.hpp"

namespace l21 {

struct BudgetExceeded : std::runtime_error {
    long long nodes;
    explicit BudgetExceeded(long long n)
        : std::runtime_error("search budget exceeded after " + std::to_string(n) + " nodes"), nodes(n) {}
};

struct Infeasible {
    int k_tested = -1;
    long long nodes_explored = 0;
};

struct FeasibleResult {
    std::optional<Labeling> witness;  // present iff feasible
    Infeasible certificate;           // meaningful when infeasible
    bool feasible() const { return witness.has_value(); }
};

namespace detail {

/// Exact distance-2 neighbour lists: common neighbour, not adjacent.
inline std::vector<std::vector<int>> distance2_lists(const Graph& g) {
    std::vector<std::vector<int>> d2(g.n());
    for (int w = 0; w < g.n(); ++w) {
        const auto& nb = g.neighbors(w);
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j) {
                int u = nb[i], v = nb[j];
                if (g.has_edge(u, v)) continue;
                d2[u].push_back(v);
                d2[v].push_back(u);
            }
    }
    for (auto& v : d2) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    return d2;
}

class KFeasibleSearch {
public:
    KFeasibleSearch(const Graph& g, int k, int p, int q, long long budget,
                    const std::vector<int>& fixed)
        : g_(g), k_(k), p_(p), q_(q), budget_(budget), fixed_(fixed) {
        if (k_ < 0 || k_ > 62) throw std::invalid_argument("k_feasible: k must be in [0, 62]");
        if (p_ < 0 || q_ < 0) throw std::invalid_argument("k_feasible: p, q must be >= 0");
        full_ = (k_ == 62) ? ~0ULL >> 1 : ((1ULL << (k_ + 1)) - 1);
        d2_ = distance2_lists(g_);
    }

    FeasibleResult run() {
        int n = g_.n();
        labels_.assign(n, kAbsent);
        domain_.assign(n, full_);
        nodes_ = 0;

        bool has_fixed = false;
        for (int v = 0; v < n && !has_fixed; ++v)
            if (!fixed_.empty() && fixed_[v] != kAbsent) has_fixed = true;

        // assignment order: BFS from the smallest-index maximum-degree vertex
        order_ = bfs_order();
        pos_in_order_.assign(n, -1);
        for (int i = 0; i < n; ++i) pos_in_order_[order_[i]] = i;

        bool propagate_ok = true;
        if (has_fixed) {
            for (int v = 0; v < n; ++v) {
                if (fixed_[v] == kAbsent) continue;
                if (fixed_[v] < 0 || fixed_[v] > k_) return infeasible();
                if (!(domain_[v] >> fixed_[v] & 1)) {
                    propagate_ok = false;
                    break;
                }
                std::vector<std::pair<int, std::uint64_t>> trail;
                labels_[v] = fixed_[v];
                if (!prune_neighbors(v, fixed_[v], trail)) {
                    propagate_ok = false;
                    break;
                }
            }
        }
        symmetry_break_ = !has_fixed;
        if (propagate_ok && search(0)) {
            Labeling f(k_, n);
            f.labels = labels_;
            FeasibleResult r;
            r.witness = std::move(f);
            r.certificate = {k_, nodes_};
            return r;
        }
        return infeasible();
    }

private:
    FeasibleResult infeasible() const {
        FeasibleResult r;
        r.certificate = {k_, nodes_};
        return r;
    }

    std::vector<int> bfs_order() {
        int n = g_.n();
        int dmax = g_.max_degree();
        std::vector<int> order;
        std::vector<char> seen(n, 0);
        for (int s = 0; s < n; ++s) {
            if (seen[s]) continue;
            // pick the smallest-index max-degree vertex of this component
            std::vector<int> comp;
            std::vector<int> stack{s};
            seen[s] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                comp.push_back(v);
                for (int w : g_.neighbors(v))
                    if (!seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
            }
            std::sort(comp.begin(), comp.end());
            int root = comp[0];
            for (int v : comp)
                if (g_.degree(v) == dmax) {
                    root = v;
                    break;
                }
            std::vector<char> vis(n, 0);
            std::vector<int> queue{root};
            vis[root] = 1;
            for (size_t h = 0; h < queue.size(); ++h) {
                int v = queue[h];
                order.push_back(v);
                for (int w : g_.neighbors(v))
                    if (!vis[w]) {
                        vis[w] = 1;
                        queue.push_back(w);
                    }
            }
        }
        return order;
    }

    std::uint64_t conflict_mask(int c, int gap) const {
        // labels x with |x - c| < gap
        std::uint64_t m = 0;
        for (int x = std::max(0, c - gap + 1); x <= std::min(k_, c + gap - 1); ++x) m |= 1ULL << x;
        return m;
    }

    bool prune_neighbors(int v, int c, std::vector<std::pair<int, std::uint64_t>>& trail) {
        std::uint64_t adj_mask = conflict_mask(c, p_);
        std::uint64_t d2_mask = conflict_mask(c, q_);
        for (int u : g_.neighbors(v)) {
            if (labels_[u] != kAbsent) continue;
            std::uint64_t removed = domain_[u] & adj_mask;
            if (removed) {
                trail.emplace_back(u, removed);
                domain_[u] &= ~adj_mask;
                if (domain_[u] == 0) return false;
            }
        }
        for (int u : d2_[v]) {
            if (labels_[u] != kAbsent) continue;
            std::uint64_t removed = domain_[u] & d2_mask;
            if (removed) {
                trail.emplace_back(u, removed);
                domain_[u] &= ~d2_mask;
                if (domain_[u] == 0) return false;
            }
        }
        return true;
    }

    bool consistent(int v, int c) const {
        for (int u : g_.neighbors(v))
            if (labels_[u] != kAbsent && std::abs(labels_[u] - c) < p_) return false;
        for (int u : d2_[v])
            if (labels_[u] != kAbsent && std::abs(labels_[u] - c) < q_) return false;
        return true;
    }

    bool search(int idx) {
        int n = g_.n();
        while (idx < n && labels_[order_[idx]] != kAbsent) ++idx;
        if (idx == n) return true;
        int v = order_[idx];
        int hi = k_;
        if (symmetry_break_ && idx == 0) hi = (k_ + 1) / 2;  // complement symmetry
        for (int c = 0; c <= hi; ++c) {
            if (!(domain_[v] >> c & 1)) continue;
            if (!consistent(v, c)) continue;
            if (++nodes_ > budget_) throw BudgetExceeded(nodes_);
            labels_[v] = c;
            std::vector<std::pair<int, std::uint64_t>> trail;
            bool ok = prune_neighbors(v, c, trail);
            if (ok && search(idx + 1)) return true;
            for (auto& [u, removed] : trail) domain_[u] |= removed;
            labels_[v] = kAbsent;
        }
        return false;
    }

    const Graph& g_;
    int k_, p_, q_;
    long long budget_;
    std::vector<int> fixed_;
    std::uint64_t full_;
    std::vector<std::vector<int>> d2_;
    std::vector<int> labels_;
    std::vector<std::uint64_t> domain_;
    std::vector<int> order_;
    std::vector<int> pos_in_order_;
    long long nodes_ = 0;
    bool symmetry_break_ = true;
};

}  // namespace detail

/// Searches for a total labeling with labels in [0,k] meeting the L(p,q)
/// constraints at distances 1 and 2.  `fixed` may pre-assign labels
/// (kAbsent = free); empty means no pre-assignment.
inline FeasibleResult k_feasible(const Graph& g, int k, int p = 2, int q = 1,
                                 long long budget = 1000000000LL,
                                 const std::vector<int>& fixed = {}) {
    if (!fixed.empty() && static_cast<int>(fixed.size()) != g.n())
        throw std::invalid_argument("k_feasible: fixed labels size mismatch");
    detail::KFeasibleSearch s(g, k, p, q, budget, fixed);
    return s.run();
}

struct LambdaResult {
    int lambda = 0;
    Labeling witness;
    bool has_certificate = false;
    Infeasible certificate;  // for k = lambda - 1 when present
};

/// Minimum k such that g admits a k-L(p,q)-labeling, searching upward from
/// the trivial lower bound.
inline LambdaResult lambda_exact(const Graph& g, int p = 2, int q = 1,
                                 long long budget = 1000000000LL) {
    int start = 0;
    if (g.m() > 0 && p == 2 && q == 1) start = g.max_degree() + 1;
    LambdaResult res;
    for (int k = start; k <= 62; ++k) {
        auto r = k_feasible(g, k, p, q, budget);
        if (r.feasible()) {
            res.lambda = k;
            res.witness = *r.witness;
            return res;
        }
        res.has_certificate = true;
        res.certificate = r.certificate;
    }
    throw std::runtime_error("lambda_exact: no labeling with k <= 62");
}

}  // namespace l21
