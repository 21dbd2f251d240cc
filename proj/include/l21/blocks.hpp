#pragma once

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>
#include <vector>

#include "l21/graph.hpp"

namespace l21 {

/// Blocks are the maximal 2-connected subgraphs with at least one cycle
/// (>= 3 vertices).  Bridge edges are covered by branches: maximal paths
/// whose interior vertices have degree 2 in the whole graph and whose ends
/// either lie in a block, have degree >= 3, or are leaves.  The block tree
/// has one node per block, per branch, and per junction vertex (a vertex of
/// degree >= 3 outside every block).
struct BlockDecomposition {
    std::vector<std::vector<int>> blocks;   // sorted vertex sets
    std::vector<int> cut_vertices;          // block vertices with an incident bridge
    std::vector<std::vector<int>> branches; // vertex paths v1..vt, t >= 2
    std::vector<int> junctions;

    // tree node ids: blocks, then branches, then junctions
    std::vector<std::vector<int>> tree_adj;
    int block_of(int v) const { return vertex_block.empty() ? -1 : vertex_block[v]; }
    std::vector<int> vertex_block;          // -1 when not in a cyclic block
};

namespace detail {

/// Tarjan biconnected components (iterative); returns edge lists per component.
inline std::vector<std::vector<std::pair<int, int>>> biconnected_edge_components(const Graph& g) {
    int n = g.n();
    std::vector<int> num(n, -1), low(n, 0), parent(n, -1), it(n, 0);
    std::vector<std::pair<int, int>> estack;
    std::vector<std::vector<std::pair<int, int>>> comps;
    int timer = 0;

    for (int s = 0; s < n; ++s) {
        if (num[s] != -1) continue;
        std::vector<int> stack{s};
        num[s] = low[s] = timer++;
        while (!stack.empty()) {
            int v = stack.back();
            if (it[v] < g.degree(v)) {
                int w = g.neighbors(v)[it[v]++];
                if (num[w] == -1) {
                    estack.emplace_back(v, w);
                    parent[w] = v;
                    num[w] = low[w] = timer++;
                    stack.push_back(w);
                } else if (w != parent[v] && num[w] < num[v]) {
                    estack.emplace_back(v, w);
                    low[v] = std::min(low[v], num[w]);
                }
            } else {
                stack.pop_back();
                int p = parent[v];
                if (p != -1) {
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] >= num[p]) {
                        std::vector<std::pair<int, int>> comp;
                        while (true) {
                            auto e = estack.back();
                            estack.pop_back();
                            comp.push_back(e);
                            if (e == std::make_pair(p, v)) break;
                        }
                        comps.push_back(std::move(comp));
                    }
                }
            }
        }
    }
    return comps;
}

}  // namespace detail

inline BlockDecomposition block_decomposition(const Graph& g) {
    BlockDecomposition bd;
    int n = g.n();
    bd.vertex_block.assign(n, -1);
    if (n == 0) return bd;

    auto comps = detail::biconnected_edge_components(g);
    for (auto& comp : comps) {
        if (comp.size() < 2) continue;  // bridge: handled via branches
        std::set<int> vs;
        for (auto [u, v] : comp) {
            vs.insert(u);
            vs.insert(v);
        }
        bd.blocks.emplace_back(vs.begin(), vs.end());
    }
    std::sort(bd.blocks.begin(), bd.blocks.end());  // blocks are vertex-disjoint
    for (int id = 0; id < static_cast<int>(bd.blocks.size()); ++id)
        for (int v : bd.blocks[id]) bd.vertex_block[v] = id;

    // branch skeleton: walk bridge edges through degree-2 chains
    auto is_chain_interior = [&](int v) {
        return bd.vertex_block[v] == -1 && g.degree(v) == 2;
    };
    std::set<std::pair<int, int>> used;
    auto mark = [&](int u, int v) { used.insert({std::min(u, v), std::max(u, v)}); };
    auto is_used = [&](int u, int v) { return used.count({std::min(u, v), std::max(u, v)}) > 0; };
    auto in_block_edge = [&](int u, int v) {
        return bd.vertex_block[u] != -1 && bd.vertex_block[u] == bd.vertex_block[v];
    };

    for (int s = 0; s < n; ++s) {
        if (is_chain_interior(s)) continue;  // start branches at endpoints only
        for (int w0 : g.neighbors(s)) {
            if (in_block_edge(s, w0) || is_used(s, w0)) continue;
            std::vector<int> path{s};
            int prev = s, cur = w0;
            mark(prev, cur);
            while (is_chain_interior(cur)) {
                path.push_back(cur);
                int nxt = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
                mark(cur, nxt);
                prev = cur;
                cur = nxt;
            }
            path.push_back(cur);
            bd.branches.push_back(std::move(path));
        }
    }
    // isolated cycles of degree-2 vertices are blocks already; pure degree-2
    // cycles outside blocks cannot occur (a cycle is 2-connected)

    for (int v = 0; v < n; ++v)
        if (bd.vertex_block[v] == -1 && g.degree(v) >= 3) bd.junctions.push_back(v);
    for (int v = 0; v < n; ++v) {
        if (bd.vertex_block[v] == -1) continue;
        for (int w : g.neighbors(v))
            if (!in_block_edge(v, w)) {
                bd.cut_vertices.push_back(v);
                break;
            }
    }

    // block tree: blocks, branches, junction vertices
    int nb = static_cast<int>(bd.blocks.size());
    int nr = static_cast<int>(bd.branches.size());
    int nj = static_cast<int>(bd.junctions.size());
    bd.tree_adj.assign(nb + nr + nj, {});
    std::vector<int> junction_id(n, -1);
    for (int i = 0; i < nj; ++i) junction_id[bd.junctions[i]] = nb + nr + i;
    auto link = [&](int a, int b) {
        bd.tree_adj[a].push_back(b);
        bd.tree_adj[b].push_back(a);
    };
    for (int i = 0; i < nr; ++i) {
        for (int end : {bd.branches[i].front(), bd.branches[i].back()}) {
            if (bd.vertex_block[end] != -1)
                link(nb + i, bd.vertex_block[end]);
            else if (junction_id[end] != -1)
                link(nb + i, junction_id[end]);
            // leaf ends attach to nothing
        }
    }
    return bd;
}

}  // namespace l21
