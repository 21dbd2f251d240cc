#pragma once

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace l21 {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Simple undirected graph, vertices 0..n-1, adjacency lists kept sorted.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
    }

    int n() const { return static_cast<int>(adj_.size()); }
    int m() const { return m_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("loop edge " + std::to_string(u));
        if (has_edge(u, v))
            throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        insert_sorted(adj_[u], v);
        insert_sorted(adj_[v], u);
        ++m_;
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n(); ++v) d = std::max(d, degree(v));
        return d;
    }

    /// All edges as (u,v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> es;
        es.reserve(m_);
        for (int u = 0; u < n(); ++u)
            for (int v : adj_[u])
                if (u < v) es.emplace_back(u, v);
        return es;
    }

    std::vector<std::vector<int>> connected_components() const {
        std::vector<std::vector<int>> comps;
        std::vector<char> seen(n(), 0);
        std::vector<int> stack;
        for (int s = 0; s < n(); ++s) {
            if (seen[s]) continue;
            std::vector<int> comp;
            stack.push_back(s);
            seen[s] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                comp.push_back(v);
                for (int w : adj_[v])
                    if (!seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
            }
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
        return comps;
    }

    bool operator==(const Graph& o) const { return adj_ == o.adj_; }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n())
            throw std::out_of_range("vertex index out of range: " + std::to_string(v));
    }
    static void insert_sorted(std::vector<int>& vec, int x) {
        vec.insert(std::upper_bound(vec.begin(), vec.end(), x), x);
    }

    std::vector<std::vector<int>> adj_;
    int m_ = 0;
};

/// Subgraph induced by `vertices`; local index i corresponds to vertices[i].
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> local(g.n(), -1);
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) local[vertices[i]] = i;
    Graph sub(static_cast<int>(vertices.size()));
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
        for (int w : g.neighbors(vertices[i]))
            if (local[w] > i) sub.add_edge(i, local[w]);
    return sub;
}

/// Edge-list format: first line "n m", then m lines "u v"; '#' starts a comment.
inline Graph parse_edge_list(std::istream& in) {
    auto next_line = [&](std::string& line) -> bool {
        while (std::getline(in, line)) {
            auto pos = line.find('#');
            if (pos != std::string::npos) line.erase(pos);
            bool blank = line.find_first_not_of(" \t\r\n") == std::string::npos;
            if (!blank) return true;
        }
        return false;
    };

    std::string line;
    if (!next_line(line)) throw ParseError("empty edge list input");
    std::istringstream head(line);
    long long n = -1, m = -1;
    if (!(head >> n >> m) || n < 0 || m < 0) throw ParseError("malformed header line: " + line);
    std::string junk;
    if (head >> junk) throw ParseError("trailing tokens in header line: " + line);

    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        if (!next_line(line)) throw ParseError("expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        std::istringstream es(line);
        long long u, v;
        if (!(es >> u >> v)) throw ParseError("malformed edge line: " + line);
        if (es >> junk) throw ParseError("trailing tokens in edge line: " + line);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("vertex index out of range: " + line);
        try {
            g.add_edge(static_cast<int>(u), static_cast<int>(v));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    return g;
}

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

inline std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

// graph6: size header (n+63, or '~' + 18 bits for n > 62), then the upper
// triangle in column order, 6 bits per printable byte, zero-padded.

inline std::string graph6_encode(const Graph& g) {
    int n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw std::invalid_argument("graph6: n too large");
    }
    int acc = 0, bits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                bits = 0;
            }
        }
    if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
    return out;
}

inline Graph graph6_decode(const std::string& s) {
    size_t pos = 0;
    auto byte = [&]() -> int {
        if (pos >= s.size()) throw ParseError("graph6: truncated input");
        int c = static_cast<unsigned char>(s[pos++]);
        if (c < 63 || c > 126) throw ParseError("graph6: invalid byte");
        return c - 63;
    };
    long long n;
    int first = byte();
    if (first == 63) {  // '~'
        if (pos < s.size() && s[pos] == '~') throw ParseError("graph6: n too large");
        n = (static_cast<long long>(byte()) << 12);
        n |= (byte() << 6);
        n |= byte();
    } else {
        n = first;
    }
    Graph g(static_cast<int>(n));
    long long nbits = n * (n - 1) / 2;
    int acc = 0, bits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (bits == 0) {
                acc = byte();
                bits = 6;
            }
            if (acc & (1 << (bits - 1))) g.add_edge(i, j);
            --bits;
        }
    // remaining padding bits must be zero and no bytes may follow
    if (bits > 0 && (acc & ((1 << bits) - 1)) != 0) throw ParseError("graph6: nonzero padding");
    if (pos != s.size()) throw ParseError("graph6: trailing bytes");
    (void)nbits;
    return g;
}

}  // namespace l21
