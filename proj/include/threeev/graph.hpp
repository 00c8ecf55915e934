#pragma once

// Finite simple graphs and the constructions used by the certification
// corpus. Adjacency is a dense symmetric bool matrix; the graphs here are
// small (the corpus tops out well under a hundred vertices).

#include "exact.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <vector>

namespace threeev {

class Graph {
public:
    explicit Graph(int n = 0) : n_(n), adj_(n, std::vector<bool>(n, false)) {
        if (n < 0) throw std::invalid_argument("Graph: negative order");
    }

    int order() const { return n_; }

    void add_edge(int u, int v) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("add_edge: vertex out of range");
        if (u == v) throw std::invalid_argument("add_edge: loop");
        if (adj_[u][v]) throw std::invalid_argument("add_edge: duplicate edge");
        adj_[u][v] = adj_[v][u] = true;
    }

    bool adjacent(int u, int v) const { return adj_[u][v]; }

    i64 degree(int v) const {
        i64 d = 0;
        for (int u = 0; u < n_; ++u) d += adj_[v][u];
        return d;
    }

    i64 edge_count() const {
        i64 e = 0;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v) e += adj_[u][v];
        return e;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> es;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (adj_[u][v]) es.emplace_back(u, v);
        return es;
    }

    i64 common_neighbors(int u, int v) const {
        i64 c = 0;
        for (int w = 0; w < n_; ++w) c += adj_[u][w] && adj_[v][w];
        return c;
    }

    bool connected() const {
        if (n_ == 0) return false;
        std::vector<bool> seen(n_, false);
        std::vector<int> stack{0};
        seen[0] = true;
        int visited = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u = 0; u < n_; ++u)
                if (adj_[v][u] && !seen[u]) {
                    seen[u] = true;
                    ++visited;
                    stack.push_back(u);
                }
        }
        return visited == n_;
    }

    // Closed walks of length three starting at v (twice the triangle count).
    i64 closed_walks3_at(int v) const {
        i64 tri = 0;
        for (int u = 0; u < n_; ++u) {
            if (!adj_[v][u]) continue;
            for (int w = u + 1; w < n_; ++w)
                if (adj_[v][w] && adj_[u][w]) ++tri;
        }
        return 2 * tri;
    }

private:
    int n_;
    std::vector<std::vector<bool>> adj_;
};

inline Graph build_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("build_complete_bipartite: parts must be nonempty");
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

// Petersen graph as the Kneser graph K(5,2): 2-subsets of {0..4}, adjacent
// when disjoint.
inline Graph build_petersen() {
    std::vector<std::pair<int, int>> subsets;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) subsets.emplace_back(i, j);
    Graph g(10);
    for (int x = 0; x < 10; ++x)
        for (int y = x + 1; y < 10; ++y) {
            auto [a, b] = subsets[x];
            auto [c, d] = subsets[y];
            if (a != c && a != d && b != c && b != d) g.add_edge(x, y);
        }
    return g;
}

// Apex vertex adjacent to everything in g.
inline Graph build_cone(const Graph& g) {
    const int n = g.order();
    Graph c(n + 1);
    for (auto [u, v] : g.edges()) c.add_edge(u, v);
    for (int v = 0; v < n; ++v) c.add_edge(n, v);
    return c;
}

// Fano graph: outer vertices O_0..O_6 (indices 0..6), inner clique I_0..I_6
// (indices 7..13); O_i ~ I_i, I_{i+1}, I_{i-1}, I_{i+3} (mod 7). The offsets
// {0, +1, -1, +3} form a perfect difference family mod 7, which is what makes
// the common-neighbour counts uniform.
inline Graph build_fano() {
    Graph g(14);
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j) g.add_edge(7 + i, 7 + j);
    const int offs[4] = {0, 1, 6, 3};
    for (int i = 0; i < 7; ++i)
        for (int o : offs) g.add_edge(i, 7 + (i + o) % 7);
    return g;
}

// Vertex classes ordered by increasing valency.
inline std::vector<std::vector<int>> valency_partition(const Graph& g) {
    std::vector<std::pair<i64, int>> by_deg;
    for (int v = 0; v < g.order(); ++v) by_deg.emplace_back(g.degree(v), v);
    std::sort(by_deg.begin(), by_deg.end());
    std::vector<std::vector<int>> classes;
    for (auto [d, v] : by_deg) {
        if (classes.empty() || g.degree(classes.back().front()) != d) classes.push_back({});
        classes.back().push_back(v);
    }
    return classes;
}

struct EquitableResult {
    bool equitable = false;
    std::vector<std::vector<i64>> quotient;  // set when equitable
};

inline EquitableResult is_equitable(const Graph& g, const std::vector<std::vector<int>>& parts) {
    const int r = static_cast<int>(parts.size());
    EquitableResult res;
    res.quotient.assign(r, std::vector<i64>(r, 0));
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            i64 ref = -1;
            for (int x : parts[i]) {
                i64 cnt = 0;
                for (int y : parts[j]) cnt += g.adjacent(x, y);
                if (ref < 0) ref = cnt;
                else if (cnt != ref) return res;  // equitable stays false
            }
            res.quotient[i][j] = ref < 0 ? 0 : ref;
        }
    }
    res.equitable = true;
    return res;
}

// Plain text graph format: first line "n e", then e lines "u v", 0-based.
inline Graph read_graph(std::istream& in) {
    int n = 0;
    i64 e = 0;
    if (!(in >> n >> e)) throw std::invalid_argument("graph file: bad header");
    Graph g(n);
    for (i64 i = 0; i < e; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw std::invalid_argument("graph file: truncated edge list");
        g.add_edge(u, v);  // rejects loops and duplicates
    }
    return g;
}

inline void write_graph(std::ostream& out, const Graph& g) {
    auto es = g.edges();
    out << g.order() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
}

// FNV-1a over the sorted edge list; stable fingerprint for certificates.
inline std::uint64_t edges_hash(const Graph& g) {
    std::uint64_t h = 1469598103934665603ull;
    auto feed = [&](std::uint64_t x) {
        for (int b = 0; b < 8; ++b) {
            h ^= (x >> (8 * b)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    feed(static_cast<std::uint64_t>(g.order()));
    for (auto [u, v] : g.edges()) {
        feed(static_cast<std::uint64_t>(u));
        feed(static_cast<std::uint64_t>(v));
    }
    return h;
}

} // namespace threeev
