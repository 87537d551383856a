#pragma once

#include "bits.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <vector>

namespace evenhole {

using VertexSet = Bits;

// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
// Build with add_edge and then treat as immutable; all algorithms are pure.
struct Graph {
    int n = 0;
    std::vector<Bits> adj;

    Graph() = default;
    explicit Graph(int n_) : n(n_), adj(n_) { assert(n_ >= 0 && n_ <= Bits::capacity); }

    bool adjacent(int u, int v) const {
        assert(u >= 0 && u < n && v >= 0 && v < n);
        return adj[u].test(v);
    }
    void add_edge(int u, int v) {
        assert(u != v);
        assert(u >= 0 && u < n && v >= 0 && v < n);
        adj[u].set(v);
        adj[v].set(u);
    }
    void remove_edge(int u, int v) {
        adj[u].reset(v);
        adj[v].reset(u);
    }
    Bits vertices() const { return Bits::below(n); }
    int degree(int v) const { return adj[v].count(); }
    int edge_count() const {
        int s = 0;
        for (int v = 0; v < n; ++v) s += degree(v);
        return s / 2;
    }
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> es;
        for (int u = 0; u < n; ++u)
            for (int v = adj[u].next(u); v != -1; v = adj[u].next(v)) es.push_back({u, v});
        return es;
    }
    friend bool operator==(const Graph& a, const Graph& b) { return a.n == b.n && a.adj == b.adj; }
};

inline Bits neighbors(const Graph& g, int v) { return g.adj[v]; }

inline Bits neighbors_of_set(const Graph& g, Bits s) {
    Bits out;
    s.for_each([&](int v) { out |= g.adj[v]; });
    return out - s;
}

// Induced subgraph; to_parent[i] is the parent-graph vertex the i-th (ascending)
// vertex of the subgraph came from.
struct Induced {
    Graph g;
    std::vector<int> to_parent;
};

inline Induced induced_subgraph(const Graph& g, Bits s) {
    Induced out;
    std::vector<int> back(g.n, -1);
    s.for_each([&](int v) {
        back[v] = (int)out.to_parent.size();
        out.to_parent.push_back(v);
    });
    out.g = Graph((int)out.to_parent.size());
    for (int i = 0; i < out.g.n; ++i) {
        Bits row = g.adj[out.to_parent[i]] & s;
        row.for_each([&](int pv) { out.g.adj[i].set(back[pv]); });
    }
    return out;
}

inline bool is_clique(const Graph& g, Bits s) {
    bool ok = true;
    s.for_each([&](int v) {
        if (!(s - Bits::single(v)).is_subset_of(g.adj[v])) ok = false;
    });
    return ok;
}

inline bool is_stable(const Graph& g, Bits s) {
    bool ok = true;
    s.for_each([&](int v) {
        if (g.adj[v].intersects(s)) ok = false;
    });
    return ok;
}

// True iff no vertex of a equals or is adjacent to a vertex of b.
inline bool is_anticomplete(const Graph& g, Bits a, Bits b) {
    if (a.intersects(b)) return false;
    bool ok = true;
    a.for_each([&](int v) {
        if (g.adj[v].intersects(b)) ok = false;
    });
    return ok;
}

// True iff a and b are disjoint and every vertex of a is adjacent to every vertex of b.
inline bool is_complete_between(const Graph& g, Bits a, Bits b) {
    if (a.intersects(b)) return false;
    bool ok = true;
    a.for_each([&](int v) {
        if (!b.is_subset_of(g.adj[v])) ok = false;
    });
    return ok;
}

// Connected components of g restricted to `within`.
inline std::vector<Bits> components(const Graph& g, Bits within) {
    std::vector<Bits> comps;
    Bits left = within;
    while (left.any()) {
        int s = left.first();
        Bits comp = Bits::single(s);
        Bits frontier = comp;
        while (frontier.any()) {
            Bits nxt;
            frontier.for_each([&](int v) { nxt |= g.adj[v]; });
            nxt &= within;
            nxt -= comp;
            comp |= nxt;
            frontier = nxt;
        }
        comps.push_back(comp);
        left -= comp;
    }
    return comps;
}

inline std::vector<Bits> components(const Graph& g) { return components(g, g.vertices()); }

inline bool is_connected(const Graph& g, Bits within) {
    if (within.none()) return true;
    return components(g, within).size() == 1;
}

// A walk of distinct vertices; consecutive entries are adjacent. length() counts edges.
struct Path {
    std::vector<int> v;

    int length() const { return (int)v.size() - 1; }
    Bits vset() const {
        Bits b;
        for (int x : v) b.set(x);
        return b;
    }
    // Interior: everything but the two ends (empty for length <= 1).
    Bits interior() const {
        Bits b;
        for (size_t i = 1; i + 1 < v.size(); ++i) b.set(v[i]);
        return b;
    }
    friend bool operator==(const Path&, const Path&) = default;
};

inline bool is_path_of(const Graph& g, const Path& p) {
    if (p.v.empty()) return false;
    Bits seen;
    for (size_t i = 0; i < p.v.size(); ++i) {
        int x = p.v[i];
        if (x < 0 || x >= g.n || seen.test(x)) return false;
        seen.set(x);
        if (i > 0 && !g.adjacent(p.v[i - 1], x)) return false;
    }
    return true;
}

inline bool is_induced_path(const Graph& g, const Path& p) {
    if (!is_path_of(g, p)) return false;
    for (size_t i = 0; i + 2 < p.v.size(); ++i)
        for (size_t j = i + 2; j < p.v.size(); ++j)
            if (g.adjacent(p.v[i], p.v[j])) return false;
    return true;
}

// BFS distances from u inside `allowed` (u must be allowed). -1 = unreachable.
inline std::vector<int> bfs_dist(const Graph& g, int u, Bits allowed) {
    std::vector<int> dist(g.n, -1);
    if (!allowed.test(u)) return dist;
    dist[u] = 0;
    Bits frontier = Bits::single(u);
    Bits seen = frontier;
    int d = 0;
    while (frontier.any()) {
        ++d;
        Bits nxt;
        frontier.for_each([&](int v) { nxt |= g.adj[v]; });
        nxt &= allowed;
        nxt -= seen;
        nxt.for_each([&](int v) { dist[v] = d; });
        seen |= nxt;
        frontier = nxt;
    }
    return dist;
}

// Deterministic shortest path from u to v avoiding `forbidden`: among shortest
// paths, reconstructs backward from v picking the least-index predecessor at
// each step. Returns nullopt if v is unreachable. u == v gives the trivial path.
inline std::optional<Path> shortest_path(const Graph& g, int u, int v, Bits forbidden = {}) {
    assert(u >= 0 && u < g.n && v >= 0 && v < g.n);
    Bits allowed = g.vertices() - forbidden;
    if (!allowed.test(u) || !allowed.test(v)) return std::nullopt;
    std::vector<int> dist = bfs_dist(g, u, allowed);
    if (dist[v] < 0) return std::nullopt;
    Path p;
    p.v.resize(dist[v] + 1);
    int cur = v;
    for (int d = dist[v]; d >= 0; --d) {
        p.v[d] = cur;
        if (d == 0) break;
        Bits preds = g.adj[cur] & allowed;
        int pick = -1;
        preds.for_each([&](int w) {
            if (dist[w] == d - 1 && pick == -1) pick = w;
        });
        assert(pick != -1);
        cur = pick;
    }
    return p;
}

// Union of the interiors of all shortest u-v paths avoiding `forbidden`.
// Empty when u,v are disconnected or adjacent (or equal).
inline Bits all_shortest_path_vertices(const Graph& g, int u, int v, Bits forbidden = {}) {
    Bits allowed = g.vertices() - forbidden;
    Bits out;
    if (!allowed.test(u) || !allowed.test(v) || u == v) return out;
    std::vector<int> du = bfs_dist(g, u, allowed);
    std::vector<int> dv = bfs_dist(g, v, allowed);
    if (du[v] < 0) return out;
    for (int x = 0; x < g.n; ++x) {
        if (x == u || x == v || !allowed.test(x)) continue;
        if (du[x] >= 0 && dv[x] >= 0 && du[x] + dv[x] == du[v]) out.set(x);
    }
    return out;
}

// Floyd-Warshall distances; independent cross-check for the BFS routines.
inline std::vector<std::vector<int>> distance_matrix(const Graph& g) {
    const int INF = 1 << 20;
    std::vector<std::vector<int>> d(g.n, std::vector<int>(g.n, INF));
    for (int i = 0; i < g.n; ++i) {
        d[i][i] = 0;
        g.adj[i].for_each([&](int j) { d[i][j] = 1; });
    }
    for (int k = 0; k < g.n; ++k)
        for (int i = 0; i < g.n; ++i) {
            if (d[i][k] >= INF) continue;
            for (int j = 0; j < g.n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
        }
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            if (d[i][j] >= INF) d[i][j] = -1;
    return d;
}

// An induced cycle of length >= 4, stored in canonical rotation: least vertex
// first, then its lesser cycle-neighbor second.
struct Hole {
    std::vector<int> v;

    int length() const { return (int)v.size(); }
    Bits vset() const {
        Bits b;
        for (int x : v) b.set(x);
        return b;
    }
    void canonicalize() {
        assert(v.size() >= 4);
        size_t k = v.size();
        size_t lo = 0;
        for (size_t i = 1; i < k; ++i)
            if (v[i] < v[lo]) lo = i;
        std::vector<int> out(k);
        int prev = v[(lo + k - 1) % k], nxt = v[(lo + 1) % k];
        if (nxt < prev) {
            for (size_t i = 0; i < k; ++i) out[i] = v[(lo + i) % k];
        } else {
            for (size_t i = 0; i < k; ++i) out[i] = v[(lo + k - i) % k];
        }
        v = std::move(out);
    }
    friend bool operator==(const Hole&, const Hole&) = default;
    friend bool operator<(const Hole& a, const Hole& b) {
        if (a.v.size() != b.v.size()) return a.v.size() < b.v.size();
        return a.v < b.v;
    }
};

inline bool is_hole_of(const Graph& g, const Hole& h) {
    size_t k = h.v.size();
    if (k < 4) return false;
    Bits seen;
    for (int x : h.v) {
        if (x < 0 || x >= g.n || seen.test(x)) return false;
        seen.set(x);
    }
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (g.adjacent(h.v[i], h.v[j]) != consecutive) return false;
        }
    return true;
}

// Distance around a hole between two of its vertices.
inline int hole_distance(const Hole& h, int a, int b) {
    int ia = -1, ib = -1;
    for (size_t i = 0; i < h.v.size(); ++i) {
        if (h.v[i] == a) ia = (int)i;
        if (h.v[i] == b) ib = (int)i;
    }
    assert(ia >= 0 && ib >= 0);
    int d = std::abs(ia - ib);
    return std::min(d, (int)h.v.size() - d);
}

} // namespace evenhole
