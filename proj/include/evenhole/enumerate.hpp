#pragma once

#include "canon.hpp"
#include "graph.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

namespace evenhole {

// Streaming enumeration of one representative per isomorphism class, by
// canonical augmentation: a child on m+1 vertices is kept only if the new
// vertex lies in the orbit of the canonical deletion vertex, and extension
// subsets are deduplicated per orbit of the parent's automorphism group.
// Every class on <= max_n vertices is visited exactly once.

// Unlabeled graph counts by vertex count (OEIS A000088), used as a
// self-check by tests.
inline constexpr std::uint64_t kGraphClassCounts[] = {
    1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168,
};

namespace detail_enum {

// kappa(v) = (deg(v), sorted degrees of neighbors), packed into nibbles,
// most significant first, so integer order is lexicographic order. Vertices
// with equal degree pad equally, so the packing is order-faithful.
inline std::uint64_t vertex_invariant(const Graph& g, const int* deg, int v) {
    std::uint64_t k = (std::uint64_t)deg[v] << 60;
    int cnt[16] = {};
    g.adj[v].for_each([&](int u) { ++cnt[deg[u]]; });
    int shift = 56;
    for (int d = 0; d < 16; ++d)
        for (int t = 0; t < cnt[d]; ++t, shift -= 4) k |= (std::uint64_t)d << shift;
    return k;
}

// Is the newest vertex w a valid canonical deletion vertex of c?
inline bool is_canonical_extension(const Graph& c, int w) {
    int deg[16];
    for (int v = 0; v < c.n; ++v) deg[v] = c.adj[v].count();
    std::uint64_t kappa[16];
    std::uint64_t mn = ~0ull;
    for (int v = 0; v < c.n; ++v) {
        kappa[v] = vertex_invariant(c, deg, v);
        if (kappa[v] < mn) mn = kappa[v];
    }
    std::uint32_t cand = 0;
    for (int v = 0; v < c.n; ++v)
        if (kappa[v] == mn) cand |= 1u << v;
    if (!((cand >> w) & 1)) return false;
    if ((cand & (cand - 1)) == 0) return true;
    CanonResult cf = canonical_form(c);
    int d = -1, dpos = -1;
    for (std::uint32_t m = cand; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        if (cf.to_canon[v] > dpos) {
            dpos = cf.to_canon[v];
            d = v;
        }
    }
    return cf.orbit[w] == cf.orbit[d];
}

template <class F>
void extend_rec(const Graph& g, int max_n, F& visit) {
    visit(g);
    if (g.n >= max_n) return;
    CanonResult cf = canonical_form(g);
    const int m = g.n;
    std::vector<char> seen((std::size_t)1 << m, 0);
    std::vector<std::uint32_t> todo;
    for (std::uint32_t s = 0; s < (1u << m); ++s) {
        if (seen[s]) continue;
        // Close s under the automorphism group; only the class representative
        // gets extended.
        seen[s] = 1;
        todo.assign(1, s);
        while (!todo.empty()) {
            std::uint32_t t = todo.back();
            todo.pop_back();
            for (const auto& sg : cf.aut_gens) {
                std::uint32_t u = 0;
                for (std::uint32_t tm = t; tm;) {
                    int v = std::countr_zero(tm);
                    tm &= tm - 1;
                    u |= 1u << sg[v];
                }
                if (!seen[u]) {
                    seen[u] = 1;
                    todo.push_back(u);
                }
            }
        }
        Graph c(m + 1);
        for (int v = 0; v < m; ++v) c.adj[v] = g.adj[v];
        for (std::uint32_t sm = s; sm;) {
            int v = std::countr_zero(sm);
            sm &= sm - 1;
            c.add_edge(v, m);
        }
        if (is_canonical_extension(c, m)) extend_rec(c, max_n, visit);
    }
}

} // namespace detail_enum

// Visit base and every descendant class on up to max_n vertices.
template <class F>
void enumerate_extensions(const Graph& base, int max_n, F&& visit) {
    assert(base.n >= 1 && max_n <= 16);
    detail_enum::extend_rec(base, max_n, visit);
}

// Visit one representative of every isomorphism class on 1..max_n vertices.
template <class F>
void enumerate_graphs(int max_n, F&& visit) {
    if (max_n < 1) return;
    enumerate_extensions(Graph(1), max_n, visit);
}

} // namespace evenhole
