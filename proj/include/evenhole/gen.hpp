#pragma once

#include "graph.hpp"

#include <cstdint>
#include <random>

namespace evenhole {

using Rng = std::mt19937_64;

// Uniform double in [0,1). std::uniform_real_distribution is implementation
// defined, and seeded runs must be byte-identical everywhere, so roll our own.
inline double rand01(Rng& rng) { return (rng() >> 11) * 0x1.0p-53; }

// Uniform int in [0, n).
inline int rand_below(Rng& rng, int n) {
    return (int)(rng() % (std::uint64_t)n);
}

// Erdos-Renyi G(n,p).
inline Graph random_graph(int n, double p, Rng& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rand01(rng) < p) g.add_edge(u, v);
    return g;
}

// Random permutation of 0..n-1 (Fisher-Yates, again fully pinned down).
inline std::vector<int> random_permutation(int n, Rng& rng) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rand_below(rng, i + 1)]);
    return perm;
}

// Relabel g's vertices by perm (vertex v becomes perm[v]).
inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
    Graph out(g.n);
    for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
    return out;
}

// ---- planted configurations ----

// Center 0 with induced legs of the given edge-lengths (all >= 1), built in
// order, pairwise anticomplete away from the center.
inline Graph make_spider(const std::vector<int>& legs) {
    int n = 1;
    for (int l : legs) n += l;
    Graph g(n);
    int next = 1;
    for (int l : legs) {
        int prev = 0;
        for (int t = 0; t < l; ++t) {
            g.add_edge(prev, next);
            prev = next++;
        }
    }
    return g;
}

// u = 0, v = 1 joined by three pairwise anticomplete induced paths of
// edge-lengths q1 (odd), q2 (even) and p (all >= 2).
inline Graph make_jewel(int q1, int q2, int p) {
    Graph g(2 + (q1 - 1) + (q2 - 1) + (p - 1));
    int next = 2;
    for (int l : {q1, q2, p}) {
        int prev = 0;
        for (int t = 1; t < l; ++t) {
            g.add_edge(prev, next);
            prev = next++;
        }
        g.add_edge(prev, 1);
    }
    return g;
}

// Cycle of length a+b+2 plus an apex adjacent to positions 0,1,2 and 2+a:
// x = 0, y = 1, z = 2, w = 2+a, so the z-to-w arc avoiding y has a edges and
// the w-to-x arc has b edges.
inline Graph make_ban_the_bomb(int a, int b) {
    int m = a + b + 2;
    Graph g(m + 1);
    for (int i = 0; i < m; ++i) g.add_edge(i, (i + 1) % m);
    g.add_edge(m, 0);
    g.add_edge(m, 1);
    g.add_edge(m, 2);
    g.add_edge(m, 2 + a);
    return g;
}

// Triangles {0,1,2} and {3,4,5} joined by vertex-disjoint induced paths of
// the given edge-lengths (all >= 1), path i from i to 3+i.
inline Graph make_near_prism(int l1, int l2, int l3) {
    int ls[3] = {l1, l2, l3};
    int n = 6;
    for (int l : ls) n += l - 1;
    Graph g(n);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(3, 4);
    g.add_edge(3, 5);
    g.add_edge(4, 5);
    int next = 6;
    for (int i = 0; i < 3; ++i) {
        int prev = i;
        for (int t = 1; t < ls[i]; ++t) {
            g.add_edge(prev, next);
            prev = next++;
        }
        g.add_edge(prev, 3 + i);
    }
    return g;
}

// Near prism whose triangles share one corner: triangles {0,1,2} and
// {0,3,4}, paths 1..5..2 sides of lengths l1 and l2 joining the other
// corners pairwise (1 to 3 and 2 to 4).
inline Graph make_near_prism_shared(int l1, int l2) {
    int n = 5 + (l1 - 1) + (l2 - 1);
    Graph g(n);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(0, 3);
    g.add_edge(0, 4);
    g.add_edge(3, 4);
    int next = 5;
    int from[2] = {1, 2}, to[2] = {3, 4}, ls[2] = {l1, l2};
    for (int i = 0; i < 2; ++i) {
        int prev = from[i];
        for (int t = 1; t < ls[i]; ++t) {
            g.add_edge(prev, next);
            prev = next++;
        }
        g.add_edge(prev, to[i]);
    }
    return g;
}

} // namespace evenhole
