#pragma once

#include "graph.hpp"

#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace evenhole {

// Canonical labeling, automorphism generators and vertex orbits for graphs on
// at most 16 vertices. Individualization-refinement search whose key is the
// maximum relabeled upper-triangle adjacency string over the leaves of the
// refinement tree; keys are equal exactly for isomorphic graphs. Automorphisms
// discovered at leaf collisions prune sibling branches (only via automorphisms
// fixing the current individualization prefix, which under-prunes but never
// loses the optimum or an orbit merge).

struct CanonResult {
    int n = 0;
    std::array<int, 16> to_canon{};                     // vertex -> canonical position
    std::pair<std::uint64_t, std::uint64_t> key{0, 0};  // canonical adjacency string
    std::array<int, 16> orbit{};                        // least vertex of each orbit
    std::vector<std::array<int, 16>> aut_gens;          // discovered automorphisms
};

namespace detail_canon {

struct UnionFind {
    std::array<int, 16> p{};
    void init(int n) {
        for (int i = 0; i < n; ++i) p[i] = i;
    }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) p[a > b ? a : b] = a > b ? b : a;
    }
};

struct Searcher {
    int n = 0;
    std::array<std::uint32_t, 16> adj{};
    using Part = std::vector<std::uint32_t>; // ordered cells as bitmasks

    bool have_best = false;
    std::pair<std::uint64_t, std::uint64_t> best{0, 0};
    std::array<int, 16> best_pos{};
    std::vector<std::array<int, 16>> gens;
    std::vector<int> prefix;

    // Split cells by neighbor counts into other cells until equitable.
    void refine(Part& cells) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t si = 0; si < cells.size() && !changed; ++si) {
                std::uint32_t splitter = cells[si];
                for (size_t ci = 0; ci < cells.size(); ++ci) {
                    std::uint32_t cell = cells[ci];
                    if (std::popcount(cell) < 2) continue;
                    std::array<std::uint32_t, 17> groups{};
                    for (std::uint32_t m = cell; m;) {
                        int v = std::countr_zero(m);
                        m &= m - 1;
                        groups[std::popcount(adj[v] & splitter)] |= 1u << v;
                    }
                    int ng = 0;
                    for (auto gm : groups)
                        if (gm) ++ng;
                    if (ng <= 1) continue;
                    Part out;
                    out.reserve(cells.size() + ng - 1);
                    for (size_t cj = 0; cj < cells.size(); ++cj) {
                        if (cj == ci)
                            for (auto gm : groups) {
                                if (gm) out.push_back(gm);
                            }
                        else
                            out.push_back(cells[cj]);
                    }
                    cells = std::move(out);
                    changed = true;
                    break;
                }
            }
        }
    }

    std::pair<std::uint64_t, std::uint64_t> leaf_key(const std::array<int, 16>& pos) const {
        std::array<int, 16> at{};
        for (int v = 0; v < n; ++v) at[pos[v]] = v;
        std::pair<std::uint64_t, std::uint64_t> k{0, 0};
        int bit = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++bit)
                if ((adj[at[i]] >> at[j]) & 1) {
                    if (bit < 64)
                        k.first |= 1ull << (63 - bit);
                    else
                        k.second |= 1ull << (127 - bit);
                }
        return k;
    }

    void at_leaf(const Part& cells) {
        std::array<int, 16> pos{};
        for (size_t i = 0; i < cells.size(); ++i) pos[std::countr_zero(cells[i])] = (int)i;
        auto k = leaf_key(pos);
        if (!have_best || k > best) {
            best = k;
            best_pos = pos;
            have_best = true;
            return;
        }
        if (k != best) return;
        // Equal strings: the position-wise map between the two leaves is an
        // automorphism.
        std::array<int, 16> at_best{}, at_here{}, sigma{};
        for (int v = 0; v < n; ++v) {
            at_best[best_pos[v]] = v;
            at_here[pos[v]] = v;
        }
        bool ident = true;
        for (int p = 0; p < n; ++p) {
            sigma[at_best[p]] = at_here[p];
            if (at_best[p] != at_here[p]) ident = false;
        }
        if (ident) return;
#ifndef NDEBUG
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                assert((((adj[u] >> v) & 1)) == (((adj[sigma[u]] >> sigma[v]) & 1)));
#endif
        gens.push_back(sigma);
    }

    void dfs(Part cells) {
        refine(cells);
        int target = -1;
        for (size_t i = 0; i < cells.size(); ++i)
            if (std::popcount(cells[i]) >= 2) {
                target = (int)i;
                break;
            }
        if (target < 0) {
            at_leaf(cells);
            return;
        }
        std::uint32_t cell = cells[target];
        std::uint32_t tried = 0;
        size_t gens_seen = 0;
        UnionFind uf;
        uf.init(n);
        for (std::uint32_t m = cell; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            if (tried) {
                // Fold in every automorphism found so far that fixes the
                // individualized prefix pointwise; such a map sends one
                // sibling subtree onto another, so only one representative
                // per class needs exploring.
                for (; gens_seen < gens.size(); ++gens_seen) {
                    const auto& s = gens[gens_seen];
                    bool fixes = true;
                    for (int pv : prefix)
                        if (s[pv] != pv) {
                            fixes = false;
                            break;
                        }
                    if (fixes)
                        for (int x = 0; x < n; ++x) uf.unite(x, s[x]);
                }
                bool skip = false;
                for (std::uint32_t tm = tried; tm;) {
                    int u = std::countr_zero(tm);
                    tm &= tm - 1;
                    if (uf.find(u) == uf.find(v)) {
                        skip = true;
                        break;
                    }
                }
                if (skip) continue;
            }
            tried |= 1u << v;
            Part child;
            child.reserve(cells.size() + 1);
            for (size_t i = 0; i < cells.size(); ++i) {
                if ((int)i == target) {
                    child.push_back(1u << v);
                    child.push_back(cell ^ (1u << v));
                } else {
                    child.push_back(cells[i]);
                }
            }
            prefix.push_back(v);
            dfs(std::move(child));
            prefix.pop_back();
        }
    }
};

} // namespace detail_canon

inline CanonResult canonical_form(const Graph& g) {
    assert(g.n <= 16);
    CanonResult res;
    res.n = g.n;
    if (g.n == 0) return res;
    detail_canon::Searcher s;
    s.n = g.n;
    for (int v = 0; v < g.n; ++v) s.adj[v] = (std::uint32_t)g.adj[v].w0;
    s.dfs({(std::uint32_t)((g.n == 16) ? 0xffffu : ((1u << g.n) - 1))});
    res.to_canon = s.best_pos;
    res.key = s.best;
    res.aut_gens = std::move(s.gens);
    detail_canon::UnionFind uf;
    uf.init(g.n);
    for (const auto& sg : res.aut_gens)
        for (int v = 0; v < g.n; ++v) uf.unite(v, sg[v]);
    for (int v = 0; v < g.n; ++v) res.orbit[v] = uf.find(v);
    return res;
}

// Canonical key alone (for isomorphism-class dedup).
inline std::pair<std::uint64_t, std::uint64_t> canonical_key(const Graph& g) {
    return canonical_form(g).key;
}

} // namespace evenhole
