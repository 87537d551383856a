#pragma once

#include "graph.hpp"
#include "witness.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

namespace evenhole {

// Exponential-time reference implementations. Everything here is exhaustive
// and deterministic; the polynomial detectors are differential-tested against
// these.

struct HoleReport {
    std::vector<Hole> holes;
    std::vector<int> lengths; // sorted multiset of hole lengths
};

namespace detail_oracle {

struct HoleDfs {
    const Graph& g;
    int min_len, max_len;
    std::vector<Hole>& out;
    std::vector<int> path;
    Bits pmask;

    // Grow an induced path a,p1,...,pt with a the least vertex; close a hole
    // when the new vertex is adjacent to the tip and to a only, with p1 less
    // than the closing vertex so each hole is emitted once, in canonical form.
    void extend(int a) {
        if ((int)path.size() >= max_len) return;
        int last = path.back();
        Bits cand = g.adj[last] - pmask;
        cand.for_each([&](int x) {
            if (x <= a) return;
            Bits m = g.adj[x] & pmask;
            if (m == Bits::single(last)) {
                path.push_back(x);
                pmask.set(x);
                extend(a);
                path.pop_back();
                pmask.reset(x);
            } else if (m == (Bits::single(last) | Bits::single(a))) {
                int len = (int)path.size() + 1;
                if (len >= 4 && len >= min_len && path[1] < x) {
                    Hole h;
                    h.v = path;
                    h.v.push_back(x);
                    out.push_back(h);
                }
            }
        });
    }
};

} // namespace detail_oracle

// Every hole of length in [min_len, max_len], each exactly once, in canonical
// form, via canonical-start DFS.
inline HoleReport enumerate_holes(const Graph& g, int min_len, int max_len) {
    assert(min_len >= 4);
    HoleReport rep;
    if (max_len > g.n) max_len = g.n;
    if (max_len < min_len) return rep;
    detail_oracle::HoleDfs dfs{g, min_len, max_len, rep.holes, {}, {}};
    for (int a = 0; a < g.n; ++a) {
        dfs.path.assign(1, a);
        dfs.pmask = Bits::single(a);
        dfs.extend(a);
    }
    rep.lengths.reserve(rep.holes.size());
    for (const auto& h : rep.holes) rep.lengths.push_back(h.length());
    std::sort(rep.lengths.begin(), rep.lengths.end());
    return rep;
}

// Independent second method: a vertex subset spans a hole iff the induced
// subgraph is 2-regular and connected. Intended as a cross-check.
inline std::vector<Bits> enumerate_hole_sets(const Graph& g) {
    assert(g.n <= 24);
    const int n = g.n;
    std::vector<Bits> out;
    if (n < 4) return out;
    std::array<std::uint32_t, 24> adj{};
    for (int v = 0; v < n; ++v) adj[v] = (std::uint32_t)g.adj[v].w0;
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
        if (std::popcount(m) < 4) continue;
        bool ok = true;
        for (std::uint32_t t = m; t; t &= t - 1)
            if (std::popcount(adj[std::countr_zero(t)] & m) != 2) {
                ok = false;
                break;
            }
        if (!ok) continue;
        std::uint32_t comp = m & ~(m - 1), frontier = comp;
        while (frontier) {
            std::uint32_t nxt = 0;
            for (std::uint32_t t = frontier; t; t &= t - 1) nxt |= adj[std::countr_zero(t)];
            nxt &= m & ~comp;
            comp |= nxt;
            frontier = nxt;
        }
        if (comp != m) continue;
        out.push_back(Bits{m, 0});
    }
    return out;
}

// First even hole of length >= ell in canonical enumeration order.
inline std::optional<Hole> oracle_long_even_hole(const Graph& g, int ell) {
    assert(ell >= 4);
    auto rep = enumerate_holes(g, ell, g.n);
    for (const auto& h : rep.holes)
        if (h.length() % 2 == 0) return h;
    return std::nullopt;
}

// Maximum-cardinality search followed by the standard fill-in test of the
// resulting elimination ordering.
inline bool is_chordal(const Graph& g) {
    const int n = g.n;
    if (n == 0) return true;
    std::vector<int> weight(n, 0), order;
    order.reserve(n);
    Bits un = Bits::below(n);
    for (int step = 0; step < n; ++step) {
        int best = -1, bw = -1;
        un.for_each([&](int v) {
            if (weight[v] > bw) {
                bw = weight[v];
                best = v;
            }
        });
        order.push_back(best);
        un.reset(best);
        (g.adj[best] & un).for_each([&](int u) { ++weight[u]; });
    }
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = n - 1 - i; // elimination position
    for (int v = 0; v < n; ++v) {
        Bits later;
        int p = -1, pp = n;
        g.adj[v].for_each([&](int u) {
            if (pos[u] > pos[v]) {
                later.set(u);
                if (pos[u] < pp) {
                    pp = pos[u];
                    p = u;
                }
            }
        });
        if (p < 0) continue;
        later.reset(p);
        if (!later.is_subset_of(g.adj[p])) return false;
    }
    return true;
}

namespace detail_oracle {

inline void cliques_rec(const Graph& g, Bits cur, int start, std::vector<Bits>& out) {
    out.push_back(cur);
    for (int v = start; v < g.n; ++v)
        if (cur.is_subset_of(g.adj[v])) cliques_rec(g, cur | Bits::single(v), v + 1, out);
}

} // namespace detail_oracle

// Every clique of g, the empty set included.
inline std::vector<Bits> all_cliques(const Graph& g) {
    std::vector<Bits> out;
    detail_oracle::cliques_rec(g, Bits{}, 0, out);
    return out;
}

// Least clique (by size, then mask) whose removal disconnects g. The empty
// clique handles disconnected inputs.
inline std::optional<Bits> find_clique_cutset(const Graph& g) {
    auto cl = all_cliques(g);
    std::sort(cl.begin(), cl.end(), [](const Bits& a, const Bits& b) {
        int ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        return a < b;
    });
    for (const auto& k : cl)
        if (components(g, Bits::below(g.n) - k).size() >= 2) return k;
    return std::nullopt;
}

inline std::optional<int> find_universal_vertex(const Graph& g) {
    for (int v = 0; v < g.n; ++v)
        if (g.adj[v].count() == g.n - 1) return v;
    return std::nullopt;
}

namespace detail_oracle {

// DFS for an induced u-v path whose interior lies in `allowed`, with edge
// count in [lo, hi] and edge-count parity `par`. First find in ascending
// vertex order wins.
struct ParityPathDfs {
    const Graph& g;
    int v, lo, hi, par;
    Bits allowed;
    std::vector<int> path;
    Bits pmask;
    std::vector<int> found;

    bool run() {
        if (g.adjacent(path[0], v)) return false; // ends must be non-adjacent
        allowed.reset(v);
        return step();
    }
    bool step() {
        int last = path.back();
        int len = (int)path.size(); // edge count if closed at v now
        if (len >= lo && len <= hi && (len & 1) == par && g.adjacent(last, v) &&
            (g.adj[v] & pmask) == Bits::single(last)) {
            found = path;
            found.push_back(v);
            return true;
        }
        if (len >= hi) return false;
        Bits cand = (g.adj[last] & allowed) - pmask;
        bool hit = false;
        cand.for_each([&](int x) {
            if (hit) return;
            if ((g.adj[x] & pmask) != Bits::single(last)) return;
            path.push_back(x);
            pmask.set(x);
            hit = step();
            if (!hit) {
                path.pop_back();
                pmask.reset(x);
            }
        });
        return hit;
    }
};

inline std::optional<std::vector<int>> find_parity_path(const Graph& g, int u, int v, Bits allowed,
                                                        int lo, int hi, int par) {
    if (lo > hi) return std::nullopt;
    ParityPathDfs dfs{g, v, lo, hi, par, allowed, {u}, Bits::single(u), {}};
    if (dfs.run()) return dfs.found;
    return std::nullopt;
}

// Detected jewel predicate: nonadjacent u,v; induced u-v paths q1 (odd) and
// q2 (even), each with at most k-1 edges, unconstrained against each other;
// induced u-v path p with interior disjoint from and anticomplete to the
// interiors of q1, q2, and |E(p)| >= max{0, ell - min(|E(q1)|,|E(q2)|)} + 2.
// Since p with either q forms a hole of length >= ell + 2, search holes and
// split them at nonadjacent vertex pairs into (p, q) arcs, then look for the
// opposite-parity companion path.
inline std::optional<Witness> find_long_jewel(const Graph& g, int ell, int k) {
    auto rep = enumerate_holes(g, std::max(4, ell + 2), g.n);
    for (const auto& c : rep.holes) {
        const int len = c.length();
        for (int i = 0; i < len; ++i) {
            for (int j = i + 1; j < len; ++j) {
                int u = c.v[i], v = c.v[j];
                if (g.adjacent(u, v)) continue;
                std::vector<int> arc1(c.v.begin() + i, c.v.begin() + j + 1);
                std::vector<int> arc2;
                for (int t = i; t != j; t = (t + len - 1) % len) arc2.push_back(c.v[t]);
                arc2.push_back(v);
                for (int which = 0; which < 2; ++which) {
                    const auto& a = which ? arc2 : arc1; // plays p
                    const auto& b = which ? arc1 : arc2; // plays one q
                    int la = (int)a.size() - 1, lb = (int)b.size() - 1;
                    int lo = std::max(2, ell - la + 2);
                    if (lb < lo || lb > k - 1) continue;
                    Bits amask;
                    for (int x : a) amask.set(x);
                    Bits ainterior = amask;
                    ainterior.reset(u);
                    ainterior.reset(v);
                    Bits blocked = amask | neighbors_of_set(g, ainterior);
                    Bits allowed = Bits::below(g.n) - blocked;
                    auto qs = find_parity_path(g, u, v, allowed, lo, std::min(k - 1, g.n),
                                               (lb & 1) ^ 1);
                    if (!qs) continue;
                    Witness w;
                    w.kind = ConfigKind::long_jewel;
                    w.host = g;
                    w.add("u", u);
                    w.add("v", v);
                    bool b_odd = (lb & 1) != 0;
                    w.add("q1", b_odd ? b : *qs);
                    w.add("q2", b_odd ? *qs : b);
                    w.add("p", a);
                    return w;
                }
            }
        }
    }
    return std::nullopt;
}

// Subset filter: an induced theta is a connected subset with exactly two
// non-adjacent degree-3 vertices and the rest degree 2, whose three walks
// from one branch vertex all reach the other and cover the subset.
inline std::optional<Witness> find_long_theta(const Graph& g, int ell) {
    assert(g.n <= 19);
    const int n = g.n;
    std::array<std::uint32_t, 19> adj{};
    for (int v = 0; v < n; ++v) adj[v] = (std::uint32_t)g.adj[v].w0;
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
        if (std::popcount(m) < 5) continue;
        int d3[2], nd3 = 0;
        bool ok = true;
        for (std::uint32_t t = m; t; t &= t - 1) {
            int v = std::countr_zero(t);
            int d = std::popcount(adj[v] & m);
            if (d == 2) continue;
            if (d == 3 && nd3 < 2) {
                d3[nd3++] = v;
            } else {
                ok = false;
                break;
            }
        }
        if (!ok || nd3 != 2) continue;
        int u = d3[0], v = d3[1];
        if ((adj[u] >> v) & 1) continue;
        std::vector<std::vector<int>> paths;
        int covered = 2;
        for (std::uint32_t t = adj[u] & m; t && ok; t &= t - 1) {
            std::vector<int> p{u};
            int prev = u, cur = std::countr_zero(t);
            while (true) {
                p.push_back(cur);
                if (cur == v || cur == u || std::popcount(adj[cur] & m) != 2) break;
                std::uint32_t nx = adj[cur] & m & ~(1u << prev);
                prev = cur;
                cur = std::countr_zero(nx);
            }
            if (p.back() != v) {
                ok = false;
                break;
            }
            covered += (int)p.size() - 2;
            paths.push_back(std::move(p));
        }
        if (!ok || (int)paths.size() != 3 || covered != std::popcount(m)) continue;
        std::sort(paths.begin(), paths.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        });
        if ((int)(paths[0].size() + paths[1].size()) - 2 < ell) continue; // two shortest
        if (u > v) {
            std::swap(u, v);
            for (auto& p : paths) std::reverse(p.begin(), p.end());
        }
        Witness w;
        w.kind = ConfigKind::long_theta;
        w.host = g;
        w.add("u", u);
        w.add("v", v);
        w.add("p1", paths[0]);
        w.add("p2", paths[1]);
        w.add("p3", paths[2]);
        return w;
    }
    return std::nullopt;
}

// Hole C, outside vertex t, consecutive x-y-z on C, and w on C non-adjacent
// to x and y, with N(t) on C contained in {w,x,y,z} and w,x,z all adjacent
// to t; accepted when every hole of G[V(C) + t] has length >= ell.
inline std::optional<Witness> find_long_ban_the_bomb(const Graph& g, int ell) {
    auto rep = enumerate_holes(g, std::max(4, ell), g.n);
    for (const auto& c : rep.holes) {
        const int len = c.length();
        Bits cmask = c.vset();
        for (int t = 0; t < g.n; ++t) {
            if (cmask.test(t)) continue;
            Bits s = g.adj[t] & cmask;
            int sc = s.count();
            if (sc != 3 && sc != 4) continue;
            for (int i = 0; i < len; ++i) {
                for (int dir : {1, len - 1}) {
                    int x = c.v[i];
                    int y = c.v[(i + dir) % len];
                    int z = c.v[(i + 2 * dir) % len];
                    if (!s.test(x) || !s.test(z)) continue;
                    Bits rest = s;
                    rest.reset(x);
                    rest.reset(y);
                    rest.reset(z);
                    if (rest.count() != 1) continue;
                    int w = rest.first();
                    if (g.adjacent(w, x) || g.adjacent(w, y)) continue;
                    auto sub = induced_subgraph(g, cmask | Bits::single(t));
                    auto inner = enumerate_holes(sub.g, 4, sub.g.n);
                    bool all_long = true;
                    for (int hl : inner.lengths)
                        if (hl < ell) {
                            all_long = false;
                            break;
                        }
                    if (!all_long) continue;
                    Witness out;
                    out.kind = ConfigKind::long_ban_the_bomb;
                    out.host = g;
                    out.add("c", c.v);
                    out.add("v", t);
                    out.add("w", w);
                    out.add("x", x);
                    out.add("y", y);
                    out.add("z", z);
                    return out;
                }
            }
        }
    }
    return std::nullopt;
}

// Walk from a base vertex along its one non-base edge through degree-2
// vertices until a vertex of other degree; returns the walk.
inline std::vector<int> prism_walk(const Graph& g, Bits mask, int from, int first) {
    std::vector<int> p{from, first};
    int prev = from, cur = first;
    while ((g.adj[cur] & mask).count() == 2 && cur != from) {
        Bits nx = (g.adj[cur] & mask) - Bits::single(prev);
        prev = cur;
        cur = nx.first();
        p.push_back(cur);
    }
    return p;
}

inline bool edges_match(const Graph& g, Bits mask, const std::vector<std::pair<int, int>>& want) {
    std::array<Bits, 128> exp{};
    for (auto [a, b] : want) {
        exp[a].set(b);
        exp[b].set(a);
    }
    bool ok = true;
    mask.for_each([&](int v) {
        if ((g.adj[v] & mask) != exp[v]) ok = false;
    });
    return ok;
}

inline void add_path_edges(const std::vector<int>& p, std::vector<std::pair<int, int>>& out) {
    for (size_t i = 0; i + 1 < p.size(); ++i) out.emplace_back(p[i], p[i + 1]);
}

// Check whether mask spans exactly a near prism with at most one constituent
// path of length < ell; on success fill the witness.
inline bool try_near_prism(const Graph& g, Bits mask, int ell, Witness& out) {
    std::vector<int> deg3, deg4;
    bool ok = true;
    mask.for_each([&](int v) {
        int d = (g.adj[v] & mask).count();
        if (d == 3)
            deg3.push_back(v);
        else if (d == 4)
            deg4.push_back(v);
        else if (d != 2)
            ok = false;
    });
    if (!ok || deg4.size() > 1) return false;

    auto finish = [&](const std::array<int, 3>& a, const std::array<int, 3>& b,
                      const std::array<std::vector<int>, 3>& paths) {
        int shorter = 0;
        for (const auto& p : paths)
            if ((int)p.size() - 1 < ell) ++shorter;
        if (shorter > 1) return false;
        std::vector<std::pair<int, int>> want{{a[0], a[1]}, {a[0], a[2]}, {a[1], a[2]},
                                              {b[0], b[1]}, {b[0], b[2]}, {b[1], b[2]}};
        for (const auto& p : paths) add_path_edges(p, want);
        // the shared-vertex shape repeats its triangle edges at the shared
        // vertex; edges_match sets bits so duplicates are harmless
        if (!edges_match(g, mask, want)) return false;
        out = Witness{};
        out.kind = ConfigKind::long_near_prism;
        out.host = g;
        for (int i = 0; i < 3; ++i) out.add("a" + std::to_string(i + 1), a[i]);
        for (int i = 0; i < 3; ++i) out.add("b" + std::to_string(i + 1), b[i]);
        for (int i = 0; i < 3; ++i) out.add("p" + std::to_string(i + 1), paths[i]);
        return true;
    };

    if (deg4.size() == 1) {
        // shared-vertex shape: s = a_i = b_i, trivial path at s
        if (deg3.size() != 4) return false;
        int s = deg4[0];
        Bits nb = g.adj[s] & mask;
        if (nb.count() != 4) return false;
        std::array<int, 4> nbv{};
        int idx = 0;
        nb.for_each([&](int v) { nbv[idx++] = v; });
        for (int v : nbv)
            if ((g.adj[v] & mask).count() != 3) return false;
        // split the four neighbors into two adjacent pairs
        static const int splits[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
        for (const auto& sp : splits) {
            int p = nbv[sp[0]], q = nbv[sp[1]], r = nbv[sp[2]], t = nbv[sp[3]];
            if (!g.adjacent(p, q) || !g.adjacent(r, t)) continue;
            auto step_of = [&](int x) {
                Bits e = (g.adj[x] & mask) - Bits::single(s);
                return e;
            };
            Bits ep = step_of(p) - Bits::single(q);
            Bits eq = step_of(q) - Bits::single(p);
            if (ep.count() != 1 || eq.count() != 1) continue;
            auto wp = prism_walk(g, mask, p, ep.first());
            auto wq = prism_walk(g, mask, q, eq.first());
            int tp = wp.back(), tq = wq.back();
            if (tp == tq) continue;
            if (!((tp == r && tq == t) || (tp == t && tq == r))) continue;
            int covered = 5 + (int)wp.size() - 2 + (int)wq.size() - 2;
            if (covered != mask.count()) continue;
            // order the two real paths behind the trivial one
            std::array<int, 3> av{s, p, q}, bv{s, tp, tq};
            std::array<std::vector<int>, 3> paths{std::vector<int>{s}, wp, wq};
            if (finish(av, bv, paths)) return true;
        }
        return false;
    }

    if (deg3.size() != 6) return false;
    // disjoint bases: split the six degree-3 vertices into two triangles
    for (int i = 1; i < 5; ++i) {
        for (int j = i + 1; j < 6; ++j) {
            std::array<int, 3> av{deg3[0], deg3[i], deg3[j]};
            std::array<int, 3> bv{};
            int bi = 0;
            for (int t = 1; t < 6; ++t)
                if (t != i && t != j) bv[bi++] = deg3[t];
            auto tri = [&](const std::array<int, 3>& tv) {
                return g.adjacent(tv[0], tv[1]) && g.adjacent(tv[0], tv[2]) &&
                       g.adjacent(tv[1], tv[2]);
            };
            if (!tri(av) || !tri(bv)) continue;
            std::array<std::vector<int>, 3> paths;
            Bits bset;
            for (int x : bv) bset.set(x);
            bool good = true;
            std::array<int, 3> bmatch{};
            for (int t = 0; t < 3 && good; ++t) {
                Bits e = (g.adj[av[t]] & mask) - Bits::single(av[(t + 1) % 3]) -
                         Bits::single(av[(t + 2) % 3]);
                if (e.count() != 1) {
                    good = false;
                    break;
                }
                auto wk = prism_walk(g, mask, av[t], e.first());
                if (!bset.test(wk.back())) {
                    good = false;
                    break;
                }
                bmatch[t] = wk.back();
                paths[t] = std::move(wk);
            }
            if (!good || bmatch[0] == bmatch[1] || bmatch[0] == bmatch[2] ||
                bmatch[1] == bmatch[2])
                continue;
            int covered = 6;
            for (const auto& p : paths) covered += (int)p.size() - 2;
            if (covered != mask.count()) continue;
            if (finish(av, bmatch, paths)) return true;
        }
    }
    return false;
}

inline std::optional<Witness> find_long_near_prism(const Graph& g, int ell) {
    const int minsz = 2 * ell + 3;
    if (g.n < minsz) return std::nullopt;
    assert(g.n <= 24);
    for (int s = minsz; s <= g.n; ++s) {
        // lexicographic s-combinations of the vertex set
        std::vector<int> comb(s);
        for (int i = 0; i < s; ++i) comb[i] = i;
        while (true) {
            Bits mask;
            for (int v : comb) mask.set(v);
            Witness w;
            if (try_near_prism(g, mask, ell, w)) return w;
            int i = s - 1;
            while (i >= 0 && comb[i] == g.n - s + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return std::nullopt;
}

} // namespace detail_oracle

// Exhaustive role-labeled configuration search. `k` bounds the jewel order
// (default ell + 3) and is ignored by the other kinds.
inline std::optional<Witness> oracle_find_configuration(const Graph& g, ConfigKind kind, int ell,
                                                        int k = -1) {
    switch (kind) {
        case ConfigKind::long_jewel:
            return detail_oracle::find_long_jewel(g, ell, k < 0 ? ell + 3 : k);
        case ConfigKind::long_theta: return detail_oracle::find_long_theta(g, ell);
        case ConfigKind::long_ban_the_bomb: return detail_oracle::find_long_ban_the_bomb(g, ell);
        case ConfigKind::long_near_prism: return detail_oracle::find_long_near_prism(g, ell);
        default: assert(false && "unsupported configuration kind"); return std::nullopt;
    }
}

} // namespace evenhole
