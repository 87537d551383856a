#pragma once

// Long near-prism machinery: the prism structure itself, prefix/suffix
// frames, K-major vertices, good/bad shortest paths, contrivances, lazy
// cleaning lists, and the assembly detector built on top of them.

#include "config.hpp"
#include "graph.hpp"
#include "witness.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace evenhole {

// Two triangles {a[0],a[1],a[2]} and {b[0],b[1],b[2]} joined by three
// pairwise disjoint paths p[i] from a[i] to b[i]. The bases are vertex
// disjoint, except that a[i] == b[i] is allowed for exactly one i (p[i] is
// then the single shared vertex). At most one path may be shorter than ell.
struct NearPrism {
    std::array<int, 3> a{-1, -1, -1};
    std::array<int, 3> b{-1, -1, -1};
    std::array<Path, 3> p;
    int ell = 4;
};

inline Bits near_prism_vertices(const NearPrism& k) {
    Bits m;
    for (const auto& q : k.p) m |= q.vset();
    return m; // bases are path ends, so the paths cover everything
}

inline Witness witness_from_prism(const Graph& g, const NearPrism& k) {
    Witness w;
    w.kind = ConfigKind::long_near_prism;
    w.host = g;
    for (int i = 0; i < 3; ++i) w.add("a" + std::to_string(i + 1), k.a[i]);
    for (int i = 0; i < 3; ++i) w.add("b" + std::to_string(i + 1), k.b[i]);
    for (int i = 0; i < 3; ++i) w.add("p" + std::to_string(i + 1), k.p[i].v);
    return w;
}

inline std::optional<NearPrism> prism_from_witness(const Witness& w, int ell) {
    if (w.kind != ConfigKind::long_near_prism) return std::nullopt;
    NearPrism k;
    k.ell = ell;
    for (int i = 0; i < 3; ++i) {
        const auto* pa = w.find("a" + std::to_string(i + 1));
        const auto* pb = w.find("b" + std::to_string(i + 1));
        const auto* pp = w.find("p" + std::to_string(i + 1));
        if (!pa || !pb || !pp || pa->size() != 1 || pb->size() != 1 || pp->empty())
            return std::nullopt;
        k.a[i] = (*pa)[0];
        k.b[i] = (*pb)[0];
        k.p[i] = Path{*pp};
    }
    return k;
}

// Structural validity; delegates to the witness validator (triangles, the
// shared-vertex rule, induced paths, exact edge set, at most one short path).
inline bool validate_near_prism(const Graph& g, const NearPrism& k,
                                std::string* reason = nullptr) {
    return validate_witness(witness_from_prism(g, k), k.ell, -1, reason);
}

namespace detail_prism {

// Pre-resolved view of a prism: per-vertex path index and position, plus the
// adjacency of the prism graph itself (triangle edges and path edges).
struct KView {
    Bits vset;
    std::array<Bits, 3> pset;
    std::vector<int> pidx, pos;
    std::vector<std::vector<int>> nbr;
};

inline KView make_kview(const Graph& g, const NearPrism& k) {
    KView kv;
    kv.pidx.assign(g.n, -1);
    kv.pos.assign(g.n, -1);
    kv.nbr.assign(g.n, {});
    for (int i = 0; i < 3; ++i) {
        kv.pset[i] = k.p[i].vset();
        kv.vset |= kv.pset[i];
        for (size_t t = 0; t < k.p[i].v.size(); ++t) {
            kv.pidx[k.p[i].v[t]] = i;
            kv.pos[k.p[i].v[t]] = (int)t;
        }
    }
    auto link = [&](int u, int v) {
        if (u == v) return;
        for (int w : kv.nbr[u])
            if (w == v) return;
        kv.nbr[u].push_back(v);
        kv.nbr[v].push_back(u);
    };
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            link(k.a[i], k.a[j]);
            link(k.b[i], k.b[j]);
        }
    for (const auto& q : k.p)
        for (size_t t = 0; t + 1 < q.v.size(); ++t) link(q.v[t], q.v[t + 1]);
    for (auto& l : kv.nbr) std::sort(l.begin(), l.end());
    return kv;
}

// Path inside the prism whose interior is exactly the positions [lo,hi] of
// p[i] widened by radius r; the end caps extend one step past each side and
// bend into a triangle when the ball reaches an end of the path.
inline Path ball_path(const NearPrism& k, const KView& kv, int i, int plo, int phi, int r) {
    const auto& pv = k.p[i].v;
    int big = (int)pv.size() - 1;
    int lo = std::max(0, plo - r), hi = std::min(big, phi + r);
    Path out;
    Bits used;
    for (int t = lo; t <= hi; ++t) used.set(pv[t]);
    auto cap = [&](int end_vertex, Bits taken) {
        for (int w : kv.nbr[end_vertex])
            if (!taken.test(w)) return w;
        return -1;
    };
    if (lo > 0) {
        out.v.push_back(pv[lo - 1]);
    } else {
        int c = cap(pv[0], used);
        if (c != -1) out.v.push_back(c);
    }
    for (int t = lo; t <= hi; ++t) out.v.push_back(pv[t]);
    if (hi < big) {
        out.v.push_back(pv[hi + 1]);
    } else {
        int c = cap(pv[big], used | out.vset());
        if (c != -1) out.v.push_back(c);
    }
    return out;
}

} // namespace detail_prism

// Prefix/suffix frame at threshold k.ell: pre[i] holds the p[i] vertices
// within distance ell-1 of a[i], suf[i] those within ell-1 of b[i] (listed
// from b[i] outward). s[i] and t[i] are the far ends of the two pieces;
// contained[i] says the pieces cover all of p[i].
struct Frame {
    std::array<Path, 3> pre, suf;
    std::array<int, 3> s{-1, -1, -1}, t{-1, -1, -1};
    std::array<bool, 3> contained{};
    Bits vset;
};

inline Frame build_frame(const NearPrism& k) {
    Frame f;
    for (int i = 0; i < 3; ++i) {
        const auto& pv = k.p[i].v;
        int len = (int)pv.size() - 1;
        int reach = std::min(k.ell - 1, len);
        f.pre[i].v.assign(pv.begin(), pv.begin() + reach + 1);
        f.suf[i].v.assign(pv.rbegin(), pv.rbegin() + reach + 1);
        f.s[i] = f.pre[i].v.back();
        f.t[i] = f.suf[i].v.back();
        f.contained[i] = len <= 2 * k.ell - 1;
        f.vset |= f.pre[i].vset();
        f.vset |= f.suf[i].vset();
    }
    return f;
}

// Tidy: no frame vertex sees outside the prism, except that s[i]/t[i] of a
// path the frame does not contain may (they continue into the middle).
inline bool is_tidy(const Graph& g, const NearPrism& k, const Frame& f) {
    Bits kset = near_prism_vertices(k);
    bool ok = true;
    f.vset.for_each([&](int x) {
        if (!ok || (g.adj[x] - kset).none()) return;
        for (int i = 0; i < 3; ++i)
            if (!f.contained[i] && (x == f.s[i] || x == f.t[i])) return;
        ok = false;
    });
    return ok;
}

inline bool is_tidy(const Graph& g, const NearPrism& k) { return is_tidy(g, k, build_frame(k)); }

// True when no subpath of the prism on at most three vertices contains every
// neighbor of q inside the prism. pre: q lies outside the prism.
inline bool is_k_major(const Graph& g, const NearPrism& k, int q) {
    detail_prism::KView kv = detail_prism::make_kview(g, k);
    assert(q >= 0 && q < g.n && !kv.vset.test(q));
    Bits nk = g.adj[q] & kv.vset;
    if (nk.count() <= 1) return false;
    bool covered = false;
    kv.vset.for_each([&](int m) {
        if (covered) return;
        const auto& nb = kv.nbr[m];
        for (size_t x = 0; x < nb.size() && !covered; ++x) {
            Bits two = Bits::single(m) | Bits::single(nb[x]);
            if (nk.is_subset_of(two)) covered = true;
            for (size_t y = x + 1; y < nb.size() && !covered; ++y)
                if (nk.is_subset_of(two | Bits::single(nb[y]))) covered = true;
        }
    });
    return !covered;
}

// Verdict for one shortest u-v path between vertices of a constituent path:
// good when no interior vertex of q sees the prism outside the u-to-v
// stretch; otherwise zeta is the offending interior vertex nearest v.
struct PathVerdict {
    bool good = true;
    int zeta = -1;
};

inline PathVerdict classify_shortest_path(const Graph& g, const NearPrism& k, int u, int v,
                                          const Path& q) {
    detail_prism::KView kv = detail_prism::make_kview(g, k);
    assert(u != v && !g.adjacent(u, v));
    int i = kv.pidx[u];
    assert(i >= 0 && i == kv.pidx[v]);
    if (kv.pos[u] > kv.pos[v]) std::swap(u, v);
    Path qq = q;
    if (qq.v.front() != u) std::reverse(qq.v.begin(), qq.v.end());
    assert(qq.v.front() == u && qq.v.back() == v);
    assert(is_path_of(g, qq));
    assert(bfs_dist(g, u, g.vertices())[v] == qq.length());
    Bits stretch;
    for (int t = kv.pos[u]; t <= kv.pos[v]; ++t) stretch.set(k.p[i].v[t]);
    Bits off = kv.vset - stretch;
    PathVerdict out;
    for (int t = (int)qq.v.size() - 2; t >= 1; --t)
        if ((g.adj[qq.v[t]] & off).any()) {
            out.good = false;
            out.zeta = qq.v[t];
            break;
        }
    return out;
}

// Neighbor of q on p[i] nearest a[i] (alpha) respectively b[i] (beta); -1
// when q has no neighbor on that path.
inline int alpha_on(const Graph& g, const NearPrism& k, int i, int q) {
    for (int x : k.p[i].v)
        if (g.adjacent(q, x)) return x;
    return -1;
}

inline int beta_on(const Graph& g, const NearPrism& k, int i, int q) {
    for (auto it = k.p[i].v.rbegin(); it != k.p[i].v.rend(); ++it)
        if (g.adjacent(q, *it)) return *it;
    return -1;
}

// Head piece a[i]..alpha_i(x) and tail piece beta_i(x)..b[i] of p[i].
inline Path head_path(const Graph& g, const NearPrism& k, int i, int x) {
    int al = alpha_on(g, k, i, x);
    assert(al != -1);
    Path out;
    for (int y : k.p[i].v) {
        out.v.push_back(y);
        if (y == al) break;
    }
    return out;
}

inline Path tail_path(const Graph& g, const NearPrism& k, int i, int x) {
    int be = beta_on(g, k, i, x);
    assert(be != -1);
    Path out;
    bool on = false;
    for (int y : k.p[i].v) {
        if (y == be) on = true;
        if (on) out.v.push_back(y);
    }
    return out;
}

namespace detail_prism {

// K-major vertices with neighbors on both p[0] and p[1]; the population a
// contrivance has to account for.
inline std::vector<int> majors_both_sides(const Graph& g, const NearPrism& k) {
    Bits kset = near_prism_vertices(k);
    Bits p0 = k.p[0].vset(), p1 = k.p[1].vset();
    std::vector<int> out;
    for (int q = 0; q < g.n; ++q) {
        if (kset.test(q)) continue;
        if (!(g.adj[q] & p0).any() || !(g.adj[q] & p1).any()) continue;
        if (is_k_major(g, k, q)) out.push_back(q);
    }
    return out;
}

} // namespace detail_prism

// Anchors plus absorbing paths: h holds at most three K-major vertices and q
// at most fourteen short paths inside the prism whose interiors account for
// every other K-major vertex with neighbors on both p[0] and p[1].
struct PrismContrivance {
    std::vector<int> h;
    std::vector<Path> q;
};

inline Bits contrivance_interiors(const PrismContrivance& c) {
    Bits m;
    for (const auto& p : c.q) m |= p.interior();
    return m;
}

inline bool is_prism_contrivance(const Graph& g, const NearPrism& k, const PrismContrivance& c,
                                 std::string* reason = nullptr) {
    auto fail = [&](const char* why) {
        if (reason) *reason = why;
        return false;
    };
    if (c.h.size() > 3) return fail("too-many-anchors");
    if (c.q.size() > 14) return fail("too-many-paths");
    detail_prism::KView kv = detail_prism::make_kview(g, k);
    int total = 0;
    for (const auto& p : c.q) {
        total += (int)p.v.size();
        if (p.v.empty()) return fail("empty-path");
        Bits seen;
        for (size_t t = 0; t < p.v.size(); ++t) {
            int x = p.v[t];
            if (x < 0 || x >= g.n || !kv.vset.test(x) || seen.test(x))
                return fail("path-off-prism");
            seen.set(x);
            if (t > 0) {
                const auto& nb = kv.nbr[p.v[t - 1]];
                if (std::find(nb.begin(), nb.end(), x) == nb.end())
                    return fail("path-off-prism");
            }
        }
    }
    if (total > 28 * k.ell - 12) return fail("paths-too-long");
    std::vector<int> s = detail_prism::majors_both_sides(g, k);
    Bits qstar = contrivance_interiors(c);
    Bits hb = detail_config::mask_of(c.h);
    if (!s.empty()) {
        int best = -1;
        for (int v : s) {
            int al = alpha_on(g, k, 0, v);
            best = std::max(best, kv.pos[al]);
        }
        Bits nh;
        for (int v : c.h) nh |= g.adj[v];
        bool anchored = false;
        for (int v : c.h) {
            if (std::find(s.begin(), s.end(), v) == s.end()) continue;
            int al = alpha_on(g, k, 0, v);
            if (kv.pos[al] != best) continue;
            if (!qstar.test(al)) continue;
            Bits head = head_path(g, k, 0, v).vset();
            if ((nh & head).is_subset_of(qstar)) {
                anchored = true;
                break;
            }
        }
        if (!anchored) return fail("anchor-clause");
    }
    for (int w : s) {
        if (hb.test(w)) continue;
        if (!(g.adj[w] & (hb | qstar)).any()) return fail("cover-clause");
    }
    return true;
}

// Witness contrivance built in up to three stages: x maximizes the head
// length on p[0] and contributes radius ell-1 balls around its attachment
// points; if vertices escape those, y (maximizing the head on p[1] among the
// escapees) contributes radius ell / ell-1 balls; any remaining escapee z
// contributes radius ell-2 balls around its attachment spans on p[0] and
// p[1]. Returns the contrivance and the stage it settled at (0 = no
// population). On inputs satisfying the cleaning hypotheses stage 1 always
// suffices; the later stages keep the construction total on inputs that do
// not.
inline std::pair<PrismContrivance, int> build_witness_contrivance(const Graph& g,
                                                                  const NearPrism& k) {
    detail_prism::KView kv = detail_prism::make_kview(g, k);
    PrismContrivance c;
    std::vector<int> s = detail_prism::majors_both_sides(g, k);
    if (s.empty()) return {c, 0};
    auto push_path = [&](Path p) {
        if (p.v.size() > 1 && p.v.back() < p.v.front()) std::reverse(p.v.begin(), p.v.end());
        for (const auto& q : c.q)
            if (q.v == p.v) return;
        c.q.push_back(std::move(p));
    };
    auto attach_balls = [&](int v, int i, int ra, int rb) {
        int al = alpha_on(g, k, i, v);
        if (al == -1) return;
        int be = beta_on(g, k, i, v);
        push_path(detail_prism::ball_path(k, kv, i, kv.pos[al], kv.pos[al], ra));
        push_path(detail_prism::ball_path(k, kv, i, kv.pos[be], kv.pos[be], rb));
    };
    auto head_len = [&](int v, int i) {
        int al = alpha_on(g, k, i, v);
        return al == -1 ? -1 : kv.pos[al];
    };
    auto pick_max = [&](const std::vector<int>& pool, int i) {
        int bestv = -1, beste = -1;
        for (int v : pool) {
            int e = head_len(v, i);
            if (e > beste) {
                beste = e;
                bestv = v;
            }
        }
        return bestv;
    };

    int x = pick_max(s, 0);
    for (int i = 0; i < 3; ++i) attach_balls(x, i, k.ell - 1, k.ell - 1);
    c.h = {x};
    if (is_prism_contrivance(g, k, c)) return {c, 1};

    Bits qx = contrivance_interiors(c);
    std::vector<int> sx;
    for (int v : s)
        if (v != x && !(g.adj[v] & qx).any()) sx.push_back(v);
    if (sx.empty()) return {c, 1};
    int y = pick_max(sx, 1);
    for (int i = 0; i < 3; ++i) attach_balls(y, i, k.ell, k.ell - 1);
    c.h = {x, y};
    if (is_prism_contrivance(g, k, c)) return {c, 2};

    Bits qxy = contrivance_interiors(c);
    Bits near = g.adj[x] | g.adj[y];
    std::vector<int> sxy;
    for (int v : sx)
        if (v != y && !near.test(v) && !(g.adj[v] & qxy).any()) sxy.push_back(v);
    if (sxy.empty()) return {c, 2};
    int z = sxy.front();
    // span of z's attachments that are outside the stretches x (on p[0]) and
    // y (on p[1]) pin down; one radius ell-2 ball per side
    for (int i = 0; i < 2; ++i) {
        int other = i == 0 ? x : y;
        int lo = -1, hi = -1;
        int oal = alpha_on(g, k, i, other), obe = beta_on(g, k, i, other);
        for (int w : k.p[i].v) {
            if (!g.adjacent(z, w)) continue;
            if (oal != -1 && kv.pos[w] >= kv.pos[oal] && kv.pos[w] <= kv.pos[obe]) continue;
            if (lo == -1) lo = kv.pos[w];
            hi = kv.pos[w];
        }
        if (lo == -1) {
            int al = alpha_on(g, k, i, z);
            if (al == -1) continue;
            lo = kv.pos[al];
            hi = kv.pos[beta_on(g, k, i, z)];
        }
        push_path(detail_prism::ball_path(k, kv, i, lo, hi, k.ell - 2));
    }
    c.h = {x, y, z};
    return {c, 3};
}

// ---------------------------------------------------------------------------
// Cleaning lists. Each is a lazily generated family of candidate deletion
// sets with a work budget; the status tells exhaustion apart from an early
// stop and from running out of budget.

enum class SweepStatus { exhausted, stopped, budget_exceeded };

inline constexpr long long kListBudget = 1'000'000;
inline constexpr long long kDetectBudget = 10'000'000;

namespace detail_prism {

struct Gate {
    long long left = 0;
    bool truncated = false;
    bool tick() {
        if (left <= 0) {
            truncated = true;
            return false;
        }
        --left;
        return true;
    }
};

// Induced paths with at most max_edges edges inside `allowed`, each path
// reported once with its lesser endpoint first. fn returns true to stop.
template <class F>
bool for_each_induced_path(const Graph& g, Bits allowed, int max_edges, F&& fn) {
    bool stopped = false;
    std::vector<int> cur;
    Bits used;
    auto extend = [&](auto&& self, Bits blocked) -> void {
        if (stopped) return;
        int tail = cur.back();
        if (cur.size() == 1 || cur.front() < tail)
            if (fn(std::as_const(cur))) {
                stopped = true;
                return;
            }
        if ((int)cur.size() - 1 >= max_edges) return;
        Bits ext = (g.adj[tail] & allowed) - used - blocked;
        Bits nb = blocked | g.adj[tail];
        std::vector<int> opts;
        ext.for_each([&](int w) { opts.push_back(w); });
        for (int w : opts) {
            if (stopped) return;
            cur.push_back(w);
            used.set(w);
            self(self, nb);
            used.reset(w);
            cur.pop_back();
        }
    };
    for (int st = 0; st < g.n && !stopped; ++st) {
        if (!allowed.test(st)) continue;
        cur = {st};
        used = Bits::single(st);
        extend(extend, Bits{});
    }
    return stopped;
}

// Arbitrary (not necessarily induced) paths, same protocol.
template <class F>
bool for_each_path(const Graph& g, Bits allowed, int max_edges, F&& fn) {
    bool stopped = false;
    std::vector<int> cur;
    Bits used;
    auto extend = [&](auto&& self) -> void {
        if (stopped) return;
        int tail = cur.back();
        if (cur.size() == 1 || cur.front() < tail)
            if (fn(std::as_const(cur))) {
                stopped = true;
                return;
            }
        if ((int)cur.size() - 1 >= max_edges) return;
        Bits ext = (g.adj[tail] & allowed) - used;
        std::vector<int> opts;
        ext.for_each([&](int w) { opts.push_back(w); });
        for (int w : opts) {
            if (stopped) return;
            cur.push_back(w);
            used.set(w);
            self(self);
            used.reset(w);
            cur.pop_back();
        }
    };
    for (int st = 0; st < g.n && !stopped; ++st) {
        if (!allowed.test(st)) continue;
        cur = {st};
        used = Bits::single(st);
        extend(extend);
    }
    return stopped;
}

inline Bits interior_neighbors(const Graph& g, Bits allowed, const Path& r) {
    Bits hit;
    r.interior().for_each([&](int x) { hit |= g.adj[x]; });
    return (hit & allowed) - r.vset();
}

// Unordered pairs of disjoint induced paths of length at most 2*ell inside
// `allowed`; emits the union of the outside-neighbor sets of the two
// interiors. fn returns true to stop.
template <class F>
void sweep_path_pairs(const Graph& g, Bits allowed, int ell, Gate& gate, F&& fn) {
    bool stopped = false;
    for_each_induced_path(g, allowed, 2 * ell, [&](const std::vector<int>& r2) {
        Path p2{r2};
        Bits m2 = p2.vset();
        Bits x2 = interior_neighbors(g, allowed, p2);
        for_each_induced_path(g, allowed - m2, 2 * ell, [&](const std::vector<int>& r3) {
            if (!std::lexicographical_compare(r2.begin(), r2.end(), r3.begin(), r3.end()))
                return false;
            if (!gate.tick()) return true;
            Path p3{r3};
            if (fn(x2 | interior_neighbors(g, allowed, p3))) {
                stopped = true;
                return true;
            }
            return false;
        });
        return stopped || gate.truncated;
    });
}

// Unions of three members (repetition allowed) of a base generator; the k-th
// member closes every triple {i <= j <= k}.
template <class Base, class F>
void sweep_triples(Base&& base, Gate& gate, F&& fn) {
    std::vector<Bits> seen;
    bool stopped = false;
    base([&](const Bits& xk) {
        seen.push_back(xk);
        size_t last = seen.size() - 1;
        for (size_t i = 0; i <= last && !stopped; ++i)
            for (size_t j = i; j <= last && !stopped; ++j) {
                if (!gate.tick()) {
                    stopped = true;
                    break;
                }
                if (fn(seen[i] | seen[j] | xk)) stopped = true;
            }
        return stopped;
    });
}

// Deletion sets for one anchored guess (anchors h, absorbing paths qs, and a
// shortest-path corridor from a to alpha), one per member of the inner
// path-pair sweep. Mirrors one iteration of the K-major cleaning generator.
template <class F>
void sweep_major_anchor(const Graph& g, Bits allowed, int ell, const std::vector<int>& h,
                        const std::vector<Path>& qs, int a, int alpha, Gate& gate, F&& fn) {
    Bits hb = detail_config::mask_of(h);
    Bits qstar, x;
    for (const auto& q : qs) {
        qstar |= q.interior();
        x |= interior_neighbors(g, allowed, q);
    }
    Bits nh;
    for (int v : h) nh |= g.adj[v] & allowed;
    bool stopped = false;
    sweep_path_pairs(g, allowed - x, ell, gate, [&](const Bits& y) {
        Bits del = ((x | y | hb | nh) - qstar) | (g.vertices() - allowed);
        Bits corridor = all_shortest_path_vertices(g, a, alpha, del);
        Bits z;
        (allowed - qstar).for_each([&](int v) {
            if ((g.adj[v] & corridor).any() && (g.adj[v] & hb).any()) z.set(v);
        });
        if (!gate.tick()) return true;
        if (fn(hb | x | z)) {
            stopped = true;
            return true;
        }
        return false;
    });
    (void)stopped;
}

// Full enumeration behind the K-major cleaning list: anchor sets of size at
// most three, families of at most fourteen paths with bounded total size,
// and both corridor endpoints. Astronomical in general; only budgeted
// prefixes ever run.
template <class F>
void sweep_major_list(const Graph& g, Bits allowed, int ell, Gate& gate, F&& fn) {
    bool stopped = false;
    if (!gate.tick()) return;
    if (fn(Bits{})) return; // empty anchor set
    int cap = 28 * ell - 12;
    std::vector<int> verts;
    allowed.for_each([&](int v) { verts.push_back(v); });

    std::vector<int> h;
    std::vector<Path> fam;
    int famsize = 0;
    auto run_anchors = [&]() {
        Bits qstar;
        for (const auto& q : fam) qstar |= q.interior();
        std::vector<int> alphas;
        qstar.for_each([&](int w) { alphas.push_back(w); });
        for (int a : verts) {
            if (stopped || gate.truncated) return;
            for (int alpha : alphas) {
                if (stopped || gate.truncated) return;
                sweep_major_anchor(g, allowed, ell, h, fam, a, alpha, gate,
                                   [&](const Bits& out) {
                                       if (fn(out)) {
                                           stopped = true;
                                           return true;
                                       }
                                       return false;
                                   });
            }
        }
    };
    auto grow = [&](auto&& self) -> void {
        if (stopped || gate.truncated) return;
        if (!fam.empty()) run_anchors();
        if ((int)fam.size() >= 14) return;
        for_each_path(g, allowed, cap - famsize - 1, [&](const std::vector<int>& pv) {
            if ((int)pv.size() + famsize > cap) return false;
            if (!fam.empty() && !std::lexicographical_compare(fam.back().v.begin(),
                                                              fam.back().v.end(), pv.begin(),
                                                              pv.end()))
                return false;
            fam.push_back(Path{pv});
            famsize += (int)pv.size();
            self(self);
            famsize -= (int)pv.size();
            fam.pop_back();
            return stopped || gate.truncated;
        });
    };
    auto pick = [&](auto&& self, int from, int want) -> void {
        if (stopped || gate.truncated) return;
        if ((int)h.size() == want) {
            fam.clear();
            famsize = 0;
            grow(grow);
            return;
        }
        for (size_t t = from; t < verts.size() && !stopped && !gate.truncated; ++t) {
            h.push_back(verts[t]);
            self(self, (int)t + 1, want);
            h.pop_back();
        }
    };
    for (int want = 1; want <= 3 && !stopped && !gate.truncated; ++want) pick(pick, 0, want);
}

} // namespace detail_prism

// Outside-neighbor set of the interiors of a path pair.
inline Bits path_cleaning_set(const Graph& g, const Path& r2, const Path& r3) {
    return detail_prism::interior_neighbors(g, g.vertices(), r2) |
           detail_prism::interior_neighbors(g, g.vertices(), r3);
}

struct CleaningList {
    std::function<SweepStatus(const std::function<bool(const Bits&)>&)> drive;
    // fn returns true to stop the sweep early
    SweepStatus for_each(const std::function<bool(const Bits&)>& fn) const { return drive(fn); }
};

// Deletion sets indexed by unordered pairs of disjoint induced paths of
// length at most 2*ell; the first member is always the empty set.
inline CleaningList path_cleaning_list(const Graph& g, int ell, long long budget = kListBudget) {
    CleaningList list;
    list.drive = [g, ell, budget](const std::function<bool(const Bits&)>& fn) {
        detail_prism::Gate gate{budget};
        bool stopped = false;
        detail_prism::sweep_path_pairs(g, g.vertices(), ell, gate, [&](const Bits& x) {
            if (fn(x)) {
                stopped = true;
                return true;
            }
            return false;
        });
        if (stopped) return SweepStatus::stopped;
        return gate.truncated ? SweepStatus::budget_exceeded : SweepStatus::exhausted;
    };
    return list;
}

// Unions of three members of the pair list.
inline CleaningList full_path_cleaning_list(const Graph& g, int ell,
                                            long long budget = kListBudget) {
    CleaningList list;
    list.drive = [g, ell, budget](const std::function<bool(const Bits&)>& fn) {
        detail_prism::Gate gate{budget};
        bool stopped = false;
        auto base = [&](auto&& cb) {
            detail_prism::sweep_path_pairs(g, g.vertices(), ell, gate, cb);
        };
        detail_prism::sweep_triples(base, gate, [&](const Bits& x) {
            if (fn(x)) {
                stopped = true;
                return true;
            }
            return false;
        });
        if (stopped) return SweepStatus::stopped;
        return gate.truncated ? SweepStatus::budget_exceeded : SweepStatus::exhausted;
    };
    return list;
}

// K-major cleaning list over anchor sets, path families, and corridor
// endpoint guesses; the first member is always the empty set.
inline CleaningList major_cleaning_list(const Graph& g, int ell, long long budget = kListBudget) {
    CleaningList list;
    list.drive = [g, ell, budget](const std::function<bool(const Bits&)>& fn) {
        detail_prism::Gate gate{budget};
        bool stopped = false;
        detail_prism::sweep_major_list(g, g.vertices(), ell, gate, [&](const Bits& x) {
            if (fn(x)) {
                stopped = true;
                return true;
            }
            return false;
        });
        if (stopped) return SweepStatus::stopped;
        return gate.truncated ? SweepStatus::budget_exceeded : SweepStatus::exhausted;
    };
    return list;
}

// Deletion sets for one explicit anchored guess, so a known witness
// contrivance can be driven directly.
inline SweepStatus major_cleaning_sets_for(const Graph& g, int ell, const std::vector<int>& h,
                                           const std::vector<Path>& qs, int a, int alpha,
                                           long long budget,
                                           const std::function<bool(const Bits&)>& fn) {
    detail_prism::Gate gate{budget};
    bool stopped = false;
    if (h.empty()) {
        if (gate.tick() && fn(Bits{})) stopped = true;
    } else {
        detail_prism::sweep_major_anchor(g, g.vertices(), ell, h, qs, a, alpha, gate,
                                         [&](const Bits& x) {
                                             if (fn(x)) {
                                                 stopped = true;
                                                 return true;
                                             }
                                             return false;
                                         });
    }
    if (stopped) return SweepStatus::stopped;
    return gate.truncated ? SweepStatus::budget_exceeded : SweepStatus::exhausted;
}

// ---------------------------------------------------------------------------
// Detection.

struct PrismSearch {
    enum class Status { found, absent, budget_exceeded };
    Status status = Status::absent;
    std::optional<Witness> witness;
};

namespace detail_prism {

inline std::vector<std::array<int, 3>> all_triangles(const Graph& g) {
    std::vector<std::array<int, 3>> out;
    for (int x = 0; x < g.n; ++x)
        for (int y = x + 1; y < g.n; ++y) {
            if (!g.adjacent(x, y)) continue;
            (g.adj[x] & g.adj[y]).for_each([&](int z) {
                if (z > y) out.push_back({x, y, z});
            });
        }
    return out;
}

// Frame-shaped search: two triangles, then per path either a full induced
// connection of length at most 2*ell-1 or an exact prefix/suffix pair of
// ell-1 edges each whose middle is routed later through cleaned graphs.
struct PrismHunt {
    const Graph& g;
    int ell;
    Gate gate;
    std::array<int, 3> a{}, b{};
    std::array<Path, 3> pre, suf; // split paths: pre from a[i], suf from b[i]
    std::array<bool, 3> split{};
    Bits bases;
    // smallest validated candidate so far; key = sorted vertex list breaks ties
    std::optional<NearPrism> best;
    int best_size = 0;
    std::vector<int> best_key;

    PrismHunt(const Graph& gg, int l, long long budget) : g(gg), ell(l), gate{budget} {}

    bool done() const { return gate.truncated; }

    void run() {
        auto tris = all_triangles(g);
        for (size_t ia = 0; ia < tris.size() && !done(); ++ia)
            for (size_t ib = ia + 1; ib < tris.size() && !done(); ++ib) {
                Bits ma = detail_config::mask_of({tris[ia][0], tris[ia][1], tris[ia][2]});
                Bits mb = detail_config::mask_of({tris[ib][0], tris[ib][1], tris[ib][2]});
                int overlap = (ma & mb).count();
                if (overlap >= 2) continue;
                int shared = overlap == 1 ? (ma & mb).first() : -1;
                std::array<int, 3> perm{0, 1, 2};
                std::sort(perm.begin(), perm.end());
                do {
                    for (int i = 0; i < 3; ++i) {
                        a[i] = tris[ia][i];
                        b[i] = tris[ib][perm[i]];
                    }
                    bool ok = true;
                    for (int i = 0; i < 3 && ok; ++i)
                        for (int j = 0; j < 3 && ok; ++j) {
                            if (i == j) {
                                if (a[i] == b[i] && a[i] != shared) ok = false;
                            } else {
                                if (a[i] == b[j]) ok = false;
                                else if (a[i] != shared && b[j] != shared &&
                                         g.adjacent(a[i], b[j]))
                                    ok = false;
                            }
                        }
                    if (shared != -1) {
                        int hits = 0;
                        for (int i = 0; i < 3; ++i)
                            if (a[i] == b[i]) ++hits;
                        if (hits != 1) ok = false;
                    }
                    if (!ok) continue;
                    bases = ma | mb;
                    paths_from(0, bases, Bits{}, 0);
                } while (std::next_permutation(perm.begin(), perm.end()) && !done());
            }
    }

    void paths_from(int i, Bits used, Bits usedNbr, int shorts) {
        if (done()) return;
        if (i > 0 && !gate.tick()) return;
        if (i == 3) {
            assemble();
            return;
        }
        if (a[i] == b[i]) {
            if (shorts + 1 > 1) return;
            pre[i] = Path{{a[i]}};
            split[i] = false;
            paths_from(i + 1, used, usedNbr, shorts + 1);
            return;
        }
        Bits othersN;
        bases.for_each([&](int c) {
            if (c != a[i] && c != b[i]) othersN |= g.adj[c];
        });
        Bits allow = g.vertices() - bases - othersN - used - usedNbr;

        // full connections, shortest first by depth-first order
        {
            std::vector<int> cur{a[i]};
            Bits cmask = Bits::single(a[i]);
            auto dfs = [&](auto&& self, Bits blocked) -> void {
                if (done()) return;
                int tail = cur.back();
                Bits ext = (g.adj[tail] & (allow | Bits::single(b[i]))) - blocked - cmask;
                std::vector<int> opts;
                ext.for_each([&](int w) { opts.push_back(w); });
                for (int w : opts) {
                    if (done()) return;
                    if (w == b[i]) {
                        int edges = (int)cur.size();
                        int more = edges < ell ? 1 : 0;
                        if (shorts + more > 1) continue;
                        pre[i] = Path{cur};
                        pre[i].v.push_back(b[i]);
                        split[i] = false;
                        Bits inner = pre[i].interior();
                        Bits innerN;
                        inner.for_each([&](int t) { innerN |= g.adj[t]; });
                        paths_from(i + 1, used | inner, usedNbr | (innerN - inner),
                                   shorts + more);
                        continue;
                    }
                    if ((int)cur.size() - 1 >= 2 * ell - 2) continue;
                    cur.push_back(w);
                    cmask.set(w);
                    self(self, blocked | g.adj[tail]);
                    cmask.reset(w);
                    cur.pop_back();
                }
            };
            dfs(dfs, Bits{});
        }
        if (done()) return;

        // prefix/suffix pairs for a middle longer than the frame holds
        {
            std::vector<Path> prefixes;
            std::vector<int> cur{a[i]};
            Bits cmask = Bits::single(a[i]);
            Bits palow = allow - g.adj[b[i]];
            auto dfsp = [&](auto&& self, Bits blocked) -> void {
                if ((int)cur.size() == ell) {
                    prefixes.push_back(Path{cur});
                    return;
                }
                Bits ext = (g.adj[cur.back()] & palow) - blocked - cmask;
                Bits nb = blocked | g.adj[cur.back()];
                std::vector<int> opts;
                ext.for_each([&](int w) { opts.push_back(w); });
                for (int w : opts) {
                    cur.push_back(w);
                    cmask.set(w);
                    self(self, nb);
                    cmask.reset(w);
                    cur.pop_back();
                }
            };
            dfsp(dfsp, Bits{});
            for (const auto& pfx : prefixes) {
                if (done()) return;
                Bits pm = pfx.vset();
                Bits pn;
                pm.for_each([&](int t) { pn |= g.adj[t]; });
                Bits salow = allow - pm - pn;
                std::vector<int> sur{b[i]};
                Bits smask = Bits::single(b[i]);
                auto dfss = [&](auto&& self, Bits blocked) -> void {
                    if (done()) return;
                    if ((int)sur.size() == ell) {
                        pre[i] = pfx;
                        suf[i] = Path{sur};
                        split[i] = true;
                        Bits inner = (pm | smask) - Bits::single(a[i]) - Bits::single(b[i]);
                        Bits innerN;
                        inner.for_each([&](int t) { innerN |= g.adj[t]; });
                        paths_from(i + 1, used | inner, usedNbr | (innerN - inner), shorts);
                        return;
                    }
                    Bits ext = (g.adj[sur.back()] & salow) - blocked - smask;
                    Bits nb = blocked | g.adj[sur.back()];
                    std::vector<int> opts;
                    ext.for_each([&](int w) { opts.push_back(w); });
                    for (int w : opts) {
                        if (done()) return;
                        sur.push_back(w);
                        smask.set(w);
                        self(self, nb);
                        smask.reset(w);
                        sur.pop_back();
                    }
                };
                dfss(dfss, Bits{});
            }
        }
    }

    void assemble() {
        if (!gate.tick()) return;
        Bits jd, dset;
        for (int i = 0; i < 3; ++i) {
            jd |= pre[i].vset();
            if (split[i]) {
                jd |= suf[i].vset();
                dset.set(pre[i].v.back());
                dset.set(suf[i].v.back());
            }
        }
        Bits x;
        (jd - dset).for_each([&](int w) { x |= g.adj[w]; });
        x -= jd;
        bool any_split = split[0] || split[1] || split[2];
        if (!any_split) {
            try_candidate({});
            return;
        }
        Bits avail0 = g.vertices() - x;
        // the first successful routing of this frame uses the fewest
        // deletions, hence the shortest middles; later members cannot beat it
        bool routed = false;
        auto ybase = [&](auto&& cb) { sweep_major_list(g, avail0, ell, gate, cb); };
        sweep_triples(ybase, gate, [&](const Bits& y) {
            auto zbase = [&](auto&& cb) { sweep_path_pairs(g, avail0 - y, ell, gate, cb); };
            sweep_triples(zbase, gate, [&](const Bits& z) {
                if (try_route(x, y, z)) routed = true;
                return routed || done();
            });
            return routed || done();
        });
    }

    bool try_route(Bits x, Bits y, Bits z) {
        Bits jd = near_mask();
        Bits cut = x | y | z;
        std::array<Path, 3> qs;
        for (int i = 0; i < 3; ++i) {
            if (!split[i]) continue;
            int si = pre[i].v.back(), ti = suf[i].v.back();
            if (cut.test(si) || cut.test(ti)) return false;
            Bits forb = cut | (jd - Bits::single(si) - Bits::single(ti));
            auto q = shortest_path(g, si, ti, forb);
            if (!q || q->length() < 2) return false;
            qs[i] = *q;
            Bits an;
            q->interior().for_each([&](int w) { an |= g.adj[w]; });
            cut |= (an - jd) | q->vset();
        }
        return try_candidate(qs);
    }

    Bits near_mask() const {
        Bits jd;
        for (int i = 0; i < 3; ++i) {
            jd |= pre[i].vset();
            if (split[i]) jd |= suf[i].vset();
        }
        return jd;
    }

    bool try_candidate(const std::array<Path, 3>& qs) {
        NearPrism k;
        k.ell = ell;
        k.a = a;
        k.b = b;
        for (int i = 0; i < 3; ++i) {
            if (!split[i]) {
                k.p[i] = pre[i];
                continue;
            }
            Path full = pre[i];
            full.v.insert(full.v.end(), qs[i].v.begin() + 1, qs[i].v.end());
            for (auto it = suf[i].v.rbegin() + 1; it != suf[i].v.rend(); ++it)
                full.v.push_back(*it);
            k.p[i] = std::move(full);
        }
        if (!validate_near_prism(g, k)) return false;
        std::vector<int> key;
        near_prism_vertices(k).for_each([&](int v) { key.push_back(v); });
        int size = (int)key.size();
        if (!best || size < best_size || (size == best_size && key < best_key)) {
            best = k;
            best_size = size;
            best_key = std::move(key);
        }
        return true;
    }
};

} // namespace detail_prism

// Search for a long near-prism by frame-shaped enumeration: guess the two
// triangles and per path either a full connection or an ell-1 prefix/suffix
// pair, delete the outside neighbors of the guessed frame, then route the
// remaining middles through the cleaning lists. Exact whenever the
// enumeration finishes inside the budget; running out of budget is reported
// apart from absence. pre: g has no long theta (checked in debug builds).
inline PrismSearch detect_long_near_prism(const Graph& g, int ell,
                                          long long budget = kDetectBudget) {
    assert(ell >= 4);
    PrismSearch out;
    // the smallest long near-prism shares a base vertex and has 2*ell+3
    // vertices, so smaller graphs are settled without search
    if (g.n < 2 * ell + 3) {
        out.status = PrismSearch::Status::absent;
        return out;
    }
    // callers must clear long thetas before asking for a near-prism; the
    // absence guarantees below assume it, though any found witness is
    // still sound on its own
    auto theta = detect_long_theta(g, ell);
    assert(!theta.has_value());
    (void)theta;
    detail_prism::PrismHunt hunt(g, ell, budget);
    hunt.run();
    if (hunt.best) {
        out.status = PrismSearch::Status::found;
        out.witness = witness_from_prism(g, *hunt.best);
    } else {
        out.status = hunt.gate.truncated ? PrismSearch::Status::budget_exceeded
                                         : PrismSearch::Status::absent;
    }
    return out;
}

} // namespace evenhole
