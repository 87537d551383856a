#pragma once

#include "graph.hpp"
#include "oracle.hpp"
#include "witness.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

namespace evenhole {

// Targeted detectors for the individual configurations, plus the witness
// validator. Unlike the subset-scan oracles these search role tuples
// directly, so they stay usable at sizes where 2^n is out of reach; every
// detector is differential-tested against the oracles at small n.

// Two induced u-v paths of opposite parity plus a long tail hanging off u.
// Completing the tail to v yields a long jewel witness.
struct JewelFragment {
    Path q1, q2;       // u-v paths; q1 odd, q2 even
    Path r;            // from u to w, anticomplete to q1,q2 beyond u
    int u = -1, v = -1, w = -1;
};

// Three induced arms leaving a common center, pairwise anticomplete beyond
// it, with lengths k1 <= k2 <= k3, k1 >= 2, k1 + k2 >= ell - 2 and
// k1 + k2 + k3 <= 2*ell - 6. Arms are stored center-first.
struct LongClaw {
    Path q1, q2, q3;
    int center() const { return q1.v[0]; }
};

// Induced path r of length 2*ell - 6 whose three middle vertices are x-y-z,
// plus v adjacent to exactly w,x,y,z and a pendant w with no other edges
// into the bomb.
struct Bomb {
    Path r;
    int x = -1, y = -1, z = -1, w = -1, v = -1;
};

namespace detail_config {

inline bool vfail(std::string* reason, const std::string& code) {
    if (reason) *reason = code;
    return false;
}

inline Bits mask_of(const std::vector<int>& vs) {
    Bits b;
    for (int x : vs) b.set(x);
    return b;
}

inline Bits interior_of(const std::vector<int>& vs) {
    Bits b;
    for (size_t i = 1; i + 1 < vs.size(); ++i) b.set(vs[i]);
    return b;
}

inline bool in_range(const Graph& g, const std::vector<int>& vs) {
    for (int x : vs)
        if (x < 0 || x >= g.n) return false;
    return true;
}

// Grow cur (an induced path, cmask = its vertex set) to exactly `want` edges
// using vertices from `allowed`; calls out() at each completion. out() may
// read cur/cmask and returns true to stop the whole enumeration.
template <class F>
inline bool extend_arm(const Graph& g, std::vector<int>& cur, Bits& cmask, Bits allowed, int want,
                       F& out) {
    if ((int)cur.size() == want + 1) return out();
    int last = cur.back();
    Bits nxt = (g.adj[last] & allowed) - cmask;
    for (int u = nxt.first(); u != -1; u = nxt.next(u)) {
        if ((g.adj[u] & cmask) != Bits::single(last)) continue;
        cur.push_back(u);
        cmask.set(u);
        bool stop = extend_arm(g, cur, cmask, allowed, want, out);
        cur.pop_back();
        cmask.reset(u);
        if (stop) return true;
    }
    return false;
}

} // namespace detail_config

// Checks every defining clause of the witness kind directly against the
// witness's host graph. On failure writes a short reason code. k bounds the
// jewel order and defaults to ell + 3; other kinds ignore it.
inline bool validate_witness(const Witness& w, int ell, int k = -1, std::string* reason = nullptr) {
    using detail_config::interior_of;
    using detail_config::in_range;
    using detail_config::mask_of;
    using detail_config::vfail;
    const Graph& g = w.host;
    auto role = [&](const char* name) { return w.find(name); };
    auto one = [&](const char* name, int& out) {
        const auto* r = w.find(name);
        if (!r || r->size() != 1 || !in_range(g, *r)) return false;
        out = (*r)[0];
        return true;
    };

    switch (w.kind) {
    case ConfigKind::long_even_hole: {
        const auto* c = role("c");
        if (!c) return vfail(reason, "missing-role:c");
        if (!in_range(g, *c)) return vfail(reason, "vertex-out-of-range");
        Hole h{*c};
        if (!is_hole_of(g, h)) return vfail(reason, "not-a-hole");
        if (h.length() < ell) return vfail(reason, "hole-too-short");
        if (h.length() % 2) return vfail(reason, "hole-odd");
        return true;
    }

    case ConfigKind::induced_tree: {
        int v1, v2, v3;
        if (!one("v1", v1) || !one("v2", v2) || !one("v3", v3))
            return vfail(reason, "missing-role:terminal");
        const auto* t = role("tree");
        if (!t) return vfail(reason, "missing-role:tree");
        if (!in_range(g, *t)) return vfail(reason, "vertex-out-of-range");
        Bits s = mask_of(*t);
        if ((int)t->size() != s.count()) return vfail(reason, "repeated-vertex");
        if (!s.test(v1) || !s.test(v2) || !s.test(v3)) return vfail(reason, "terminal-not-in-tree");
        if (!is_connected(g, s)) return vfail(reason, "tree-not-connected");
        int edges = 0;
        s.for_each([&](int u) { edges += (g.adj[u] & s).count(); });
        if (edges / 2 != s.count() - 1) return vfail(reason, "tree-has-cycle");
        return true;
    }

    case ConfigKind::long_jewel: {
        int kk = k < 0 ? ell + 3 : k;
        int u, v;
        if (!one("u", u) || !one("v", v)) return vfail(reason, "missing-role:end");
        const auto *q1 = role("q1"), *q2 = role("q2"), *p = role("p");
        if (!q1 || !q2 || !p) return vfail(reason, "missing-role:path");
        if (!in_range(g, *q1) || !in_range(g, *q2) || !in_range(g, *p))
            return vfail(reason, "vertex-out-of-range");
        if (u == v || g.adjacent(u, v)) return vfail(reason, "ends-adjacent");
        auto uv_path = [&](const std::vector<int>& q) {
            return q.size() >= 2 && q.front() == u && q.back() == v && is_induced_path(g, Path{q});
        };
        if (!uv_path(*q1)) return vfail(reason, "q1-not-induced-uv-path");
        if (!uv_path(*q2)) return vfail(reason, "q2-not-induced-uv-path");
        if (!uv_path(*p)) return vfail(reason, "p-not-induced-uv-path");
        int l1 = (int)q1->size() - 1, l2 = (int)q2->size() - 1, lp = (int)p->size() - 1;
        if (l1 % 2 == 0) return vfail(reason, "q1-not-odd");
        if (l2 % 2 == 1) return vfail(reason, "q2-not-even");
        if (l1 > kk - 1) return vfail(reason, "q1-too-long");
        if (l2 > kk - 1) return vfail(reason, "q2-too-long");
        if (lp < std::max(0, ell - std::min(l1, l2)) + 2) return vfail(reason, "p-too-short");
        Bits qi = interior_of(*q1) | interior_of(*q2);
        if (!is_anticomplete(g, interior_of(*p), qi)) return vfail(reason, "p-touches-q-interior");
        return true;
    }

    case ConfigKind::long_theta: {
        int u, v;
        if (!one("u", u) || !one("v", v)) return vfail(reason, "missing-role:end");
        std::array<const std::vector<int>*, 3> ps{role("p1"), role("p2"), role("p3")};
        for (const auto* p : ps)
            if (!p) return vfail(reason, "missing-role:path");
        if (u == v || g.adjacent(u, v)) return vfail(reason, "ends-adjacent");
        std::array<int, 3> len{};
        for (int i = 0; i < 3; ++i) {
            const auto& p = *ps[i];
            if (!in_range(g, p)) return vfail(reason, "vertex-out-of-range");
            if (p.size() < 3) return vfail(reason, "path-too-short");
            if (p.front() != u || p.back() != v) return vfail(reason, "path-wrong-ends");
            if (!is_induced_path(g, Path{p})) return vfail(reason, "path-not-induced");
            len[i] = (int)p.size() - 1;
        }
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                if (!is_anticomplete(g, interior_of(*ps[i]), interior_of(*ps[j])))
                    return vfail(reason, "interiors-not-anticomplete");
                if (len[i] + len[j] < ell) return vfail(reason, "pair-sum-too-small");
            }
        return true;
    }

    case ConfigKind::long_ban_the_bomb: {
        int v, wv, x, y, z;
        if (!one("v", v) || !one("w", wv) || !one("x", x) || !one("y", y) || !one("z", z))
            return vfail(reason, "missing-role:vertex");
        const auto* c = role("c");
        if (!c) return vfail(reason, "missing-role:c");
        if (!in_range(g, *c)) return vfail(reason, "vertex-out-of-range");
        Hole h{*c};
        if (!is_hole_of(g, h)) return vfail(reason, "c-not-a-hole");
        Bits cm = h.vset();
        if (cm.test(v)) return vfail(reason, "v-on-hole");
        int iy = -1;
        for (size_t i = 0; i < c->size(); ++i)
            if ((*c)[i] == y) iy = (int)i;
        if (iy < 0) return vfail(reason, "y-not-on-hole");
        size_t m = c->size();
        int before = (*c)[(iy + m - 1) % m], after = (*c)[(iy + 1) % m];
        if (!((before == x && after == z) || (before == z && after == x)))
            return vfail(reason, "xyz-not-consecutive");
        if (!cm.test(wv) || wv == x || wv == y || wv == z) return vfail(reason, "w-not-on-hole");
        if (g.adjacent(wv, x)) return vfail(reason, "w-adjacent-x");
        if (g.adjacent(wv, y)) return vfail(reason, "w-adjacent-y");
        if (!g.adjacent(v, wv) || !g.adjacent(v, x) || !g.adjacent(v, z))
            return vfail(reason, "v-missing-edge");
        Bits named = Bits::single(wv) | Bits::single(x) | Bits::single(y) | Bits::single(z);
        if (((g.adj[v] & cm) - named).any()) return vfail(reason, "v-extra-neighbor");
        Induced sub = induced_subgraph(g, cm | Bits::single(v));
        if (!enumerate_holes(sub.g, 4, ell - 1).holes.empty())
            return vfail(reason, "short-hole-inside");
        return true;
    }

    case ConfigKind::long_near_prism: {
        std::array<int, 3> a{}, b{};
        for (int i = 0; i < 3; ++i) {
            if (!one(("a" + std::to_string(i + 1)).c_str(), a[i]) ||
                !one(("b" + std::to_string(i + 1)).c_str(), b[i]))
                return vfail(reason, "missing-role:base");
        }
        std::array<const std::vector<int>*, 3> ps{role("p1"), role("p2"), role("p3")};
        for (const auto* p : ps)
            if (!p) return vfail(reason, "missing-role:path");
        Bits am = Bits::single(a[0]) | Bits::single(a[1]) | Bits::single(a[2]);
        Bits bm = Bits::single(b[0]) | Bits::single(b[1]) | Bits::single(b[2]);
        if (am.count() != 3 || bm.count() != 3 || !is_clique(g, am) || !is_clique(g, bm))
            return vfail(reason, "base-not-triangle");
        int shared = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (a[i] == b[j]) {
                    if (i != j) return vfail(reason, "bases-overlap");
                    ++shared;
                }
        if (shared > 1) return vfail(reason, "bases-overlap");
        int short_paths = 0;
        for (int i = 0; i < 3; ++i) {
            const auto& p = *ps[i];
            if (!in_range(g, p)) return vfail(reason, "vertex-out-of-range");
            if (p.front() != a[i] || p.back() != b[i]) return vfail(reason, "path-wrong-ends");
            if (a[i] == b[i]) {
                if (p.size() != 1) return vfail(reason, "path-wrong-ends");
            } else if (!is_induced_path(g, Path{p})) {
                return vfail(reason, "path-not-induced");
            }
            if ((int)p.size() - 1 < ell) ++short_paths;
        }
        if (short_paths > 1) return vfail(reason, "two-short-paths");
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (mask_of(*ps[i]).intersects(mask_of(*ps[j])))
                    return vfail(reason, "paths-intersect");
        // The union must induce exactly the two triangles plus the path edges.
        Bits un = am | bm;
        for (const auto* p : ps) un |= mask_of(*p);
        std::vector<Bits> want(g.n);
        auto put = [&](int s, int t) {
            want[s].set(t);
            want[t].set(s);
        };
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                put(a[i], a[j]);
                put(b[i], b[j]);
            }
        for (const auto* p : ps)
            for (size_t i = 0; i + 1 < p->size(); ++i) put((*p)[i], (*p)[i + 1]);
        bool exact = true;
        un.for_each([&](int s) {
            if ((g.adj[s] & un) != want[s]) exact = false;
        });
        if (!exact) return vfail(reason, "extra-edge");
        return true;
    }
    }
    return vfail(reason, "unknown-kind");
}

namespace detail_config {

// If s spans an induced cycle, return it in canonical rotation.
inline std::optional<Hole> hole_from_set(const Graph& g, Bits s) {
    int sz = s.count();
    if (sz < 4) return std::nullopt;
    for (int v = s.first(); v != -1; v = s.next(v))
        if ((g.adj[v] & s).count() != 2) return std::nullopt;
    Hole h;
    h.v.reserve(sz);
    int start = s.first();
    Bits nb = g.adj[start] & s;
    int prev = start, cur = nb.first();
    h.v.push_back(start);
    while (cur != start) {
        h.v.push_back(cur);
        Bits step = (g.adj[cur] & s) - Bits::single(prev);
        prev = cur;
        cur = step.first();
    }
    if ((int)h.v.size() != sz) return std::nullopt; // two or more disjoint cycles
    return h;
}

} // namespace detail_config

// Even hole of length in [ell, k] by direct subset enumeration, smallest
// first; exhaustive and therefore exponential in k. Returns the
// lexicographically least witness at the smallest feasible length.
inline std::optional<Hole> detect_short_long_even_hole(const Graph& g, int ell, int k) {
    assert(ell <= k);
    int lo = std::max(ell, 4);
    if (lo % 2) ++lo;
    for (int s = lo; s <= std::min(k, g.n); s += 2) {
        std::vector<int> comb(s);
        for (int i = 0; i < s; ++i) comb[i] = i;
        while (true) {
            Bits m;
            for (int x : comb) m.set(x);
            if (auto h = detail_config::hole_from_set(g, m)) return h;
            int i = s - 1;
            while (i >= 0 && comb[i] == g.n - s + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return std::nullopt;
}

// Exact search for an induced tree containing v1, v2 and v3. Grows a
// connected induced tree from v1; a vertex can join only while it has
// exactly one neighbor inside, and since neighbor counts only grow, a vertex
// seeing two tree vertices is dead for the rest of the branch. Visited
// vertex sets are memoized, and branches where a target is cut off or
// already double-attached are pruned.
inline std::optional<Witness> three_in_a_tree(const Graph& g, int v1, int v2, int v3) {
    assert(v1 >= 0 && v1 < g.n && v2 >= 0 && v2 < g.n && v3 >= 0 && v3 < g.n);
    assert(v1 != v2 && v1 != v3 && v2 != v3);
    struct Search {
        const Graph& g;
        int v2, v3;
        std::unordered_set<Bits, BitsHash> seen;
        Bits found;

        bool grow(Bits s) {
            if (s.test(v2) && s.test(v3)) {
                found = s;
                return true;
            }
            if (!seen.insert(s).second) return false;
            Bits cand, loose;
            for (int u = 0; u < g.n; ++u) {
                if (s.test(u)) continue;
                int c = (g.adj[u] & s).count();
                if (c <= 1) loose.set(u);
                if (c == 1) cand.set(u);
            }
            if ((!s.test(v2) && !loose.test(v2)) || (!s.test(v3) && !loose.test(v3))) return false;
            Bits reach = neighbors_of_set(g, s) & loose;
            while (true) {
                Bits nx = (neighbors_of_set(g, reach) & loose) - reach;
                if (nx.none()) break;
                reach |= nx;
            }
            if ((!s.test(v2) && !reach.test(v2)) || (!s.test(v3) && !reach.test(v3))) return false;
            for (int u = cand.first(); u != -1; u = cand.next(u))
                if (grow(s | Bits::single(u))) return true;
            return false;
        }
    };
    Search se{g, v2, v3, {}, {}};
    if (!se.grow(Bits::single(v1))) return std::nullopt;
    Witness w;
    w.kind = ConfigKind::induced_tree;
    w.host = g;
    w.add("v1", v1);
    w.add("v2", v2);
    w.add("v3", v3);
    std::vector<int> tree;
    se.found.for_each([&](int u) { tree.push_back(u); });
    w.add("tree", tree);
    return w;
}

namespace detail_config {

// Enumerate every induced long claw once: centers ascending, then length
// triples (k1 <= k2 <= k3) ascending, then arm sequences lexicographically,
// with equal-length arms ordered to kill the remaining symmetry. fn returns
// true to stop.
template <class F>
inline bool visit_long_claws(const Graph& g, int ell, F&& fn) {
    const int cap = 2 * ell - 6;
    for (int a = 0; a < g.n; ++a) {
        if (g.degree(a) < 3) continue;
        for (int k1 = 2; 3 * k1 <= cap; ++k1)
            for (int k2 = k1; k1 + 2 * k2 <= cap; ++k2) {
                if (k1 + k2 < ell - 2) continue;
                for (int k3 = k2; k1 + k2 + k3 <= cap; ++k3) {
                    std::vector<int> c1{a}, c2{a}, c3{a};
                    Bits m1 = Bits::single(a), m2 = m1, m3 = m1;
                    auto arm3 = [&]() {
                        if (k2 == k3 && !(c2 < c3)) return false;
                        LongClaw z{Path{c1}, Path{c2}, Path{c3}};
                        return fn(z);
                    };
                    auto arm2 = [&]() {
                        if (k1 == k2 && !(c1 < c2)) return false;
                        Bits used = (m2 - Bits::single(a));
                        Bits allowed3 = g.vertices() - used - neighbors_of_set(g, used) -
                                        (m1 - Bits::single(a)) -
                                        neighbors_of_set(g, m1 - Bits::single(a));
                        return extend_arm(g, c3, m3, allowed3, k3, arm3);
                    };
                    auto arm1 = [&]() {
                        Bits used = m1 - Bits::single(a);
                        Bits allowed2 = g.vertices() - used - neighbors_of_set(g, used);
                        return extend_arm(g, c2, m2, allowed2, k2, arm2);
                    };
                    if (extend_arm(g, c1, m1, g.vertices(), k1, arm1)) return true;
                }
            }
    }
    return false;
}

} // namespace detail_config

// All induced long claws, in the enumeration order described above.
inline std::vector<LongClaw> detect_long_claws(const Graph& g, int ell) {
    std::vector<LongClaw> out;
    detail_config::visit_long_claws(g, ell, [&](const LongClaw& z) {
        out.push_back(z);
        return false;
    });
    return out;
}

// Long theta detection through long claws: for each claw Z with tips
// r1,r2,r3, delete every other vertex in or adjacent to the rest of Z and
// ask for an induced tree on the tips. A minimal such tree is a path with
// one tip interior or a spider with one branch vertex (tips are pairwise
// non-adjacent, so tip-to-hub distances are at least 2), and gluing the claw
// arms to the tree paths always closes into a long theta.
inline std::optional<Witness> detect_long_theta(const Graph& g, int ell) {
    std::optional<Witness> out;
    detail_config::visit_long_claws(g, ell, [&](const LongClaw& z) {
        int a = z.center();
        std::array<std::vector<int>, 3> arms{z.q1.v, z.q2.v, z.q3.v};
        std::array<int, 3> tip{arms[0].back(), arms[1].back(), arms[2].back()};
        Bits tips = Bits::single(tip[0]) | Bits::single(tip[1]) | Bits::single(tip[2]);
        Bits core = (z.q1.vset() | z.q2.vset() | z.q3.vset()) - tips;
        Bits keep = (g.vertices() - core - neighbors_of_set(g, core)) | tips;
        Induced sub = induced_subgraph(g, keep);
        std::vector<int> back(g.n, -1);
        for (int i = 0; i < sub.g.n; ++i) back[sub.to_parent[i]] = i;
        auto t = three_in_a_tree(sub.g, back[tip[0]], back[tip[1]], back[tip[2]]);
        if (!t) return false;
        Bits tm = detail_config::mask_of(t->seq("tree"));
        Bits tiploc = Bits::single(back[tip[0]]) | Bits::single(back[tip[1]]) |
                      Bits::single(back[tip[2]]);
        // trim to a minimal tree: repeatedly drop leaves that are not tips
        for (bool again = true; again;) {
            again = false;
            for (int u = tm.first(); u != -1; u = tm.next(u))
                if (!tiploc.test(u) && (sub.g.adj[u] & tm).count() <= 1) {
                    tm.reset(u);
                    again = true;
                }
        }
        int hub = -1;
        for (int u = tm.first(); u != -1; u = tm.next(u))
            if ((sub.g.adj[u] & tm).count() >= 3) hub = u;
        if (hub == -1) // path: the tip that is not a leaf is the second branch vertex
            for (int i = 0; i < 3; ++i)
                if ((sub.g.adj[back[tip[i]]] & tm).count() == 2) hub = back[tip[i]];
        assert(hub != -1);
        std::vector<std::vector<int>> paths;
        for (int i = 0; i < 3; ++i) {
            std::vector<int> p = arms[i];
            int prev = -1, cur = back[tip[i]];
            while (cur != hub) {
                Bits step = sub.g.adj[cur] & tm;
                if (prev != -1) step.reset(prev);
                prev = cur;
                cur = step.first();
                p.push_back(sub.to_parent[cur]);
            }
            paths.push_back(std::move(p));
        }
        int u = a, v = sub.to_parent[hub];
        if (u > v) {
            std::swap(u, v);
            for (auto& p : paths) std::reverse(p.begin(), p.end());
        }
        std::sort(paths.begin(), paths.end(), [](const auto& x, const auto& y) {
            if (x.size() != y.size()) return x.size() < y.size();
            return x < y;
        });
        Witness wit;
        wit.kind = ConfigKind::long_theta;
        wit.host = g;
        wit.add("u", u);
        wit.add("v", v);
        wit.add("p1", paths[0]);
        wit.add("p2", paths[1]);
        wit.add("p3", paths[2]);
        assert(validate_witness(wit, ell));
        out = std::move(wit);
        return true;
    });
    return out;
}

namespace detail_config {

// All induced u-v paths with at most maxlen edges, lexicographically.
inline std::vector<std::vector<int>> induced_paths_between(const Graph& g, int u, int v,
                                                           int maxlen) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur{u};
    Bits cmask = Bits::single(u);
    auto rec = [&](auto&& self) -> void {
        int last = cur.back();
        if (last == v) {
            out.push_back(cur);
            return;
        }
        if ((int)cur.size() > maxlen) return;
        Bits nxt = g.adj[last] - cmask;
        for (int t = nxt.first(); t != -1; t = nxt.next(t)) {
            if ((g.adj[t] & cmask) != Bits::single(last)) continue;
            cur.push_back(t);
            cmask.set(t);
            self(self);
            cur.pop_back();
            cmask.reset(t);
        }
    };
    rec(rec);
    return out;
}

} // namespace detail_config

// Long jewel of order at most k (default ell + 3): odd/even induced u-v path
// pair plus an induced u-v path p that avoids the pair's interiors, of length
// at least ell - min(|q1|,|q2|) + 2. Enumerates jewel fragments (q1, q2, and
// the forced prefix r of p) and closes each with a shortest path in the
// residual graph.
inline std::optional<Witness> detect_long_jewel(const Graph& g, int ell, int k = -1) {
    if (k < 0) k = ell + 3;
    std::optional<Witness> out;
    auto emit = [&](int u, int v, const std::vector<int>& q1, const std::vector<int>& q2,
                    std::vector<int> p) {
        Witness wit;
        wit.kind = ConfigKind::long_jewel;
        wit.host = g;
        wit.add("u", u);
        wit.add("v", v);
        wit.add("q1", q1);
        wit.add("q2", q2);
        wit.add("p", std::move(p));
        assert(validate_witness(wit, ell, k));
        out = std::move(wit);
    };
    for (int u = 0; u < g.n && !out; ++u)
        for (int v = u + 1; v < g.n && !out; ++v) {
            if (g.adjacent(u, v)) continue;
            auto qs = detail_config::induced_paths_between(g, u, v, k - 1);
            for (const auto& q1 : qs) {
                if (out) break;
                if (q1.size() % 2) continue; // odd edge count = even vertex count
                for (const auto& q2 : qs) {
                    if (out) break;
                    if (q2.size() % 2 == 0) continue;
                    int l1 = (int)q1.size() - 1, l2 = (int)q2.size() - 1;
                    int rlen = std::max(0, ell - std::min(l1, l2));
                    Bits s = detail_config::mask_of(q1) | detail_config::mask_of(q2);
                    auto close = [&](const JewelFragment& f, Bits rmask) {
                        Bits blocked = (s | rmask) - Bits::single(f.w) - Bits::single(f.v);
                        Bits x = g.vertices() - blocked - neighbors_of_set(g, blocked);
                        Bits allowed = x | Bits::single(f.w) | Bits::single(f.v);
                        auto zp = shortest_path(g, f.w, f.v, g.vertices() - allowed);
                        if (!zp) return false;
                        std::vector<int> p = f.r.v;
                        p.insert(p.end(), zp->v.begin() + 1, zp->v.end());
                        emit(f.u, f.v, f.q1.v, f.q2.v, std::move(p));
                        return true;
                    };
                    if (rlen == 0) {
                        JewelFragment f{Path{q1}, Path{q2}, Path{{u}}, u, v, u};
                        close(f, Bits::single(u));
                    } else {
                        Bits allowed_r =
                            g.vertices() - s - neighbors_of_set(g, s - Bits::single(u));
                        std::vector<int> arm{u};
                        Bits amask = Bits::single(u);
                        auto done = [&]() {
                            JewelFragment f{Path{q1}, Path{q2}, Path{arm}, u, v, arm.back()};
                            return close(f, amask);
                        };
                        detail_config::extend_arm(g, arm, amask, allowed_r, rlen, done);
                    }
                }
            }
        }
    return out;
}

namespace detail_config {

// Induced a-b path that passes through m with at least two edges between m
// and each end; exact DFS, lexicographic.
inline std::optional<std::vector<int>> induced_path_through(const Graph& g, int a, int b, int m) {
    std::vector<int> cur{a};
    Bits cmask = Bits::single(a);
    int mpos = -1;
    std::optional<std::vector<int>> out;
    auto rec = [&](auto&& self) -> bool {
        int last = cur.back();
        if (last == b) {
            if (mpos >= 2 && (int)cur.size() - 1 - mpos >= 2) {
                out = cur;
                return true;
            }
            return false;
        }
        Bits nxt = g.adj[last] - cmask;
        for (int t = nxt.first(); t != -1; t = nxt.next(t)) {
            if ((g.adj[t] & cmask) != Bits::single(last)) continue;
            if (t == b && mpos == -1) continue;
            cur.push_back(t);
            cmask.set(t);
            if (t == m) mpos = (int)cur.size() - 1;
            bool stop = self(self);
            if (t == m) mpos = -1;
            cur.pop_back();
            cmask.reset(t);
            if (stop) return true;
        }
        return false;
    };
    rec(rec);
    return out;
}

} // namespace detail_config

// Long ban-the-bomb detection. Callers must pass a graph with no hole of
// length 4 and no long theta (checked here in debug builds at small n via
// the oracles). Under those preconditions the apex v is adjacent to y in
// every long ban-the-bomb, and the hole arc from z to w (avoiding y) has
// length 1 or at least ell - 2, which splits detection into two complete
// scans:
//   - near shape (z-w arc is one edge): enumerate the 5-vertex gadget
//     directly and complete the w..x side with an arm of ell - 3 edges plus
//     a shortest path, giving the one long side hole;
//   - far shape (both arcs at least ell - 2): the structure contains a bomb,
//     so enumerate bombs and complete them with an induced end-to-end path
//     through w staying at least two edges away from both bomb ends. (A
//     plain tree on the three degree-one vertices is not enough: a tree
//     hugging w on either side closes a hole of length ell - 1.)
inline std::optional<Witness> detect_long_ban_the_bomb(const Graph& g, int ell) {
#ifndef NDEBUG
    if (g.n <= 14) {
        assert(enumerate_holes(g, 4, 4).holes.empty());
        assert(!detail_oracle::find_long_theta(g, ell));
    }
#endif
    auto emit = [&](std::vector<int> c, int v, int wv, int x, int y, int z) {
        Witness wit;
        wit.kind = ConfigKind::long_ban_the_bomb;
        wit.host = g;
        wit.add("c", std::move(c));
        wit.add("v", v);
        wit.add("w", wv);
        wit.add("x", x);
        wit.add("y", y);
        wit.add("z", z);
        assert(validate_witness(wit, ell));
        return wit;
    };

    // Near shape.
    for (int v = 0; v < g.n; ++v) {
        Bits nv = g.adj[v];
        for (int y = nv.first(); y != -1; y = nv.next(y)) {
            Bits xz = nv & g.adj[y];
            for (int x = xz.first(); x != -1; x = xz.next(x))
                for (int z = xz.first(); z != -1; z = xz.next(z)) {
                    if (z == x || g.adjacent(x, z)) continue;
                    Bits ws = ((nv & g.adj[z]) - g.adj[x] - g.adj[y]) - Bits::single(y);
                    for (int wv = ws.first(); wv != -1; wv = ws.next(wv)) {
                        Bits roles = Bits::single(v) | Bits::single(wv) | Bits::single(x) |
                                     Bits::single(y) | Bits::single(z);
                        Bits allowed = g.vertices() - roles - nv - g.adj[y] - g.adj[z];
                        std::vector<int> arm{wv};
                        Bits amask = Bits::single(wv);
                        std::vector<int> arc;
                        auto finish = [&]() {
                            int tip = arm.back();
                            if (g.adjacent(tip, x)) {
                                arc = arm;
                                arc.push_back(x);
                                return true;
                            }
                            Bits inner = amask;
                            inner.reset(tip);
                            Bits tail = (allowed - amask - neighbors_of_set(g, inner)) |
                                        Bits::single(tip) | Bits::single(x);
                            auto tp = shortest_path(g, tip, x, g.vertices() - tail);
                            if (!tp) return false;
                            arc = arm;
                            arc.insert(arc.end(), tp->v.begin() + 1, tp->v.end());
                            return true;
                        };
                        // Arm positions below ell - 3 also stay clear of x so the
                        // final arc has no chord into x; only the tip may touch it.
                        auto staged = [&]() {
                            return detail_config::extend_arm(g, arm, amask, allowed, ell - 3,
                                                             finish);
                        };
                        Bits early = allowed - g.adj[x];
                        if (detail_config::extend_arm(g, arm, amask, early, ell - 4, staged)) {
                            std::vector<int> c{x, y, z};
                            c.insert(c.end(), arc.begin(), arc.end() - 1);
                            return emit(std::move(c), v, wv, x, y, z);
                        }
                    }
                }
        }
    }

    // Far shape.
    const int armlen = ell - 4;
    for (int y = 0; y < g.n; ++y) {
        Bits ny = g.adj[y];
        for (int x = ny.first(); x != -1; x = ny.next(x))
            for (int z = ny.next(x); z != -1; z = ny.next(z)) {
                if (g.adjacent(x, z)) continue;
                Bits vs = g.adj[x] & ny & g.adj[z];
                for (int v = vs.first(); v != -1; v = vs.next(v)) {
                    Bits roles = Bits::single(v) | Bits::single(x) | Bits::single(y) |
                                 Bits::single(z);
                    Bits base = g.vertices() - roles - g.adj[v] - g.adj[y];
                    std::vector<int> left{x};
                    Bits lmask = Bits::single(x);
                    auto after_left = [&]() {
                        Bits lused = lmask - Bits::single(x);
                        Bits allowed_r = (base - g.adj[x]) - lused - neighbors_of_set(g, lused);
                        std::vector<int> right{z};
                        Bits rmask = Bits::single(z);
                        auto after_right = [&]() {
                            Bomb bomb;
                            bomb.r.v.assign(left.rbegin(), left.rend());
                            bomb.r.v.push_back(y);
                            bomb.r.v.insert(bomb.r.v.end(), right.begin(), right.end());
                            bomb.x = x;
                            bomb.y = y;
                            bomb.z = z;
                            bomb.v = v;
                            Bits rm = bomb.r.vset();
                            int e1 = bomb.r.v.front(), e2 = bomb.r.v.back();
                            Bits wcand = g.adj[v] - rm;
                            for (int wv = wcand.first(); wv != -1; wv = wcand.next(wv)) {
                                if ((g.adj[wv] & rm).any()) continue;
                                bomb.w = wv;
                                Bits ends = Bits::single(e1) | Bits::single(e2) |
                                            Bits::single(wv);
                                Bits core = (rm - ends) | Bits::single(v);
                                Bits keep =
                                    (g.vertices() - core - neighbors_of_set(g, core)) | ends;
                                Induced sub = induced_subgraph(g, keep);
                                std::vector<int> back(g.n, -1);
                                for (int i = 0; i < sub.g.n; ++i) back[sub.to_parent[i]] = i;
                                auto t = detail_config::induced_path_through(sub.g, back[e1],
                                                                             back[e2], back[wv]);
                                if (!t) continue;
                                std::vector<int> c = bomb.r.v;
                                for (size_t i = t->size() - 2; i >= 1; --i)
                                    c.push_back(sub.to_parent[(*t)[i]]);
                                return std::optional<Witness>(
                                    emit(std::move(c), v, wv, x, y, z));
                            }
                            return std::optional<Witness>{};
                        };
                        // adapt: extend_arm stops on true
                        std::optional<Witness> got;
                        auto wrap = [&]() {
                            got = after_right();
                            return got.has_value();
                        };
                        detail_config::extend_arm(g, right, rmask, allowed_r, armlen, wrap);
                        return got;
                    };
                    std::optional<Witness> got;
                    auto wrap = [&]() {
                        got = after_left();
                        return got.has_value();
                    };
                    detail_config::extend_arm(g, left, lmask, base - g.adj[z], armlen, wrap);
                    if (got) return got;
                }
            }
    }
    return std::nullopt;
}

} // namespace evenhole
