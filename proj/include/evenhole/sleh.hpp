#pragma once

// Machinery around shortest long even holes: hole-major vertices, candidate
// screening against the five configuration detectors, shortcuts, hole
// contrivances, the lazy major-cleaning list, the clean-hole triple sweep,
// and the assembled decision procedure for "is there an even hole of length
// at least ell".

#include "config.hpp"
#include "graph.hpp"
#include "oracle.hpp"
#include "prism.hpp"
#include "witness.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace evenhole {

// ---------------------------------------------------------------------------
// Major vertices of a hole.

namespace detail_sleh {

// Position of v along h, or -1.
inline int pos_on(const Hole& h, int v) {
    for (size_t i = 0; i < h.v.size(); ++i)
        if (h.v[i] == v) return (int)i;
    return -1;
}

// Arc of h starting at position i and walking len edges forward.
inline Path arc(const Hole& h, int i, int len) {
    int k = (int)h.v.size();
    assert(len >= 0 && len < k);
    Path p;
    p.v.reserve(len + 1);
    for (int t = 0; t <= len; ++t) p.v.push_back(h.v[(i + t) % k]);
    return p;
}

} // namespace detail_sleh

// A vertex off the hole is major when no four consecutive hole vertices
// cover all of its hole neighbors. (Vertices with no hole neighbor are
// covered trivially, so they are never major.)
inline bool is_c_major(const Graph& g, const Hole& c, int v) {
    Bits cs = c.vset();
    assert(v >= 0 && v < g.n && !cs.test(v));
    Bits nb = g.adj[v] & cs;
    if (nb.none()) return false;
    int k = c.length();
    for (int i = 0; i < k; ++i) {
        Bits window;
        for (int t = 0; t < 4; ++t) window.set(c.v[(i + t) % k]);
        if (nb.is_subset_of(window)) return false;
    }
    return true;
}

inline std::vector<int> c_major_vertices(const Graph& g, const Hole& c) {
    std::vector<int> out;
    Bits cs = c.vset();
    for (int v = 0; v < g.n; ++v)
        if (!cs.test(v) && is_c_major(g, c, v)) out.push_back(v);
    return out;
}

// A hole is clean when nothing outside it is major.
inline bool is_clean(const Graph& g, const Hole& c) {
    Bits cs = c.vset();
    for (int v = 0; v < g.n; ++v)
        if (!cs.test(v) && is_c_major(g, c, v)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Candidate screening.

// Outcome of the five configuration detectors, run in escalation order. The
// near-prism detector requires a theta-free graph, so that stage is skipped
// when a theta fired earlier; the report is already negative then.
struct CandidateReport {
    std::optional<Hole> short_hole;  // even hole of length in [ell, 2*ell+2]
    std::optional<Witness> jewel;    // long jewel of order at most ell+3
    std::optional<Witness> theta;
    std::optional<Witness> bomb;
    std::optional<Witness> prism;
    bool prism_budget_exceeded = false;

    bool any_hit() const {
        return short_hole.has_value() || jewel.has_value() || theta.has_value() ||
               bomb.has_value() || prism.has_value();
    }
    // True only when every stage ran to completion and found nothing.
    bool is_candidate() const { return !any_hit() && !prism_budget_exceeded; }
};

inline CandidateReport test_candidate(const Graph& g, int ell,
                                      long long prism_budget = kDetectBudget,
                                      bool stop_at_first = false) {
    assert(ell >= 4);
    CandidateReport r;
    r.short_hole = detect_short_long_even_hole(g, ell, 2 * ell + 2);
    if (r.short_hole && stop_at_first) return r;
    r.jewel = detect_long_jewel(g, ell, ell + 3);
    if (r.jewel && stop_at_first) return r;
    r.theta = detect_long_theta(g, ell);
    if (r.theta && stop_at_first) return r;
    r.bomb = detect_long_ban_the_bomb(g, ell);
    if (r.bomb && stop_at_first) return r;
    if (!r.theta) {
        PrismSearch ps = detect_long_near_prism(g, ell, prism_budget);
        if (ps.status == PrismSearch::Status::found)
            r.prism = ps.witness;
        else if (ps.status == PrismSearch::Status::budget_exceeded)
            r.prism_budget_exceeded = true;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Shortcuts.

// A shortcut undercuts the hole metric while avoiding its major vertices: an
// induced path between non-adjacent hole vertices, strictly shorter than
// their distance around the hole, with no major vertex anywhere on it. A
// shortest path in the graph minus the majors is induced, so one BFS per
// pair decides existence exactly.
inline std::optional<Path> has_shortcut(const Graph& g, const Hole& c) {
    Bits majors;
    for (int v : c_major_vertices(g, c)) majors.set(v);
    int k = c.length();
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            int d = std::min(j - i, k - (j - i));
            if (d <= 1) continue; // consecutive on the hole, hence adjacent
            auto p = shortest_path(g, c.v[i], c.v[j], majors);
            if (p && p->length() < d) return p;
        }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Hole contrivances.

// A cleaning recipe pinned to one hole: a few of its major vertices, a few
// of its arcs, and a reference vertex on it. is_c_contrivance checks the six
// defining clauses; is_useful_c_contrivance adds the size bounds that make a
// recipe guessable.
struct CContrivance {
    Bits a;               // major vertices, at most three when useful
    std::vector<Path> b;  // arcs of the hole, at most six when useful
    int m = -1;           // vertex on the hole
};

namespace detail_sleh {

// Whether v sits at one of the one or two positions of p furthest from both
// of its ends.
inline bool is_midpoint(const Path& p, int v) {
    int idx = -1;
    for (size_t i = 0; i < p.v.size(); ++i)
        if (p.v[i] == v) idx = (int)i;
    if (idx < 0) return false;
    int len = p.length();
    return idx == len / 2 || idx == (len + 1) / 2;
}

// Whether p walks along consecutive vertices of h (in either direction).
inline bool is_arc_of(const Hole& h, const Path& p) {
    int k = (int)h.v.size();
    if (p.v.empty() || (int)p.v.size() > k) return false;
    int i = pos_on(h, p.v[0]);
    if (i < 0) return false;
    if (p.v.size() == 1) return true;
    for (int dir : {1, -1}) {
        bool ok = true;
        for (size_t t = 1; t < p.v.size() && ok; ++t)
            ok = p.v[t] == h.v[((i + dir * (int)t) % k + k) % k];
        if (ok) return true;
    }
    return false;
}

} // namespace detail_sleh

// Clause check for (a, b, m) against hole c: (1) a holds majors of c, (2) b
// holds arcs of c, (3) m lies on c, (4) every major sees a or an arc
// interior, (5) some arc of c with both ends in the b-interiors has m as a
// midpoint, is seen by every major, and has all its a-neighbors inside the
// b-interiors, (6) every vertex of a sees an arc interior.
inline bool is_c_contrivance(const Graph& g, const Hole& c, const CContrivance& t,
                             std::string* reason = nullptr) {
    Bits cs = c.vset();
    bool abad = false;
    t.a.for_each([&](int x) {
        if (x >= g.n || cs.test(x) || !is_c_major(g, c, x)) abad = true;
    });
    if (abad) return detail_config::vfail(reason, "a-not-major");
    for (const Path& p : t.b)
        if (!detail_sleh::is_arc_of(c, p)) return detail_config::vfail(reason, "b-not-arc");
    if (t.m < 0 || t.m >= g.n || !cs.test(t.m)) return detail_config::vfail(reason, "m-off-hole");
    Bits bstar;
    for (const Path& p : t.b) bstar |= p.interior();
    std::vector<int> majors = c_major_vertices(g, c);
    Bits seen = t.a | bstar;
    for (int w : majors)
        if ((g.adj[w] & seen).none()) return detail_config::vfail(reason, "major-unseen");
    Bits na;
    t.a.for_each([&](int x) { na |= g.adj[x]; });
    int k = c.length();
    bool witness_arc = false;
    for (int i = 0; i < k && !witness_arc; ++i)
        for (int len = 0; len < k && !witness_arc; ++len) {
            Path p = detail_sleh::arc(c, i, len);
            if (!bstar.test(p.v.front()) || !bstar.test(p.v.back())) continue;
            if (!detail_sleh::is_midpoint(p, t.m)) continue;
            Bits pv = p.vset();
            if (((na & pv) - bstar).any()) continue;
            bool all = true;
            for (int w : majors)
                if ((g.adj[w] & pv).none()) {
                    all = false;
                    break;
                }
            witness_arc = all;
        }
    if (!witness_arc) return detail_config::vfail(reason, "no-witness-arc");
    bool unwired = false;
    t.a.for_each([&](int x) {
        if ((g.adj[x] & bstar).none()) unwired = true;
    });
    if (unwired) return detail_config::vfail(reason, "anchor-unwired");
    return true;
}

inline bool is_useful_c_contrivance(const Graph& g, const Hole& c, const CContrivance& t, int ell,
                                    std::string* reason = nullptr) {
    if (!is_c_contrivance(g, c, t, reason)) return false;
    if (t.a.count() > 3) return detail_config::vfail(reason, "too-many-anchors");
    if ((int)t.b.size() > 6) return detail_config::vfail(reason, "too-many-arcs");
    int over = 0;
    for (const Path& p : t.b) {
        if (p.length() > 2 * ell - 5) return detail_config::vfail(reason, "arc-too-long");
        if (p.length() > ell + 2) ++over;
    }
    if (over > 2) return detail_config::vfail(reason, "too-many-long-arcs");
    return true;
}

// ---------------------------------------------------------------------------
// Cleaning list.

// Deletion set for one cleaning guess. bs supplies the guessed arcs, a the
// anchor vertices, m the reference vertex, d1/d2 the corridor ends (both
// must lie in the arc interiors). Y is everything outside the arcs that sees
// an arc interior; the corridors collect every vertex lying on a shortest
// d1-m or d2-m path once Y and the anchor neighborhoods (less the arc
// interiors) are removed; Z is everything off Y and the interiors seeing
// both an anchor and a corridor.
inline Bits sleh_cleaning_set(const Graph& g, Bits a, const std::vector<Path>& bs, int m, int d1,
                              int d2) {
    assert(m >= 0 && m < g.n);
    Bits bvert, bstar;
    for (const Path& p : bs) {
        bvert |= p.vset();
        bstar |= p.interior();
    }
    assert(bstar.test(d1) && bstar.test(d2));
    Bits y;
    for (int v = 0; v < g.n; ++v)
        if (!bvert.test(v) && (g.adj[v] & bstar).any()) y.set(v);
    Bits na;
    a.for_each([&](int x) { na |= g.adj[x]; });
    Bits forbidden = (y | na) - bstar;
    auto corridor = [&](int d) {
        Bits r;
        if (forbidden.test(m)) return r; // no surviving path can reach m
        if (d == m) {
            r.set(m);
            return r;
        }
        std::vector<int> dist = bfs_dist(g, d, g.vertices() - forbidden);
        if (dist[m] < 0) return r;
        r = all_shortest_path_vertices(g, d, m, forbidden);
        r.set(d);
        r.set(m);
        return r;
    };
    Bits rs = corridor(d1) | corridor(d2);
    rs.reset(d1);
    rs.reset(d2);
    Bits z;
    for (int v = 0; v < g.n; ++v) {
        if (y.test(v) || bstar.test(v)) continue;
        if ((g.adj[v] & a).any() && (g.adj[v] & rs).any()) z.set(v);
    }
    return y | z;
}

namespace detail_sleh {

// Guess sweep feeding sleh_cleaning_set. Arc families are sets of 1..6
// induced paths with 2..2*ell-5 edges (at most two longer than ell+2), kept
// in strictly increasing sequence order; hole arcs of that length range are
// always induced, so nothing coverable is lost by skipping non-induced
// paths. Families run in size-major order and in two phases: first every
// family's anchor-free guess (anchors gone, the corridors cannot matter, so
// the reference and corridor sweeps collapse into one emission), then every
// family again with anchor sets of size 1..3, every reference vertex, and
// every corridor-end pair. Cheap guesses therefore all precede expensive
// ones. One budget tick per guess.
template <class F>
void sweep_cleaning_guesses(const Graph& g, int ell, detail_prism::Gate& gate, F&& fn) {
    const int max_edges = 2 * ell - 5;
    bool stopped = false;
    std::vector<Path> fam;
    int overlong = 0;

    auto emit_plain = [&]() {
        Bits bvert, bstar;
        for (const Path& p : fam) {
            bvert |= p.vset();
            bstar |= p.interior();
        }
        if (!gate.tick()) return;
        Bits y;
        for (int v = 0; v < g.n; ++v)
            if (!bvert.test(v) && (g.adj[v] & bstar).any()) y.set(v);
        if (fn(y)) stopped = true;
    };

    auto emit_anchored = [&]() {
        Bits bstar;
        for (const Path& p : fam) bstar |= p.interior();
        std::vector<int> ds;
        bstar.for_each([&](int d) { ds.push_back(d); });
        std::vector<int> anchors;
        auto grow_anchors = [&](auto&& self, int from) -> void {
            if (stopped || gate.truncated) return;
            if (!anchors.empty()) {
                Bits aset = detail_config::mask_of(anchors);
                for (int m = 0; m < g.n; ++m)
                    for (size_t i = 0; i < ds.size(); ++i)
                        for (size_t j = i; j < ds.size(); ++j) {
                            if (!gate.tick()) return;
                            if (fn(sleh_cleaning_set(g, aset, fam, m, ds[i], ds[j]))) {
                                stopped = true;
                                return;
                            }
                        }
            }
            if ((int)anchors.size() >= 3) return;
            for (int v = from; v < g.n; ++v) {
                if (stopped || gate.truncated) return;
                anchors.push_back(v);
                self(self, v + 1);
                anchors.pop_back();
            }
        };
        grow_anchors(grow_anchors, 0);
    };

    auto sweep_families_of = [&](int size, bool anchored) {
        auto grow = [&](auto&& self) -> void {
            if (stopped || gate.truncated) return;
            if ((int)fam.size() == size) {
                if (anchored)
                    emit_anchored();
                else
                    emit_plain();
                return;
            }
            detail_prism::for_each_induced_path(
                g, g.vertices(), max_edges, [&](const std::vector<int>& pv) {
                    if (stopped || gate.truncated) return true;
                    if ((int)pv.size() < 3) return false; // arcs need an interior
                    int over = (int)pv.size() - 1 > ell + 2 ? 1 : 0;
                    if (over && overlong >= 2) return false;
                    if (!fam.empty() &&
                        !std::lexicographical_compare(fam.back().v.begin(), fam.back().v.end(),
                                                      pv.begin(), pv.end()))
                        return false;
                    fam.push_back(Path{pv});
                    overlong += over;
                    self(self);
                    overlong -= over;
                    fam.pop_back();
                    return stopped || gate.truncated;
                });
        };
        grow(grow);
    };

    for (int anchored = 0; anchored < 2; ++anchored)
        for (int size = 1; size <= 6 && !stopped && !gate.truncated; ++size)
            sweep_families_of(size, anchored == 1);
}

} // namespace detail_sleh

// Lazily guessed hole-cleaning sets: the empty set first, then one set per
// guess. Duplicate sets are suppressed while the cache holds (exact, capped)
// so downstream consumers never re-examine the same deletion; every guess
// still costs a tick, so the budget measures work, not variety.
inline CleaningList sleh_cleaning_list(const Graph& g, int ell, long long budget = kListBudget) {
    CleaningList list;
    list.drive = [g, ell, budget](const std::function<bool(const Bits&)>& fn) {
        detail_prism::Gate gate{budget};
        bool stopped = false;
        std::set<Bits> seen;
        auto push = [&](const Bits& x) {
            if (seen.size() < (1u << 15) && !seen.insert(x).second) return false;
            if (fn(x)) {
                stopped = true;
                return true;
            }
            return false;
        };
        if (gate.tick() && !push(Bits{}))
            detail_sleh::sweep_cleaning_guesses(g, ell, gate, push);
        if (stopped) return SweepStatus::stopped;
        return gate.truncated ? SweepStatus::budget_exceeded : SweepStatus::exhausted;
    };
    return list;
}

// ---------------------------------------------------------------------------
// Clean-hole detection.

// Sweep all vertex triples; for each, glue deterministic shortest paths
// between the three pairs and accept the first gluing that closes into an
// even hole of length at least ell. A hit is verified outright, so it is
// sound unconditionally. When the graph carries a clean shortest long even
// hole and no configuration, a triple spaced a third of the way around that
// hole glues into an even hole of the same length, so the sweep cannot miss.
inline std::optional<Hole> detect_clean_sleh(const Graph& g, int ell) {
    assert(ell >= 4);
    std::vector<std::vector<std::optional<Path>>> sp(g.n);
    for (int u = 0; u < g.n; ++u) {
        sp[u].resize(g.n);
        for (int v = u + 1; v < g.n; ++v) sp[u][v] = shortest_path(g, u, v);
    }
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            if (!sp[u][v]) continue;
            const Path& puv = *sp[u][v];
            for (int w = v + 1; w < g.n; ++w) {
                if (!sp[v][w] || !sp[u][w]) continue;
                const Path& pvw = *sp[v][w];
                const Path& puw = *sp[u][w];
                int total = puv.length() + pvw.length() + puw.length();
                if (total < ell || total % 2 != 0) continue;
                Hole h;
                h.v = puv.v;
                h.v.insert(h.v.end(), pvw.v.begin() + 1, pvw.v.end());
                h.v.insert(h.v.end(), puw.v.rbegin() + 1, puw.v.rend() - 1);
                Bits used;
                bool dup = false;
                for (int x : h.v) {
                    if (used.test(x)) {
                        dup = true;
                        break;
                    }
                    used.set(x);
                }
                if (dup || !is_hole_of(g, h)) continue;
                h.canonicalize();
                return h;
            }
        }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Full decision procedure.

struct LehSearch {
    enum class Status { found, absent, budget_exceeded };
    Status status = Status::absent;
    std::optional<Hole> hole;       // the even hole itself, when one was pinned down
    std::optional<Witness> config;  // or the configuration that forces one
};

// Largest n for which the bounded-length sweep alone decides the question:
// an even hole has length at most 2*floor(n/2), which stays within the sweep
// range [ell, 2*ell+2] up to n = 2*ell+3.
inline int bounded_sweep_decides_up_to(int ell) { return 2 * ell + 3; }

// One cleaned-graph triple sweep costs on the order of a thousand cleaning
// guesses, so the decision procedure rations sweeps at this exchange rate
// against its budget.
inline constexpr long long kCleanSweepCost = 1'000;

namespace detail_sleh {

// Debug probe: the subgraph induced on a configuration witness carries a
// long even hole on its own (for near-prisms and ban-the-bombs by a parity
// argument over their constituent holes, for jewels and thetas directly).
inline bool witness_carries_long_even_hole(const Graph& g, const Witness& w, int ell) {
    Bits s;
    for (const auto& r : w.roles)
        for (int v : r.second) s.set(v);
    Induced sub = induced_subgraph(g, s);
    return oracle_long_even_hole(sub.g, ell).has_value();
}

} // namespace detail_sleh

// Decides whether g has an even hole of length at least ell (ell >= 4).
// Stages: bounded-length sweep, which is complete on its own up to
// bounded_sweep_decides_up_to(ell) vertices; for thresholds below seven an
// exact reduction to threshold seven (once lengths up to 2*ell+2 are ruled
// out, any remaining even hole has length at least 2*ell+4 >= 12, so the
// two questions agree); then the four remaining configuration detectors;
// then the cleaning list with one clean-hole sweep per member. Configuration
// hits return a witness whose subgraph itself contains a long even hole;
// sweep hits return the hole. The budget caps the near-prism stage, the
// cleaning-list guesses, and (scaled by kCleanSweepCost) the number of
// cleaned graphs swept; a truncated stage downgrades "absent" to
// budget_exceeded but never blocks a find.
inline LehSearch detect_long_even_hole(const Graph& g, int ell, long long budget = kDetectBudget) {
    assert(ell >= 4);
    LehSearch out;
    if (auto h = detect_short_long_even_hole(g, ell, 2 * ell + 2)) {
        assert(is_hole_of(g, *h) && h->length() % 2 == 0 && h->length() >= ell);
        out.status = LehSearch::Status::found;
        out.hole = h;
        return out;
    }
    if (g.n <= bounded_sweep_decides_up_to(ell)) return out;
    if (ell < 7) return detect_long_even_hole(g, 7, budget);
    auto hit = [&](std::optional<Witness> w) {
        assert(detail_sleh::witness_carries_long_even_hole(g, *w, ell));
        out.status = LehSearch::Status::found;
        out.config = std::move(w);
        return out;
    };
    if (auto w = detect_long_jewel(g, ell, ell + 3)) return hit(std::move(w));
    if (auto w = detect_long_theta(g, ell)) return hit(std::move(w));
    if (auto w = detect_long_ban_the_bomb(g, ell)) return hit(std::move(w));
    PrismSearch ps = detect_long_near_prism(g, ell, budget);
    if (ps.status == PrismSearch::Status::found) return hit(std::move(ps.witness));
    bool truncated = ps.status == PrismSearch::Status::budget_exceeded;

    long long sweeps = std::max<long long>(16, budget / kCleanSweepCost);
    bool sweeps_capped = false;
    std::optional<Hole> found;
    CleaningList list = sleh_cleaning_list(g, ell, budget);
    SweepStatus st = list.for_each([&](const Bits& x) {
        if (sweeps-- <= 0) {
            sweeps_capped = true;
            return true;
        }
        Induced sub = induced_subgraph(g, g.vertices() - x);
        if (auto h = detect_clean_sleh(sub.g, ell)) {
            Hole mapped;
            for (int v : h->v) mapped.v.push_back(sub.to_parent[v]);
            mapped.canonicalize();
            found = mapped;
            return true;
        }
        return false;
    });
    if (found) {
        assert(is_hole_of(g, *found) && found->length() % 2 == 0 && found->length() >= ell);
        out.status = LehSearch::Status::found;
        out.hole = found;
        return out;
    }
    if (truncated || sweeps_capped || st == SweepStatus::budget_exceeded)
        out.status = LehSearch::Status::budget_exceeded;
    return out;
}

} // namespace evenhole
