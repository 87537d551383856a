#pragma once

#include "graph.hpp"

#include <cctype>
#include <cstring>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace evenhole {

enum class GraphFormat { graph6, edge_list, dot };

// Parse failure; `offset` is the byte position in the input that triggered it.
struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(const std::string& what, std::size_t off)
        : std::runtime_error(what + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

namespace detail {

inline int g6_byte(std::string_view s, std::size_t i) {
    if (i >= s.size()) throw ParseError("graph6: truncated input", s.size());
    unsigned char c = (unsigned char)s[i];
    if (c < 63 || c > 126) throw ParseError("graph6: byte out of range", i);
    return c - 63;
}

struct NumReader {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws(bool newlines) {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\r' ||
                                  (newlines && s[pos] == '\n')))
            ++pos;
    }
    long read_uint(const char* what) {
        skip_ws(true);
        std::size_t start = pos;
        if (pos >= s.size() || !std::isdigit((unsigned char)s[pos]))
            throw ParseError(std::string("edge list: expected ") + what, pos);
        long val = 0;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
            val = val * 10 + (s[pos] - '0');
            if (val > 1'000'000'000) throw ParseError("edge list: number too large", start);
            ++pos;
        }
        return val;
    }
    void expect_end() {
        skip_ws(true);
        if (pos != s.size()) throw ParseError("edge list: trailing garbage", pos);
    }
};

} // namespace detail

inline Graph parse_graph6(std::string_view s) {
    // Optional ">>graph6<<" header.
    std::size_t pos = 0;
    constexpr std::string_view header = ">>graph6<<";
    if (s.substr(0, header.size()) == header) pos = header.size();
    while (pos < s.size() && (s[pos] == '\n' || s[pos] == '\r')) ++pos;

    long n;
    int b = detail::g6_byte(s, pos);
    if (b < 63) { // single-byte n
        n = b;
        ++pos;
    } else { // 126 marker, 18-bit n in the next three bytes
        ++pos;
        if (pos < s.size() && (unsigned char)s[pos] == 126)
            throw ParseError("graph6: n >= 2^18 unsupported", pos);
        long hi = detail::g6_byte(s, pos), mid = detail::g6_byte(s, pos + 1),
             lo = detail::g6_byte(s, pos + 2);
        n = (hi << 12) | (mid << 6) | lo;
        pos += 3;
    }
    if (n > Bits::capacity) throw ParseError("graph6: graph too large", 0);

    Graph g((int)n);
    long nbits = n * (n - 1) / 2;
    long nbytes = (nbits + 5) / 6;
    // Bits walk the upper triangle column-wise: (0,1),(0,2),(1,2),(0,3),...
    long k = 0;
    int i = 0, j = 1;
    for (long byte = 0; byte < nbytes; ++byte) {
        int val = detail::g6_byte(s, pos + byte);
        for (int bit = 5; bit >= 0 && k < nbits; --bit, ++k) {
            if ((val >> bit) & 1) g.add_edge(i, j);
            if (++i == j) { i = 0; ++j; }
        }
    }
    std::size_t end = pos + nbytes;
    while (end < s.size() && (s[end] == '\n' || s[end] == '\r')) ++end;
    if (end != s.size()) throw ParseError("graph6: trailing garbage", end);
    return g;
}

// "n m" header then m lines "u v", 0-based vertex indices.
inline Graph parse_edge_list(std::string_view s) {
    detail::NumReader r{s};
    long n = r.read_uint("vertex count");
    if (n > Bits::capacity) throw ParseError("edge list: graph too large", 0);
    long m = r.read_uint("edge count");
    Graph g((int)n);
    for (long e = 0; e < m; ++e) {
        r.skip_ws(true);
        std::size_t at = r.pos;
        long u = r.read_uint("edge endpoint");
        long v = r.read_uint("edge endpoint");
        if (u >= n || v >= n) throw ParseError("edge list: vertex out of range", at);
        if (u == v) throw ParseError("edge list: self-loop", at);
        if (g.adjacent((int)u, (int)v)) throw ParseError("edge list: duplicate edge", at);
        g.add_edge((int)u, (int)v);
    }
    r.expect_end();
    return g;
}

inline Graph parse_graph(std::string_view s, GraphFormat fmt) {
    switch (fmt) {
    case GraphFormat::graph6: return parse_graph6(s);
    case GraphFormat::edge_list: return parse_edge_list(s);
    default: throw ParseError("unsupported parse format", 0);
    }
}

inline std::string emit_graph6(const Graph& g) {
    std::string out;
    if (g.n <= 62) {
        out.push_back((char)(g.n + 63));
    } else {
        out.push_back((char)126);
        out.push_back((char)(((g.n >> 12) & 63) + 63));
        out.push_back((char)(((g.n >> 6) & 63) + 63));
        out.push_back((char)((g.n & 63) + 63));
    }
    int val = 0, filled = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i) {
            val = (val << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back((char)(val + 63));
                val = 0;
                filled = 0;
            }
        }
    if (filled) out.push_back((char)((val << (6 - filled)) + 63));
    return out;
}

inline std::string emit_edge_list(const Graph& g) {
    std::string out = std::to_string(g.n) + " " + std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

// DOT export; role-labelled vertices get a fill colour keyed by role name so a
// witness can be eyeballed. Roles map vertex -> role string.
inline std::string emit_dot(const Graph& g, const std::map<int, std::string>& roles = {}) {
    static const char* palette[] = {"lightblue",  "salmon",     "palegreen", "gold",
                                    "plum",       "lightcyan",  "orange",    "hotpink",
                                    "aquamarine", "lightyellow"};
    std::map<std::string, const char*> color_of;
    std::string out = "graph G {\n  node [style=filled, fillcolor=white];\n";
    for (int v = 0; v < g.n; ++v) {
        auto it = roles.find(v);
        if (it == roles.end()) continue;
        if (!color_of.count(it->second))
            color_of[it->second] = palette[color_of.size() % 10];
        out += "  " + std::to_string(v) + " [fillcolor=" + color_of[it->second] +
               ", xlabel=\"" + it->second + "\"];\n";
    }
    for (auto [u, v] : g.edges())
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

inline std::string emit_graph(const Graph& g, GraphFormat fmt,
                              const std::map<int, std::string>& roles = {}) {
    switch (fmt) {
    case GraphFormat::graph6: return emit_graph6(g);
    case GraphFormat::edge_list: return emit_edge_list(g);
    case GraphFormat::dot: return emit_dot(g, roles);
    }
    return {};
}

// Small named-graph builders used all over the tests.
inline Graph make_cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline Graph make_path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph make_complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline Graph make_petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);       // outer C5
        g.add_edge(5 + i, 5 + (i + 2) % 5); // inner pentagram
        g.add_edge(i, 5 + i);             // spokes
    }
    return g;
}

// Theta graph: vertices u=0, v=1 joined by three internally disjoint paths of
// the given edge-lengths (each >= 2).
inline Graph make_theta(int p1, int p2, int p3) {
    int lens[3] = {p1, p2, p3};
    int n = 2;
    for (int l : lens) n += l - 1;
    Graph g(n);
    int next = 2;
    for (int l : lens) {
        int prev = 0;
        for (int i = 1; i < l; ++i) {
            g.add_edge(prev, next);
            prev = next++;
        }
        g.add_edge(prev, 1);
    }
    return g;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.n + b.n);
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(a.n + u, a.n + v);
    return g;
}

} // namespace evenhole
