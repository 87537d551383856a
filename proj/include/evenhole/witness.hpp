#pragma once

#include "graph.hpp"

#include <string>
#include <utility>
#include <vector>

namespace evenhole {

// Role-labeled certificates returned by detectors and oracles. A witness
// carries its host graph so it can be re-validated in isolation.

enum class ConfigKind {
    long_even_hole,
    long_jewel,
    induced_tree,
    long_theta,
    long_ban_the_bomb,
    long_near_prism,
};

inline const char* config_kind_name(ConfigKind k) {
    switch (k) {
        case ConfigKind::long_even_hole: return "long-even-hole";
        case ConfigKind::long_jewel: return "long-jewel";
        case ConfigKind::induced_tree: return "induced-tree";
        case ConfigKind::long_theta: return "long-theta";
        case ConfigKind::long_ban_the_bomb: return "long-ban-the-bomb";
        case ConfigKind::long_near_prism: return "long-near-prism";
    }
    return "unknown";
}

struct Witness {
    ConfigKind kind{};
    // Ordered role list; a single vertex is a one-element sequence, a path is
    // its vertex sequence in order.
    std::vector<std::pair<std::string, std::vector<int>>> roles;
    Graph host;

    const std::vector<int>* find(const std::string& name) const {
        for (const auto& r : roles)
            if (r.first == name) return &r.second;
        return nullptr;
    }
    int vertex(const std::string& name) const {
        const auto* r = find(name);
        assert(r && r->size() == 1);
        return (*r)[0];
    }
    std::vector<int> seq(const std::string& name) const {
        const auto* r = find(name);
        assert(r);
        return *r;
    }
    void add(const std::string& name, int v) { roles.emplace_back(name, std::vector<int>{v}); }
    void add(const std::string& name, std::vector<int> vs) {
        roles.emplace_back(name, std::move(vs));
    }
};

} // namespace evenhole
