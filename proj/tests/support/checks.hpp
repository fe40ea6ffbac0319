#pragma once

// Shared instance generators and invariant checkers for the unit and
// acceptance suites. Checkers return an empty string on success and a short
// description of the first violation otherwise.

#include <algorithm>
#include <array>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "netform/best_response.hpp"
#include "netform/meta_tree.hpp"
#include "netform/regions.hpp"

namespace netform::testing {

inline const std::array<Rational, 4> kCostGrid{Rational(1, 2), Rational(1), Rational(2), Rational(5)};

/// Random small game: n in [n_lo, n_hi], costs from kCostGrid, edge and
/// immunization densities drawn per instance so sparse and dense profiles
/// both show up.
inline GameState random_game(std::mt19937_64& rng, int n_lo, int n_hi, Adversary adversary) {
    std::uniform_int_distribution<int> size(n_lo, n_hi);
    std::uniform_int_distribution<std::size_t> cost(0, kCostGrid.size() - 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int n = size(rng);
    GameState g(n, kCostGrid[cost(rng)], kCostGrid[cost(rng)], adversary);
    const double edge_p = 0.6 * unit(rng);
    const double imm_p = unit(rng);
    std::bernoulli_distribution edge(edge_p);
    std::bernoulli_distribution imm(imm_p);
    for (PlayerId u = 0; u < n; ++u) {
        for (PlayerId v = 0; v < n; ++v) {
            if (u != v && edge(rng)) g.add_edge(u, v);
        }
    }
    for (PlayerId u = 0; u < n; ++u) {
        if (imm(rng)) g.set_immunized(u, true);
    }
    return g;
}

/// Random connected game on n players with at least one immunized player.
inline GameState random_mixed_component(std::mt19937_64& rng, int n, Adversary adversary) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    GameState g(n, 1, 1, adversary);
    std::vector<PlayerId> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> pick(0, i - 1);
        g.add_edge(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(pick(rng))]);
    }
    std::bernoulli_distribution extra(std::min(1.0, unit(rng) * 3.0 / std::max(1, n)));
    for (PlayerId u = 0; u < n; ++u) {
        for (PlayerId v = u + 1; v < n; ++v) {
            if (extra(rng)) g.add_edge(u, v);
        }
    }
    std::bernoulli_distribution imm(0.05 + 0.9 * unit(rng));
    bool any = false;
    for (PlayerId u = 0; u < n; ++u) {
        if (imm(rng)) {
            g.set_immunized(u, true);
            any = true;
        }
    }
    if (!any) g.set_immunized(std::uniform_int_distribution<PlayerId>(0, n - 1)(rng), true);
    return g;
}

/// Number of connected components of graph[keep].
inline int count_components(const Graph& graph, const std::vector<char>& keep) {
    std::vector<char> seen(keep.size(), 0);
    int parts = 0;
    for (PlayerId s = 0; s < graph.size(); ++s) {
        if (!keep[static_cast<std::size_t>(s)] || seen[static_cast<std::size_t>(s)]) continue;
        ++parts;
        std::queue<PlayerId> q;
        q.push(s);
        seen[static_cast<std::size_t>(s)] = 1;
        while (!q.empty()) {
            const PlayerId v = q.front();
            q.pop();
            for (PlayerId w : graph.neighbors(v)) {
                if (keep[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    q.push(w);
                }
            }
        }
    }
    return parts;
}

/// Tree shape, bipartiteness, leaf kinds, partition of the component, and the
/// attack semantics of both block kinds. `component` must be connected.
inline std::string check_meta_tree(const GameState& g, const std::vector<PlayerId>& component, const MetaTree& mt) {
    const Graph graph = g.graph();
    const RegionDecomposition regions = decompose_regions(graph, g.immunized_mask(), g.adversary());
    const int k = mt.block_count();
    if (k == 0) return "no blocks";

    std::vector<PlayerId> all;
    for (const auto& b : mt.blocks) all.insert(all.end(), b.members.begin(), b.members.end());
    std::sort(all.begin(), all.end());
    if (all != component) return "blocks do not partition the component";

    if (static_cast<int>(mt.tree_edges.size()) != k - 1) return "edge count is not blocks-1";
    for (auto [c, b] : mt.tree_edges) {
        if (mt.blocks[static_cast<std::size_t>(c)].kind != BlockKind::Candidate ||
            mt.blocks[static_cast<std::size_t>(b)].kind != BlockKind::Bridge) {
            return "tree edge does not join a candidate and a bridge block";
        }
    }
    std::vector<char> reached(static_cast<std::size_t>(k), 0);
    std::queue<int> q;
    q.push(0);
    reached[0] = 1;
    int count = 1;
    while (!q.empty()) {
        const int x = q.front();
        q.pop();
        for (int y : mt.adjacency[static_cast<std::size_t>(x)]) {
            if (!reached[static_cast<std::size_t>(y)]) {
                reached[static_cast<std::size_t>(y)] = 1;
                ++count;
                q.push(y);
            }
        }
    }
    if (count != k) return "block graph is disconnected";
    for (int leaf : mt.leaves()) {
        if (mt.blocks[static_cast<std::size_t>(leaf)].kind != BlockKind::Candidate) return "leaf is a bridge block";
    }

    std::vector<char> in_component(static_cast<std::size_t>(g.size()), 0);
    for (PlayerId v : component) in_component[static_cast<std::size_t>(v)] = 1;
    for (const auto& block : mt.blocks) {
        for (PlayerId v : block.members) {
            if (regions.is_immunized(v)) {
                if (block.kind != BlockKind::Candidate) return "immunized player in a bridge block";
                continue;
            }
            if (!regions.is_targeted(v)) {
                if (block.kind == BlockKind::Bridge) return "untargeted player in a bridge block";
                continue;  // never attacked
            }
            auto keep = in_component;
            for (PlayerId w : regions.vulnerable_region(v)) keep[static_cast<std::size_t>(w)] = 0;
            const int parts = count_components(graph, keep);
            if (block.kind == BlockKind::Bridge && parts < 2) return "attacking a bridge block leaves it connected";
            if (block.kind == BlockKind::Candidate && parts > 1) return "attacking a candidate block disconnects it";
        }
    }
    return {};
}

/// Structural properties of a best response `s` of player a in g: at most one
/// endpoint per vulnerable component, immunized endpoints only inside mixed
/// components, at most one endpoint per candidate block, and leaf-only
/// endpoints when a mixed component receives several.
inline std::string check_response_structure(const GameState& g, PlayerId a, const Strategy& s) {
    const ComponentPartition partition = classify_components(g, a);
    const GameState installed = with_strategy(g, a, s);
    std::vector<std::vector<PlayerId>> per_component(partition.components.size());
    for (PlayerId w : s.endpoints) {
        per_component[static_cast<std::size_t>(partition.component_of[static_cast<std::size_t>(w)])].push_back(w);
    }
    for (std::size_t c = 0; c < partition.components.size(); ++c) {
        const auto& comp = partition.components[c];
        const auto& chosen = per_component[c];
        if (chosen.empty()) continue;
        if (comp.kind == ComponentClass::PureVulnerable) {
            if (chosen.size() > 1) return "several endpoints in one vulnerable component";
            continue;
        }
        for (PlayerId w : chosen) {
            if (!g.immunized(w)) return "vulnerable endpoint inside a mixed component";
        }
        const MetaTree mt = meta_tree_construct(installed, comp.members, a);
        std::set<int> blocks;
        for (PlayerId w : chosen) {
            if (!blocks.insert(mt.block_of(w)).second) return "two endpoints in one candidate block";
        }
        if (chosen.size() >= 2) {
            const auto leaves = mt.leaves();
            for (int b : blocks) {
                if (std::find(leaves.begin(), leaves.end(), b) == leaves.end()) {
                    return "multi-edge choice uses a non-leaf block";
                }
            }
        }
    }
    return {};
}

}  // namespace netform::testing
