#include "netform/regions.hpp"

#include <algorithm>

namespace netform {
namespace {

// Labels the components of the subgraph induced by players with
// keep[v] == true. Returns member lists ordered by smallest id.
std::vector<std::vector<PlayerId>> induced_components(const Graph& graph, std::span<const char> keep,
                                                      std::vector<int>& label) {
    const int n = graph.size();
    std::vector<std::vector<PlayerId>> out;
    std::vector<PlayerId> stack;
    for (PlayerId s = 0; s < n; ++s) {
        if (!keep[static_cast<std::size_t>(s)] || label[static_cast<std::size_t>(s)] >= 0) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        label[static_cast<std::size_t>(s)] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            const PlayerId v = stack.back();
            stack.pop_back();
            out.back().push_back(v);
            for (PlayerId w : graph.neighbors(v)) {
                if (keep[static_cast<std::size_t>(w)] && label[static_cast<std::size_t>(w)] < 0) {
                    label[static_cast<std::size_t>(w)] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

}  // namespace

RegionDecomposition decompose_regions(const GameState& g) {
    return decompose_regions(g.graph(), g.immunized_mask(), g.adversary());
}

RegionDecomposition decompose_regions(const Graph& graph, std::span<const char> immunized, Adversary adversary) {
    const auto n = static_cast<std::size_t>(graph.size());
    RegionDecomposition rd;
    rd.immunized_mask.assign(immunized.begin(), immunized.end());
    rd.region_of.assign(n, -1);
    rd.targeted_mask.assign(n, 0);

    std::vector<char> vulnerable(n);
    for (std::size_t v = 0; v < n; ++v) vulnerable[v] = !immunized[v];

    std::vector<int> vlabel(n, -1);
    std::vector<int> ilabel(n, -1);
    rd.vulnerable_regions = induced_components(graph, vulnerable, vlabel);
    rd.immunized_regions = induced_components(graph, immunized, ilabel);
    for (std::size_t v = 0; v < n; ++v) rd.region_of[v] = immunized[v] ? ilabel[v] : vlabel[v];

    for (const auto& region : rd.vulnerable_regions) rd.t_max = std::max(rd.t_max, static_cast<int>(region.size()));
    for (const auto& region : rd.vulnerable_regions) {
        if (adversary == Adversary::RandomAttack || static_cast<int>(region.size()) == rd.t_max) {
            for (PlayerId v : region) rd.targeted_mask[static_cast<std::size_t>(v)] = 1;
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (rd.targeted_mask[v]) rd.targeted.push_back(static_cast<PlayerId>(v));
    }
    return rd;
}

std::vector<int> ComponentPartition::indices(ComponentClass kind) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (components[i].kind == kind) out.push_back(static_cast<int>(i));
    }
    return out;
}

std::vector<int> ComponentPartition::purchasable_vulnerable() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (components[i].kind == ComponentClass::PureVulnerable && !components[i].incoming) {
            out.push_back(static_cast<int>(i));
        }
    }
    return out;
}

GameState with_strategy(const GameState& g, PlayerId player, Strategy strategy) {
    GameState copy = g;
    copy.set_strategy(player, std::move(strategy));
    return copy;
}

ComponentPartition classify_components(const GameState& g, PlayerId active) {
    const GameState reduced = with_strategy(g, active, Strategy{});
    const Graph graph = reduced.graph();
    const auto n = static_cast<std::size_t>(graph.size());

    std::vector<char> keep(n, 1);
    keep[static_cast<std::size_t>(active)] = 0;
    ComponentPartition partition;
    partition.active = active;
    partition.component_of.assign(n, -1);
    auto members = induced_components(graph, keep, partition.component_of);

    for (auto& list : members) {
        Component c;
        c.members = std::move(list);
        for (PlayerId v : c.members) {
            if (reduced.immunized(v)) c.kind = ComponentClass::ContainsImmunized;
            if (graph.has_edge(v, active)) c.incoming = true;
        }
        partition.components.push_back(std::move(c));
    }
    return partition;
}

}  // namespace netform
