#include "netform/utility.hpp"

#include <numeric>
#include <string>

#include "netform/errors.hpp"

namespace netform {
namespace {

// One attack scenario: the destroyed region and how many targeted players
// select it.
struct AttackEvent {
    const std::vector<PlayerId>* killed = nullptr;
    std::int64_t weight = 1;
};

std::vector<AttackEvent> attack_events(const RegionDecomposition& rd) {
    std::vector<AttackEvent> events;
    for (const auto& region : rd.vulnerable_regions) {
        if (rd.is_targeted(region.front())) {
            events.push_back({&region, static_cast<std::int64_t>(region.size())});
        }
    }
    if (events.empty()) events.push_back({nullptr, 1});
    return events;
}

int reachable_from(const Graph& graph, PlayerId source, std::span<const PlayerId> killed, std::vector<char>& mark) {
    std::fill(mark.begin(), mark.end(), 0);
    for (PlayerId v : killed) mark[static_cast<std::size_t>(v)] = 2;
    if (mark[static_cast<std::size_t>(source)] == 2) return 0;
    std::vector<PlayerId> stack{source};
    mark[static_cast<std::size_t>(source)] = 1;
    int count = 0;
    while (!stack.empty()) {
        const PlayerId v = stack.back();
        stack.pop_back();
        ++count;
        for (PlayerId w : graph.neighbors(v)) {
            if (mark[static_cast<std::size_t>(w)] == 0) {
                mark[static_cast<std::size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
    }
    return count;
}

Rational spending(const GameState& g, PlayerId player) {
    const auto& s = g.strategy(player);
    return g.alpha() * static_cast<std::int64_t>(s.endpoints.size()) + (s.immunize ? g.beta() : Rational(0));
}

}  // namespace

std::vector<int> component_sizes_after(const Graph& graph, std::span<const PlayerId> killed) {
    const auto n = static_cast<std::size_t>(graph.size());
    std::vector<int> label(n, -1);
    for (PlayerId v : killed) label[static_cast<std::size_t>(v)] = -2;
    std::vector<int> sizes;
    std::vector<PlayerId> stack;
    for (PlayerId s = 0; s < graph.size(); ++s) {
        if (label[static_cast<std::size_t>(s)] != -1) continue;
        const int id = static_cast<int>(sizes.size());
        sizes.push_back(0);
        label[static_cast<std::size_t>(s)] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            const PlayerId v = stack.back();
            stack.pop_back();
            ++sizes.back();
            for (PlayerId w : graph.neighbors(v)) {
                if (label[static_cast<std::size_t>(w)] == -1) {
                    label[static_cast<std::size_t>(w)] = id;
                    stack.push_back(w);
                }
            }
        }
    }
    std::vector<int> out(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        if (label[v] >= 0) out[v] = sizes[static_cast<std::size_t>(label[v])];
    }
    return out;
}

std::map<PlayerId, int> simulate_attack(const GameState& g, PlayerId target) {
    if (target < 0 || target >= g.size()) {
        throw InvalidGameState("player id " + std::to_string(target) + " out of range");
    }
    if (g.immunized(target)) {
        throw TargetImmunized("player " + std::to_string(target) + " is immunized and cannot be attacked");
    }
    const Graph graph = g.graph();
    const RegionDecomposition rd = decompose_regions(graph, g.immunized_mask(), g.adversary());
    const auto sizes = component_sizes_after(graph, rd.vulnerable_region(target));
    std::map<PlayerId, int> survivors;
    for (PlayerId v = 0; v < g.size(); ++v) {
        if (sizes[static_cast<std::size_t>(v)] > 0) survivors.emplace(v, sizes[static_cast<std::size_t>(v)]);
    }
    return survivors;
}

Rational utility(const GameState& g, PlayerId player) {
    const Graph graph = g.graph();
    const RegionDecomposition rd = decompose_regions(graph, g.immunized_mask(), g.adversary());
    std::vector<char> mark(static_cast<std::size_t>(g.size()));
    std::int64_t total = 0;
    std::int64_t weight_sum = 0;
    for (const auto& event : attack_events(rd)) {
        std::span<const PlayerId> killed;
        if (event.killed != nullptr) killed = *event.killed;
        total += event.weight * reachable_from(graph, player, killed, mark);
        weight_sum += event.weight;
    }
    return Rational(total, weight_sum) - spending(g, player);
}

std::vector<Rational> utilities(const GameState& g) {
    const Graph graph = g.graph();
    const RegionDecomposition rd = decompose_regions(graph, g.immunized_mask(), g.adversary());
    const auto n = static_cast<std::size_t>(g.size());
    std::vector<std::int64_t> totals(n, 0);
    std::int64_t weight_sum = 0;
    for (const auto& event : attack_events(rd)) {
        std::span<const PlayerId> killed;
        if (event.killed != nullptr) killed = *event.killed;
        const auto sizes = component_sizes_after(graph, killed);
        for (std::size_t v = 0; v < n; ++v) totals[v] += event.weight * sizes[v];
        weight_sum += event.weight;
    }
    std::vector<Rational> out;
    out.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
        out.push_back(Rational(totals[v], weight_sum) - spending(g, static_cast<PlayerId>(v)));
    }
    return out;
}

Rational social_welfare(const GameState& g) {
    const auto all = utilities(g);
    return std::accumulate(all.begin(), all.end(), Rational(0));
}

}  // namespace netform
