#include "netform/dynamics.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

#include "netform/best_response.hpp"
#include "netform/errors.hpp"
#include "netform/regions.hpp"
#include "netform/utility.hpp"

namespace netform {
namespace {

constexpr std::size_t kMaxRememberedStates = 100000;

}  // namespace

std::string_view to_string(DynamicsStatus status) {
    switch (status) {
        case DynamicsStatus::Converged: return "converged";
        case DynamicsStatus::CycleDetected: return "cycle";
        case DynamicsStatus::MaxRoundsExceeded: return "max_rounds";
    }
    return "unknown";
}

EquilibriumCheck is_nash_equilibrium(const GameState& g) {
    const auto current = utilities(g);
    for (PlayerId v = 0; v < g.size(); ++v) {
        const auto br = best_response(g, v);
        if (br.utility > current[static_cast<std::size_t>(v)]) {
            return {false, v, br.utility - current[static_cast<std::size_t>(v)]};
        }
    }
    return {};
}

std::vector<PlayerId> resolve_order(int n, const DynamicsConfig& config) {
    if (!config.player_order.empty()) {
        std::vector<PlayerId> sorted = config.player_order;
        std::sort(sorted.begin(), sorted.end());
        bool ok = static_cast<int>(sorted.size()) == n;
        for (int i = 0; ok && i < n; ++i) ok = sorted[static_cast<std::size_t>(i)] == i;
        if (!ok) throw InvalidGameState("player order must be a permutation of 0..n-1");
        return config.player_order;
    }
    std::vector<PlayerId> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(config.seed);
    std::shuffle(order.begin(), order.end(), rng);
    return order;
}

RoundStats round_stats(const GameState& g, int round, int changed) {
    RoundStats stats;
    stats.round = round;
    stats.changed_players = changed;
    stats.welfare = social_welfare(g);
    for (PlayerId v = 0; v < g.size(); ++v) stats.immunized += g.immunized(v) ? 1 : 0;
    const Graph graph = g.graph();
    stats.t_max = decompose_regions(graph, g.immunized_mask(), g.adversary()).t_max;
    const auto sizes = component_sizes_after(graph, {});
    stats.largest_component = sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
    stats.state_hash = g.hash();
    return stats;
}

DynamicsOutcome run_dynamics(const GameState& initial, const DynamicsConfig& config) {
    if (config.max_rounds < 1) throw InvalidGameState("max_rounds must be positive");
    const auto order = resolve_order(initial.size(), config);

    DynamicsOutcome out{DynamicsStatus::MaxRoundsExceeded, 0, 0, initial, Rational(0), {}};
    GameState& state = out.final_state;
    std::unordered_map<std::uint64_t, int> seen;
    std::deque<std::uint64_t> fifo;
    auto remember = [&](std::uint64_t h, int round) {
        seen.emplace(h, round);
        fifo.push_back(h);
        if (fifo.size() > kMaxRememberedStates) {
            seen.erase(fifo.front());
            fifo.pop_front();
        }
    };
    remember(state.hash(), 0);

    for (int round = 1; round <= config.max_rounds; ++round) {
        int changed = 0;
        for (PlayerId v : order) {
            const auto br = best_response(state, v);
            if (br.strategy == state.strategy(v)) continue;
            if (br.utility > utility(state, v)) {
                state.set_strategy(v, br.strategy);
                ++changed;
            }
        }
        out.rounds = round;
        if (config.record_trace) out.trace.push_back(round_stats(state, round, changed));
        if (changed == 0) {
            out.status = DynamicsStatus::Converged;
            break;
        }
        const auto h = state.hash();
        if (auto it = seen.find(h); it != seen.end()) {
            out.status = DynamicsStatus::CycleDetected;
            out.period = round - it->second;
            break;
        }
        remember(h, round);
    }
    out.welfare = social_welfare(state);
    return out;
}

std::string trace_csv(const std::vector<RoundStats>& trace) {
    std::ostringstream os;
    os << "# netform dynamics trace v1\n";
    os << "round,changed_players,welfare,immunized,t_max,largest_component\n";
    for (const auto& r : trace) {
        os << r.round << ',' << r.changed_players << ',' << to_string(r.welfare) << ',' << r.immunized << ','
           << r.t_max << ',' << r.largest_component << '\n';
    }
    return os.str();
}

}  // namespace netform
