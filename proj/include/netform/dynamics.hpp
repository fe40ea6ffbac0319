#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netform/game_state.hpp"

namespace netform {

struct EquilibriumCheck {
    bool equilibrium = true;
    std::optional<PlayerId> deviator;  // first player (by id) with a strictly better response
    Rational gain = 0;                 // that player's improvement
};

EquilibriumCheck is_nash_equilibrium(const GameState& g);

struct DynamicsConfig {
    int max_rounds = 100;
    /// Update order; empty means a permutation drawn from `seed`.
    std::vector<PlayerId> player_order;
    std::uint64_t seed = 0;
    bool record_trace = false;
};

enum class DynamicsStatus { Converged, CycleDetected, MaxRoundsExceeded };

std::string_view to_string(DynamicsStatus status);

/// One line of the per-round trace.
struct RoundStats {
    int round = 0;
    int changed_players = 0;
    Rational welfare;
    int immunized = 0;
    int t_max = 0;
    int largest_component = 0;
    std::uint64_t state_hash = 0;
};

struct DynamicsOutcome {
    DynamicsStatus status = DynamicsStatus::MaxRoundsExceeded;
    /// Rounds played, including the final round in which nobody moved.
    int rounds = 0;
    /// Rounds between two visits of the same state.
    int period = 0;
    GameState final_state;
    Rational welfare;
    std::vector<RoundStats> trace;  // filled when record_trace is set
};

/// Round-robin best-response dynamics. A player only moves when its best
/// response is strictly better than its current strategy. Stops after a
/// round without moves, on revisiting a round-end state, or at max_rounds.
DynamicsOutcome run_dynamics(const GameState& initial, const DynamicsConfig& config);

RoundStats round_stats(const GameState& g, int round, int changed);

std::vector<PlayerId> resolve_order(int n, const DynamicsConfig& config);

/// "round,changed_players,welfare,immunized,t_max,largest_component" plus a
/// versioned comment line.
std::string trace_csv(const std::vector<RoundStats>& trace);

}  // namespace netform
