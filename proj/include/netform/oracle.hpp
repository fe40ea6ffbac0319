#pragma once

#include <vector>

#include "netform/game_state.hpp"

namespace netform {

struct OracleResult {
    Rational best_utility;
    std::vector<Strategy> witnesses;  // every strategy attaining best_utility, in enumeration order
};

inline constexpr int kDefaultOracleCap = 10;

/// Exhaustive best response: all 2^(n-1) endpoint sets times both
/// immunization choices. Throws InstanceTooLarge when n exceeds `max_players`.
OracleResult oracle_best_response(const GameState& g, PlayerId a, int max_players = kDefaultOracleCap);

}  // namespace netform
