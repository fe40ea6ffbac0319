#pragma once

#include <map>
#include <vector>

#include "netform/game_state.hpp"
#include "netform/regions.hpp"

namespace netform {

/// Attacks `target`, destroying its whole vulnerable region. Maps every
/// surviving player to the size of its post-attack component (itself included).
/// Throws TargetImmunized when the target is immunized.
std::map<PlayerId, int> simulate_attack(const GameState& g, PlayerId target);

/// Post-attack component size of every player after the region `killed` is
/// removed; destroyed players get 0. An empty `killed` means no attack.
std::vector<int> component_sizes_after(const Graph& graph, std::span<const PlayerId> killed);

/// Expected size of the player's post-attack component minus its spending.
/// When nobody is vulnerable no attack happens and the plain component size
/// is used.
Rational utility(const GameState& g, PlayerId player);

/// Utilities of every player, sharing one attack simulation per target region.
std::vector<Rational> utilities(const GameState& g);

Rational social_welfare(const GameState& g);

}  // namespace netform
