#pragma once

#include <span>
#include <vector>

#include "netform/game_state.hpp"

namespace netform {

/// Vulnerable and immunized regions of a network plus the adversary's target set.
struct RegionDecomposition {
    std::vector<std::vector<PlayerId>> vulnerable_regions;  // components of G[U]
    std::vector<std::vector<PlayerId>> immunized_regions;   // components of G[I]
    std::vector<PlayerId> targeted;                         // T, sorted
    int t_max = 0;
    /// Index into vulnerable_regions or immunized_regions, depending on the
    /// player's immunization.
    std::vector<int> region_of;
    std::vector<char> targeted_mask;
    std::vector<char> immunized_mask;

    bool is_targeted(PlayerId v) const { return targeted_mask[static_cast<std::size_t>(v)] != 0; }
    bool is_immunized(PlayerId v) const { return immunized_mask[static_cast<std::size_t>(v)] != 0; }
    /// The vulnerable region holding v. v must be vulnerable.
    const std::vector<PlayerId>& vulnerable_region(PlayerId v) const {
        return vulnerable_regions[static_cast<std::size_t>(region_of[static_cast<std::size_t>(v)])];
    }
};

/// Regions are ordered by smallest member id; members are sorted.
RegionDecomposition decompose_regions(const GameState& g);
RegionDecomposition decompose_regions(const Graph& graph, std::span<const char> immunized, Adversary adversary);

enum class ComponentClass {
    PureVulnerable,      // C_U
    ContainsImmunized,   // C_I
};

struct Component {
    std::vector<PlayerId> members;  // sorted
    ComponentClass kind = ComponentClass::PureVulnerable;
    bool incoming = false;  // some member bought an edge to the active player
};

/// Components of G(s')\a where s' drops the active player's strategy.
struct ComponentPartition {
    PlayerId active = 0;
    std::vector<Component> components;  // ordered by smallest member id
    std::vector<int> component_of;      // -1 for the active player

    std::vector<int> indices(ComponentClass kind) const;
    /// C_U minus C_inc: the vulnerable components worth buying an edge to.
    std::vector<int> purchasable_vulnerable() const;
};

ComponentPartition classify_components(const GameState& g, PlayerId active);

/// Copy of g with the player's strategy replaced by (endpoints, immunize).
GameState with_strategy(const GameState& g, PlayerId player, Strategy strategy);

}  // namespace netform
