#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "netform/game_state.hpp"
#include "netform/regions.hpp"

namespace netform {

enum class BlockKind {
    Candidate,  // stays connected under every single attack
    Bridge,     // a targeted region whose destruction splits the component
};

struct Block {
    BlockKind kind = BlockKind::Candidate;
    std::vector<PlayerId> members;  // sorted
    /// Smallest immunized member; -1 for bridge blocks.
    PlayerId representative = -1;
    /// Some member already links to the active player by its own edge.
    bool anchored = false;

    int size() const { return static_cast<int>(members.size()); }
};

/// Bipartite block tree of a mixed component. Blocks are ordered by smallest
/// member id; every tree edge joins a candidate block and a bridge block.
struct MetaTree {
    std::vector<Block> blocks;
    std::vector<std::pair<int, int>> tree_edges;  // (candidate, bridge), sorted
    std::vector<std::vector<int>> adjacency;      // block -> neighbouring blocks, sorted

    int block_count() const { return static_cast<int>(blocks.size()); }
    int candidate_count() const;
    int bridge_count() const;
    std::vector<int> leaves() const;
    /// Block holding the player, or -1.
    int block_of(PlayerId v) const;
};

/// Builds the Meta Tree of a connected component with at least one
/// immunized player. Regions and targets come from the whole state.
///
/// With an active player, the component is read as a component of G minus
/// that player: the player's own edges into it are ignored, members that
/// bought an edge to it mark their block as anchored, and vulnerable members
/// sharing its region count as untargeted (an attack there kills the active
/// player, so no choice of partners matters).
///
/// Throws NotMixedComponent if no member is immunized.
MetaTree meta_tree_construct(const GameState& g, std::span<const PlayerId> component,
                             std::optional<PlayerId> active = std::nullopt);

/// Same, over a precomputed graph and region decomposition. `active` may be
/// -1; `anchors` lists members that own an edge to the active player.
MetaTree build_meta_tree(const Graph& graph, const RegionDecomposition& regions, std::span<const PlayerId> component,
                         PlayerId active, std::span<const PlayerId> anchors);

}  // namespace netform
