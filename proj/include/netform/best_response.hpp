#pragma once

#include <string>
#include <utility>
#include <vector>

#include "netform/game_state.hpp"
#include "netform/knapsack.hpp"
#include "netform/meta_tree.hpp"
#include "netform/regions.hpp"

namespace netform {

struct CandidateEntry {
    std::string label;  // "empty", "s_t", "s_v", "s_g", "s_z=<k>"
    Strategy strategy;
    Rational utility;
};

struct BestResponseResult {
    Strategy strategy;
    Rational utility;
    std::vector<CandidateEntry> candidate_log;
};

/// Component choices from C_U \ C_inc, as indices into partition.components.
struct SubsetChoice {
    std::vector<int> may_be_targeted;  // A_t: at most r new vulnerable nodes
    std::vector<int> stays_untargeted;  // A_v: at most r - 1
    int capacity = 0;                   // r = t_max - |R_U(a)|
};

/// Knapsack over the purchasable vulnerable components, for a non-immunized
/// active player under the maximum carnage adversary.
SubsetChoice subset_select(const GameState& g, PlayerId a, const ComponentPartition& partition);

/// Random attack variant: for every reachable total z of newly attached
/// vulnerable players, the subset attaining z with the fewest edges.
/// Entry k of the result pairs z with its component indices; z = 0 (empty) is first.
std::vector<std::pair<int, std::vector<int>>> uniform_subset_select(const GameState& g, PlayerId a,
                                                                    const ComponentPartition& partition);

/// Components of C_U \ C_inc worth one edge when the active player immunizes:
/// |C| * (1 - |C n T| / |T|) > alpha, strictly.
std::vector<int> greedy_select(const GameState& g, PlayerId a, const ComponentPartition& partition);

/// Best set of at least two partners inside the component described by `mt`,
/// or empty. `g` must carry the active player's final immunization and its
/// edges outside the component.
std::vector<PlayerId> meta_tree_select(const GameState& g, PlayerId a, const MetaTree& mt);

/// Best partner set for one mixed component: the best of no edge, the best
/// single immunized partner and meta_tree_select.
std::vector<PlayerId> partner_set_select(const GameState& g, PlayerId a, std::span<const PlayerId> component);

/// One edge to the lowest-id member of each selected vulnerable component,
/// then a partner set for every mixed component.
Strategy possible_strategy(const GameState& g, PlayerId a, const ComponentPartition& partition,
                           std::span<const int> selected, bool immunize);

BestResponseResult best_response(const GameState& g, PlayerId a);

/// Deterministic preference among equal-utility strategies: fewer edges, then
/// no immunization, then lexicographically smaller endpoints.
bool preferred_on_tie(const Strategy& lhs, const Strategy& rhs);

}  // namespace netform
