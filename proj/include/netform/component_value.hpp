#pragma once

#include <span>
#include <vector>

#include "netform/game_state.hpp"
#include "netform/regions.hpp"

namespace netform {

/// Expected profit one mixed component contributes to the active player when
/// it buys edges to a set of partners inside it:
///
///   (1/|T|) * sum_{t in T} |CC_a(t) n C|  -  alpha * |partners|
///
/// Only attacks inside the component or on the active player's own region
/// change the answer, so those are simulated one by one and every other
/// attack is folded into a single weighted scenario.
class ComponentValue {
public:
    /// `graph` and `regions` describe `g`. The active player's own endpoints
    /// inside the component are ignored.
    ComponentValue(const GameState& g, const Graph& graph, const RegionDecomposition& regions, PlayerId active,
                   std::span<const PlayerId> component);

    /// Profit contribution for buying edges to `partners` (global ids inside
    /// the component).
    Rational operator()(std::span<const PlayerId> partners) const;

    /// sum over scenarios of weight * |nodes of C reachable|; divide by
    /// denominator() for the expectation.
    std::int64_t weighted_reach(std::span<const PlayerId> partners) const;
    std::int64_t denominator() const { return denominator_; }

    const std::vector<PlayerId>& members() const { return members_; }
    /// Members with an edge to the active player bought by themselves.
    const std::vector<PlayerId>& anchors() const { return anchors_; }

private:
    struct Scenario {
        std::vector<int> killed;  // local indices
        std::int64_t weight = 0;
        bool active_alive = true;
    };

    int local(PlayerId v) const;

    std::vector<PlayerId> members_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<PlayerId> anchors_;
    std::vector<int> anchor_local_;
    std::vector<Scenario> scenarios_;
    std::int64_t denominator_ = 1;
    Rational alpha_;
};

}  // namespace netform
