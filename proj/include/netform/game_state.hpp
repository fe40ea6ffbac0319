#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "netform/rational.hpp"

namespace netform {

using PlayerId = std::int32_t;

enum class Adversary {
    MaximumCarnage,  // attacks a uniformly chosen maximum-size vulnerable region
    RandomAttack,    // attacks a uniformly chosen vulnerable player
};

std::string_view to_string(Adversary adversary);
Adversary parse_adversary(std::string_view text);

/// Endpoints the player pays for plus the immunization bit. Endpoints are kept
/// sorted and free of duplicates so equal strategies compare equal.
struct Strategy {
    std::vector<PlayerId> endpoints;
    bool immunize = false;

    friend auto operator<=>(const Strategy&, const Strategy&) = default;
};

/// Simple undirected graph induced by the players' edge purchases.
class Graph {
public:
    explicit Graph(int n = 0) : adjacency_(static_cast<std::size_t>(n)) {}

    int size() const { return static_cast<int>(adjacency_.size()); }
    std::span<const PlayerId> neighbors(PlayerId v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    std::size_t edge_count() const;

    /// Adds {u,v} unless already present. Keeps adjacency lists sorted.
    void add_edge(PlayerId u, PlayerId v);
    bool has_edge(PlayerId u, PlayerId v) const;

private:
    std::vector<std::vector<PlayerId>> adjacency_;
};

class GameState {
public:
    GameState(int n, Rational alpha, Rational beta, Adversary adversary = Adversary::MaximumCarnage);

    int size() const { return static_cast<int>(strategies_.size()); }
    const Rational& alpha() const { return alpha_; }
    const Rational& beta() const { return beta_; }
    Adversary adversary() const { return adversary_; }

    const Strategy& strategy(PlayerId player) const { return strategies_[index(player)]; }
    const std::vector<Strategy>& strategies() const { return strategies_; }
    bool immunized(PlayerId player) const { return strategies_[index(player)].immunize; }
    std::vector<char> immunized_mask() const;

    /// Replaces a strategy. Endpoints are validated, sorted and deduplicated.
    void set_strategy(PlayerId player, Strategy strategy);
    /// Records that `owner` buys the edge to `endpoint`.
    void add_edge(PlayerId owner, PlayerId endpoint);
    void set_immunized(PlayerId player, bool immunize);

    /// Induced simple graph; an edge bought by both endpoints appears once.
    Graph graph() const;

    std::uint64_t hash() const;

    friend bool operator==(const GameState&, const GameState&) = default;

private:
    std::size_t index(PlayerId player) const;
    void check_player(PlayerId player) const;

    std::vector<Strategy> strategies_;
    Rational alpha_;
    Rational beta_;
    Adversary adversary_;
};

}  // namespace netform
