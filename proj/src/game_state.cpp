#include "netform/game_state.hpp"

#include <algorithm>
#include <string>

#include "netform/errors.hpp"

namespace netform {

std::string_view to_string(Adversary adversary) {
    switch (adversary) {
        case Adversary::MaximumCarnage: return "max_carnage";
        case Adversary::RandomAttack: return "random_attack";
    }
    return "unknown";
}

Adversary parse_adversary(std::string_view text) {
    if (text == "max_carnage" || text == "maximum_carnage") return Adversary::MaximumCarnage;
    if (text == "random_attack" || text == "random") return Adversary::RandomAttack;
    throw ParseError("unknown adversary '" + std::string(text) + "'");
}

std::size_t Graph::edge_count() const {
    std::size_t degree_sum = 0;
    for (const auto& list : adjacency_) degree_sum += list.size();
    return degree_sum / 2;
}

void Graph::add_edge(PlayerId u, PlayerId v) {
    auto insert = [](std::vector<PlayerId>& list, PlayerId x) {
        auto it = std::lower_bound(list.begin(), list.end(), x);
        if (it == list.end() || *it != x) list.insert(it, x);
    };
    insert(adjacency_[static_cast<std::size_t>(u)], v);
    insert(adjacency_[static_cast<std::size_t>(v)], u);
}

bool Graph::has_edge(PlayerId u, PlayerId v) const {
    const auto& list = adjacency_[static_cast<std::size_t>(u)];
    return std::binary_search(list.begin(), list.end(), v);
}

GameState::GameState(int n, Rational alpha, Rational beta, Adversary adversary)
    : alpha_(alpha), beta_(beta), adversary_(adversary) {
    if (n < 1) throw InvalidGameState("player count must be positive");
    if (alpha < 0 || beta < 0) throw InvalidGameState("edge and immunization costs must be nonnegative");
    strategies_.resize(static_cast<std::size_t>(n));
}

std::size_t GameState::index(PlayerId player) const {
    check_player(player);
    return static_cast<std::size_t>(player);
}

void GameState::check_player(PlayerId player) const {
    if (player < 0 || player >= size()) {
        throw InvalidGameState("player id " + std::to_string(player) + " out of range");
    }
}

std::vector<char> GameState::immunized_mask() const {
    std::vector<char> mask(strategies_.size());
    for (std::size_t i = 0; i < strategies_.size(); ++i) mask[i] = strategies_[i].immunize;
    return mask;
}

void GameState::set_strategy(PlayerId player, Strategy strategy) {
    check_player(player);
    for (PlayerId j : strategy.endpoints) {
        check_player(j);
        if (j == player) throw InvalidGameState("self-loop at player " + std::to_string(player));
    }
    std::sort(strategy.endpoints.begin(), strategy.endpoints.end());
    strategy.endpoints.erase(std::unique(strategy.endpoints.begin(), strategy.endpoints.end()),
                             strategy.endpoints.end());
    strategies_[static_cast<std::size_t>(player)] = std::move(strategy);
}

void GameState::add_edge(PlayerId owner, PlayerId endpoint) {
    check_player(owner);
    check_player(endpoint);
    if (owner == endpoint) throw InvalidGameState("self-loop at player " + std::to_string(owner));
    auto& list = strategies_[static_cast<std::size_t>(owner)].endpoints;
    auto it = std::lower_bound(list.begin(), list.end(), endpoint);
    if (it == list.end() || *it != endpoint) list.insert(it, endpoint);
}

void GameState::set_immunized(PlayerId player, bool immunize) {
    strategies_[index(player)].immunize = immunize;
}

Graph GameState::graph() const {
    Graph g(size());
    for (PlayerId i = 0; i < size(); ++i) {
        for (PlayerId j : strategies_[static_cast<std::size_t>(i)].endpoints) g.add_edge(i, j);
    }
    return g;
}

std::uint64_t GameState::hash() const {
    // FNV-1a over the canonical strategy profile.
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t x) {
        for (int b = 0; b < 8; ++b) {
            h ^= (x >> (8 * b)) & 0xffU;
            h *= 1099511628211ULL;
        }
    };
    mix(strategies_.size());
    for (const auto& s : strategies_) {
        mix(s.immunize ? 0x9e3779b97f4a7c15ULL : 0x7f4a7c159e3779b9ULL);
        mix(s.endpoints.size());
        for (PlayerId j : s.endpoints) mix(static_cast<std::uint64_t>(j));
    }
    return h;
}

}  // namespace netform
