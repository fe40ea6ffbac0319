#include "netform/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <random>
#include <unordered_set>

#include "netform/errors.hpp"

namespace netform {
namespace {

std::uint64_t pair_key(PlayerId u, PlayerId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

void add_owned_edge(GameState& g, PlayerId u, PlayerId v, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(0.5);
    if (coin(rng)) std::swap(u, v);
    g.add_edge(u, v);
}

/// Decodes a random Pruefer sequence into the edges of a uniform labelled tree.
std::vector<std::pair<PlayerId, PlayerId>> random_tree(int n, std::mt19937_64& rng) {
    std::vector<std::pair<PlayerId, PlayerId>> edges;
    if (n < 2) return edges;
    if (n == 2) return {{0, 1}};
    std::uniform_int_distribution<PlayerId> pick(0, n - 1);
    std::vector<PlayerId> code(static_cast<std::size_t>(n - 2));
    for (auto& c : code) c = pick(rng);
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (PlayerId c : code) ++degree[static_cast<std::size_t>(c)];
    std::priority_queue<PlayerId, std::vector<PlayerId>, std::greater<>> leaves;
    for (PlayerId v = 0; v < n; ++v) {
        if (degree[static_cast<std::size_t>(v)] == 1) leaves.push(v);
    }
    for (PlayerId c : code) {
        const PlayerId leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, c);
        if (--degree[static_cast<std::size_t>(c)] == 1) leaves.push(c);
    }
    const PlayerId u = leaves.top();
    leaves.pop();
    edges.emplace_back(u, leaves.top());
    return edges;
}

}  // namespace

GameState gen_erdos_renyi_avg_degree(int n, double avg_degree, std::uint64_t seed, Rational alpha, Rational beta,
                                     Adversary adversary) {
    if (n < 1) throw InfeasibleParameters("n must be positive");
    if (!(avg_degree >= 0)) throw InfeasibleParameters("average degree must be non-negative");
    GameState g(n, alpha, beta, adversary);
    if (n == 1) return g;
    const double p = std::min(1.0, avg_degree / static_cast<double>(n - 1));
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution edge(p);
    for (PlayerId u = 0; u < n; ++u) {
        for (PlayerId v = u + 1; v < n; ++v) {
            if (edge(rng)) add_owned_edge(g, u, v, rng);
        }
    }
    return g;
}

GameState gen_gnm_connected(int n, long long m, double immunized_fraction, std::uint64_t seed, Rational alpha,
                            Rational beta, Adversary adversary) {
    if (n < 1) throw InfeasibleParameters("n must be positive");
    const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    if (m < n - 1 || m > max_edges) {
        throw InfeasibleParameters("m must lie in [n-1, n(n-1)/2] for a connected simple graph");
    }
    if (!(immunized_fraction >= 0.0 && immunized_fraction <= 1.0)) {
        throw InfeasibleParameters("immunized fraction must lie in [0,1]");
    }
    GameState g(n, alpha, beta, adversary);
    std::mt19937_64 rng(seed);
    std::unordered_set<std::uint64_t> present;
    for (auto [u, v] : random_tree(n, rng)) {
        present.insert(pair_key(u, v));
        add_owned_edge(g, u, v, rng);
    }
    const long long extra = m - (n - 1);
    if (extra > 0 && 2 * m > max_edges) {
        // Dense: shuffle the remaining pairs instead of rejection sampling.
        std::vector<std::pair<PlayerId, PlayerId>> rest;
        for (PlayerId u = 0; u < n; ++u) {
            for (PlayerId v = u + 1; v < n; ++v) {
                if (!present.count(pair_key(u, v))) rest.emplace_back(u, v);
            }
        }
        std::shuffle(rest.begin(), rest.end(), rng);
        for (long long k = 0; k < extra; ++k) {
            add_owned_edge(g, rest[static_cast<std::size_t>(k)].first, rest[static_cast<std::size_t>(k)].second, rng);
        }
    } else if (extra > 0) {
        std::uniform_int_distribution<PlayerId> pick(0, n - 1);
        long long added = 0;
        while (added < extra) {
            const PlayerId u = pick(rng);
            const PlayerId v = pick(rng);
            if (u == v || !present.insert(pair_key(u, v)).second) continue;
            add_owned_edge(g, u, v, rng);
            ++added;
        }
    }
    const auto k = static_cast<int>(std::lround(immunized_fraction * n));
    std::vector<PlayerId> ids(static_cast<std::size_t>(n));
    std::iota(ids.begin(), ids.end(), 0);
    std::shuffle(ids.begin(), ids.end(), rng);
    for (int i = 0; i < k; ++i) g.set_immunized(ids[static_cast<std::size_t>(i)], true);
    return g;
}

}  // namespace netform
