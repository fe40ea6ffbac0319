#pragma once

#include <cstdint>
#include <string_view>

#include "netform/game_state.hpp"

namespace netform {

/// G(n,p) with p = min(1, avg_degree/(n-1)). Every realized edge is bought by
/// one of its endpoints, chosen uniformly. Nobody is immunized.
GameState gen_erdos_renyi_avg_degree(int n, double avg_degree, std::uint64_t seed, Rational alpha = 2,
                                     Rational beta = 2, Adversary adversary = Adversary::MaximumCarnage);

/// Sampling method of gen_gnm_connected, reported in experiment metadata.
inline constexpr std::string_view kGnmMethod = "uniform_spanning_tree_plus_uniform_edges";

/// Connected graph with n nodes and m edges: a uniform random labelled tree
/// (Pruefer code) plus m-n+1 distinct extra edges drawn uniformly from the
/// remaining pairs. round(fraction*n) players, chosen uniformly, are
/// immunized. Throws InfeasibleParameters unless n-1 <= m <= n(n-1)/2 and
/// fraction lies in [0,1].
GameState gen_gnm_connected(int n, long long m, double immunized_fraction, std::uint64_t seed, Rational alpha = 2,
                            Rational beta = 2, Adversary adversary = Adversary::MaximumCarnage);

}  // namespace netform
