#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "netform/dynamics.hpp"
#include "netform/game_state.hpp"

namespace netform {

enum class ExperimentKind { Convergence, Welfare, MetaTreeSize };

std::string_view to_string(ExperimentKind kind);
ExperimentKind parse_experiment_kind(std::string_view text);

struct ExperimentSpec {
    ExperimentKind kind = ExperimentKind::Convergence;
    std::vector<int> n_values{50};
    int repetitions = 100;
    Rational alpha = 2;
    Rational beta = 2;
    Adversary adversary = Adversary::MaximumCarnage;
    std::uint64_t seed = 0;
    // Convergence and Welfare.
    double avg_degree = 5.0;
    int max_rounds = 50;
    // MetaTreeSize: m = edge_factor * n.
    int edge_factor = 2;
    std::vector<double> fractions{0.05, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95};
    /// Worker threads; 0 picks the hardware concurrency.
    int threads = 0;
};

/// One best-response dynamics run from an Erdos-Renyi start.
struct DynamicsRow {
    int n = 0;
    std::uint64_t seed = 0;
    DynamicsStatus status = DynamicsStatus::MaxRoundsExceeded;
    int rounds = 0;
    int period = 0;
    Rational welfare;
    Rational optimum;  // n(n - alpha)
    bool nontrivial = false;  // final network has at least one edge
    int edges = 0;
    int immunized = 0;
};

struct MetaTreeRow {
    int n = 0;
    long long m = 0;
    double fraction = 0;
    std::uint64_t seed = 0;
    int candidate_blocks = 0;
    int bridge_blocks = 0;
};

/// Repetition r of a configuration uses seed spec.seed + r.
std::vector<DynamicsRow> run_dynamics_experiment(const ExperimentSpec& spec);
std::vector<MetaTreeRow> run_metatree_experiment(const ExperimentSpec& spec);

/// Candidate blocks of the Meta Tree of a connected state; 0 when nobody is
/// immunized.
MetaTreeRow metatree_size(const GameState& g);

/// Runs the experiment and renders a CSV whose first lines are '#'-prefixed
/// metadata (schema version, parameters, filters, generator method).
std::string run_experiment(const ExperimentSpec& spec);

std::string dynamics_csv(const ExperimentSpec& spec, const std::vector<DynamicsRow>& rows);
std::string metatree_csv(const ExperimentSpec& spec, const std::vector<MetaTreeRow>& rows);

}  // namespace netform
