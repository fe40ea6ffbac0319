#include "netform/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>
#include <tuple>

#include "netform/errors.hpp"
#include "netform/generators.hpp"
#include "netform/meta_tree.hpp"
#include "netform/regions.hpp"

namespace netform {
namespace {

constexpr std::string_view kSchemaVersion = "netform-experiment v1";

/// Runs job(0..count-1) on a pool of workers. Rethrows the first failure.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& job) {
    unsigned workers = threads > 0 ? static_cast<unsigned>(threads) : std::max(1U, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1)));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                job(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = count;
            }
        }
    };
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
}

void check_spec(const ExperimentSpec& spec) {
    if (spec.repetitions < 1) throw InfeasibleParameters("repetitions must be at least 1");
    if (spec.n_values.empty()) throw InfeasibleParameters("no n values given");
    for (int n : spec.n_values) {
        if (n < 1) throw InfeasibleParameters("n must be positive");
    }
}

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

void write_common_header(std::ostream& os, const ExperimentSpec& spec) {
    os << "# " << kSchemaVersion << " kind=" << to_string(spec.kind) << " reps=" << spec.repetitions
       << " seed=" << spec.seed << " adversary=" << to_string(spec.adversary) << " alpha=" << to_string(spec.alpha)
       << " beta=" << to_string(spec.beta) << "\n";
}

}  // namespace

std::string_view to_string(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::Convergence: return "convergence";
        case ExperimentKind::Welfare: return "welfare";
        case ExperimentKind::MetaTreeSize: return "metatree";
    }
    return "unknown";
}

ExperimentKind parse_experiment_kind(std::string_view text) {
    if (text == "convergence") return ExperimentKind::Convergence;
    if (text == "welfare") return ExperimentKind::Welfare;
    if (text == "metatree" || text == "metatree_size") return ExperimentKind::MetaTreeSize;
    throw ParseError("unknown experiment kind '" + std::string(text) + "'");
}

std::vector<DynamicsRow> run_dynamics_experiment(const ExperimentSpec& spec) {
    check_spec(spec);
    const std::size_t reps = static_cast<std::size_t>(spec.repetitions);
    std::vector<DynamicsRow> rows(spec.n_values.size() * reps);
    parallel_for(rows.size(), spec.threads, [&](std::size_t idx) {
        const int n = spec.n_values[idx / reps];
        const std::uint64_t seed = spec.seed + idx % reps;
        const GameState start = gen_erdos_renyi_avg_degree(n, spec.avg_degree, seed, spec.alpha, spec.beta,
                                                           spec.adversary);
        DynamicsConfig config;
        config.max_rounds = spec.max_rounds;
        config.seed = seed;
        const DynamicsOutcome out = run_dynamics(start, config);
        DynamicsRow& row = rows[idx];
        row.n = n;
        row.seed = seed;
        row.status = out.status;
        row.rounds = out.rounds;
        row.period = out.period;
        row.welfare = out.welfare;
        row.optimum = Rational(n) * (Rational(n) - spec.alpha);
        row.edges = static_cast<int>(out.final_state.graph().edge_count());
        row.nontrivial = row.edges > 0;
        for (PlayerId v = 0; v < n; ++v) row.immunized += out.final_state.immunized(v) ? 1 : 0;
    });
    std::stable_sort(rows.begin(), rows.end(),
                     [](const DynamicsRow& a, const DynamicsRow& b) { return std::tie(a.n, a.seed) < std::tie(b.n, b.seed); });
    return rows;
}

MetaTreeRow metatree_size(const GameState& g) {
    MetaTreeRow row;
    row.n = g.size();
    const Graph graph = g.graph();
    row.m = static_cast<long long>(graph.edge_count());
    const auto regions = decompose_regions(graph, g.immunized_mask(), g.adversary());
    if (regions.immunized_regions.empty()) return row;
    std::vector<PlayerId> all(static_cast<std::size_t>(g.size()));
    std::iota(all.begin(), all.end(), 0);
    const MetaTree tree = build_meta_tree(graph, regions, all, -1, {});
    row.candidate_blocks = tree.candidate_count();
    row.bridge_blocks = tree.bridge_count();
    return row;
}

std::vector<MetaTreeRow> run_metatree_experiment(const ExperimentSpec& spec) {
    check_spec(spec);
    if (spec.fractions.empty()) throw InfeasibleParameters("no immunization fractions given");
    const std::size_t reps = static_cast<std::size_t>(spec.repetitions);
    const std::size_t per_n = spec.fractions.size() * reps;
    std::vector<MetaTreeRow> rows(spec.n_values.size() * per_n);
    parallel_for(rows.size(), spec.threads, [&](std::size_t idx) {
        const int n = spec.n_values[idx / per_n];
        const double fraction = spec.fractions[idx % per_n / reps];
        const std::uint64_t seed = spec.seed + idx % reps;
        const long long m = static_cast<long long>(spec.edge_factor) * n;
        const GameState g = gen_gnm_connected(n, m, fraction, seed, spec.alpha, spec.beta, spec.adversary);
        MetaTreeRow row = metatree_size(g);
        row.fraction = fraction;
        row.seed = seed;
        rows[idx] = row;
    });
    std::stable_sort(rows.begin(), rows.end(), [](const MetaTreeRow& a, const MetaTreeRow& b) {
        return std::tie(a.n, a.fraction, a.seed) < std::tie(b.n, b.fraction, b.seed);
    });
    return rows;
}

std::string dynamics_csv(const ExperimentSpec& spec, const std::vector<DynamicsRow>& rows) {
    std::ostringstream os;
    write_common_header(os, spec);
    os << "# start=erdos_renyi avg_degree=" << format_double(spec.avg_degree) << " max_rounds=" << spec.max_rounds
       << " seed_of_rep=seed+rep\n";
    if (spec.kind == ExperimentKind::Welfare) {
        os << "# filter: converged runs whose final network has at least one edge (non-trivial)\n";
        for (int n : spec.n_values) {
            double sum = 0;
            int count = 0;
            for (const auto& r : rows) {
                if (r.n == n && r.status == DynamicsStatus::Converged && r.nontrivial) {
                    sum += to_double(r.welfare);
                    ++count;
                }
            }
            const Rational opt = Rational(n) * (Rational(n) - spec.alpha);
            os << "# n=" << n << " nontrivial_equilibria=" << count;
            if (count > 0) {
                const double mean = sum / count;
                os << " mean_welfare=" << format_double(mean) << " optimum=" << to_string(opt)
                   << " mean_ratio=" << format_double(mean / to_double(opt));
            }
            os << "\n";
        }
        os << "n,seed,status,rounds,nontrivial,welfare,optimum,ratio,edges,immunized\n";
        for (const auto& r : rows) {
            os << r.n << ',' << r.seed << ',' << to_string(r.status) << ',' << r.rounds << ',' << (r.nontrivial ? 1 : 0)
               << ',' << to_string(r.welfare) << ',' << to_string(r.optimum) << ','
               << format_double(to_double(r.welfare) / to_double(r.optimum)) << ',' << r.edges << ',' << r.immunized
               << '\n';
        }
    } else {
        os << "n,seed,status,rounds,period,welfare,edges,immunized\n";
        for (const auto& r : rows) {
            os << r.n << ',' << r.seed << ',' << to_string(r.status) << ',' << r.rounds << ',' << r.period << ','
               << to_string(r.welfare) << ',' << r.edges << ',' << r.immunized << '\n';
        }
    }
    return os.str();
}

std::string metatree_csv(const ExperimentSpec& spec, const std::vector<MetaTreeRow>& rows) {
    std::ostringstream os;
    write_common_header(os, spec);
    os << "# graph=connected_gnm edge_factor=" << spec.edge_factor << " method=" << kGnmMethod
       << " seed_of_rep=seed+rep\n";
    os << "n,m,fraction,seed,candidate_blocks,bridge_blocks\n";
    for (const auto& r : rows) {
        os << r.n << ',' << r.m << ',' << format_double(r.fraction) << ',' << r.seed << ',' << r.candidate_blocks << ','
           << r.bridge_blocks << '\n';
    }
    return os.str();
}

std::string run_experiment(const ExperimentSpec& spec) {
    if (spec.kind == ExperimentKind::MetaTreeSize) return metatree_csv(spec, run_metatree_experiment(spec));
    return dynamics_csv(spec, run_dynamics_experiment(spec));
}

}  // namespace netform
