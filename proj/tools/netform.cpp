// netform command line: best responses, equilibrium checks, dynamics, oracle
// spot checks, experiments and instance generation. Results go to stdout as
// JSON; CSV and DOT go to the files named by -o / --trace / --dot.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "netform/best_response.hpp"
#include "netform/dynamics.hpp"
#include "netform/errors.hpp"
#include "netform/experiments.hpp"
#include "netform/generators.hpp"
#include "netform/io.hpp"
#include "netform/oracle.hpp"
#include "netform/regions.hpp"
#include "netform/utility.hpp"

namespace {

using netform::GameState;
using netform::PlayerId;
using nlohmann::json;

void emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

void maybe_dot(const std::string& path, const GameState& g) {
    if (!path.empty()) netform::write_text_file(path, netform::to_dot(g));
}

void maybe_save(const std::string& path, const GameState& g) {
    if (!path.empty()) netform::save_game(g, path);
}

PlayerId checked_player(const GameState& g, PlayerId p) {
    if (p < 0 || p >= g.size()) throw netform::InvalidGameState("player " + std::to_string(p) + " out of range");
    return p;
}

struct Options {
    std::string game;
    PlayerId player = 0;
    bool explain = false;
    std::string dot;
    std::string out;
    std::string trace;
    int max_rounds = 100;
    std::uint64_t seed = 0;
    int cap = netform::kDefaultOracleCap;
    // experiment / gen
    std::string kind = "convergence";
    std::vector<int> n_values{50};
    int reps = 100;
    std::string alpha = "2";
    std::string beta = "2";
    std::string adversary = "max_carnage";
    std::vector<double> fractions;
    int threads = 0;
    int n = 50;
    double avg_degree = 5.0;
    long long m = -1;
    double fraction = 0.0;
};

int cmd_best_response(const Options& o) {
    GameState g = netform::load_game(o.game);
    const PlayerId a = checked_player(g, o.player);
    const auto br = netform::best_response(g, a);
    json doc = {{"player", a},
                {"strategy", netform::strategy_to_json(br.strategy)},
                {"utility", netform::to_string(br.utility)},
                {"current_utility", netform::to_string(netform::utility(g, a))}};
    if (o.explain) {
        json log = json::array();
        for (const auto& c : br.candidate_log) {
            log.push_back({{"label", c.label},
                           {"strategy", netform::strategy_to_json(c.strategy)},
                           {"utility", netform::to_string(c.utility)}});
        }
        const auto partition = netform::classify_components(g, a);
        json comps = json::array();
        for (const auto& c : partition.components) {
            comps.push_back({{"members", c.members},
                             {"kind", c.kind == netform::ComponentClass::PureVulnerable ? "C_U" : "C_I"},
                             {"incoming", c.incoming}});
        }
        doc["candidates"] = log;
        doc["components"] = comps;
    }
    g.set_strategy(a, br.strategy);
    maybe_dot(o.dot, g);
    maybe_save(o.out, g);
    emit(doc);
    return 0;
}

int cmd_check_eq(const Options& o) {
    const GameState g = netform::load_game(o.game);
    const auto check = netform::is_nash_equilibrium(g);
    json doc = {{"equilibrium", check.equilibrium}, {"welfare", netform::to_string(netform::social_welfare(g))}};
    if (check.deviator) {
        doc["deviator"] = *check.deviator;
        doc["gain"] = netform::to_string(check.gain);
    }
    maybe_dot(o.dot, g);
    emit(doc);
    return 0;
}

int cmd_dynamics(const Options& o) {
    const GameState g = netform::load_game(o.game);
    netform::DynamicsConfig config;
    config.max_rounds = o.max_rounds;
    config.seed = o.seed;
    config.record_trace = !o.trace.empty();
    const auto out = netform::run_dynamics(g, config);
    if (!o.trace.empty()) netform::write_text_file(o.trace, netform::trace_csv(out.trace));
    maybe_dot(o.dot, out.final_state);
    maybe_save(o.out, out.final_state);
    json doc = {{"status", std::string(netform::to_string(out.status))},
                {"rounds", out.rounds},
                {"welfare", netform::to_string(out.welfare)},
                {"final_state", netform::game_to_json(out.final_state)}};
    if (out.status == netform::DynamicsStatus::CycleDetected) doc["period"] = out.period;
    emit(doc);
    return 0;
}

int cmd_oracle(const Options& o) {
    const GameState g = netform::load_game(o.game);
    const PlayerId a = checked_player(g, o.player);
    const auto result = netform::oracle_best_response(g, a, o.cap);
    json witnesses = json::array();
    for (const auto& s : result.witnesses) witnesses.push_back(netform::strategy_to_json(s));
    emit({{"player", a}, {"best_utility", netform::to_string(result.best_utility)}, {"witnesses", witnesses}});
    return 0;
}

int cmd_experiment(const Options& o) {
    netform::ExperimentSpec spec;
    spec.kind = netform::parse_experiment_kind(o.kind);
    spec.n_values = o.n_values;
    spec.repetitions = o.reps;
    spec.alpha = netform::parse_rational(o.alpha);
    spec.beta = netform::parse_rational(o.beta);
    spec.adversary = netform::parse_adversary(o.adversary);
    spec.seed = o.seed;
    spec.max_rounds = o.max_rounds;
    spec.avg_degree = o.avg_degree;
    spec.threads = o.threads;
    if (!o.fractions.empty()) spec.fractions = o.fractions;
    const std::string csv = netform::run_experiment(spec);
    if (o.out.empty()) {
        std::cout << csv;
    } else {
        netform::write_text_file(o.out, csv);
    }
    return 0;
}

int cmd_gen(const std::string& model, const Options& o) {
    const auto alpha = netform::parse_rational(o.alpha);
    const auto beta = netform::parse_rational(o.beta);
    const auto adversary = netform::parse_adversary(o.adversary);
    const GameState g = model == "er"
                            ? netform::gen_erdos_renyi_avg_degree(o.n, o.avg_degree, o.seed, alpha, beta, adversary)
                            : netform::gen_gnm_connected(o.n, o.m < 0 ? 2LL * o.n : o.m, o.fraction, o.seed, alpha,
                                                         beta, adversary);
    maybe_dot(o.dot, g);
    if (o.out.empty()) {
        std::cout << netform::serialize_game(g);
    } else {
        netform::save_game(g, o.out);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Network formation games with attack and immunization"};
    app.require_subcommand(1);
    Options o;

    auto* br = app.add_subcommand("best-response", "Best response of one player");
    br->add_option("game", o.game, "Game JSON file")->required()->check(CLI::ExistingFile);
    br->add_option("--player,-p", o.player, "Active player")->required();
    br->add_flag("--explain", o.explain, "List evaluated candidates and components");
    br->add_option("--dot", o.dot, "Write the state after the update as DOT");
    br->add_option("-o,--output", o.out, "Write the state after the update as JSON");

    auto* eq = app.add_subcommand("check-eq", "Check whether the state is a Nash equilibrium");
    eq->add_option("game", o.game, "Game JSON file")->required()->check(CLI::ExistingFile);
    eq->add_option("--dot", o.dot, "Write the state as DOT");

    auto* dyn = app.add_subcommand("dynamics", "Run round-robin best-response dynamics");
    dyn->add_option("game", o.game, "Game JSON file")->required()->check(CLI::ExistingFile);
    dyn->add_option("--max-rounds", o.max_rounds, "Round limit")->check(CLI::PositiveNumber);
    dyn->add_option("--seed", o.seed, "Seed for the player order");
    dyn->add_option("--trace", o.trace, "Per-round CSV output");
    dyn->add_option("--dot", o.dot, "Write the final state as DOT");
    dyn->add_option("-o,--output", o.out, "Write the final state as JSON");

    auto* orc = app.add_subcommand("oracle", "Exhaustive best response for small games");
    orc->add_option("game", o.game, "Game JSON file")->required()->check(CLI::ExistingFile);
    orc->add_option("--player,-p", o.player, "Active player")->required();
    orc->add_option("--cap", o.cap, "Largest n accepted");

    auto* exp = app.add_subcommand("experiment", "Run a batch experiment and write CSV");
    exp->add_option("--kind", o.kind, "convergence | welfare | metatree")
        ->check(CLI::IsMember({"convergence", "welfare", "metatree"}));
    exp->add_option("--n", o.n_values, "Population sizes")->delimiter(',');
    exp->add_option("--reps", o.reps, "Repetitions per configuration")->check(CLI::PositiveNumber);
    exp->add_option("--alpha", o.alpha, "Edge cost");
    exp->add_option("--beta", o.beta, "Immunization cost");
    exp->add_option("--adversary", o.adversary, "max_carnage | random_attack");
    exp->add_option("--seed", o.seed, "Base seed");
    exp->add_option("--max-rounds", o.max_rounds, "Round limit per dynamics run")->check(CLI::PositiveNumber);
    exp->add_option("--avg-degree", o.avg_degree, "Average degree of the start network");
    exp->add_option("--fractions", o.fractions, "Immunization fractions (metatree)")->delimiter(',');
    exp->add_option("--threads", o.threads, "Worker threads, 0 for all cores");
    exp->add_option("-o,--output", o.out, "CSV file (stdout if omitted)");

    auto* gen = app.add_subcommand("gen", "Generate a random game");
    std::string model;
    gen->add_option("model", model, "er | gnm")->required()->check(CLI::IsMember({"er", "gnm"}));
    gen->add_option("--n", o.n, "Players")->check(CLI::PositiveNumber);
    gen->add_option("--avg-degree", o.avg_degree, "Average degree (er)");
    gen->add_option("--m", o.m, "Edges (gnm, default 2n)");
    gen->add_option("--fraction", o.fraction, "Immunized fraction (gnm)");
    gen->add_option("--seed", o.seed, "Seed");
    gen->add_option("--alpha", o.alpha, "Edge cost");
    gen->add_option("--beta", o.beta, "Immunization cost");
    gen->add_option("--adversary", o.adversary, "max_carnage | random_attack");
    gen->add_option("--dot", o.dot, "Write the state as DOT");
    gen->add_option("-o,--output", o.out, "JSON file (stdout if omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*br) return cmd_best_response(o);
        if (*eq) return cmd_check_eq(o);
        if (*dyn) return cmd_dynamics(o);
        if (*orc) return cmd_oracle(o);
        if (*exp) return cmd_experiment(o);
        if (*gen) return cmd_gen(model, o);
    } catch (const netform::Error& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    }
    return 1;
}
