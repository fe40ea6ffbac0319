#include "netform/oracle.hpp"

#include <string>

#include "netform/errors.hpp"
#include "netform/regions.hpp"
#include "netform/utility.hpp"

namespace netform {

OracleResult oracle_best_response(const GameState& g, PlayerId a, int max_players) {
    if (g.size() > max_players) {
        throw InstanceTooLarge("oracle limited to " + std::to_string(max_players) + " players, got " +
                               std::to_string(g.size()));
    }
    std::vector<PlayerId> others;
    for (PlayerId v = 0; v < g.size(); ++v) {
        if (v != a) others.push_back(v);
    }
    OracleResult result;
    bool have = false;
    GameState state = g;
    const std::uint64_t subsets = std::uint64_t{1} << others.size();
    for (int immunize = 0; immunize <= 1; ++immunize) {
        for (std::uint64_t mask = 0; mask < subsets; ++mask) {
            Strategy s;
            s.immunize = immunize != 0;
            for (std::size_t k = 0; k < others.size(); ++k) {
                if (mask >> k & 1U) s.endpoints.push_back(others[k]);
            }
            state.set_strategy(a, s);
            const Rational u = utility(state, a);
            if (!have || u > result.best_utility) {
                result.best_utility = u;
                result.witnesses.clear();
                have = true;
            }
            if (u == result.best_utility) result.witnesses.push_back(std::move(s));
        }
    }
    return result;
}

}  // namespace netform
