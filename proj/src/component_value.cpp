#include "netform/component_value.hpp"

#include <algorithm>
#include <stdexcept>

namespace netform {

ComponentValue::ComponentValue(const GameState& g, const Graph& graph, const RegionDecomposition& regions,
                               PlayerId active, std::span<const PlayerId> component)
    : members_(component.begin(), component.end()), alpha_(g.alpha()) {
    std::sort(members_.begin(), members_.end());
    const auto count = members_.size();
    adjacency_.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        const PlayerId v = members_[i];
        for (PlayerId w : graph.neighbors(v)) {
            if (w == active) continue;
            const int j = local(w);
            if (j < 0) throw std::invalid_argument("component is not closed in G minus the active player");
            adjacency_[i].push_back(j);
        }
        const auto& owned = g.strategy(v).endpoints;
        if (std::binary_search(owned.begin(), owned.end(), active)) {
            anchors_.push_back(v);
            anchor_local_.push_back(static_cast<int>(i));
        }
    }

    if (regions.targeted.empty()) {
        scenarios_.push_back({{}, 1, true});
        denominator_ = 1;
        return;
    }
    denominator_ = static_cast<std::int64_t>(regions.targeted.size());
    std::int64_t accounted = 0;
    const bool active_vulnerable = !regions.is_immunized(active);
    if (active_vulnerable && regions.is_targeted(active)) {
        const auto w = static_cast<std::int64_t>(regions.vulnerable_region(active).size());
        scenarios_.push_back({{}, w, false});
        accounted += w;
    }
    std::vector<char> seen(regions.vulnerable_regions.size(), 0);
    for (PlayerId v : members_) {
        if (regions.is_immunized(v) || !regions.is_targeted(v)) continue;
        const auto rid = static_cast<std::size_t>(regions.region_of[static_cast<std::size_t>(v)]);
        if (seen[rid]) continue;
        seen[rid] = 1;
        if (active_vulnerable && static_cast<int>(rid) == regions.region_of[static_cast<std::size_t>(active)]) continue;
        Scenario s;
        for (PlayerId u : regions.vulnerable_regions[rid]) s.killed.push_back(local(u));
        s.weight = static_cast<std::int64_t>(s.killed.size());
        accounted += s.weight;
        scenarios_.push_back(std::move(s));
    }
    if (denominator_ > accounted) scenarios_.push_back({{}, denominator_ - accounted, true});
}

int ComponentValue::local(PlayerId v) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it == members_.end() || *it != v) return -1;
    return static_cast<int>(it - members_.begin());
}

std::int64_t ComponentValue::weighted_reach(std::span<const PlayerId> partners) const {
    std::vector<int> sources = anchor_local_;
    for (PlayerId p : partners) {
        const int i = local(p);
        if (i < 0) throw std::invalid_argument("partner lies outside the component");
        sources.push_back(i);
    }
    std::vector<char> mark(members_.size());
    std::vector<int> stack;
    std::int64_t total = 0;
    for (const auto& s : scenarios_) {
        if (!s.active_alive || sources.empty()) continue;
        std::fill(mark.begin(), mark.end(), 0);
        for (int k : s.killed) mark[static_cast<std::size_t>(k)] = 2;
        std::int64_t reach = 0;
        for (int src : sources) {
            if (mark[static_cast<std::size_t>(src)] != 0) continue;
            mark[static_cast<std::size_t>(src)] = 1;
            stack.push_back(src);
            while (!stack.empty()) {
                const int v = stack.back();
                stack.pop_back();
                ++reach;
                for (int w : adjacency_[static_cast<std::size_t>(v)]) {
                    if (mark[static_cast<std::size_t>(w)] == 0) {
                        mark[static_cast<std::size_t>(w)] = 1;
                        stack.push_back(w);
                    }
                }
            }
        }
        total += s.weight * reach;
    }
    return total;
}

Rational ComponentValue::operator()(std::span<const PlayerId> partners) const {
    return Rational(weighted_reach(partners), denominator_) - alpha_ * static_cast<std::int64_t>(partners.size());
}

}  // namespace netform
