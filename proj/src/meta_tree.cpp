#include "netform/meta_tree.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "netform/errors.hpp"

namespace netform {
namespace {

struct LocalRegion {
    std::vector<int> nodes;  // local indices
    bool immunized = false;
    bool targeted = false;
};

}  // namespace

int MetaTree::candidate_count() const {
    return static_cast<int>(std::count_if(blocks.begin(), blocks.end(),
                                          [](const Block& b) { return b.kind == BlockKind::Candidate; }));
}

int MetaTree::bridge_count() const { return block_count() - candidate_count(); }

std::vector<int> MetaTree::leaves() const {
    std::vector<int> out;
    for (int b = 0; b < block_count(); ++b) {
        if (adjacency[static_cast<std::size_t>(b)].size() == 1) out.push_back(b);
    }
    return out;
}

int MetaTree::block_of(PlayerId v) const {
    for (int b = 0; b < block_count(); ++b) {
        const auto& m = blocks[static_cast<std::size_t>(b)].members;
        if (std::binary_search(m.begin(), m.end(), v)) return b;
    }
    return -1;
}

MetaTree meta_tree_construct(const GameState& g, std::span<const PlayerId> component, std::optional<PlayerId> active) {
    if (!active) {
        const Graph graph = g.graph();
        return build_meta_tree(graph, decompose_regions(graph, g.immunized_mask(), g.adversary()), component, -1, {});
    }
    const PlayerId a = *active;
    std::vector<PlayerId> members(component.begin(), component.end());
    std::sort(members.begin(), members.end());
    // Drop the active player's own edges into the component.
    GameState stripped = g;
    Strategy own = g.strategy(a);
    std::erase_if(own.endpoints, [&](PlayerId v) { return std::binary_search(members.begin(), members.end(), v); });
    stripped.set_strategy(a, own);

    std::vector<PlayerId> anchors;
    for (PlayerId v : members) {
        const auto& owned = stripped.strategy(v).endpoints;
        if (std::binary_search(owned.begin(), owned.end(), a)) anchors.push_back(v);
    }
    const Graph graph = stripped.graph();
    return build_meta_tree(graph, decompose_regions(graph, stripped.immunized_mask(), stripped.adversary()), members, a,
                           anchors);
}

MetaTree build_meta_tree(const Graph& graph, const RegionDecomposition& rd, std::span<const PlayerId> component,
                         PlayerId active, std::span<const PlayerId> anchors) {
    std::vector<PlayerId> members(component.begin(), component.end());
    std::sort(members.begin(), members.end());
    const int count = static_cast<int>(members.size());
    auto local = [&](PlayerId v) {
        auto it = std::lower_bound(members.begin(), members.end(), v);
        return (it == members.end() || *it != v) ? -1 : static_cast<int>(it - members.begin());
    };

    std::vector<std::vector<int>> adj(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        for (PlayerId w : graph.neighbors(members[static_cast<std::size_t>(i)])) {
            if (w == active) continue;
            const int j = local(w);
            if (j < 0) throw std::invalid_argument("component is not closed under adjacency");
            adj[static_cast<std::size_t>(i)].push_back(j);
        }
    }

    if (count == 0) throw std::invalid_argument("empty component");
    {
        std::vector<char> seen(static_cast<std::size_t>(count), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int reached = 0;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            ++reached;
            for (int w : adj[static_cast<std::size_t>(v)]) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
        if (reached != count) throw std::invalid_argument("component is not connected");
    }

    const bool active_vulnerable = active >= 0 && !rd.is_immunized(active);
    auto in_active_region = [&](PlayerId v) {
        return active_vulnerable && !rd.is_immunized(v) &&
               rd.region_of[static_cast<std::size_t>(v)] == rd.region_of[static_cast<std::size_t>(active)];
    };

    // Local regions: maximal same-type connected pieces of the component.
    std::vector<int> region_of(static_cast<std::size_t>(count), -1);
    std::vector<LocalRegion> regions;
    bool any_immunized = false;
    for (int s = 0; s < count; ++s) {
        if (region_of[static_cast<std::size_t>(s)] >= 0) continue;
        const PlayerId sv = members[static_cast<std::size_t>(s)];
        const bool imm = rd.is_immunized(sv);
        any_immunized = any_immunized || imm;
        LocalRegion r;
        r.immunized = imm;
        r.targeted = !imm && rd.is_targeted(sv) && !in_active_region(sv);
        const int id = static_cast<int>(regions.size());
        std::vector<int> stack{s};
        region_of[static_cast<std::size_t>(s)] = id;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            r.nodes.push_back(v);
            for (int w : adj[static_cast<std::size_t>(v)]) {
                if (region_of[static_cast<std::size_t>(w)] < 0 &&
                    rd.is_immunized(members[static_cast<std::size_t>(w)]) == imm) {
                    region_of[static_cast<std::size_t>(w)] = id;
                    stack.push_back(w);
                }
            }
        }
        regions.push_back(std::move(r));
    }
    if (!any_immunized) throw NotMixedComponent("component has no immunized player");

    // Meta Graph adjacency between regions (always vulnerable <-> immunized).
    std::vector<std::set<int>> region_adj(regions.size());
    for (int v = 0; v < count; ++v) {
        for (int w : adj[static_cast<std::size_t>(v)]) {
            const int rv = region_of[static_cast<std::size_t>(v)];
            const int rw = region_of[static_cast<std::size_t>(w)];
            if (rv != rw) region_adj[static_cast<std::size_t>(rv)].insert(rw);
        }
    }

    // Two immunized regions share a candidate block iff no single targeted
    // region separates them. Refine a partition of the immunized regions by
    // the components left after deleting each targeted region in turn.
    std::vector<int> cls(regions.size(), 0);
    {
        std::vector<int> label(static_cast<std::size_t>(count));
        std::vector<int> stack;
        for (const auto& t : regions) {
            if (!t.targeted) continue;
            std::fill(label.begin(), label.end(), -1);
            for (int v : t.nodes) label[static_cast<std::size_t>(v)] = -2;
            int next = 0;
            for (int s = 0; s < count; ++s) {
                if (label[static_cast<std::size_t>(s)] != -1) continue;
                label[static_cast<std::size_t>(s)] = next;
                stack.push_back(s);
                while (!stack.empty()) {
                    const int v = stack.back();
                    stack.pop_back();
                    for (int w : adj[static_cast<std::size_t>(v)]) {
                        if (label[static_cast<std::size_t>(w)] == -1) {
                            label[static_cast<std::size_t>(w)] = next;
                            stack.push_back(w);
                        }
                    }
                }
                ++next;
            }
            std::map<std::pair<int, int>, int> remap;
            for (std::size_t r = 0; r < regions.size(); ++r) {
                if (!regions[r].immunized) continue;
                const auto key = std::make_pair(cls[r], label[static_cast<std::size_t>(regions[r].nodes.front())]);
                auto [it, inserted] = remap.emplace(key, static_cast<int>(remap.size()));
                cls[r] = it->second;
            }
        }
    }

    // Vulnerable regions join the candidate block holding all their
    // immunized neighbours; the rest become bridge blocks.
    std::map<int, int> group_of_class;  // class -> provisional block
    std::vector<int> block_of_region(regions.size(), -1);
    std::vector<std::vector<int>> block_regions;
    std::vector<BlockKind> kinds;
    for (std::size_t r = 0; r < regions.size(); ++r) {
        if (!regions[r].immunized) continue;
        auto [it, inserted] = group_of_class.emplace(cls[r], static_cast<int>(block_regions.size()));
        if (inserted) {
            block_regions.emplace_back();
            kinds.push_back(BlockKind::Candidate);
        }
        block_of_region[r] = it->second;
        block_regions[static_cast<std::size_t>(it->second)].push_back(static_cast<int>(r));
    }
    for (std::size_t r = 0; r < regions.size(); ++r) {
        if (regions[r].immunized) continue;
        std::set<int> classes;
        for (int nb : region_adj[r]) classes.insert(cls[static_cast<std::size_t>(nb)]);
        if (classes.size() == 1) {
            const int b = group_of_class.at(*classes.begin());
            block_of_region[r] = b;
            block_regions[static_cast<std::size_t>(b)].push_back(static_cast<int>(r));
        } else {
            if (!regions[r].targeted) throw std::logic_error("untargeted vulnerable region left as bridge");
            block_of_region[r] = static_cast<int>(block_regions.size());
            block_regions.push_back({static_cast<int>(r)});
            kinds.push_back(BlockKind::Bridge);
        }
    }

    // Materialise blocks ordered by smallest member id.
    std::vector<Block> provisional(block_regions.size());
    for (std::size_t b = 0; b < block_regions.size(); ++b) {
        provisional[b].kind = kinds[b];
        for (int r : block_regions[b]) {
            for (int v : regions[static_cast<std::size_t>(r)].nodes) {
                provisional[b].members.push_back(members[static_cast<std::size_t>(v)]);
            }
        }
        std::sort(provisional[b].members.begin(), provisional[b].members.end());
        for (PlayerId v : provisional[b].members) {
            if (provisional[b].kind == BlockKind::Candidate && rd.is_immunized(v)) {
                provisional[b].representative = v;
                break;
            }
        }
        for (PlayerId v : anchors) {
            if (std::binary_search(provisional[b].members.begin(), provisional[b].members.end(), v)) {
                provisional[b].anchored = true;
            }
        }
    }
    std::vector<int> order(provisional.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return provisional[static_cast<std::size_t>(x)].members.front() <
               provisional[static_cast<std::size_t>(y)].members.front();
    });
    std::vector<int> rank(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) rank[static_cast<std::size_t>(order[i])] = static_cast<int>(i);

    MetaTree mt;
    for (int b : order) mt.blocks.push_back(std::move(provisional[static_cast<std::size_t>(b)]));
    mt.adjacency.resize(mt.blocks.size());
    std::set<std::pair<int, int>> edges;
    for (std::size_t r = 0; r < regions.size(); ++r) {
        for (int nb : region_adj[r]) {
            const int x = rank[static_cast<std::size_t>(block_of_region[r])];
            const int y = rank[static_cast<std::size_t>(block_of_region[static_cast<std::size_t>(nb)])];
            if (x == y) continue;
            const bool x_candidate = mt.blocks[static_cast<std::size_t>(x)].kind == BlockKind::Candidate;
            edges.insert(x_candidate ? std::make_pair(x, y) : std::make_pair(y, x));
        }
    }
    mt.tree_edges.assign(edges.begin(), edges.end());
    for (auto [c, b] : mt.tree_edges) {
        mt.adjacency[static_cast<std::size_t>(c)].push_back(b);
        mt.adjacency[static_cast<std::size_t>(b)].push_back(c);
    }
    for (auto& list : mt.adjacency) std::sort(list.begin(), list.end());
    return mt;
}

}  // namespace netform
