#include "netform/best_response.hpp"

#include <algorithm>
#include <functional>

#include "netform/component_value.hpp"
#include "netform/utility.hpp"

namespace netform {
namespace {

std::vector<int> sizes_of(const ComponentPartition& partition, const std::vector<int>& indices) {
    std::vector<int> sizes;
    sizes.reserve(indices.size());
    for (int c : indices) sizes.push_back(static_cast<int>(partition.components[static_cast<std::size_t>(c)].members.size()));
    return sizes;
}

std::vector<int> to_components(const std::vector<int>& items, const std::vector<int>& indices) {
    std::vector<int> out;
    out.reserve(items.size());
    for (int i : items) out.push_back(indices[static_cast<std::size_t>(i)]);
    return out;
}

// Best item count j maximising M[m][j][z] - j*alpha; ties go to fewer edges.
std::vector<int> best_knapsack_choice(const KnapsackTable& table, int z, const Rational& alpha) {
    if (z <= 0) return {};
    const int m = table.items();
    int best_j = 0;
    Rational best = 0;
    for (int j = 1; j <= m; ++j) {
        const Rational value = Rational(table.value(m, j, z)) - alpha * j;
        if (value > best) {
            best = value;
            best_j = j;
        }
    }
    return table.reconstruct(best_j, z);
}

// Copy of g without the active player's endpoints inside `members`.
GameState strip_edges_into(const GameState& g, PlayerId a, std::span<const PlayerId> members) {
    Strategy own = g.strategy(a);
    std::erase_if(own.endpoints,
                  [&](PlayerId v) { return std::find(members.begin(), members.end(), v) != members.end(); });
    return with_strategy(g, a, own);
}

// Bottom-up selection on the Meta Tree rooted at a leaf the active player is
// assumed to have bought an edge into.
class RootedSelection {
public:
    RootedSelection(const MetaTree& mt, int root, std::int64_t denominator, const Rational& alpha)
        : mt_(mt), denominator_(denominator), alpha_(alpha) {
        const auto k = static_cast<std::size_t>(mt.block_count());
        parent_.assign(k, -1);
        children_.assign(k, {});
        subtree_size_.assign(k, 0);
        subtree_anchored_.assign(k, 0);
        leaves_.assign(k, {});
        order_.reserve(k);
        std::vector<int> stack{root};
        parent_[static_cast<std::size_t>(root)] = root;
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            order_.push_back(x);
            for (int y : mt.adjacency[static_cast<std::size_t>(x)]) {
                if (parent_[static_cast<std::size_t>(y)] >= 0) continue;
                parent_[static_cast<std::size_t>(y)] = x;
                children_[static_cast<std::size_t>(x)].push_back(y);
                stack.push_back(y);
            }
        }
        for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
            const auto x = static_cast<std::size_t>(*it);
            subtree_size_[x] += mt.blocks[x].size();
            subtree_anchored_[x] = subtree_anchored_[x] || mt.blocks[x].anchored;
            if (children_[x].empty()) leaves_[x].push_back(*it);
            std::sort(leaves_[x].begin(), leaves_[x].end());
            if (*it == root) continue;
            const auto p = static_cast<std::size_t>(parent_[x]);
            subtree_size_[p] += subtree_size_[x];
            subtree_anchored_[p] = subtree_anchored_[p] || subtree_anchored_[x];
            leaves_[p].insert(leaves_[p].end(), leaves_[x].begin(), leaves_[x].end());
        }
    }

    /// Blocks to buy an edge into within the subtree of `x`, assuming an edge
    /// to x's parent.
    std::vector<int> select(int x) const {
        std::vector<int> opt;
        for (int child : children_[static_cast<std::size_t>(x)]) {
            auto sub = select(child);
            opt.insert(opt.end(), sub.begin(), sub.end());
        }
        const auto& block = mt_.blocks[static_cast<std::size_t>(x)];
        if (block.kind == BlockKind::Bridge || !opt.empty() || subtree_anchored_[static_cast<std::size_t>(x)]) {
            return opt;
        }
        // Gain of one edge to leaf l: the whole subtree survives an attack on
        // the parent bridge; an attack on a bridge t inside the subtree
        // leaves l's side of t cut off from the parent.
        const auto parent = static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)]);
        const std::int64_t parent_weight = mt_.blocks[parent].size();
        int best_leaf = -1;
        std::int64_t best_gain = -1;
        for (int l : leaves_[static_cast<std::size_t>(x)]) {
            std::int64_t gain = parent_weight * subtree_size_[static_cast<std::size_t>(x)];
            for (int below = l, t = parent_[static_cast<std::size_t>(l)]; below != x;
                 below = t, t = parent_[static_cast<std::size_t>(t)]) {
                if (mt_.blocks[static_cast<std::size_t>(t)].kind == BlockKind::Bridge) {
                    gain += static_cast<std::int64_t>(mt_.blocks[static_cast<std::size_t>(t)].size()) *
                            subtree_size_[static_cast<std::size_t>(below)];
                }
            }
            if (gain > best_gain) {
                best_gain = gain;
                best_leaf = l;
            }
        }
        if (best_leaf >= 0 && Rational(best_gain, denominator_) > alpha_) opt.push_back(best_leaf);
        return opt;
    }

    const std::vector<int>& children(int x) const { return children_[static_cast<std::size_t>(x)]; }

private:
    const MetaTree& mt_;
    std::int64_t denominator_;
    Rational alpha_;
    std::vector<int> parent_;
    std::vector<std::vector<int>> children_;
    std::vector<std::int64_t> subtree_size_;
    std::vector<char> subtree_anchored_;
    std::vector<std::vector<int>> leaves_;
    std::vector<int> order_;
};

std::vector<PlayerId> select_on_tree(const MetaTree& mt, const ComponentValue& value, const Rational& alpha) {
    if (mt.candidate_count() < 2) return {};
    std::vector<PlayerId> best;
    Rational best_value;
    for (int root : mt.leaves()) {
        const RootedSelection rooted(mt, root, value.denominator(), alpha);
        std::vector<PlayerId> partners{mt.blocks[static_cast<std::size_t>(root)].representative};
        for (int child : rooted.children(root)) {
            for (int b : rooted.select(child)) partners.push_back(mt.blocks[static_cast<std::size_t>(b)].representative);
        }
        std::sort(partners.begin(), partners.end());
        const Rational v = value(partners);
        if (best.empty() || v > best_value ||
            (v == best_value && (partners.size() < best.size() || (partners.size() == best.size() && partners < best)))) {
            best = std::move(partners);
            best_value = v;
        }
    }
    if (best.size() < 2) return {};
    return best;
}

std::vector<PlayerId> partner_set_in(const GameState& g, const Graph& graph, const RegionDecomposition& rd, PlayerId a,
                                     std::span<const PlayerId> members) {
    const ComponentValue value(g, graph, rd, a, members);
    std::vector<PlayerId> best;
    Rational best_value = value({});

    int immunized = 0;
    for (PlayerId w : value.members()) {
        if (!rd.is_immunized(w)) continue;
        ++immunized;
        const PlayerId single[] = {w};
        const Rational v = value(single);
        if (v > best_value) {
            best_value = v;
            best = {w};
        }
    }
    if (immunized >= 2) {
        const MetaTree mt = build_meta_tree(graph, rd, value.members(), a, value.anchors());
        auto multi = select_on_tree(mt, value, g.alpha());
        if (!multi.empty()) {
            const Rational v = value(multi);
            if (v > best_value) {
                best_value = v;
                best = std::move(multi);
            }
        }
    }
    return best;
}

}  // namespace

bool preferred_on_tie(const Strategy& lhs, const Strategy& rhs) {
    if (lhs.endpoints.size() != rhs.endpoints.size()) return lhs.endpoints.size() < rhs.endpoints.size();
    if (lhs.immunize != rhs.immunize) return !lhs.immunize;
    return lhs.endpoints < rhs.endpoints;
}

SubsetChoice subset_select(const GameState& g, PlayerId a, const ComponentPartition& partition) {
    const GameState reduced = with_strategy(g, a, Strategy{});
    const RegionDecomposition rd = decompose_regions(reduced);
    const int own = static_cast<int>(rd.vulnerable_region(a).size());
    SubsetChoice choice;
    choice.capacity = rd.t_max - own;
    if (choice.capacity <= 0) return choice;

    const auto indices = partition.purchasable_vulnerable();
    const KnapsackTable table(sizes_of(partition, indices), choice.capacity);
    choice.may_be_targeted = to_components(best_knapsack_choice(table, choice.capacity, g.alpha()), indices);
    choice.stays_untargeted = to_components(best_knapsack_choice(table, choice.capacity - 1, g.alpha()), indices);
    return choice;
}

std::vector<std::pair<int, std::vector<int>>> uniform_subset_select(const GameState& g, PlayerId a,
                                                                    const ComponentPartition& partition) {
    (void)g;
    (void)a;
    const auto indices = partition.purchasable_vulnerable();
    const auto sizes = sizes_of(partition, indices);
    int total = 0;
    for (int s : sizes) total += s;
    const KnapsackTable table(sizes, total);
    const int m = table.items();

    std::vector<std::pair<int, std::vector<int>>> out;
    out.emplace_back(0, std::vector<int>{});
    for (int z = 1; z <= total; ++z) {
        for (int y = 1; y <= m; ++y) {
            if (table.value(m, y, z) == z) {
                out.emplace_back(z, to_components(table.reconstruct(y, z), indices));
                break;
            }
        }
    }
    return out;
}

std::vector<int> greedy_select(const GameState& g, PlayerId a, const ComponentPartition& partition) {
    const GameState immunized = with_strategy(g, a, Strategy{{}, true});
    const RegionDecomposition rd = decompose_regions(immunized);
    const auto targets = static_cast<std::int64_t>(rd.targeted.size());
    std::vector<int> out;
    for (int c : partition.purchasable_vulnerable()) {
        const auto& members = partition.components[static_cast<std::size_t>(c)].members;
        const auto size = static_cast<std::int64_t>(members.size());
        std::int64_t hit = 0;
        for (PlayerId v : members) hit += rd.is_targeted(v) ? 1 : 0;
        // |C| * (1 - hit/|T|) > alpha, with p_survive = 1 when nothing can be attacked.
        const Rational expected = targets == 0 ? Rational(size) : Rational(size * (targets - hit), targets);
        if (expected > g.alpha()) out.push_back(c);
    }
    return out;
}

std::vector<PlayerId> meta_tree_select(const GameState& g, PlayerId a, const MetaTree& mt) {
    std::vector<PlayerId> members;
    for (const auto& b : mt.blocks) members.insert(members.end(), b.members.begin(), b.members.end());
    std::sort(members.begin(), members.end());
    const GameState stripped = strip_edges_into(g, a, members);
    const Graph graph = stripped.graph();
    const RegionDecomposition rd = decompose_regions(graph, stripped.immunized_mask(), stripped.adversary());
    const ComponentValue value(stripped, graph, rd, a, members);
    return select_on_tree(mt, value, g.alpha());
}

std::vector<PlayerId> partner_set_select(const GameState& g, PlayerId a, std::span<const PlayerId> component) {
    const GameState stripped = strip_edges_into(g, a, component);
    const Graph graph = stripped.graph();
    const RegionDecomposition rd = decompose_regions(graph, stripped.immunized_mask(), stripped.adversary());
    return partner_set_in(stripped, graph, rd, a, component);
}

Strategy possible_strategy(const GameState& g, PlayerId a, const ComponentPartition& partition,
                           std::span<const int> selected, bool immunize) {
    Strategy s;
    s.immunize = immunize;
    for (int c : selected) s.endpoints.push_back(partition.components[static_cast<std::size_t>(c)].members.front());
    const GameState local = with_strategy(g, a, s);
    const Graph graph = local.graph();
    const RegionDecomposition rd = decompose_regions(graph, local.immunized_mask(), local.adversary());
    for (int c : partition.indices(ComponentClass::ContainsImmunized)) {
        const auto partners = partner_set_in(local, graph, rd, a, partition.components[static_cast<std::size_t>(c)].members);
        s.endpoints.insert(s.endpoints.end(), partners.begin(), partners.end());
    }
    std::sort(s.endpoints.begin(), s.endpoints.end());
    return s;
}

BestResponseResult best_response(const GameState& g, PlayerId a) {
    const ComponentPartition partition = classify_components(g, a);
    const GameState reduced = with_strategy(g, a, Strategy{});

    std::vector<std::pair<std::string, Strategy>> candidates;
    candidates.emplace_back("empty", Strategy{});
    if (g.adversary() == Adversary::MaximumCarnage) {
        const SubsetChoice choice = subset_select(reduced, a, partition);
        candidates.emplace_back("s_t", possible_strategy(reduced, a, partition, choice.may_be_targeted, false));
        candidates.emplace_back("s_v", possible_strategy(reduced, a, partition, choice.stays_untargeted, false));
    } else {
        for (const auto& [z, chosen] : uniform_subset_select(reduced, a, partition)) {
            candidates.emplace_back("s_z=" + std::to_string(z), possible_strategy(reduced, a, partition, chosen, false));
        }
    }
    candidates.emplace_back("s_g", possible_strategy(reduced, a, partition, greedy_select(reduced, a, partition), true));

    BestResponseResult result;
    bool have = false;
    for (auto& [label, strategy] : candidates) {
        const Rational u = utility(with_strategy(reduced, a, strategy), a);
        result.candidate_log.push_back({label, strategy, u});
        if (!have || u > result.utility || (u == result.utility && preferred_on_tie(strategy, result.strategy))) {
            result.strategy = strategy;
            result.utility = u;
            have = true;
        }
    }
    return result;
}

}  // namespace netform
