#include <random>

#include "doctest.h"
#include "netform/errors.hpp"
#include "netform/meta_tree.hpp"
#include "support/checks.hpp"

using namespace netform;

TEST_CASE("single immunized node is one candidate block") {
    GameState g(1, 1, 1);
    g.set_immunized(0, true);
    const std::vector<PlayerId> comp{0};
    const MetaTree mt = meta_tree_construct(g, comp);
    CHECK(mt.block_count() == 1);
    CHECK(mt.candidate_count() == 1);
    CHECK(mt.tree_edges.empty());
    CHECK(mt.blocks[0].representative == 0);
}

TEST_CASE("immunized-targeted-immunized chain") {
    GameState g(3, 1, 1);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.set_immunized(0, true);
    g.set_immunized(2, true);
    const std::vector<PlayerId> comp{0, 1, 2};
    const MetaTree mt = meta_tree_construct(g, comp);
    CHECK(mt.candidate_count() == 2);
    CHECK(mt.bridge_count() == 1);
    CHECK(mt.tree_edges.size() == 2);
    CHECK(mt.blocks[static_cast<std::size_t>(mt.block_of(1))].kind == BlockKind::Bridge);
    CHECK(testing::check_meta_tree(g, comp, mt).empty());
}

TEST_CASE("a cycle through targeted regions collapses") {
    GameState g(4, 1, 1);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 0);
    g.set_immunized(0, true);
    g.set_immunized(2, true);
    const std::vector<PlayerId> comp{0, 1, 2, 3};
    const MetaTree mt = meta_tree_construct(g, comp);
    CHECK(mt.block_count() == 1);
    CHECK(mt.blocks[0].members == comp);
}

TEST_CASE("untargeted vulnerable connector merges its immunized neighbours") {
    // 1-2 is a size-2 region; {5,6,7} is the unique largest region.
    GameState g(8, 1, 1);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(5, 6);
    g.add_edge(6, 7);
    for (PlayerId v : {0, 3}) g.set_immunized(v, true);
    g.set_immunized(4, true);
    const std::vector<PlayerId> comp{0, 1, 2, 3, 4, 5, 6, 7};
    const MetaTree mt = meta_tree_construct(g, comp);
    CHECK(mt.block_of(0) == mt.block_of(4));
    CHECK(mt.blocks[static_cast<std::size_t>(mt.block_of(1))].kind == BlockKind::Candidate);
    CHECK(mt.blocks[static_cast<std::size_t>(mt.block_of(5))].kind == BlockKind::Candidate);
    CHECK(mt.block_count() == 1);
    CHECK(testing::check_meta_tree(g, comp, mt).empty());
}

TEST_CASE("components without immunized players are rejected") {
    GameState g(2, 1, 1);
    g.add_edge(0, 1);
    const std::vector<PlayerId> comp{0, 1};
    CHECK_THROWS_AS(meta_tree_construct(g, comp), NotMixedComponent);
}

TEST_CASE("random mixed components satisfy the block invariants") {
    std::mt19937_64 rng(17);
    for (int it = 0; it < 300; ++it) {
        const auto adv = it % 2 ? Adversary::RandomAttack : Adversary::MaximumCarnage;
        const int n = std::uniform_int_distribution<int>(1, 25)(rng);
        const GameState g = testing::random_mixed_component(rng, n, adv);
        std::vector<PlayerId> comp(static_cast<std::size_t>(n));
        std::iota(comp.begin(), comp.end(), 0);
        const MetaTree mt = meta_tree_construct(g, comp);
        INFO("iteration " << it);
        CHECK(testing::check_meta_tree(g, comp, mt) == "");
    }
}

TEST_CASE("random attack trees treat every vulnerable region as targeted") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 100; ++it) {
        const int n = std::uniform_int_distribution<int>(2, 20)(rng);
        const GameState g = testing::random_mixed_component(rng, n, Adversary::RandomAttack);
        std::vector<PlayerId> comp(static_cast<std::size_t>(n));
        std::iota(comp.begin(), comp.end(), 0);
        const MetaTree mt = meta_tree_construct(g, comp);
        for (const auto& b : mt.blocks) {
            if (b.kind == BlockKind::Candidate) CHECK(b.representative >= 0);
        }
        // Bridge blocks are exactly the separating vulnerable regions.
        CHECK(testing::check_meta_tree(g, comp, mt) == "");
    }
}
