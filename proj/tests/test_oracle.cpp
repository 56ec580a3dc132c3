// Copyright (c) reachsim contributors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "fixtures.hpp"
#include "reachsim/errors.hpp"
#include "reachsim/explicit_engine.hpp"
#include "reachsim/oracle.hpp"

using namespace reachsim;
using oracle::SetFamily;

TEST_CASE("pairwise fixpoint on the looping initial state")
{
    auto c = fixtures::self_loop_pair();
    const Relation rsim = oracle::simulation_pairwise(c.lts, c.r_init);
    CHECK(rsim == Relation::from_pairs(2, {{0, 0}, {0, 1}, {1, 1}}));
}

TEST_CASE("pairwise fixpoint keeps the initial relation without transitions")
{
    LtsBuilder b(4);
    b.label("a");
    const Lts lts = b.build();
    std::mt19937_64 rng(3);
    const Relation r = random_preorder(4, 0.3, rng);
    CHECK(oracle::simulation_pairwise(lts, r) == r);
}

TEST_CASE("reachable principals under both readings")
{
    auto c = fixtures::self_loop_pair();
    const auto g = oracle::ground_truth(c.lts, c.r_init);
    CHECK(g.principals_intersecting == SetFamily{{0, 1}, {1}});
    CHECK(g.principals_generated == SetFamily{{1}});
}

TEST_CASE("reachable principals with everything reachable")
{
    auto lts = fixtures::build(3, {{0, 1}, {1, 2}}, {0});
    const Relation r = Relation::universal(3);
    const auto reach = oracle::reachable(lts);
    CHECK(reach.count() == 3);
    CHECK(oracle::reachable_principals(r, reach, oracle::ReachMode::Intersects) ==
          oracle::reachable_principals(r, reach, oracle::ReachMode::Generated));
}

TEST_CASE("reachable blocks depend on reaching the exit state")
{
    auto g1 = fixtures::lasso_chain(5, true);
    auto g2 = fixtures::lasso_chain(5, false);
    const auto t1 = oracle::ground_truth(g1.lts, g1.r_init);
    const auto t2 = oracle::ground_truth(g2.lts, g2.r_init);
    CHECK(t1.psim == t2.psim);
    CHECK(t1.reachable_blocks == SetFamily{{0}, {1, 2, 3, 4, 5}});
    CHECK(t2.reachable_blocks == SetFamily{{1, 2, 3, 4, 5}});
}

TEST_CASE("reachable blocks of an unreachable system")
{
    const Partition p = Partition::discrete(3);
    CHECK(oracle::reachable_blocks(p, StateSet(3)).empty());
}

TEST_CASE("partition from preorder")
{
    auto c = fixtures::self_loop_pair();
    const Relation rsim = oracle::simulation_pairwise(c.lts, c.r_init);
    CHECK(oracle::partition_from_preorder(rsim) == Partition::discrete(2));
    CHECK(oracle::partition_from_preorder(Relation::universal(5)) == Partition::single_block(5));
    CHECK_THROWS_AS((void)oracle::partition_from_preorder(Relation::from_pairs(2, {{0, 1}})), InputError);
}

TEST_CASE("partition from random preorders is the symmetric kernel")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        const std::size_t n = 1 + rng() % 7;
        const Relation r = random_preorder(n, 0.2, rng);
        const Partition p = oracle::partition_from_preorder(r);
        for (StateId x = 0; x < n; ++x)
            for (StateId y = 0; y < n; ++y)
                CHECK(p.same_block(x, y) == (r.contains(x, y) && r.contains(y, x)));
    }
}

TEST_CASE("pairwise fixpoint agrees with the principal-based fixpoint")
{
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const auto inst = corpus::make(seed, 7);
        const Relation a = oracle::simulation_pairwise(inst.lts, inst.r_init);
        const Relation b = sim_fixpoint(inst.lts, inst.r_init);
        REQUIRE_MESSAGE(a == b, inst.name());
        CHECK(preorder_check(a).is_preorder());
        const auto reach = oracle::reachable(inst.lts);
        const auto eq1 = oracle::reachable_principals(a, reach, oracle::ReachMode::Intersects);
        for (const auto& s : oracle::reachable_principals(a, reach, oracle::ReachMode::Generated))
            CHECK(eq1.contains(s));
    }
}

TEST_CASE("breadth-first reachability matches the engine worklist")
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto inst = corpus::make(seed);
        CHECK(oracle::reachable(inst.lts) == post_star(inst.lts));
    }
}
