// Copyright (c) reachsim contributors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "reachsim/errors.hpp"
#include "reachsim/generate.hpp"
#include "reachsim/relation.hpp"
#include "reachsim/two_pr.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using namespace reachsim;
using fixtures::set_of;

namespace {

std::set<std::vector<StateId>> block_set(const BlockTable<StateSet>& t)
{
    std::set<std::vector<StateId>> out;
    for (BlockHandle h : t.live())
        out.insert(t.region(h).to_vector());
    return out;
}

std::set<std::vector<StateId>> image_of(const TwoPr& t, BlockHandle b)
{
    std::set<std::vector<StateId>> out;
    for (BlockHandle c : t.tau[b])
        out.insert(t.q.region(c).to_vector());
    return out;
}

BlockHandle p_block_of(const TwoPr& t, StateId x)
{
    for (BlockHandle h : t.p.live())
        if (t.p.region(h).contains(x))
            return h;
    FAIL("state in no block");
    return 0;
}

} // namespace

TEST_CASE("triple of the single-edge relation")
{
    // States 1 and 2 of the single-edge system with 1 ↦ 0 and 2 ↦ 1.
    const Relation r = Relation::from_pairs(2, {{0, 0}, {1, 0}, {1, 1}});
    const TwoPr t = induce_twopr(r);
    using B = std::set<std::vector<StateId>>;
    CHECK(block_set(t.p) == B{{0}, {1}});
    CHECK(block_set(t.q) == B{{0}, {1}});
    CHECK(image_of(t, p_block_of(t, 0)) == B{{0}});
    CHECK(image_of(t, p_block_of(t, 1)) == B{{0}, {1}});
    CHECK(preorder_check(r).is_preorder());
}

TEST_CASE("triple of identity and universal relations")
{
    const TwoPr id = induce_twopr(Relation::identity(4));
    CHECK(id.p.live_count() == 4);
    CHECK(id.q.live_count() == 4);
    for (BlockHandle b : id.p.live()) {
        REQUIRE(id.tau[b].size() == 1);
        CHECK(id.q.region(id.tau[b][0]) == id.p.region(b));
    }
    const TwoPr all = induce_twopr(Relation::universal(4));
    CHECK(all.p.live_count() == 1);
    CHECK(all.q.live_count() == 1);
    CHECK(all.tau[all.p.live()[0]].size() == 1);
}

TEST_CASE("empty τ encodes the empty relation")
{
    const Partition p = Partition::single_block(3);
    const TwoPr t = make_twopr(p, p, {{}});
    CHECK(twopr_to_relation(t) == Relation::empty(3));
    CHECK_FALSE(tau_extensive(t));
}

TEST_CASE("equal images give one induced block")
{
    const Partition p = Partition::discrete(3);
    const Partition q = Partition::single_block(3);
    const TwoPr t = make_twopr(p, q, {{0}, {0}, {0}});
    CHECK(induced_partition(t) == Partition::single_block(3));
}

TEST_CASE("round trip on random relations")
{
    std::mt19937_64 rng(1);
    for (int i = 0; i < 300; ++i) {
        const std::size_t n = 1 + rng() % 8;
        const Relation r = random_relation(n, 0.35, rng);
        const TwoPr t = induce_twopr(r);
        CHECK_FALSE(validate_twopr(t, n).has_value());
        CHECK(twopr_to_relation(t) == r);
    }
}

TEST_CASE("reflexive exactly when every block lies in its own image")
{
    std::mt19937_64 rng(2);
    int reflexive = 0;
    for (int i = 0; i < 300; ++i) {
        const std::size_t n = 1 + rng() % 6;
        const TwoPr t = random_twopr(n, 0.6, rng);
        const bool refl = preorder_check(twopr_to_relation(t)).reflexive;
        reflexive += refl ? 1 : 0;
        CHECK(refl == tau_extensive(t));
    }
    CHECK(reflexive > 0);
}

TEST_CASE("preorders induce equal P and Q")
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = 1 + rng() % 8;
        const TwoPr t = induce_twopr(random_preorder(n, 0.2, rng));
        CHECK(block_set(t.p) == block_set(t.q));
    }
}

TEST_CASE("induced partition is coarser than P and groups equal principals")
{
    std::mt19937_64 rng(4);
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = 1 + rng() % 6;
        const TwoPr t = random_twopr(n, 0.5, rng);
        const Partition ind = induced_partition(t);
        CHECK(live_partition(t.p, n).finer_than(ind));
        const Relation r = twopr_to_relation(t);
        for (StateId x = 0; x < n; ++x)
            for (StateId y = 0; y < n; ++y)
                CHECK(ind.same_block(x, y) == (r.principal(x) == r.principal(y)));
    }
}

TEST_CASE("meet of partitions")
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = 1 + rng() % 8;
        const Partition p = random_partition(n, 3, rng);
        const Partition q = random_partition(n, 3, rng);
        CHECK(meet(p, Partition::single_block(n)) == p);
        CHECK(meet(p, p) == p);
        const Partition m = meet(p, q);
        std::set<std::vector<StateId>> expect;
        for (std::size_t a = 0; a < p.size(); ++a)
            for (std::size_t b = 0; b < q.size(); ++b) {
                const StateSet c = p.block(a) & q.block(b);
                if (!c.empty())
                    expect.insert(c.to_vector());
            }
        std::set<std::vector<StateId>> got;
        for (std::size_t a = 0; a < m.size(); ++a)
            got.insert(m.block(a).to_vector());
        CHECK(got == expect);
    }
    CHECK_THROWS((void)meet(Partition::discrete(2), Partition::discrete(3)));
}

TEST_CASE("preorder report")
{
    const auto bad = preorder_check(Relation::from_pairs(2, {{0, 1}}));
    CHECK_FALSE(bad.reflexive);
    CHECK(bad.not_reflexive_at == StateId{0});
    const auto intrans = preorder_check(Relation::from_pairs(3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}}));
    CHECK(intrans.reflexive);
    CHECK_FALSE(intrans.transitive);
    std::mt19937_64 rng(6);
    for (int i = 0; i < 100; ++i)
        CHECK(preorder_check(random_preorder(1 + rng() % 8, 0.3, rng)).is_preorder());
}

TEST_CASE("partitions reject overlap and gaps, drop empty blocks")
{
    CHECK_THROWS_AS((void)Partition::from_blocks(3, {set_of(3, {0, 1}), set_of(3, {1, 2})}), ContractError);
    CHECK_THROWS_AS((void)Partition::from_blocks(3, {set_of(3, {0, 1})}), ContractError);
    CHECK(Partition::from_blocks(3, {set_of(3, {0, 1, 2}), StateSet(3)}).size() == 1);
}

TEST_CASE("retired handles are never reused")
{
    TwoPr t = induce_twopr(Relation::universal(3));
    const BlockHandle h = t.p.live()[0];
    t.p.retire(h);
    CHECK_THROWS_AS(t.p.retire(h), ContractError);
    const BlockHandle a = t.mint_p(set_of(3, {0}), {});
    CHECK(a != h);
}

TEST_CASE("preorder files")
{
    const auto dir = std::filesystem::temp_directory_path() / "reachsim_relation_test";
    std::filesystem::create_directories(dir);
    {
        std::ofstream(dir / "blocks.txt") << "0 2\n1\n";
        std::ofstream(dir / "pairs.txt") << "0 1\n1 2\n";
    }
    const Relation part = load_preorder("partition:" + (dir / "blocks.txt").string(), 4, false);
    CHECK(part.contains(0, 2));
    CHECK(part.contains(2, 0));
    CHECK_FALSE(part.contains(0, 1));
    CHECK(part.contains(3, 3));
    CHECK_THROWS_AS((void)load_preorder("pairs:" + (dir / "pairs.txt").string(), 3, false), InputError);
    const Relation closed = load_preorder("pairs:" + (dir / "pairs.txt").string(), 3, true);
    CHECK(closed.contains(0, 2));
    CHECK(preorder_check(closed).is_preorder());
    CHECK(load_preorder("universal", 3, false) == Relation::universal(3));
    CHECK_THROWS_AS((void)load_preorder("bogus", 3, false), InputError);
    std::filesystem::remove_all(dir);
}
