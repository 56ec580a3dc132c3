// Copyright (c) reachsim contributors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "fixtures.hpp"
#include "reachsim/check.hpp"
#include "reachsim/errors.hpp"
#include "reachsim/explicit_engine.hpp"
#include "reachsim/oracle.hpp"
#include "reachsim/twopr_engine.hpp"

using namespace reachsim;
using fixtures::set_of;

namespace {

oracle::SetFamily principals_meeting(const Relation& r, const StateSet& sigma)
{
    oracle::SetFamily out;
    for (const auto& p : r.principals())
        if (p.intersects(sigma))
            out.insert(oracle::sorted(p));
    return out;
}

StateSet as_set(std::size_t n, const std::vector<StateId>& xs)
{
    StateSet s(n);
    for (StateId x : xs)
        s.insert(x);
    return s;
}

std::vector<IntervalRegion> live_regions(const BlockTable<IntervalRegion>& t)
{
    std::vector<IntervalRegion> out;
    for (BlockHandle h : t.live())
        out.push_back(t.region(h));
    return out;
}

} // namespace

TEST_CASE("fan-in interval system converges after one refine")
{
    const SymbolicSystem sys = fan_in_to_zero_system();
    IntervalAlgebra alg(sys);
    EngineOptions opt;
    opt.check_invariants = true;
    TwoPrEngine<IntervalAlgebra> e(alg, twopr_of_equivalence(std::vector{sys.universe}), {}, opt);
    std::vector<std::int64_t> window;
    for (std::int64_t x = 0; x <= 30; ++x)
        window.push_back(x);
    e.set_invariant_probe(window);
    const auto out = e.run();
    REQUIRE(out.final());
    CHECK(out.counters.iterations <= 10);
    CHECK(out.counters.refine_steps == 1);

    const auto zero = IntervalRegion::point(0);
    const auto rest = IntervalRegion::at_least(1);
    const auto p = live_regions(out.twopr.p);
    const auto q = live_regions(out.twopr.q);
    REQUIRE(p.size() == 2);
    REQUIRE(q.size() == 2);
    CHECK((p == std::vector{rest, zero} || p == std::vector{zero, rest}));
    CHECK((q == std::vector{rest, zero} || q == std::vector{zero, rest}));
    for (BlockHandle b : out.twopr.p.live()) {
        IntervalRegion u;
        for (BlockHandle c : out.twopr.tau[b])
            u = u.unite(out.twopr.q.region(c));
        if (out.twopr.p.region(b) == zero) {
            CHECK(out.twopr.tau[b].size() == 2);
            CHECK(u == sys.universe);
        } else {
            CHECK(out.twopr.tau[b].size() == 1);
            CHECK(u == rest);
        }
    }
}

TEST_CASE("negative chain reaches its two states without refining")
{
    const SymbolicSystem sys = negative_chain_system();
    IntervalAlgebra alg(sys);
    EngineOptions opt;
    opt.check_invariants = true;
    TwoPrEngine<IntervalAlgebra> e(
        alg, twopr_of_equivalence(std::vector{IntervalRegion::at_most(-1), IntervalRegion::point(0), IntervalRegion::point(1)}),
        {}, opt);
    std::vector<std::int64_t> window;
    for (std::int64_t x = -20; x <= 1; ++x)
        window.push_back(x);
    e.set_invariant_probe(window);
    const auto out = e.run();
    REQUIRE(out.final());
    CHECK(out.sigma == std::vector<std::int64_t>{0, 1});
    CHECK(out.counters.search_steps == 2);
    CHECK(out.counters.refine_steps == 0);
}

TEST_CASE("negative chain with 0 and 1 initially equivalent stops after one search")
{
    const SymbolicSystem sys = negative_chain_system();
    IntervalAlgebra alg(sys);
    const auto out =
        run_twopr(alg, {IntervalRegion::at_most(-1), IntervalRegion::range(0, 1)}, {});
    REQUIRE(out.final());
    CHECK(out.sigma == std::vector<std::int64_t>{0});
}

TEST_CASE("single search on a block holding an initial state")
{
    auto c = fixtures::single_edge();
    FiniteAlgebra alg(c.lts);
    TwoPrEngine<FiniteAlgebra> e(alg, induce_twopr(c.r_init), {});
    const auto u = e.literal_u();
    // The blocks of 1 and 2 both have principals holding the initial state.
    REQUIRE(u.size() == 2);
    CHECK(e.search_step(u.front()) == 1);
    CHECK(e.literal_u().empty());
    CHECK(e.literal_v().empty());
}

TEST_CASE("stable single edge yields the explicit answer")
{
    auto c = fixtures::single_edge();
    const auto out = run_twopr(c.lts, c.r_init, c.lts.empty_set());
    CHECK(out.sigma == std::vector<StateId>{1});
    CHECK(twopr_to_relation(out.twopr) == c.r_init);
    const auto ex = run_explicit(c.lts, c.r_init, c.lts.empty_set());
    CHECK(principals_meeting(twopr_to_relation(out.twopr), as_set(3, out.sigma)) ==
          principals_meeting(ex.relation, ex.sigma));
}

TEST_CASE("guards are enforced")
{
    auto c = fixtures::handoff_system();
    FiniteAlgebra alg(c.lts);
    TwoPrEngine<FiniteAlgebra> e(alg, induce_twopr(c.r_init), {0});
    for (BlockHandle b : e.twopr().p.live())
        if (!e.in_u(b))
            CHECK_THROWS_AS((void)e.search_step(b), ContractError);
    CHECK_THROWS_AS(e.refine_step({0, 0, 0}), ContractError);
}

TEST_CASE("non-preorder start is rejected")
{
    auto c = fixtures::single_edge();
    CHECK_THROWS_AS((void)run_twopr(c.lts, Relation::from_pairs(3, {{0, 1}}), c.lts.empty_set()), InputError);
}

TEST_CASE("refine splits P only when part of B has no move into C")
{
    // 0 -> 1 and a looping 2: the block {0,1} meets pre({0,1}) only in 0, so it splits.
    auto lts2 = fixtures::build(3, {{0, 1}, {2, 2}}, {0});
    FiniteAlgebra alg2(lts2);
    TwoPrEngine<FiniteAlgebra> e2(alg2, induce_twopr(fixtures::classes(3, {{0, 1}, {2}})), {0});
    auto v2 = e2.literal_v();
    REQUIRE(!v2.empty());
    const auto before = e2.twopr().p.live_count();
    e2.refine_step(v2.front());
    CHECK(e2.twopr().p.live_count() == before + 1);
    CHECK(e2.counters().p_splits == 1);

    // Source inside pre(C): 0 -> 2 and 1 -> 2, where {0,1} is also related to 2.
    auto lts3 = fixtures::build(3, {{0, 2}, {1, 2}}, {0});
    FiniteAlgebra alg3(lts3);
    const Relation r3 = Relation::from_pairs(3, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {0, 2}, {1, 2}, {2, 2}});
    TwoPrEngine<FiniteAlgebra> e3(alg3, induce_twopr(r3), {0});
    auto v3 = e3.literal_v();
    REQUIRE(v3.size() == 1);
    e3.refine_step(v3.front());
    CHECK(e3.counters().p_splits == 0);
    CHECK(e3.twopr().p.live_count() == 2);
    CHECK(e3.twopr().p.alive(v3.front().source));
}

TEST_CASE("each refine matches the explicit refinement on the part of B with a move into C")
{
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const auto inst = corpus::make(seed, 7);
        FiniteAlgebra alg(inst.lts);
        TwoPrEngine<FiniteAlgebra> e(alg, induce_twopr(inst.r_init), inst.sigma_init.to_vector());
        for (int step = 0; step < 200; ++step) {
            const auto v = e.literal_v();
            if (v.empty()) {
                const auto u = e.literal_u();
                if (u.empty())
                    break;
                e.search_step(u.front());
                continue;
            }
            const auto tr = v[static_cast<std::size_t>(step) % v.size()];
            const Relation before = twopr_to_relation(e.twopr());
            const StateSet source = e.twopr().p.region(tr.source) & inst.lts.pre(tr.label, e.twopr().p.region(tr.target));
            const StateSet target_principal = tau_union(e.twopr(), tr.target);
            Relation expected = before;
            source.for_each([&](StateId x) { expected.principal(x) &= inst.lts.pre(tr.label, target_principal); });
            e.refine_step(tr);
            const Relation after = twopr_to_relation(e.twopr());
            REQUIRE_MESSAGE(after == expected, inst.name());
            REQUIRE(after.pair_count() < before.pair_count());
            REQUIRE_FALSE(validate_twopr(e.twopr(), inst.lts.state_count()).has_value());
            REQUIRE(tau_extensive(e.twopr()));
        }
    }
}

TEST_CASE("random corpus satisfies the symbolic clauses and agrees with the explicit engine")
{
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const auto inst = corpus::make(seed);
        const auto truth = oracle::ground_truth(inst.lts, inst.r_init);
        EngineOptions opt;
        opt.strategy = inst.strategy;
        opt.check_invariants = true;
        opt.reference = &truth.rsim;
        const auto out = run_twopr(inst.lts, inst.r_init, inst.sigma_init, opt);
        REQUIRE(out.final());
        const StateSet sigma = as_set(inst.lts.state_count(), out.sigma);
        const auto rep = check_reachable_twopr(out.twopr, sigma, truth);
        CHECK_MESSAGE(rep.pass(), inst.name() << "\n" << rep.describe());
        CHECK(out.counters.search_steps <= inst.lts.state_count());
        CHECK(out.counters.refine_steps <= corpus::refine_bound(inst.r_init));

        const auto ex = run_explicit(inst.lts, inst.r_init, inst.sigma_init);
        CHECK(principals_meeting(twopr_to_relation(out.twopr), sigma) == principals_meeting(ex.relation, ex.sigma));
    }
}

TEST_CASE("search adds only reachable witnesses")
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto inst = corpus::make(seed);
        EngineOptions opt;
        opt.strategy = inst.strategy;
        const auto out = run_twopr(inst.lts, inst.r_init, inst.sigma_init, opt);
        StateSet seen = inst.sigma_init;
        for (StateId s : out.sigma_order) {
            CHECK((inst.lts.initial().contains(s) || inst.lts.post(seen).contains(s)));
            seen.insert(s);
        }
    }
}

TEST_CASE("split states differ in some recorded principal")
{
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const auto inst = corpus::make(seed, 6);
        EngineOptions opt;
        opt.strategy = inst.strategy;
        opt.record_trace = true;
        const auto out = run_twopr(inst.lts, inst.r_init, inst.sigma_init, opt);
        REQUIRE(!out.trace.empty());
        const auto& first = out.trace.front();
        const auto& last = out.trace.back();
        const std::size_t n = inst.lts.state_count();
        for (StateId x = 0; x < n; ++x) {
            for (StateId y = 0; y < n; ++y) {
                if (first.p.same_block(x, y) && !last.p.same_block(x, y)) {
                    bool differ = false;
                    for (const auto& snap : out.trace)
                        differ = differ || snap.relation.principal(x) != snap.relation.principal(y);
                    CHECK(differ);
                }
                if (first.q.same_block(x, y) && !last.q.same_block(x, y)) {
                    bool differ = false;
                    for (const auto& snap : out.trace) {
                        const Relation inv = snap.relation.inverse();
                        differ = differ || inv.principal(x) != inv.principal(y);
                    }
                    CHECK(differ);
                }
            }
        }
    }
}
