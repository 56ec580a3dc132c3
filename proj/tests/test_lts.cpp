// Copyright (c) reachsim contributors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "fixtures.hpp"
#include "reachsim/errors.hpp"
#include "reachsim/generate.hpp"
#include "reachsim/lts.hpp"

#include <sstream>

using namespace reachsim;
using fixtures::set_of;

TEST_CASE("smallest well-formed file")
{
    const Lts lts = parse_aut_string("des (0,1,2)\n(0,\"a\",1)\n");
    CHECK(lts.state_count() == 2);
    CHECK(lts.label_count() == 1);
    CHECK(lts.post(0, set_of(2, {0})) == set_of(2, {1}));
    CHECK(lts.initial() == set_of(2, {0}));
}

TEST_CASE("single edge renumbered from one")
{
    const Lts lts = parse_aut_string("des (0,1,2)\n(0,\"a\",1)\n");
    CHECK(lts.pre(0, set_of(2, {1})) == set_of(2, {0}));
    CHECK(post_star(lts) == set_of(2, {0, 1}));
}

TEST_CASE("chain without exit leaves state 0 unreachable")
{
    const Lts lts = parse_aut_string("des (1,5,6)\n(1,\"a\",2)\n(2,\"a\",3)\n(3,\"a\",4)\n(4,\"a\",5)\n(5,\"a\",5)\n");
    CHECK(lts.transition_count() == 5);
    CHECK(post_star(lts) == set_of(6, {1, 2, 3, 4, 5}));
    const Lts g1 = fixtures::lasso_chain(5, true).lts;
    CHECK(post_star(g1).count() == 6);
}

TEST_CASE("labels are interned in order of first appearance")
{
    const Lts lts = parse_aut_string("des (0,3,2)\n(0,\"tau\",1)\n(1,\"b\",0)\n(1,\"tau\",1)\n");
    CHECK(lts.labels() == std::vector<std::string>{"tau", "b"});
    CHECK(lts.find_label("b") == LabelId{1});
    CHECK_FALSE(lts.find_label("B").has_value());
}

TEST_CASE("duplicate transitions collapse")
{
    const Lts lts = parse_aut_string("des (0,2,2)\n(0,\"a\",1)\n(0,\"a\",1)\n");
    CHECK(lts.transition_count() == 1);
}

TEST_CASE("parse errors carry line numbers")
{
    auto line_of = [](const std::string& text) -> std::size_t {
        try {
            (void)parse_aut_string(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("nonsense\n") == 1);
    CHECK(line_of("des (0,2,2)\n(0,\"a\",1)\n(0 \"a\" 1)\n") == 3);
    CHECK(line_of("des (0,1,2)\n(0,\"a\",7)\n") == 2);
    CHECK_THROWS_AS((void)parse_aut_string("des (0,3,2)\n(0,\"a\",1)\n"), InputError);
    CHECK_THROWS_AS((void)parse_aut_string("des (5,0,2)\n"), InputError);
}

TEST_CASE("sidecar overrides the header's initial state")
{
    const Lts lts = parse_aut_string("des (0,1,3)\n(0,\"a\",1)\n");
    std::istringstream side("1\n2\n\n");
    const StateSet init = parse_init_sidecar(side, 3);
    CHECK(init == set_of(3, {1, 2}));
    CHECK(lts.with_initial(init).initial() == init);
    std::istringstream bad("4\n");
    CHECK_THROWS_AS((void)parse_init_sidecar(bad, 3), ParseError);
    std::istringstream roundtrip(serialize_init_sidecar(init));
    CHECK(parse_init_sidecar(roundtrip, 3) == init);
}

TEST_CASE("post and pre of the empty set")
{
    const Lts lts = fixtures::self_loop_pair().lts;
    CHECK(lts.post(0, lts.empty_set()).empty());
    CHECK(lts.pre(0, lts.empty_set()).empty());
    CHECK(lts.post(0, set_of(2, {1})) == set_of(2, {1}));
}

TEST_CASE("no initial states reach nothing")
{
    const Lts lts = fixtures::build(3, {{0, 1}}, {});
    CHECK(post_star(lts).empty());
}

TEST_CASE("post and pre agree with the transition list")
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Lts lts = gen_random(6, 2, 0.2, seed);
        std::mt19937_64 rng(seed);
        for (LabelId a = 0; a < lts.label_count(); ++a) {
            StateSet xs(6);
            for (StateId x = 0; x < 6; ++x)
                if (rng() & 1U)
                    xs.insert(x);
            StateSet post_def(6), pre_def(6);
            for (const auto& t : lts.transitions()) {
                if (t.label == a && xs.contains(t.src))
                    post_def.insert(t.dst);
                if (t.label == a && xs.contains(t.dst))
                    pre_def.insert(t.src);
            }
            CHECK(lts.post(a, xs) == post_def);
            CHECK(lts.pre(a, xs) == pre_def);
            xs.for_each([&](StateId x) {
                if (lts.has_successor(a, x))
                    CHECK(lts.pre(a, lts.post(a, xs)).contains(x));
            });
            CHECK(lts.pre(a, lts.full_set()).subset_of(lts.full_set()));
            for (StateId x = 0; x < 6; ++x)
                for (StateId y : lts.successors(a, x)) {
                    auto preds = lts.predecessors(a, y);
                    CHECK(std::find(preds.begin(), preds.end(), x) != preds.end());
                }
        }
    }
}

TEST_CASE("serialize then parse is the identity")
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Lts lts = gen_random(7, 2, 0.3, seed);
        CHECK(parse_aut_string(serialize_aut(lts)) == lts);
        const Lts u = unroll(lts, 2);
        CHECK(parse_aut_string(serialize_aut(u)) == u);
    }
}

TEST_CASE("reachability is monotone in the initial states")
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Lts lts = gen_random(8, 2, 0.1, seed);
        StateSet small = lts.initial();
        StateSet large = small;
        large.insert(static_cast<StateId>(seed % 8));
        CHECK(post_star(lts, small).subset_of(post_star(lts, large)));
    }
}
