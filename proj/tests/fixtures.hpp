// Copyright (c) reachsim contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "reachsim/lts.hpp"
#include "reachsim/relation.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fixtures {

using namespace reachsim;

struct Case {
    Lts lts;
    Relation r_init;
};

inline Lts build(std::size_t n, const std::vector<std::pair<StateId, StateId>>& edges, std::vector<StateId> init)
{
    LtsBuilder b(n);
    b.label("a");
    for (auto [x, y] : edges)
        b.add(x, LabelId{0}, y);
    for (StateId i : init)
        b.add_initial(i);
    return b.build();
}

inline Relation classes(std::size_t n, const std::vector<std::vector<StateId>>& blocks)
{
    std::vector<std::pair<StateId, StateId>> pairs;
    for (const auto& b : blocks)
        for (StateId x : b)
            for (StateId y : b)
                pairs.emplace_back(x, y);
    return Relation::from_pairs(n, pairs);
}

// Unreachable 0 and a looping initial 1, everything related initially.
inline Case self_loop_pair()
{
    return {build(2, {{1, 1}}, {1}), Relation::universal(2)};
}

// Path 1 -> 2 -> ... -> n with a loop on n and n -> 0 when with_exit.
inline Case lasso_chain(std::size_t n, bool with_exit)
{
    std::vector<std::pair<StateId, StateId>> e;
    for (StateId x = 1; x < n; ++x)
        e.emplace_back(x, x + 1);
    e.emplace_back(static_cast<StateId>(n), static_cast<StateId>(n));
    if (with_exit)
        e.emplace_back(static_cast<StateId>(n), 0);
    return {build(n + 1, e, {1}), Relation::universal(n + 1)};
}

// 1 -> 2 with I = {1}. State 0 is a spare in its own class so ids match the drawing;
// R_i relates 2 to 1 but not conversely.
inline Case single_edge()
{
    return {build(3, {{1, 2}}, {1}), Relation::from_pairs(3, {{0, 0}, {1, 1}, {2, 1}, {2, 2}})};
}

// Loop on initial 1, isolated 2, spare 0 in its own class.
inline Case loop_and_isolated()
{
    return {build(3, {{1, 1}}, {1}), classes(3, {{0}, {1, 2}})};
}

// 0 -> 2, 1 -> 3, 1 -> 2, 3 -> 3 with I = {0}; R_i(0) = R_i(1) = {0,1},
// R_i(2) = {2}, R_i(3) = {2,3}.
inline Case handoff_system()
{
    return {build(4, {{0, 2}, {1, 3}, {1, 2}, {3, 3}}, {0}),
            Relation::from_pairs(4, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}, {3, 2}, {3, 3}})};
}

// States 0..m-1, every i ≥ 1 steps to 0, I = {1}: a truncation of the fan-in system.
inline Case fan_in(std::size_t m)
{
    std::vector<std::pair<StateId, StateId>> e;
    for (StateId i = 1; i < m; ++i)
        e.emplace_back(i, 0);
    return {build(m, e, {1}), Relation::universal(m)};
}

inline StateSet set_of(std::size_t n, std::initializer_list<StateId> xs)
{
    StateSet s(n);
    for (StateId x : xs)
        s.insert(x);
    return s;
}

} // namespace fixtures
