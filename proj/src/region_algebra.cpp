// Copyright (c) reachsim contributors.
// SPDX-License-Identifier: Apache-2.0
#include "reachsim/region_algebra.hpp"

#include <algorithm>

namespace reachsim {

std::optional<StateId> FiniteAlgebra::witness_successor(StateId s, const StateSet& r) const
{
    std::optional<StateId> best;
    for (LabelId a = 0; a < lts_->label_count(); ++a) {
        for (StateId y : lts_->successors(a, s)) {
            if (r.contains(y)) {
                if (!best || y < *best)
                    best = y;
                break; // rows are sorted
            }
        }
    }
    return best;
}

std::optional<std::int64_t> IntervalAlgebra::witness_successor(std::int64_t s, const IntervalRegion& r) const
{
    std::optional<std::int64_t> best;
    for (LabelId a = 0; a < sys_->labels.size(); ++a) {
        for (auto y : sys_->successors(s, a)) {
            if (r.contains(y) && (!best || y < *best))
                best = y;
        }
    }
    return best;
}

SymbolicSystem fan_in_to_zero_system()
{
    SymbolicSystem sys;
    sys.name = "fan-in-to-zero";
    sys.labels = {"a"};
    sys.universe = IntervalRegion::at_least(0);
    sys.initial = {1};
    sys.pre.emplace_back([](const IntervalRegion& r) {
        return r.contains(0) ? IntervalRegion::at_least(1) : IntervalRegion{};
    });
    sys.successors = [](std::int64_t s, LabelId) -> std::vector<std::int64_t> {
        if (s >= 1)
            return {0};
        return {};
    };
    return sys;
}

SymbolicSystem negative_chain_system()
{
    SymbolicSystem sys;
    sys.name = "negative-chain";
    sys.labels = {"a"};
    sys.universe = IntervalRegion::at_most(1);
    sys.initial = {0};
    sys.pre.emplace_back([](const IntervalRegion& r) {
        // n → n+1 for n ≤ -2, so pre of the negative part is the part shifted down,
        // restricted to targets in (-∞, -1].
        IntervalRegion chain = r.intersect(IntervalRegion::at_most(-1)).shift(-1);
        if (r.contains(1))
            chain = chain.unite(IntervalRegion::point(0));
        return chain;
    });
    sys.successors = [](std::int64_t s, LabelId) -> std::vector<std::int64_t> {
        if (s <= -2)
            return {s + 1};
        if (s == 0)
            return {1};
        return {};
    };
    return sys;
}

IntervalRegion windowed_concrete_pre(const SymbolicSystem& sys, LabelId a, const IntervalRegion& r, std::int64_t lo,
                                     std::int64_t hi)
{
    std::vector<IntervalRegion::Interval> pts;
    for (std::int64_t x = lo; x <= hi; ++x) {
        if (!sys.universe.contains(x))
            continue;
        auto succ = sys.successors(x, a);
        if (std::any_of(succ.begin(), succ.end(), [&](std::int64_t y) { return r.contains(y); }))
            pts.push_back({x, x});
    }
    return IntervalRegion::from_intervals(std::move(pts));
}

} // namespace reachsim
