// Copyright (c) reachsim contributors.
// SPDX-License-Identifier: Apache-2.0
#include "reachsim/oracle.hpp"

#include "reachsim/errors.hpp"

#include <deque>

namespace reachsim::oracle {

SortedSet sorted(const StateSet& s)
{
    SortedSet out;
    for (StateId x = 0; x < s.universe(); ++x)
        if (s.contains(x))
            out.push_back(x);
    return out;
}

StateSet reachable(const Lts& lts)
{
    const std::size_t n = lts.state_count();
    std::vector<std::vector<StateId>> succ(n);
    for (const auto& t : lts.transitions())
        succ[t.src].push_back(t.dst);
    std::vector<bool> seen(n, false);
    std::deque<StateId> work;
    for (StateId i = 0; i < n; ++i) {
        if (lts.initial().contains(i)) {
            seen[i] = true;
            work.push_back(i);
        }
    }
    while (!work.empty()) {
        const StateId x = work.front();
        work.pop_front();
        for (StateId y : succ[x]) {
            if (!seen[y]) {
                seen[y] = true;
                work.push_back(y);
            }
        }
    }
    StateSet out(n);
    for (StateId x = 0; x < n; ++x)
        if (seen[x])
            out.insert(x);
    return out;
}

Relation simulation_pairwise(const Lts& lts, const Relation& r_init)
{
    const std::size_t n = lts.state_count();
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    for (StateId s = 0; s < n; ++s)
        for (StateId t = 0; t < n; ++t)
            rel[s][t] = r_init.contains(s, t);
    std::vector<std::vector<Transition>> out_of(n);
    for (const auto& t : lts.transitions())
        out_of[t.src].push_back(t);
    bool changed = true;
    while (changed) {
        changed = false;
        for (StateId s = 0; s < n; ++s) {
            for (StateId t = 0; t < n; ++t) {
                if (!rel[s][t])
                    continue;
                bool ok = true;
                for (const auto& m : out_of[s]) {
                    bool matched = false;
                    for (const auto& answer : out_of[t]) {
                        if (answer.label == m.label && rel[m.dst][answer.dst]) {
                            matched = true;
                            break;
                        }
                    }
                    if (!matched) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) {
                    rel[s][t] = false;
                    changed = true;
                }
            }
        }
    }
    Relation out = Relation::empty(n);
    for (StateId s = 0; s < n; ++s)
        for (StateId t = 0; t < n; ++t)
            if (rel[s][t])
                out.add(s, t);
    return out;
}

SetFamily reachable_principals(const Relation& r, const StateSet& reach, ReachMode mode)
{
    SetFamily out;
    const std::size_t n = r.state_count();
    for (StateId x = 0; x < n; ++x) {
        const SortedSet p = sorted(r.principal(x));
        bool keep = false;
        if (mode == ReachMode::Generated) {
            keep = reach.contains(x);
        } else {
            for (StateId y : p)
                keep = keep || reach.contains(y);
        }
        if (keep)
            out.insert(p);
    }
    return out;
}

SetFamily reachable_blocks(const Partition& p, const StateSet& reach)
{
    SetFamily out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const SortedSet b = sorted(p.block(i));
        for (StateId y : b) {
            if (reach.contains(y)) {
                out.insert(b);
                break;
            }
        }
    }
    return out;
}

Partition partition_from_preorder(const Relation& r)
{
    const std::size_t n = r.state_count();
    for (StateId x = 0; x < n; ++x) {
        if (!r.contains(x, x))
            throw InputError("not a preorder: not reflexive");
        for (StateId y = 0; y < n; ++y)
            for (StateId z = 0; z < n; ++z)
                if (r.contains(x, y) && r.contains(y, z) && !r.contains(x, z))
                    throw InputError("not a preorder: not transitive");
    }
    std::vector<std::size_t> cls(n, n);
    std::size_t next = 0;
    for (StateId x = 0; x < n; ++x) {
        if (cls[x] != n)
            continue;
        for (StateId y = x; y < n; ++y)
            if (r.contains(x, y) && r.contains(y, x))
                cls[y] = next;
        ++next;
    }
    return Partition::from_class_ids(cls);
}

GroundTruth ground_truth(const Lts& lts, const Relation& r_init)
{
    GroundTruth g{reachable(lts), simulation_pairwise(lts, r_init), Partition::discrete(0), {}, {}, {}};
    g.psim = partition_from_preorder(g.rsim);
    g.principals_intersecting = reachable_principals(g.rsim, g.reach, ReachMode::Intersects);
    g.principals_generated = reachable_principals(g.rsim, g.reach, ReachMode::Generated);
    g.reachable_blocks = reachable_blocks(g.psim, g.reach);
    return g;
}

} // namespace reachsim::oracle
