// Copyright (c) reachsim contributors.
// SPDX-License-Identifier: Apache-2.0
#include "reachsim/check.hpp"

#include <algorithm>
#include <sstream>

namespace reachsim {

using oracle::SetFamily;
using oracle::SortedSet;
using oracle::sorted;

namespace {

Clause equal_families(std::string name, const SetFamily& expected, const SetFamily& actual)
{
    Clause c{std::move(name), expected == actual, false, {}};
    if (c.pass)
        return c;
    for (const auto& s : expected)
        if (!actual.contains(s))
            return c.witness = "missing " + format_set(s), c;
    for (const auto& s : actual)
        if (!expected.contains(s))
            return c.witness = "unexpected " + format_set(s), c;
    return c;
}

Clause included_family(std::string name, const SetFamily& smaller, const SetFamily& larger)
{
    Clause c{std::move(name), true, false, {}};
    for (const auto& s : smaller) {
        if (!larger.contains(s)) {
            c.pass = false;
            c.witness = "missing " + format_set(s);
            return c;
        }
    }
    c.strict = smaller.size() < larger.size();
    return c;
}

bool meets(const SortedSet& s, const StateSet& set)
{
    return std::any_of(s.begin(), s.end(), [&](StateId x) { return set.contains(x); });
}

SortedSet restrict_to(const SortedSet& s, const StateSet& set)
{
    SortedSet out;
    std::copy_if(s.begin(), s.end(), std::back_inserter(out), [&](StateId x) { return set.contains(x); });
    return out;
}

// Blocks of the partition induced by equal principals, each with its principal.
std::vector<std::pair<SortedSet, SortedSet>> principal_blocks(const Relation& r)
{
    std::vector<std::pair<SortedSet, SortedSet>> out;
    const Partition p = group_by_principal(r);
    for (std::size_t i = 0; i < p.size(); ++i) {
        const SortedSet b = sorted(p.block(i));
        out.emplace_back(b, sorted(r.principal(b.front())));
    }
    return out;
}

} // namespace

bool CheckReport::pass() const
{
    return std::all_of(clauses.begin(), clauses.end(), [](const Clause& c) { return c.pass; });
}

const Clause* CheckReport::find(const std::string& name) const
{
    for (const auto& c : clauses)
        if (c.name == name)
            return &c;
    return nullptr;
}

std::string CheckReport::describe() const
{
    std::ostringstream out;
    for (const auto& c : clauses) {
        out << c.name << ": " << (c.pass ? "pass" : "FAIL");
        if (c.pass && c.strict)
            out << " (strict)";
        if (!c.witness.empty())
            out << " " << c.witness;
        out << '\n';
    }
    return out.str();
}

std::string format_set(const SortedSet& s)
{
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < s.size(); ++i)
        out << (i ? "," : "") << s[i];
    out << '}';
    return out.str();
}

CheckReport check_reachable_preorder(const Relation& r, const StateSet& sigma, const oracle::GroundTruth& truth)
{
    CheckReport rep;
    SetFamily r_sigma;
    SetFamily blocks_meeting;
    for (const auto& [block, principal] : principal_blocks(r)) {
        if (meets(principal, sigma)) {
            r_sigma.insert(principal);
            blocks_meeting.insert(block);
        }
    }
    rep.clauses.push_back(equal_families("principals", truth.principals_intersecting, r_sigma));
    rep.clauses.push_back(included_family("blocks-covered", truth.reachable_blocks, blocks_meeting));
    return rep;
}

CheckReport check_reachable_partition(const Relation& r, const StateSet& sigma, const oracle::GroundTruth& truth)
{
    CheckReport rep;
    SetFamily sigma_principals;
    for (StateId s = 0; s < r.state_count(); ++s)
        if (sigma.contains(s))
            sigma_principals.insert(sorted(r.principal(s)));
    rep.clauses.push_back(equal_families("principals", truth.principals_generated, sigma_principals));

    SetFamily p_sigma;
    for (const auto& [block, principal] : principal_blocks(r))
        if (meets(block, sigma))
            p_sigma.insert(block);

    SetFamily sim_cut;
    SetFamily ours_cut;
    for (const auto& b : truth.reachable_blocks)
        sim_cut.insert(restrict_to(b, truth.reach));
    for (const auto& b : p_sigma)
        ours_cut.insert(restrict_to(b, truth.reach));
    rep.clauses.push_back(equal_families("blocks-on-reach", sim_cut, ours_cut));

    SetFamily enclosing;
    for (const auto& b : p_sigma) {
        StateSet acc(r.state_count());
        for (StateId x : b)
            acc |= truth.psim.block(truth.psim.block_of(x));
        enclosing.insert(sorted(acc));
    }
    rep.clauses.push_back(equal_families("blocks", truth.reachable_blocks, enclosing));
    return rep;
}

CheckReport check_reachable_twopr(const TwoPr& t, const StateSet& sigma, const oracle::GroundTruth& truth)
{
    const Relation r = twopr_to_relation(t);
    CheckReport rep;
    SetFamily r_sigma;
    for (const auto& [block, principal] : principal_blocks(r))
        if (meets(principal, sigma))
            r_sigma.insert(principal);
    rep.clauses.push_back(equal_families("principals", truth.principals_intersecting, r_sigma));

    const Partition induced = induced_partition(t);
    SetFamily covering;
    for (std::size_t i = 0; i < induced.size(); ++i) {
        const StateSet& b = induced.block(i);
        for (BlockHandle e : t.p.live()) {
            if (t.p.region(e).subset_of(b) && tau_union(t, e).intersects(sigma)) {
                covering.insert(sorted(b));
                break;
            }
        }
    }
    rep.clauses.push_back(included_family("blocks-covered", truth.reachable_blocks, covering));
    return rep;
}

} // namespace reachsim
