// Copyright (c) reachsim contributors.
// SPDX-License-Identifier: Apache-2.0
#include "reachsim/two_pr.hpp"

#include <map>
#include <unordered_map>

namespace reachsim {

TwoPr induce_twopr(const Relation& r)
{
    const std::size_t n = r.state_count();
    TwoPr t;
    const Partition p = group_by_principal(r);

    // y and y' share an inverse principal exactly when they lie in the same
    // principals R(B) for every P-block B, so the list of P-blocks whose
    // principal contains y is a complete signature for Q.
    std::vector<std::vector<std::uint32_t>> signature(n);
    for (std::size_t b = 0; b < p.size(); ++b) {
        const StateSet& principal = r.principal(*p.block(b).first());
        principal.for_each([&](StateId y) { signature[y].push_back(static_cast<std::uint32_t>(b)); });
    }
    std::map<std::vector<std::uint32_t>, std::size_t> sig_index;
    std::vector<std::size_t> q_class(n);
    for (StateId y = 0; y < n; ++y)
        q_class[y] = sig_index.try_emplace(signature[y], sig_index.size()).first->second;
    const Partition q = Partition::from_class_ids(q_class);

    std::vector<BlockHandle> q_handle(q.size());
    for (std::size_t c = 0; c < q.size(); ++c)
        q_handle[c] = t.q.mint(q.block(c));

    // Q-blocks are atoms for every principal, so C ⊆ R(B) iff C meets R(B).
    std::vector<std::size_t> stamp(q.size(), SIZE_MAX);
    for (std::size_t b = 0; b < p.size(); ++b) {
        std::vector<BlockHandle> image;
        r.principal(*p.block(b).first()).for_each([&](StateId y) {
            const std::size_t c = q.block_of(y);
            if (stamp[c] != b) {
                stamp[c] = b;
                image.push_back(q_handle[c]);
            }
        });
        t.mint_p(p.block(b), std::move(image));
    }
    return t;
}

StateSet tau_union(const TwoPr& t, BlockHandle b)
{
    StateSet out(t.p.region(b).universe());
    for (BlockHandle c : t.tau_of(b))
        out |= t.q.region(c);
    return out;
}

Relation twopr_to_relation(const TwoPr& t)
{
    if (t.p.live_count() == 0)
        return {};
    const std::size_t n = t.p.region(t.p.live().front()).universe();
    Relation r = Relation::empty(n);
    for (BlockHandle b : t.p.live()) {
        const StateSet u = tau_union(t, b);
        t.p.region(b).for_each([&](StateId x) { r.principal(x) = u; });
    }
    return r;
}

Partition induced_partition(const TwoPr& t)
{
    return group_by_principal(twopr_to_relation(t));
}

Partition live_partition(const BlockTable<StateSet>& table, std::size_t n)
{
    std::vector<StateSet> blocks;
    for (BlockHandle h : table.live())
        blocks.push_back(table.region(h));
    return Partition::from_blocks(n, std::move(blocks));
}

std::optional<std::string> validate_twopr(const TwoPr& t, std::size_t n)
{
    try {
        (void)live_partition(t.p, n);
        (void)live_partition(t.q, n);
    } catch (const ContractError& e) {
        return std::string("illegal partition: ") + e.what();
    }
    for (BlockHandle b : t.p.live()) {
        if (b >= t.tau.size())
            return "P handle " + std::to_string(b) + " has no τ entry";
        const auto& image = t.tau[b];
        for (std::size_t i = 0; i < image.size(); ++i) {
            if (!t.q.alive(image[i]))
                return "τ of P handle " + std::to_string(b) + " names dead Q handle " + std::to_string(image[i]);
            if (i > 0 && image[i - 1] >= image[i])
                return "τ of P handle " + std::to_string(b) + " is not sorted and duplicate-free";
        }
    }
    return std::nullopt;
}

bool tau_extensive(const TwoPr& t)
{
    for (BlockHandle b : t.p.live())
        if (!t.p.region(b).subset_of(tau_union(t, b)))
            return false;
    return true;
}

TwoPr make_twopr(const Partition& p, const Partition& q, const std::vector<std::vector<std::size_t>>& tau_by_index)
{
    if (tau_by_index.size() != p.size())
        throw ContractError("τ must have one entry per P block");
    TwoPr t;
    std::vector<BlockHandle> q_handle(q.size());
    for (std::size_t c = 0; c < q.size(); ++c)
        q_handle[c] = t.q.mint(q.block(c));
    for (std::size_t b = 0; b < p.size(); ++b) {
        std::vector<BlockHandle> image;
        for (auto c : tau_by_index[b]) {
            if (c >= q.size())
                throw ContractError("τ names a Q block out of range");
            image.push_back(q_handle[c]);
        }
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        t.mint_p(p.block(b), std::move(image));
    }
    return t;
}

} // namespace reachsim
