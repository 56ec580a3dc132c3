// Copyright (c) reachsim contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "reachsim/errors.hpp"
#include "reachsim/relation.hpp"
#include "reachsim/state_set.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace reachsim {

using BlockHandle = std::uint32_t;

/// Blocks addressed by stable handles. Splitting retires the parent handle and
/// mints fresh ones, so a handle never changes meaning while it is alive.
template <class Region>
class BlockTable {
public:
    BlockHandle mint(Region r)
    {
        const auto h = static_cast<BlockHandle>(regions_.size());
        regions_.push_back(std::move(r));
        alive_.push_back(true);
        ++live_;
        return h;
    }

    void retire(BlockHandle h)
    {
        if (!alive(h))
            throw ContractError("retiring a dead block handle");
        alive_[h] = false;
        --live_;
    }

    [[nodiscard]] bool alive(BlockHandle h) const { return h < alive_.size() && alive_[h]; }
    [[nodiscard]] const Region& region(BlockHandle h) const { return regions_[h]; }
    /// Handles ever minted; valid handle values are [0, handle_count()).
    [[nodiscard]] std::size_t handle_count() const { return regions_.size(); }
    [[nodiscard]] std::size_t live_count() const { return live_; }

    [[nodiscard]] std::vector<BlockHandle> live() const
    {
        std::vector<BlockHandle> out;
        out.reserve(live_);
        for (BlockHandle h = 0; h < alive_.size(); ++h)
            if (alive_[h])
                out.push_back(h);
        return out;
    }

private:
    std::vector<Region> regions_;
    std::vector<bool> alive_;
    std::size_t live_ = 0;
};

/// ⟨P, τ, Q⟩: partitions P and Q plus τ mapping each P-block to a set of Q-blocks.
/// τ is stored sparse, as a sorted handle list per P handle.
template <class Region>
struct BasicTwoPr {
    BlockTable<Region> p;
    BlockTable<Region> q;
    std::vector<std::vector<BlockHandle>> tau;

    [[nodiscard]] const std::vector<BlockHandle>& tau_of(BlockHandle b) const { return tau[b]; }

    BlockHandle mint_p(Region r, std::vector<BlockHandle> image)
    {
        auto h = p.mint(std::move(r));
        if (tau.size() <= h)
            tau.resize(h + 1);
        std::sort(image.begin(), image.end());
        tau[h] = std::move(image);
        return h;
    }
};

using TwoPr = BasicTwoPr<StateSet>;

/// ⟨P_R, τ_R, Q_R⟩: P groups equal principals, Q groups equal inverse principals,
/// τ(B) = {C ∈ Q | C ⊆ R(B)}. Handles are minted in order of block minimum.
[[nodiscard]] TwoPr induce_twopr(const Relation& r);

/// ∪τ(B) for a P handle.
[[nodiscard]] StateSet tau_union(const TwoPr& t, BlockHandle b);

/// R⟨P,τ,Q⟩(x) = ∪τ(P(x)).
[[nodiscard]] Relation twopr_to_relation(const TwoPr& t);

/// Groups states by equal ∪τ(P(x)); always coarser than P.
[[nodiscard]] Partition induced_partition(const TwoPr& t);

[[nodiscard]] Partition live_partition(const BlockTable<StateSet>& table, std::size_t n);

/// Empty when ⟨P,τ,Q⟩ is well formed: P and Q partition [0,n), every τ entry is a
/// live Q handle, lists are sorted and duplicate-free. Otherwise a description.
[[nodiscard]] std::optional<std::string> validate_twopr(const TwoPr& t, std::size_t n);

/// ∀B ∈ P. B ⊆ ∪τ(B).
[[nodiscard]] bool tau_extensive(const TwoPr& t);

/// Builds a triple from explicit partitions and a τ given by block indices into
/// the partitions' canonical block order.
[[nodiscard]] TwoPr make_twopr(const Partition& p, const Partition& q,
                               const std::vector<std::vector<std::size_t>>& tau_by_index);

} // namespace reachsim
