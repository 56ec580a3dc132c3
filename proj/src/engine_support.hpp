// Copyright (c) reachsim contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "reachsim/errors.hpp"
#include "reachsim/lts.hpp"
#include "reachsim/relation.hpp"

#include <chrono>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace reachsim::detail {

/// Transition indices (into Lts::transitions()) grouped by source and by target.
class TransitionIndex {
public:
    explicit TransitionIndex(const Lts& lts)
    {
        const auto n = lts.state_count();
        const auto& ts = lts.transitions();
        out_off_.assign(n + 1, 0);
        in_off_.assign(n + 1, 0);
        for (const auto& t : ts) {
            ++out_off_[t.src + 1];
            ++in_off_[t.dst + 1];
        }
        for (std::size_t x = 0; x < n; ++x) {
            out_off_[x + 1] += out_off_[x];
            in_off_[x + 1] += in_off_[x];
        }
        out_.resize(ts.size());
        in_.resize(ts.size());
        std::vector<std::size_t> op(out_off_.begin(), out_off_.end() - 1);
        std::vector<std::size_t> ip(in_off_.begin(), in_off_.end() - 1);
        for (std::uint32_t i = 0; i < ts.size(); ++i) {
            out_[op[ts[i].src]++] = i;
            in_[ip[ts[i].dst]++] = i;
        }
    }

    [[nodiscard]] std::span<const std::uint32_t> outgoing(StateId x) const
    {
        return {out_.data() + out_off_[x], out_.data() + out_off_[x + 1]};
    }
    [[nodiscard]] std::span<const std::uint32_t> incoming(StateId y) const
    {
        return {in_.data() + in_off_[y], in_.data() + in_off_[y + 1]};
    }

private:
    std::vector<std::size_t> out_off_, in_off_;
    std::vector<std::uint32_t> out_, in_;
};

/// pre_a(R(x')) memoized per (a, x'), keyed by a version counter of R(x').
class PreCache {
public:
    explicit PreCache(const Lts& lts)
        : lts_(&lts), n_(lts.state_count()), sets_(lts.label_count() * lts.state_count()),
          stamp_(lts.label_count() * lts.state_count(), kNever)
    {
    }

    const StateSet& get(LabelId a, StateId target, const StateSet& principal, std::uint64_t version)
    {
        const std::size_t slot = a * n_ + target;
        if (stamp_[slot] != version) {
            sets_[slot] = lts_->pre(a, principal);
            stamp_[slot] = version;
        }
        return sets_[slot];
    }

private:
    static constexpr std::uint64_t kNever = ~std::uint64_t{0};
    const Lts* lts_;
    std::size_t n_;
    std::vector<StateSet> sets_;
    std::vector<std::uint64_t> stamp_;
};

inline double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

/// First invariant (bounds on principals) and reflexivity.
inline void check_principal_bounds(const std::vector<StateSet>& r, const Relation& upper, const Relation* lower)
{
    for (StateId x = 0; x < r.size(); ++x) {
        if (!r[x].contains(x))
            throw InvariantViolation("principal of " + std::to_string(x) + " lost its own state");
        if (!r[x].subset_of(upper.principal(x)))
            throw InvariantViolation("principal of " + std::to_string(x) + " grew beyond the initial relation");
        if (lower && !lower->principal(x).subset_of(r[x]))
            throw InvariantViolation("principal of " + std::to_string(x) + " dropped a simulating state");
    }
}

inline void check_sigma_bounds(const StateSet& sigma, const StateSet& sigma_init, const StateSet& reach)
{
    if (!sigma_init.subset_of(sigma))
        throw InvariantViolation("σ lost an initial member");
    if (!sigma.subset_of(reach))
        throw InvariantViolation("σ contains an unreachable state");
}

} // namespace reachsim::detail
