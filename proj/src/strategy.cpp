// Copyright (c) reachsim contributors.
// SPDX-License-Identifier: Apache-2.0
#include "reachsim/strategy.hpp"

#include "reachsim/errors.hpp"

namespace reachsim {

std::string to_string(BranchPolicy b)
{
    switch (b) {
    case BranchPolicy::SearchFirst: return "search-first";
    case BranchPolicy::RefineFirst: return "refine-first";
    case BranchPolicy::Alternating: return "alternating";
    case BranchPolicy::Random: return "random";
    }
    return "?";
}

std::string to_string(PickPolicy p)
{
    return p == PickPolicy::CanonicalMin ? "min" : "random";
}

std::string to_string(Termination t)
{
    switch (t) {
    case Termination::Converged: return "converged";
    case Termination::CapReached: return "cap";
    case Termination::TimedOut: return "timeout";
    }
    return "?";
}

std::optional<BranchPolicy> parse_branch_policy(std::string_view s)
{
    for (auto b : {BranchPolicy::SearchFirst, BranchPolicy::RefineFirst, BranchPolicy::Alternating, BranchPolicy::Random})
        if (to_string(b) == s)
            return b;
    return std::nullopt;
}

std::optional<PickPolicy> parse_pick_policy(std::string_view s)
{
    if (s == "min")
        return PickPolicy::CanonicalMin;
    if (s == "random")
        return PickPolicy::Random;
    return std::nullopt;
}

bool BranchChooser::prefer_search(bool search_enabled, bool refine_enabled)
{
    if (!search_enabled && !refine_enabled)
        throw ContractError("no branch enabled");
    if (!refine_enabled)
        return true;
    if (!search_enabled)
        return false;
    switch (strategy_.branch) {
    case BranchPolicy::SearchFirst: return true;
    case BranchPolicy::RefineFirst: return false;
    case BranchPolicy::Alternating:
        last_was_search_ = !last_was_search_;
        return last_was_search_;
    case BranchPolicy::Random: return (rng_() & 1U) != 0;
    }
    return true;
}

} // namespace reachsim
