// Copyright (c) reachsim contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "reachsim/generate.hpp"
#include "reachsim/lts.hpp"
#include "reachsim/relation.hpp"
#include "reachsim/strategy.hpp"

#include <array>
#include <random>
#include <string>

namespace corpus {

using namespace reachsim;

/// One seeded random instance of the property corpus.
struct Instance {
    std::uint64_t seed;
    Lts lts;
    Relation r_init;
    StateSet sigma_init;
    Strategy strategy;

    [[nodiscard]] std::string name() const { return "seed " + std::to_string(seed); }
};

inline constexpr std::array<double, 3> kDensities{0.05, 0.15, 0.3};

/// |Σ| ≤ max_states, |L| ≤ 2, a closure preorder, σ_i ∈ {∅, I} (always I when
/// initial_in_sigma), strategy drawn from all branch and pick policies.
inline Instance make(std::uint64_t seed, std::size_t max_states = 8, bool initial_in_sigma = false)
{
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 17);
    const std::size_t n = 1 + rng() % max_states;
    const std::size_t labels = 1 + rng() % 2;
    const double density = kDensities[rng() % kDensities.size()];
    Lts lts = gen_random(n, labels, density, rng());
    static constexpr std::array<double, 5> kPairDensity{0.0, 0.05, 0.15, 0.3, 1.0};
    Relation r = random_preorder(n, kPairDensity[rng() % kPairDensity.size()], rng);
    const bool with_i = initial_in_sigma || (rng() & 1U);
    StateSet sigma = with_i ? lts.initial() : lts.empty_set();
    Strategy s;
    s.branch = static_cast<BranchPolicy>(rng() % 4);
    s.pick = static_cast<PickPolicy>(rng() % 2);
    s.seed = rng();
    return {seed, std::move(lts), std::move(r), std::move(sigma), s};
}

/// Σ_x |R_i(x)| − |Σ|.
inline std::uint64_t refine_bound(const Relation& r)
{
    return r.pair_count() - r.state_count();
}

} // namespace corpus
