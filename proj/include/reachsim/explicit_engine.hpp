// Copyright (c) reachsim contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "reachsim/lts.hpp"
#include "reachsim/relation.hpp"
#include "reachsim/strategy.hpp"

#include <vector>

namespace reachsim {

struct ExplicitOutcome {
    Relation relation;
    StateSet sigma;
    /// States in the order they entered σ after the initial σ.
    std::vector<StateId> sigma_order;
    Counters counters;
    Termination termination = Termination::Converged;
    double seconds = 0.0;
    /// Partition engine: the run ended through the handoff to the refinement-only loop.
    bool handed_off = false;
    /// Partition engine: U_bad when the handoff happened.
    StateSet u_bad_at_handoff;

    [[nodiscard]] bool final() const { return termination == Termination::Converged; }
};

/// Greatest relation below r0 with R(x) ⊆ pre_a(R(x')) for every x →a x'.
/// r0 must be reflexive.
[[nodiscard]] Relation sim_fixpoint(const Lts& lts, const Relation& r0, const EngineOptions& opt = {});

/// Preorder-based reachable simulation: interleaves growing σ (Search) with
/// principal refinement (Refine) restricted to principals meeting σ.
/// r_init must be a preorder and sigma_init ⊆ post*(I).
[[nodiscard]] ExplicitOutcome run_explicit(const Lts& lts, const Relation& r_init, const StateSet& sigma_init,
                                           const EngineOptions& opt = {});

/// Refinement-only loop with σ = post*(I). r must be reflexive; transitivity is
/// not needed.
[[nodiscard]] ExplicitOutcome run_refalgo(const Lts& lts, const Relation& r, const EngineOptions& opt = {});

/// Same, with σ supplied by the caller; it must equal post*(I).
[[nodiscard]] ExplicitOutcome run_refalgo(const Lts& lts, const Relation& r, const StateSet& sigma,
                                          const EngineOptions& opt = {});

} // namespace reachsim
