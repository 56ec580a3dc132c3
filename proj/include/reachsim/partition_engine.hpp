// Copyright (c) reachsim contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "reachsim/explicit_engine.hpp"
#include "reachsim/lts.hpp"
#include "reachsim/relation.hpp"
#include "reachsim/strategy.hpp"

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

namespace reachsim {

/// Precise reachable simulation partition. Principals count as reachable only
/// when generated by a state of σ; U_bad collects states whose Search cannot
/// grow σ, and Expand either adds post(σ) or hands off to run_refalgo once σ is
/// closed under post.
///
/// U and V are recomputed from their definitions at every iteration.
class PartitionEngine {
public:
    enum class ExpandResult { Grew, Handoff };

    /// r_init must be a preorder and I ⊆ sigma_init ⊆ post*(I).
    PartitionEngine(const Lts& lts, const Relation& r_init, const StateSet& sigma_init, EngineOptions opt = {});

    /// {x | no s ∈ σ has R(s) = R(x), and R(x) ∩ post(σ) ≠ ∅}.
    [[nodiscard]] StateSet compute_u() const;
    /// Transition indices (a, x, x') with R(x) = R(s) for some s ∈ σ and R(x) ⊄ pre_a(R(x')).
    [[nodiscard]] std::vector<std::uint32_t> compute_v() const;

    /// Search on x ∈ U ∖ U_bad. Returns the state added to σ, if any.
    std::optional<StateId> search_step(StateId x);
    /// Refine on a transition index in V.
    void refine_step(std::uint32_t transition);
    /// Expand branch; guard U = U_bad ≠ ∅ and V = ∅.
    ExpandResult expand_step();

    /// Runs to completion, including the handoff.
    ExplicitOutcome run();

    [[nodiscard]] const Relation& relation() const { return r_; }
    [[nodiscard]] const StateSet& sigma() const { return sigma_; }
    [[nodiscard]] const StateSet& u_bad() const { return u_bad_; }
    [[nodiscard]] const Counters& counters() const { return counters_; }

private:
    [[nodiscard]] std::unordered_set<StateSet, StateSetHash> sigma_principals() const;
    void check_invariants(const StateSet& u) const;

    const Lts& lts_;
    EngineOptions opt_;
    Relation r_init_;
    Relation r_;
    StateSet sigma_;
    StateSet sigma_init_;
    StateSet u_bad_;
    StateSet reach_;
    std::vector<StateId> sigma_order_;
    BranchChooser chooser_;
    Counters counters_;
};

[[nodiscard]] ExplicitOutcome run_partition(const Lts& lts, const Relation& r_init, const StateSet& sigma_init,
                                            const EngineOptions& opt = {});

} // namespace reachsim
