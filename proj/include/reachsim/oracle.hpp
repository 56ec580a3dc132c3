// Copyright (c) reachsim contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "reachsim/lts.hpp"
#include "reachsim/relation.hpp"

#include <set>
#include <vector>

namespace reachsim::oracle {

/// A set of states as a sorted id list; sets of these compare as sets of sets.
using SortedSet = std::vector<StateId>;
using SetFamily = std::set<SortedSet>;

enum class ReachMode {
    Intersects, // principals meeting the reachable set
    Generated,  // principals of reachable states
};

/// post*(I) by breadth-first search over the raw transition list.
[[nodiscard]] StateSet reachable(const Lts& lts);

/// Greatest fixpoint of F(R) = {(s,t) ∈ R | ∀ s →a s'. ∃ t →a t'. (s',t') ∈ R}
/// from r_init, computed on a pair matrix. Pair (x, y) means y simulates x.
[[nodiscard]] Relation simulation_pairwise(const Lts& lts, const Relation& r_init);

[[nodiscard]] SetFamily reachable_principals(const Relation& r, const StateSet& reach, ReachMode mode);

/// Blocks meeting the reachable set.
[[nodiscard]] SetFamily reachable_blocks(const Partition& p, const StateSet& reach);

/// Classes of r ∩ r⁻¹; throws InputError unless r is a preorder.
[[nodiscard]] Partition partition_from_preorder(const Relation& r);

struct GroundTruth {
    StateSet reach;
    Relation rsim;
    Partition psim;
    SetFamily principals_intersecting;
    SetFamily principals_generated;
    SetFamily reachable_blocks;
};

[[nodiscard]] GroundTruth ground_truth(const Lts& lts, const Relation& r_init);

[[nodiscard]] SortedSet sorted(const StateSet& s);

} // namespace reachsim::oracle
