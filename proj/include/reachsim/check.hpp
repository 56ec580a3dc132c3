// Copyright (c) reachsim contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "reachsim/oracle.hpp"
#include "reachsim/relation.hpp"
#include "reachsim/two_pr.hpp"

#include <string>
#include <vector>

namespace reachsim {

/// One checked equality or inclusion. On failure, witness names a set on the
/// wrong side. For inclusions, strict records that the sides differ.
struct Clause {
    std::string name;
    bool pass = true;
    bool strict = false;
    std::string witness;
};

struct CheckReport {
    std::vector<Clause> clauses;

    [[nodiscard]] bool pass() const;
    [[nodiscard]] const Clause* find(const std::string& name) const;
    [[nodiscard]] std::string describe() const;
};

/// Reachable principals and block overapproximation of a preorder-based run:
/// "principals": R_sim principals meeting post*(I) equal R principals meeting σ;
/// "blocks-covered": reachable R_sim blocks are among the P-blocks whose principal meets σ.
[[nodiscard]] CheckReport check_reachable_preorder(const Relation& r, const StateSet& sigma,
                                                   const oracle::GroundTruth& truth);

/// Precise partition run, where P^σ are the P-blocks meeting σ:
/// "principals": R_sim principals of reachable states equal R principals of σ;
/// "blocks-on-reach": reachable R_sim blocks and P^σ agree after intersecting with post*(I);
/// "blocks": reachable R_sim blocks equal the R_sim blocks enclosing P^σ.
[[nodiscard]] CheckReport check_reachable_partition(const Relation& r, const StateSet& sigma,
                                                    const oracle::GroundTruth& truth);

/// Symbolic run on a finite system:
/// "principals" as for the preorder check, on the encoded relation;
/// "blocks-covered": reachable R_sim blocks are among the induced blocks containing a
/// P-block whose principal meets σ.
[[nodiscard]] CheckReport check_reachable_twopr(const TwoPr& t, const StateSet& sigma,
                                                const oracle::GroundTruth& truth);

[[nodiscard]] std::string format_set(const oracle::SortedSet& s);

} // namespace reachsim
