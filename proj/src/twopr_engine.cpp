// Copyright (c) reachsim contributors.
// SPDX-License-Identifier: Apache-2.0
#include "reachsim/twopr_engine.hpp"

namespace reachsim {

TwoPrOutcome<FiniteAlgebra> run_twopr(const Lts& lts, const Relation& r_init, const StateSet& sigma_init,
                                      const EngineOptions& opt)
{
    if (r_init.state_count() != lts.state_count() || sigma_init.universe() != lts.state_count())
        throw InputError("relation or σ does not match the state count");
    auto rep = preorder_check(r_init);
    if (!rep.is_preorder())
        throw InputError("initial relation is not a preorder: " + rep.describe());
    if (!sigma_init.subset_of(post_star(lts)))
        throw InputError("initial σ contains an unreachable state");
    FiniteAlgebra alg(lts);
    TwoPrEngine<FiniteAlgebra> engine(alg, induce_twopr(r_init), sigma_init.to_vector(), opt);
    return engine.run();
}

TwoPrOutcome<IntervalAlgebra> run_twopr(const IntervalAlgebra& alg, const std::vector<IntervalRegion>& classes,
                                        const std::vector<std::int64_t>& sigma_init, const EngineOptions& opt)
{
    TwoPrEngine<IntervalAlgebra> engine(alg, twopr_of_equivalence(classes), sigma_init, opt);
    return engine.run();
}

} // namespace reachsim
