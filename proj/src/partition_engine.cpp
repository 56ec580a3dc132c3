// Copyright (c) reachsim contributors.
// SPDX-License-Identifier: Apache-2.0
#include "reachsim/partition_engine.hpp"

#include "engine_support.hpp"

#include <chrono>

namespace reachsim {

PartitionEngine::PartitionEngine(const Lts& lts, const Relation& r_init, const StateSet& sigma_init, EngineOptions opt)
    : lts_(lts), opt_(opt), r_init_(r_init), r_(r_init), sigma_(sigma_init), sigma_init_(sigma_init),
      u_bad_(lts.state_count()), reach_(post_star(lts)), chooser_(opt.strategy)
{
    if (r_init.state_count() != lts.state_count() || sigma_init.universe() != lts.state_count())
        throw InputError("relation or σ does not match the state count");
    auto rep = preorder_check(r_init);
    if (!rep.is_preorder())
        throw InputError("initial relation is not a preorder: " + rep.describe());
    if (!lts.initial().subset_of(sigma_init))
        throw InputError("initial σ must contain every initial state");
    if (!sigma_init.subset_of(reach_))
        throw InputError("initial σ contains an unreachable state");
}

std::unordered_set<StateSet, StateSetHash> PartitionEngine::sigma_principals() const
{
    std::unordered_set<StateSet, StateSetHash> out;
    sigma_.for_each([&](StateId s) { out.insert(r_.principal(s)); });
    return out;
}

StateSet PartitionEngine::compute_u() const
{
    const auto generated = sigma_principals();
    const StateSet post_sigma = lts_.post(sigma_);
    StateSet u(lts_.state_count());
    for (StateId x = 0; x < lts_.state_count(); ++x)
        if (!generated.contains(r_.principal(x)) && r_.principal(x).intersects(post_sigma))
            u.insert(x);
    return u;
}

std::vector<std::uint32_t> PartitionEngine::compute_v() const
{
    const auto generated = sigma_principals();
    std::vector<std::uint32_t> v;
    const auto& ts = lts_.transitions();
    std::vector<char> eligible(lts_.state_count());
    for (StateId x = 0; x < lts_.state_count(); ++x)
        eligible[x] = generated.contains(r_.principal(x)) ? 1 : 0;
    for (std::uint32_t i = 0; i < ts.size(); ++i) {
        const auto& t = ts[i];
        if (eligible[t.src] && !r_.principal(t.src).subset_of(lts_.pre(t.label, r_.principal(t.dst))))
            v.push_back(i);
    }
    return v;
}

std::optional<StateId> PartitionEngine::search_step(StateId x)
{
    const StateSet u = compute_u();
    if (!u.contains(x) || u_bad_.contains(x))
        throw ContractError("search_step on a state outside U ∖ U_bad");
    ++counters_.search_steps;
    const StateSet s_set = (r_.principal(x) & lts_.post(sigma_)) - sigma_;
    if (s_set.empty()) {
        ++counters_.idle_search_steps;
        u_bad_.insert(x);
        return std::nullopt;
    }
    StateId s = 0;
    if (chooser_.pick() == PickPolicy::CanonicalMin)
        s = *s_set.first();
    else
        s = *s_set.nth(chooser_.uniform(s_set.count()));
    sigma_.insert(s);
    sigma_order_.push_back(s);
    u_bad_.clear();
    return s;
}

void PartitionEngine::refine_step(std::uint32_t transition)
{
    const auto v = compute_v();
    if (!std::binary_search(v.begin(), v.end(), transition))
        throw ContractError("refine_step on a triple outside V");
    ++counters_.refine_steps;
    const auto& t = lts_.transitions()[transition];
    r_.principal(t.src) &= lts_.pre(t.label, r_.principal(t.dst));
    u_bad_.clear();
}

PartitionEngine::ExpandResult PartitionEngine::expand_step()
{
    const StateSet u = compute_u();
    if (u.empty() || u != u_bad_ || !compute_v().empty())
        throw ContractError("expand_step needs U = U_bad ≠ ∅ and V = ∅");
    ++counters_.expand_steps;
    const StateSet post_sigma = lts_.post(sigma_);
    if (post_sigma.subset_of(sigma_))
        return ExpandResult::Handoff;
    (post_sigma - sigma_).for_each([&](StateId s) { sigma_order_.push_back(s); });
    sigma_ |= post_sigma;
    u_bad_.clear();
    return ExpandResult::Grew;
}

void PartitionEngine::check_invariants(const StateSet& u) const
{
    detail::check_principal_bounds(r_.principals(), r_init_, opt_.reference);
    detail::check_sigma_bounds(sigma_, sigma_init_, reach_);
    if (!u_bad_.subset_of(u))
        throw InvariantViolation("U_bad is not contained in U");
}

ExplicitOutcome PartitionEngine::run()
{
    const auto start = std::chrono::steady_clock::now();
    Budget budget(opt_);
    ExplicitOutcome out;
    while (true) {
        if (auto stop = budget.exhausted(counters_.iterations)) {
            out.termination = *stop;
            break;
        }
        const StateSet u = compute_u();
        const auto v = compute_v();
        if (opt_.check_invariants)
            check_invariants(u);
        const StateSet searchable = u - u_bad_;
        const bool can_search = !searchable.empty();
        const bool can_refine = !v.empty();
        if (!can_search && !can_refine) {
            if (u.empty())
                break;
            // Here U = U_bad ≠ ∅ and V = ∅.
            ++counters_.iterations;
            if (expand_step() == ExpandResult::Handoff) {
                out.handed_off = true;
                out.u_bad_at_handoff = u_bad_;
                EngineOptions rest = opt_;
                rest.cap = opt_.cap - counters_.iterations;
                rest.strategy.seed = chooser_.rng()();
                auto tail = run_refalgo(lts_, r_, sigma_, rest);
                r_ = std::move(tail.relation);
                counters_.refine_steps += tail.counters.refine_steps;
                counters_.iterations += tail.counters.iterations;
                out.termination = tail.termination;
                break;
            }
            continue;
        }
        ++counters_.iterations;
        if (chooser_.prefer_search(can_search, can_refine)) {
            StateId x = 0;
            if (chooser_.pick() == PickPolicy::CanonicalMin)
                x = *searchable.first();
            else
                x = *searchable.nth(chooser_.uniform(searchable.count()));
            search_step(x);
        } else {
            const auto t = chooser_.pick() == PickPolicy::CanonicalMin ? v.front() : v[chooser_.uniform(v.size())];
            refine_step(t);
        }
    }
    out.relation = r_;
    out.sigma = sigma_;
    out.sigma_order = sigma_order_;
    out.counters = counters_;
    out.seconds = detail::seconds_since(start);
    if (out.u_bad_at_handoff.universe() == 0)
        out.u_bad_at_handoff = StateSet(lts_.state_count());
    return out;
}

ExplicitOutcome run_partition(const Lts& lts, const Relation& r_init, const StateSet& sigma_init,
                              const EngineOptions& opt)
{
    PartitionEngine engine(lts, r_init, sigma_init, opt);
    return engine.run();
}

} // namespace reachsim
