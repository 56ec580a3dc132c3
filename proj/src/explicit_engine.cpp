// Copyright (c) reachsim contributors.
// SPDX-License-Identifier: Apache-2.0
#include "reachsim/explicit_engine.hpp"

#include "engine_support.hpp"

#include <chrono>

namespace reachsim {

namespace {

enum class Mode {
    Reachable, // Search and Refine; Refine only on principals meeting σ
    Everything, // Refine only, every principal is eligible
    Closed,     // Refine only, σ is already post*(I)
};

class ExplicitCore {
public:
    ExplicitCore(const Lts& lts, const Relation& r, StateSet sigma, Mode mode, const EngineOptions& opt)
        : lts_(lts), mode_(mode), opt_(opt), r_init_(r), r_(r.principals()), version_(lts.state_count(), 0),
          sigma_(std::move(sigma)), sigma_init_(sigma_), frontier_(lts.initial() | lts.post(sigma_)),
          marked_(lts.state_count(), 0), index_(lts), pre_(lts), chooser_(opt.strategy),
          u_pool_(lts.state_count(), opt.strategy.pick, chooser_),
          v_pool_(lts.transition_count(), opt.strategy.pick, chooser_)
    {
        const auto n = static_cast<StateId>(lts.state_count());
        for (StateId x = 0; x < n; ++x) {
            if (mode_ == Mode::Everything || r_[x].intersects(sigma_))
                mark(x);
            else if (mode_ == Mode::Reachable && r_[x].intersects(frontier_))
                u_pool_.push(x);
        }
        if (opt_.check_invariants)
            reach_ = post_star(lts);
    }

    ExplicitOutcome run()
    {
        const auto start = std::chrono::steady_clock::now();
        Budget budget(opt_);
        ExplicitOutcome out;
        while (true) {
            if (auto stop = budget.exhausted(counters_.iterations)) {
                out.termination = *stop;
                break;
            }
            if (opt_.check_invariants)
                check_invariants();
            std::optional<std::uint32_t> u;
            if (mode_ == Mode::Reachable)
                u = u_pool_.peek([&](std::uint32_t x) { return in_u(x); });
            auto v = v_pool_.peek([&](std::uint32_t t) { return in_v(t); });
            if (opt_.check_invariants)
                check_pool_completeness(u.has_value(), v.has_value());
            if (!u && !v)
                break;
            ++counters_.iterations;
            if (chooser_.prefer_search(u.has_value(), v.has_value())) {
                u_pool_.erase(*u);
                search(*u);
            } else {
                v_pool_.erase(*v);
                refine(*v);
            }
        }
        out.relation = Relation(std::move(r_));
        out.sigma = std::move(sigma_);
        out.sigma_order = std::move(sigma_order_);
        out.counters = counters_;
        out.seconds = detail::seconds_since(start);
        return out;
    }

private:
    // R(x) ∩ σ = ∅ and R(x) ∩ (I ∪ post(σ)) ≠ ∅.
    bool in_u(StateId x) const { return !marked_[x] && r_[x].intersects(frontier_); }

    // R(x) meets σ, x →a x', and R(x) ⊄ pre_a(R(x')).
    bool in_v(std::uint32_t t)
    {
        const auto& tr = lts_.transitions()[t];
        if (!marked_[tr.src])
            return false;
        return !r_[tr.src].subset_of(pre_of(tr.label, tr.dst));
    }

    const StateSet& pre_of(LabelId a, StateId target) { return pre_.get(a, target, r_[target], version_[target]); }

    void mark(StateId x)
    {
        marked_[x] = 1;
        for (auto t : index_.outgoing(x))
            v_pool_.push(t);
    }

    void search(StateId x)
    {
        ++counters_.search_steps;
        const StateSet choices = r_[x] & frontier_;
        StateId s = 0;
        if (chooser_.pick() == PickPolicy::CanonicalMin)
            s = *choices.first();
        else
            s = *choices.nth(chooser_.uniform(choices.count()));
        sigma_.insert(s);
        sigma_order_.push_back(s);

        const auto n = static_cast<StateId>(lts_.state_count());
        for (StateId w = 0; w < n; ++w)
            if (!marked_[w] && r_[w].contains(s))
                mark(w);
        for (LabelId a = 0; a < lts_.label_count(); ++a) {
            for (StateId f : lts_.successors(a, s)) {
                if (frontier_.contains(f))
                    continue;
                frontier_.insert(f);
                for (StateId w = 0; w < n; ++w)
                    if (!marked_[w] && r_[w].contains(f))
                        u_pool_.push(w);
            }
        }
    }

    void refine(std::uint32_t t)
    {
        ++counters_.refine_steps;
        const auto& tr = lts_.transitions()[t];
        const StateId x = tr.src;
        r_[x] &= pre_of(tr.label, tr.dst);
        ++version_[x];
        for (auto in : index_.incoming(x))
            if (marked_[lts_.transitions()[in].src])
                v_pool_.push(in);
        if (mode_ != Mode::Everything && !r_[x].intersects(sigma_)) {
            marked_[x] = 0;
            if (mode_ == Mode::Reachable)
                u_pool_.push(x);
        }
    }

    void check_invariants() const
    {
        detail::check_principal_bounds(r_, r_init_, opt_.reference);
        if (mode_ != Mode::Everything)
            detail::check_sigma_bounds(sigma_, sigma_init_, reach_);
    }

    // The pools are lazy; this compares their verdict with the literal set definitions.
    void check_pool_completeness(bool u_found, bool v_found)
    {
        const auto n = static_cast<StateId>(lts_.state_count());
        bool u_literal = false;
        if (mode_ == Mode::Reachable) {
            const StateSet f = lts_.initial() | lts_.post(sigma_);
            for (StateId x = 0; x < n && !u_literal; ++x)
                u_literal = !r_[x].intersects(sigma_) && r_[x].intersects(f);
        }
        bool v_literal = false;
        for (const auto& tr : lts_.transitions()) {
            const bool eligible = mode_ == Mode::Everything || r_[tr.src].intersects(sigma_);
            if (eligible && !r_[tr.src].subset_of(lts_.pre(tr.label, r_[tr.dst]))) {
                v_literal = true;
                break;
            }
        }
        if (u_literal != u_found)
            throw InvariantViolation("incremental U disagrees with its definition");
        if (v_literal != v_found)
            throw InvariantViolation("incremental V disagrees with its definition");
    }

    const Lts& lts_;
    Mode mode_;
    EngineOptions opt_;
    const Relation& r_init_;
    std::vector<StateSet> r_;
    std::vector<std::uint64_t> version_;
    StateSet sigma_;
    StateSet sigma_init_;
    StateSet frontier_;
    StateSet reach_;
    std::vector<char> marked_;
    std::vector<StateId> sigma_order_;
    detail::TransitionIndex index_;
    detail::PreCache pre_;
    BranchChooser chooser_;
    DenseCandidatePool u_pool_;
    DenseCandidatePool v_pool_;
    Counters counters_;
};

void require_size(const Lts& lts, const Relation& r)
{
    if (r.state_count() != lts.state_count())
        throw InputError("relation has " + std::to_string(r.state_count()) + " states, system has " +
                         std::to_string(lts.state_count()));
}

void require_reflexive(const Relation& r)
{
    for (StateId x = 0; x < r.state_count(); ++x)
        if (!r.contains(x, x))
            throw InputError("initial relation is not reflexive at state " + std::to_string(x));
}

} // namespace

Relation sim_fixpoint(const Lts& lts, const Relation& r0, const EngineOptions& opt)
{
    require_size(lts, r0);
    require_reflexive(r0);
    ExplicitCore core(lts, r0, lts.empty_set(), Mode::Everything, opt);
    auto out = core.run();
    if (!out.final())
        throw InputError("iteration cap reached before the fixpoint");
    return std::move(out.relation);
}

ExplicitOutcome run_explicit(const Lts& lts, const Relation& r_init, const StateSet& sigma_init,
                             const EngineOptions& opt)
{
    require_size(lts, r_init);
    if (sigma_init.universe() != lts.state_count())
        throw InputError("initial σ does not match the state count");
    auto rep = preorder_check(r_init);
    if (!rep.is_preorder())
        throw InputError("initial relation is not a preorder: " + rep.describe());
    if (!sigma_init.subset_of(post_star(lts)))
        throw InputError("initial σ contains an unreachable state");
    ExplicitCore core(lts, r_init, sigma_init, Mode::Reachable, opt);
    return core.run();
}

ExplicitOutcome run_refalgo(const Lts& lts, const Relation& r, const EngineOptions& opt)
{
    return run_refalgo(lts, r, post_star(lts), opt);
}

ExplicitOutcome run_refalgo(const Lts& lts, const Relation& r, const StateSet& sigma, const EngineOptions& opt)
{
    require_size(lts, r);
    require_reflexive(r);
    if (sigma != post_star(lts))
        throw InputError("σ must be the full reachable set");
    ExplicitCore core(lts, r, sigma, Mode::Closed, opt);
    return core.run();
}

} // namespace reachsim
