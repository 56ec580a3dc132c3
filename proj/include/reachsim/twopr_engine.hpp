// Copyright (c) reachsim contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "reachsim/errors.hpp"
#include "reachsim/lts.hpp"
#include "reachsim/region_algebra.hpp"
#include "reachsim/relation.hpp"
#include "reachsim/strategy.hpp"
#include "reachsim/two_pr.hpp"

#include <algorithm>
#include <chrono>
#include <compare>
#include <optional>
#include <set>
#include <string>
#include <type_traits>
#include <vector>

namespace reachsim {

/// One recorded loop head of a finite 2PR run.
struct TwoPrSnapshot {
    Partition p;
    Partition q;
    Relation relation;
};

template <RegionAlgebra A>
struct TwoPrOutcome {
    BasicTwoPr<typename A::Region> twopr;
    /// σ in ascending order.
    std::vector<typename A::State> sigma;
    /// States in the order they entered σ after the initial σ.
    std::vector<typename A::State> sigma_order;
    Counters counters;
    Termination termination = Termination::Converged;
    double seconds = 0.0;
    std::vector<TwoPrSnapshot> trace;

    [[nodiscard]] bool final() const { return termination == Termination::Converged; }
};

/// ⟨a, B, C⟩ over P handles.
struct BlockTriple {
    LabelId label;
    BlockHandle source;
    BlockHandle target;
    friend auto operator<=>(const BlockTriple&, const BlockTriple&) = default;
};

struct BlockTripleHash {
    std::size_t operator()(const BlockTriple& t) const
    {
        std::uint64_t h = (std::uint64_t{t.source} << 32) ^ t.target;
        h ^= std::uint64_t{t.label} * 0x9e3779b97f4a7c15ULL;
        return static_cast<std::size_t>(h ^ (h >> 29));
    }
};

/// The 2PR-based reachable simulation loop over any region algebra.
///
/// The relation is kept as ⟨P, τ, Q⟩; Search adds single concrete witnesses to
/// σ, Refine stabilizes a pair of P-blocks and splits Q-blocks straddling the
/// refining set. U and V are candidate pools validated against their
/// definitions when drawn.
template <RegionAlgebra A>
class TwoPrEngine {
public:
    using Region = typename A::Region;
    using State = typename A::State;
    static constexpr bool kEnumerable = EnumerableAlgebra<A>;

    TwoPrEngine(const A& alg, BasicTwoPr<Region> init, const std::vector<State>& sigma_init, EngineOptions opt = {})
        : alg_(alg), opt_(opt), t_(std::move(init)), init_(t_), sigma_region_(alg.empty_region()),
          chooser_(opt.strategy), u_pool_(opt.strategy.pick, chooser_), v_pool_(opt.strategy.pick, chooser_)
    {
        if (auto bad = structural_error())
            throw InputError("initial triple is malformed: " + *bad);
        for (const State& s : sigma_init)
            add_to_sigma_set(s);
        sigma_init_ = sigma_;
        if constexpr (kEnumerable) {
            frontier_ = alg_.empty_region();
            for (const State& i : alg_.initial())
                frontier_ = alg_.unite(frontier_, alg_.singleton(i));
            frontier_ = alg_.unite(frontier_, alg_.post_all(sigma_region_));
            block_of_.assign(alg_.state_count(), 0);
        }
        for (BlockHandle b : t_.p.live()) {
            ensure_slot(b);
            principal_[b] = union_of_tau(b);
            if constexpr (kEnumerable)
                set_block_of(b);
        }
        for (BlockHandle b : t_.p.live()) {
            if (region_intersects(alg_, principal_[b], sigma_region_))
                mark(b);
            else
                u_pool_.push(b);
        }
        if constexpr (kEnumerable) {
            for (State x = 0; x < alg_.state_count(); ++x)
                probe_.push_back(x);
        }
    }

    /// States at which the bounds invariant is probed when invariant checks are on.
    /// Finite instances probe every state by default.
    void set_invariant_probe(std::vector<State> states) { probe_ = std::move(states); }

    [[nodiscard]] const BasicTwoPr<Region>& twopr() const { return t_; }
    [[nodiscard]] const Region& principal(BlockHandle b) const { return principal_[b]; }
    [[nodiscard]] std::vector<State> sigma() const { return {sigma_.begin(), sigma_.end()}; }
    [[nodiscard]] const Counters& counters() const { return counters_; }

    /// ∪τ(B) ∩ σ = ∅ and ∪τ(B) ∩ (I ∪ post(σ)) ≠ ∅.
    [[nodiscard]] bool in_u(BlockHandle b) const
    {
        return t_.p.alive(b) && !marked_[b] && meets_frontier(principal_[b]);
    }

    /// ∪τ(B) ∩ σ ≠ ∅, B ∩ pre_a(C) ≠ ∅ and ∪τ(B) ⊄ pre_a(∪τ(C)).
    [[nodiscard]] bool in_v(const BlockTriple& tr)
    {
        if (!t_.p.alive(tr.source) || !t_.p.alive(tr.target) || !marked_[tr.source])
            return false;
        if (!region_intersects(alg_, t_.p.region(tr.source), pre_block(tr.label, tr.target)))
            return false;
        return !region_subset(alg_, principal_[tr.source], pre_principal(tr.label, tr.target));
    }

    /// U from its definition, by scanning every live block.
    [[nodiscard]] std::vector<BlockHandle> literal_u() const
    {
        std::vector<BlockHandle> out;
        for (BlockHandle b : t_.p.live()) {
            const Region p = union_of_tau(b);
            if (!region_intersects(alg_, p, sigma_region_) && meets_frontier(p))
                out.push_back(b);
        }
        return out;
    }

    /// V from its definition, by scanning every pair of live blocks.
    [[nodiscard]] std::vector<BlockTriple> literal_v() const
    {
        std::vector<BlockTriple> out;
        const auto live = t_.p.live();
        for (LabelId a = 0; a < alg_.label_count(); ++a) {
            for (BlockHandle b : live) {
                const Region pb = union_of_tau(b);
                if (!region_intersects(alg_, pb, sigma_region_))
                    continue;
                for (BlockHandle c : live) {
                    if (!region_intersects(alg_, t_.p.region(b), alg_.pre(a, t_.p.region(c))))
                        continue;
                    if (!region_subset(alg_, pb, alg_.pre(a, union_of_tau(c))))
                        out.push_back({a, b, c});
                }
            }
        }
        return out;
    }

    /// Search on B ∈ U; returns the witness added to σ.
    State search_step(BlockHandle b)
    {
        if (!in_u(b))
            throw ContractError("search_step on a block outside U");
        ++counters_.search_steps;
        const State s = choose_witness(principal_[b]);
        add_to_sigma(s);
        return s;
    }

    /// Refine on ⟨a, B, C⟩ ∈ V.
    void refine_step(const BlockTriple& tr)
    {
        if (!in_v(tr))
            throw ContractError("refine_step on a triple outside V");
        ++counters_.refine_steps;
        const Region s_set = pre_principal(tr.label, tr.target);
        const Region pre_c = pre_block(tr.label, tr.target);
        const Region old_principal = principal_[tr.source];
        const bool was_marked = marked_[tr.source] != 0;

        const Region b1 = alg_.intersect(t_.p.region(tr.source), pre_c);
        const Region b2 = alg_.subtract(t_.p.region(tr.source), pre_c);
        BlockHandle refined = tr.source;
        std::optional<BlockHandle> rest;
        if (!alg_.is_empty(b2)) {
            ++counters_.p_splits;
            const auto image = t_.tau[tr.source];
            t_.p.retire(tr.source);
            t_.tau[tr.source].clear();
            refined = t_.mint_p(b1, image);
            rest = t_.mint_p(b2, image);
            for (BlockHandle h : {refined, *rest}) {
                ensure_slot(h);
                principal_[h] = old_principal;
                marked_[h] = was_marked ? 1 : 0;
                if constexpr (kEnumerable)
                    set_block_of(h);
            }
        }

        // Split every Q-block of τ(B') that straddles S, in all τ images.
        const auto image = t_.tau[refined];
        for (BlockHandle x : image) {
            const Region& xr = t_.q.region(x);
            const Region inside = alg_.intersect(xr, s_set);
            if (alg_.is_empty(inside))
                continue;
            const Region outside = alg_.subtract(xr, s_set);
            if (alg_.is_empty(outside))
                continue;
            ++counters_.q_splits;
            t_.q.retire(x);
            const BlockHandle x1 = t_.q.mint(inside);
            const BlockHandle x2 = t_.q.mint(outside);
            for (BlockHandle a : t_.p.live()) {
                auto& img = t_.tau[a];
                auto it = std::lower_bound(img.begin(), img.end(), x);
                if (it == img.end() || *it != x)
                    continue;
                img.erase(it);
                // Fresh handles exceed every live one, so appending keeps the list sorted.
                img.push_back(x1);
                img.push_back(x2);
            }
        }
        auto& img = t_.tau[refined];
        std::erase_if(img, [&](BlockHandle e) { return !region_subset(alg_, t_.q.region(e), s_set); });
        principal_[refined] = alg_.intersect(old_principal, s_set);
        ++version_[refined];

        if (!region_intersects(alg_, principal_[refined], sigma_region_)) {
            marked_[refined] = 0;
            u_pool_.push(refined);
        }
        if (rest) {
            if (marked_[refined])
                push_sources(refined);
            if (marked_[*rest])
                push_sources(*rest);
            else
                u_pool_.push(*rest);
            push_targets(*rest);
        }
        push_targets(refined);
    }

    TwoPrOutcome<A> run()
    {
        const auto start = std::chrono::steady_clock::now();
        Budget budget(opt_);
        TwoPrOutcome<A> out;
        if (opt_.record_trace)
            record(out.trace);
        while (true) {
            if (auto stop = budget.exhausted(counters_.iterations)) {
                out.termination = *stop;
                break;
            }
            if (opt_.check_invariants)
                check_invariants();
            auto u = u_pool_.peek([&](BlockHandle b) { return in_u(b); });
            auto v = v_pool_.peek([&](const BlockTriple& tr) { return in_v(tr); });
            if (opt_.check_invariants)
                check_pool_completeness(u.has_value(), v.has_value());
            if (!u && !v)
                break;
            ++counters_.iterations;
            if (chooser_.prefer_search(u.has_value(), v.has_value())) {
                u_pool_.erase(*u);
                search_step(*u);
            } else {
                v_pool_.erase(*v);
                refine_step(*v);
            }
            if (opt_.record_trace)
                record(out.trace);
        }
        out.twopr = t_;
        out.sigma = sigma();
        out.sigma_order = sigma_order_;
        out.counters = counters_;
        out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return out;
    }

    /// Checks the loop invariants now; throws InvariantViolation.
    void check_invariants() const
    {
        if (auto bad = structural_error())
            throw InvariantViolation(*bad);
        for (BlockHandle b : t_.p.live()) {
            const Region u = union_of_tau(b);
            if (!region_subset(alg_, u, principal_[b]) || !region_subset(alg_, principal_[b], u))
                throw InvariantViolation("cached principal of block " + std::to_string(b) + " is stale");
            if (!region_subset(alg_, t_.p.region(b), u))
                throw InvariantViolation("block " + std::to_string(b) + " is not inside its own principal");
            if (marked_[b] != (region_intersects(alg_, u, sigma_region_) ? 1 : 0))
                throw InvariantViolation("reachability mark of block " + std::to_string(b) + " is stale");
        }
        for (const State& x : probe_) {
            const Region now = principal_at(t_, x);
            if (!region_subset(alg_, now, principal_at(init_, x)))
                throw InvariantViolation("principal grew beyond the initial relation");
            if constexpr (kEnumerable) {
                if (opt_.reference && !opt_.reference->principal(x).subset_of(now))
                    throw InvariantViolation("principal of " + std::to_string(x) + " dropped a simulating state");
            }
        }
        for (const State& s : sigma_init_)
            if (!sigma_.contains(s))
                throw InvariantViolation("σ lost an initial member");
    }

private:
    struct PreSlot {
        std::optional<Region> region;
        std::uint64_t version = 0;
    };

    [[nodiscard]] std::optional<std::string> structural_error() const
    {
        for (BlockHandle b : t_.p.live()) {
            if (b >= t_.tau.size())
                return "P handle " + std::to_string(b) + " has no τ entry";
            if (alg_.is_empty(t_.p.region(b)))
                return "empty P block";
            const auto& img = t_.tau[b];
            for (std::size_t i = 0; i < img.size(); ++i) {
                if (!t_.q.alive(img[i]))
                    return "τ names a dead Q handle";
                if (i > 0 && img[i - 1] >= img[i])
                    return "τ list not sorted";
            }
        }
        for (const auto* table : {&t_.p, &t_.q}) {
            Region seen = alg_.empty_region();
            for (BlockHandle h : table->live()) {
                if (alg_.is_empty(table->region(h)))
                    return "empty block";
                if (region_intersects(alg_, seen, table->region(h)))
                    return "overlapping blocks";
                seen = alg_.unite(seen, table->region(h));
            }
            if constexpr (requires { alg_.full_region(); }) {
                if (!region_subset(alg_, alg_.full_region(), seen))
                    return "blocks do not cover the state space";
            }
        }
        return std::nullopt;
    }

    void ensure_slot(BlockHandle h)
    {
        if (principal_.size() <= h) {
            principal_.resize(h + 1, alg_.empty_region());
            marked_.resize(h + 1, 0);
            version_.resize(h + 1, 0);
            for (auto& per_label : pre_block_)
                per_label.resize(h + 1);
            for (auto& per_label : pre_principal_)
                per_label.resize(h + 1);
        }
        if (pre_block_.empty()) {
            pre_block_.resize(alg_.label_count(), std::vector<std::optional<Region>>(h + 1));
            pre_principal_.resize(alg_.label_count(), std::vector<PreSlot>(h + 1));
        }
    }

    Region union_of_tau(BlockHandle b) const
    {
        Region u = alg_.empty_region();
        for (BlockHandle c : t_.tau[b])
            u = alg_.unite(u, t_.q.region(c));
        return u;
    }

    static Region principal_at(const BasicTwoPr<Region>& t, const State& x, const A& alg)
    {
        for (BlockHandle b : t.p.live()) {
            if (alg.contains(t.p.region(b), x)) {
                Region u = alg.empty_region();
                for (BlockHandle c : t.tau[b])
                    u = alg.unite(u, t.q.region(c));
                return u;
            }
        }
        return alg.empty_region();
    }
    Region principal_at(const BasicTwoPr<Region>& t, const State& x) const { return principal_at(t, x, alg_); }

    const Region& pre_block(LabelId a, BlockHandle c)
    {
        auto& slot = pre_block_[a][c];
        if (!slot)
            slot = alg_.pre(a, t_.p.region(c));
        return *slot;
    }

    const Region& pre_principal(LabelId a, BlockHandle c)
    {
        auto& slot = pre_principal_[a][c];
        if (!slot.region || slot.version != version_[c]) {
            slot.region = alg_.pre(a, principal_[c]);
            slot.version = version_[c];
        }
        return *slot.region;
    }

    [[nodiscard]] bool meets_frontier(const Region& r) const
    {
        if constexpr (kEnumerable) {
            return region_intersects(alg_, r, frontier_);
        } else {
            for (const State& i : alg_.initial())
                if (alg_.contains(r, i))
                    return true;
            for (const State& s : sigma_)
                if (alg_.witness_successor(s, r))
                    return true;
            return false;
        }
    }

    State choose_witness(const Region& principal)
    {
        if constexpr (kEnumerable) {
            const Region choices = alg_.intersect(principal, frontier_);
            if (chooser_.pick() == PickPolicy::CanonicalMin)
                return *alg_.first(choices);
            return *alg_.nth(choices, chooser_.uniform(alg_.count(choices)));
        } else {
            std::set<State> choices;
            for (const State& i : alg_.initial())
                if (alg_.contains(principal, i))
                    choices.insert(i);
            for (const State& s : sigma_)
                if (auto w = alg_.witness_successor(s, principal))
                    choices.insert(*w);
            if (chooser_.pick() == PickPolicy::CanonicalMin)
                return *choices.begin();
            return *std::next(choices.begin(), static_cast<std::ptrdiff_t>(chooser_.uniform(choices.size())));
        }
    }

    void add_to_sigma_set(const State& s)
    {
        sigma_.insert(s);
        sigma_region_ = alg_.unite(sigma_region_, alg_.singleton(s));
    }

    void add_to_sigma(const State& s)
    {
        add_to_sigma_set(s);
        sigma_order_.push_back(s);
        const auto live = t_.p.live();
        for (BlockHandle a : live)
            if (!marked_[a] && alg_.contains(principal_[a], s))
                mark(a);
        if constexpr (kEnumerable) {
            const Region fresh = alg_.subtract(alg_.post_all(alg_.singleton(s)), frontier_);
            if (alg_.is_empty(fresh))
                return;
            frontier_ = alg_.unite(frontier_, fresh);
            for (BlockHandle a : live)
                if (!marked_[a] && region_intersects(alg_, principal_[a], fresh))
                    u_pool_.push(a);
        } else {
            for (BlockHandle a : live)
                if (!marked_[a])
                    u_pool_.push(a);
        }
    }

    void mark(BlockHandle b)
    {
        marked_[b] = 1;
        push_sources(b);
    }

    // Candidates ⟨a, B, C⟩ for every C meeting post_a(B).
    void push_sources(BlockHandle b)
    {
        for (LabelId a = 0; a < alg_.label_count(); ++a) {
            if constexpr (kEnumerable) {
                const Region succ = alg_.post(a, t_.p.region(b));
                for_each_block_in(succ, [&](BlockHandle c) { v_pool_.push({a, b, c}); });
            } else {
                for (BlockHandle c : t_.p.live())
                    if (region_intersects(alg_, t_.p.region(b), pre_block(a, c)))
                        v_pool_.push({a, b, c});
            }
        }
    }

    // Candidates ⟨a, A, C⟩ for every marked A meeting pre_a(C).
    void push_targets(BlockHandle c)
    {
        for (LabelId a = 0; a < alg_.label_count(); ++a) {
            const Region& pc = pre_block(a, c);
            if constexpr (kEnumerable) {
                for_each_block_in(pc, [&](BlockHandle src) {
                    if (marked_[src])
                        v_pool_.push({a, src, c});
                });
            } else {
                for (BlockHandle src : t_.p.live())
                    if (marked_[src] && region_intersects(alg_, t_.p.region(src), pc))
                        v_pool_.push({a, src, c});
            }
        }
    }

    template <class F>
    void for_each_block_in(const Region& r, F&& f)
    {
        if constexpr (kEnumerable) {
            // Visit each block once; blocks are skipped wholesale after the first hit.
            Region rest = r;
            while (auto x = alg_.first(rest)) {
                const BlockHandle b = block_of_[*x];
                f(b);
                rest = alg_.subtract(rest, t_.p.region(b));
            }
        }
    }

    void set_block_of(BlockHandle b)
    {
        if constexpr (kEnumerable) {
            const Region& r = t_.p.region(b);
            if constexpr (requires { r.for_each([](State) {}); })
                r.for_each([&](State x) { block_of_[x] = b; });
        }
    }

    void check_pool_completeness(bool u_found, bool v_found) const
    {
        if (literal_u().empty() == u_found)
            throw InvariantViolation("incremental U disagrees with its definition");
        if (literal_v().empty() == v_found)
            throw InvariantViolation("incremental V disagrees with its definition");
    }

    void record(std::vector<TwoPrSnapshot>& trace) const
    {
        if constexpr (std::is_same_v<Region, StateSet>) {
            const std::size_t n = alg_.state_count();
            trace.push_back({live_partition(t_.p, n), live_partition(t_.q, n), twopr_to_relation(t_)});
        }
    }

    const A& alg_;
    EngineOptions opt_;
    BasicTwoPr<Region> t_;
    BasicTwoPr<Region> init_;
    std::vector<Region> principal_;
    std::vector<char> marked_;
    std::vector<std::uint64_t> version_;
    std::vector<std::vector<std::optional<Region>>> pre_block_;
    std::vector<std::vector<PreSlot>> pre_principal_;
    std::set<State> sigma_;
    std::set<State> sigma_init_;
    std::vector<State> sigma_order_;
    Region sigma_region_;
    Region frontier_;
    std::vector<BlockHandle> block_of_;
    std::vector<State> probe_;
    BranchChooser chooser_;
    CandidatePool<BlockHandle> u_pool_;
    CandidatePool<BlockTriple, BlockTripleHash> v_pool_;
    Counters counters_;
};

/// Finite entry point: builds the initial triple from r_init (which must be a
/// preorder) and runs on FiniteAlgebra.
[[nodiscard]] TwoPrOutcome<FiniteAlgebra> run_twopr(const Lts& lts, const Relation& r_init, const StateSet& sigma_init,
                                                    const EngineOptions& opt = {});

/// Interval entry point for an initial equivalence given by its classes.
[[nodiscard]] TwoPrOutcome<IntervalAlgebra> run_twopr(const IntervalAlgebra& alg,
                                                      const std::vector<IntervalRegion>& classes,
                                                      const std::vector<std::int64_t>& sigma_init,
                                                      const EngineOptions& opt = {});

/// Initial triple of an equivalence given by its classes: P = Q = classes, τ(B) = {B}.
template <class Region>
BasicTwoPr<Region> twopr_of_equivalence(const std::vector<Region>& classes)
{
    BasicTwoPr<Region> t;
    for (const auto& c : classes) {
        const BlockHandle q = t.q.mint(c);
        t.mint_p(c, {q});
    }
    return t;
}

} // namespace reachsim
