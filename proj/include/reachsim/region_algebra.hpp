// Copyright (c) reachsim contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "reachsim/interval_region.hpp"
#include "reachsim/lts.hpp"
#include "reachsim/state_set.hpp"

#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace reachsim {

/// The operations a symbolic engine needs from a set representation.
///
/// Regions denote sets of concrete states. An instance must provide
///  - witness_successor(s, r): some element of post(s) ∩ ⟦r⟧, or nothing;
///  - pre(a, r) with ⟦pre(a, r)⟧ = pre_a(⟦r⟧);
///  - intersect / subtract (and unite) matching set semantics;
///  - is_empty(r), deciding ⟦r⟧ = ∅.
/// singleton/contains/initial give access to concrete states.
template <class A>
concept RegionAlgebra = requires(const A& alg, const typename A::Region& r, typename A::State s, LabelId a) {
    typename A::Region;
    typename A::State;
    { alg.label_count() } -> std::convertible_to<std::size_t>;
    { alg.pre(a, r) } -> std::same_as<typename A::Region>;
    { alg.intersect(r, r) } -> std::same_as<typename A::Region>;
    { alg.subtract(r, r) } -> std::same_as<typename A::Region>;
    { alg.unite(r, r) } -> std::same_as<typename A::Region>;
    { alg.is_empty(r) } -> std::convertible_to<bool>;
    { alg.witness_successor(s, r) } -> std::same_as<std::optional<typename A::State>>;
    { alg.singleton(s) } -> std::same_as<typename A::Region>;
    { alg.contains(r, s) } -> std::convertible_to<bool>;
    { alg.empty_region() } -> std::same_as<typename A::Region>;
    { alg.initial() } -> std::convertible_to<const std::vector<typename A::State>&>;
};

/// Algebras over a finite dense universe, where regions can be enumerated.
/// Engines use this to index blocks by state and to keep the frontier as a region.
template <class A>
concept EnumerableAlgebra = RegionAlgebra<A> && requires(const A& alg, const typename A::Region& r, LabelId a) {
    { alg.state_count() } -> std::convertible_to<std::size_t>;
    { alg.post(a, r) } -> std::same_as<typename A::Region>;
    { alg.post_all(r) } -> std::same_as<typename A::Region>;
    { alg.first(r) } -> std::same_as<std::optional<typename A::State>>;
    { alg.count(r) } -> std::convertible_to<std::size_t>;
    { alg.nth(r, std::size_t{}) } -> std::same_as<std::optional<typename A::State>>;
};

template <RegionAlgebra A>
bool region_subset(const A& alg, const typename A::Region& x, const typename A::Region& y)
{
    if constexpr (requires { alg.subset(x, y); })
        return alg.subset(x, y);
    else
        return alg.is_empty(alg.subtract(x, y));
}

template <RegionAlgebra A>
bool region_intersects(const A& alg, const typename A::Region& x, const typename A::Region& y)
{
    if constexpr (requires { alg.intersects(x, y); })
        return alg.intersects(x, y);
    else
        return !alg.is_empty(alg.intersect(x, y));
}

/// Finite instance: regions are StateSets over an explicit Lts.
class FiniteAlgebra {
public:
    using Region = StateSet;
    using State = StateId;

    explicit FiniteAlgebra(const Lts& lts) : lts_(&lts), initial_(lts.initial().to_vector()) {}

    [[nodiscard]] const Lts& lts() const { return *lts_; }
    [[nodiscard]] std::size_t label_count() const { return lts_->label_count(); }
    [[nodiscard]] std::size_t state_count() const { return lts_->state_count(); }

    [[nodiscard]] Region pre(LabelId a, const Region& r) const { return lts_->pre(a, r); }
    [[nodiscard]] Region post(LabelId a, const Region& r) const { return lts_->post(a, r); }
    [[nodiscard]] Region post_all(const Region& r) const { return lts_->post(r); }
    [[nodiscard]] Region intersect(const Region& x, const Region& y) const { return x & y; }
    [[nodiscard]] Region subtract(const Region& x, const Region& y) const { return x - y; }
    [[nodiscard]] Region unite(const Region& x, const Region& y) const { return x | y; }
    [[nodiscard]] bool is_empty(const Region& r) const { return r.empty(); }
    [[nodiscard]] bool subset(const Region& x, const Region& y) const { return x.subset_of(y); }
    [[nodiscard]] bool intersects(const Region& x, const Region& y) const { return x.intersects(y); }

    /// Lowest-index successor of s inside r.
    [[nodiscard]] std::optional<State> witness_successor(State s, const Region& r) const;

    [[nodiscard]] Region singleton(State s) const
    {
        Region r(lts_->state_count());
        r.insert(s);
        return r;
    }
    [[nodiscard]] bool contains(const Region& r, State s) const { return r.contains(s); }
    [[nodiscard]] Region empty_region() const { return Region(lts_->state_count()); }
    [[nodiscard]] Region full_region() const { return Region::full(lts_->state_count()); }
    [[nodiscard]] const std::vector<State>& initial() const { return initial_; }

    [[nodiscard]] std::optional<State> first(const Region& r) const { return r.first(); }
    [[nodiscard]] std::size_t count(const Region& r) const { return r.count(); }
    [[nodiscard]] std::optional<State> nth(const Region& r, std::size_t k) const { return r.nth(k); }

private:
    const Lts* lts_;
    std::vector<State> initial_;
};

/// A transition system over integers given by code: per-label symbolic
/// predecessor maps on interval regions plus concrete finite successor lists.
struct SymbolicSystem {
    std::string name;
    std::vector<std::string> labels;
    /// Carrier of the system; every region the engine builds stays inside it.
    IntervalRegion universe;
    std::vector<std::int64_t> initial;
    /// pre[a](r) must equal {x ∈ universe | ∃y ∈ r. x →a y}.
    std::vector<std::function<IntervalRegion(const IntervalRegion&)>> pre;
    /// Concrete successors of a state under label a, sorted ascending.
    std::function<std::vector<std::int64_t>(std::int64_t, LabelId)> successors;
};

/// Interval instance of the region algebra over a SymbolicSystem.
class IntervalAlgebra {
public:
    using Region = IntervalRegion;
    using State = std::int64_t;

    explicit IntervalAlgebra(const SymbolicSystem& sys) : sys_(&sys) {}

    [[nodiscard]] const SymbolicSystem& system() const { return *sys_; }
    [[nodiscard]] std::size_t label_count() const { return sys_->labels.size(); }

    [[nodiscard]] Region pre(LabelId a, const Region& r) const
    {
        return sys_->pre.at(a)(r.intersect(sys_->universe)).intersect(sys_->universe);
    }
    [[nodiscard]] Region intersect(const Region& x, const Region& y) const { return x.intersect(y); }
    [[nodiscard]] Region subtract(const Region& x, const Region& y) const { return x.subtract(y); }
    [[nodiscard]] Region unite(const Region& x, const Region& y) const { return x.unite(y); }
    [[nodiscard]] bool is_empty(const Region& r) const { return r.empty(); }
    [[nodiscard]] bool subset(const Region& x, const Region& y) const { return x.subset_of(y); }

    /// First successor of s (over all labels, ascending) lying in r.
    [[nodiscard]] std::optional<State> witness_successor(State s, const Region& r) const;

    [[nodiscard]] Region singleton(State s) const { return Region::point(s); }
    [[nodiscard]] bool contains(const Region& r, State s) const { return r.contains(s); }
    [[nodiscard]] Region empty_region() const { return {}; }
    [[nodiscard]] Region full_region() const { return sys_->universe; }
    [[nodiscard]] const std::vector<State>& initial() const { return sys_->initial; }

private:
    const SymbolicSystem* sys_;
};

// Demo systems on integers.

/// States ℕ; every positive state steps to 0; 0 is a deadlock. I = {1}.
SymbolicSystem fan_in_to_zero_system();

/// States (-∞, 1]; a descending chain ··· → -2 → -1 ending in a deadlock at -1,
/// and a separate edge 0 → 1. I = {0}.
SymbolicSystem negative_chain_system();

/// Concrete pre_a over an enumeration window, for spot-checking a
/// SymbolicSystem's symbolic pre against its successor lists.
IntervalRegion windowed_concrete_pre(const SymbolicSystem& sys, LabelId a, const IntervalRegion& r, std::int64_t lo,
                                     std::int64_t hi);

} // namespace reachsim
