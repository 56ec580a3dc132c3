// Copyright (c) reachsim contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "reachsim/state_set.hpp"

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace reachsim {

struct Transition {
    StateId src;
    LabelId label;
    StateId dst;

    friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// Finite labeled transition system with dense state and label indices.
///
/// Adjacency is stored per label in compressed rows, forward and backward.
/// Rows are sorted and duplicate-free. Instances are immutable once built.
class Lts {
public:
    Lts() = default;

    /// Builds the system from an arbitrary transition list. Exact duplicates are
    /// dropped; endpoints and labels must be in range.
    Lts(std::size_t n_states, std::vector<std::string> labels, std::vector<Transition> transitions,
        StateSet initial);

    [[nodiscard]] std::size_t state_count() const { return n_states_; }
    [[nodiscard]] std::size_t label_count() const { return labels_.size(); }
    [[nodiscard]] std::size_t transition_count() const { return transitions_.size(); }

    [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
    [[nodiscard]] const std::string& label_name(LabelId a) const { return labels_.at(a); }
    [[nodiscard]] std::optional<LabelId> find_label(std::string_view name) const;

    /// All transitions sorted by (label, src, dst).
    [[nodiscard]] const std::vector<Transition>& transitions() const { return transitions_; }
    [[nodiscard]] const StateSet& initial() const { return initial_; }

    [[nodiscard]] std::span<const StateId> successors(LabelId a, StateId x) const
    {
        const auto& row = fwd_[a];
        return {row.targets.data() + row.offsets[x], row.targets.data() + row.offsets[x + 1]};
    }
    [[nodiscard]] std::span<const StateId> predecessors(LabelId a, StateId y) const
    {
        const auto& row = bwd_[a];
        return {row.targets.data() + row.offsets[y], row.targets.data() + row.offsets[y + 1]};
    }
    [[nodiscard]] bool has_successor(LabelId a, StateId x) const { return !successors(a, x).empty(); }

    [[nodiscard]] StateSet post(LabelId a, const StateSet& xs) const;
    [[nodiscard]] StateSet pre(LabelId a, const StateSet& ys) const;
    [[nodiscard]] StateSet post(const StateSet& xs) const;
    [[nodiscard]] StateSet pre(const StateSet& ys) const;

    /// Same system with a different initial-state set.
    [[nodiscard]] Lts with_initial(StateSet initial) const;

    [[nodiscard]] StateSet empty_set() const { return StateSet(n_states_); }
    [[nodiscard]] StateSet full_set() const { return StateSet::full(n_states_); }

    friend bool operator==(const Lts& a, const Lts& b)
    {
        return a.n_states_ == b.n_states_ && a.labels_ == b.labels_ && a.transitions_ == b.transitions_ &&
               a.initial_ == b.initial_;
    }

private:
    struct Csr {
        std::vector<std::size_t> offsets;
        std::vector<StateId> targets;
    };

    std::size_t n_states_ = 0;
    std::vector<std::string> labels_;
    std::vector<Transition> transitions_;
    StateSet initial_;
    std::vector<Csr> fwd_;
    std::vector<Csr> bwd_;
};

/// Incremental construction with label interning in first-use order.
class LtsBuilder {
public:
    explicit LtsBuilder(std::size_t n_states) : n_states_(n_states), initial_(n_states) {}

    LabelId label(const std::string& name);
    void add(StateId src, const std::string& label_name, StateId dst) { add(src, label(label_name), dst); }
    void add(StateId src, LabelId a, StateId dst) { transitions_.push_back({src, a, dst}); }
    void add_initial(StateId x) { initial_.insert(x); }

    [[nodiscard]] Lts build() const;

private:
    std::size_t n_states_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, LabelId> index_;
    std::vector<Transition> transitions_;
    StateSet initial_;
};

/// Reads Aldebaran text: `des (init, n_transitions, n_states)` then one
/// `(src, "label", dst)` per line.
[[nodiscard]] Lts parse_aut(std::istream& in);
[[nodiscard]] Lts parse_aut_string(std::string_view text);
[[nodiscard]] Lts load_aut(const std::string& path);

/// Canonical Aldebaran text. The header names the lowest initial state; the
/// remaining initial states need a sidecar (see write_init_sidecar).
[[nodiscard]] std::string serialize_aut(const Lts& lts);

/// Sidecar initial-state list: newline-separated decimal ids.
[[nodiscard]] StateSet parse_init_sidecar(std::istream& in, std::size_t n_states);
[[nodiscard]] StateSet load_init_sidecar(const std::string& path, std::size_t n_states);
[[nodiscard]] std::string serialize_init_sidecar(const StateSet& initial);

/// Least fixpoint of X = I ∪ post(X), by worklist.
[[nodiscard]] StateSet post_star(const Lts& lts);
[[nodiscard]] StateSet post_star(const Lts& lts, const StateSet& from);

} // namespace reachsim
