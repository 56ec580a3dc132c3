// Copyright (c) reachsim contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "reachsim/state_set.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace reachsim {

/// Binary relation on [0, n) stored as principals: principal(x) = {y | (x, y) ∈ R}.
class Relation {
public:
    Relation() = default;
    explicit Relation(std::vector<StateSet> principals);

    static Relation empty(std::size_t n);
    static Relation identity(std::size_t n);
    static Relation universal(std::size_t n);
    static Relation from_pairs(std::size_t n, const std::vector<std::pair<StateId, StateId>>& pairs);

    [[nodiscard]] std::size_t state_count() const { return principals_.size(); }
    [[nodiscard]] const StateSet& principal(StateId x) const { return principals_[x]; }
    [[nodiscard]] StateSet& principal(StateId x) { return principals_[x]; }
    [[nodiscard]] const std::vector<StateSet>& principals() const { return principals_; }

    [[nodiscard]] bool contains(StateId x, StateId y) const { return principals_[x].contains(y); }
    void add(StateId x, StateId y) { principals_[x].insert(y); }

    [[nodiscard]] Relation inverse() const;
    [[nodiscard]] Relation reflexive_transitive_closure() const;
    /// Pointwise inclusion of principals.
    [[nodiscard]] bool subset_of(const Relation& other) const;
    [[nodiscard]] std::size_t pair_count() const;

    friend bool operator==(const Relation&, const Relation&) = default;

private:
    std::vector<StateSet> principals_;
};

struct PreorderReport {
    bool reflexive = true;
    bool transitive = true;
    bool symmetric = true;
    /// x with x ∉ R(x).
    std::optional<StateId> not_reflexive_at;
    /// (x, y, z) with (x,y), (y,z) ∈ R but (x,z) ∉ R.
    std::optional<std::array<StateId, 3>> not_transitive_at;
    /// (x, y) ∈ R with (y, x) ∉ R.
    std::optional<std::pair<StateId, StateId>> not_symmetric_at;

    [[nodiscard]] bool is_preorder() const { return reflexive && transitive; }
    [[nodiscard]] bool is_equivalence() const { return reflexive && transitive && symmetric; }
    [[nodiscard]] std::string describe() const;
};

[[nodiscard]] PreorderReport preorder_check(const Relation& r);

/// Partition of [0, n) into non-empty disjoint blocks. Blocks are kept sorted by
/// their minimum element, which makes equality and serialization canonical.
class Partition {
public:
    Partition() = default;

    /// Validates disjointness, coverage and non-emptiness; throws ContractError.
    static Partition from_blocks(std::size_t n, std::vector<StateSet> blocks);
    /// Blocks are the fibers of class_of.
    static Partition from_class_ids(const std::vector<std::size_t>& class_of);
    static Partition single_block(std::size_t n);
    static Partition discrete(std::size_t n);

    [[nodiscard]] std::size_t state_count() const { return block_of_.size(); }
    [[nodiscard]] std::size_t size() const { return blocks_.size(); }
    [[nodiscard]] const StateSet& block(std::size_t i) const { return blocks_[i]; }
    [[nodiscard]] const std::vector<StateSet>& blocks() const { return blocks_; }
    [[nodiscard]] std::size_t block_of(StateId x) const { return block_of_[x]; }
    [[nodiscard]] bool same_block(StateId x, StateId y) const { return block_of_[x] == block_of_[y]; }

    /// Every block of *this lies inside one block of other.
    [[nodiscard]] bool finer_than(const Partition& other) const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.blocks_ == b.blocks_; }

private:
    std::vector<StateSet> blocks_;
    std::vector<std::size_t> block_of_;
};

/// Coarsest common refinement: non-empty pairwise intersections of blocks.
[[nodiscard]] Partition meet(const Partition& p, const Partition& q);

/// Groups states with equal principals.
[[nodiscard]] Partition group_by_principal(const Relation& r);

/// Classes of r ∩ r⁻¹; r must be a preorder (ContractError otherwise).
[[nodiscard]] Partition kernel_partition(const Relation& r);

/// The equivalence relation whose classes are the blocks.
[[nodiscard]] Relation equivalence_of(const Partition& p);

/// Preorder sources accepted by the CLI: "universal", "partition:FILE", "pairs:FILE".
/// Pairs must form a preorder unless close is set, in which case the reflexive
/// transitive closure is taken first.
[[nodiscard]] Relation load_preorder(const std::string& source, std::size_t n, bool close);
[[nodiscard]] Relation parse_partition_lines(std::istream& in, std::size_t n);
[[nodiscard]] Relation parse_pair_lines(std::istream& in, std::size_t n, bool close);

} // namespace reachsim
