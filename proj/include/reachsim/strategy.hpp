// Copyright (c) reachsim contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "reachsim/relation.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace reachsim {

/// Which enabled guarded branch runs when more than one is enabled.
enum class BranchPolicy { SearchFirst, RefineFirst, Alternating, Random };
/// Which element is taken from a set of candidates.
enum class PickPolicy { CanonicalMin, Random };

struct Strategy {
    BranchPolicy branch = BranchPolicy::SearchFirst;
    PickPolicy pick = PickPolicy::CanonicalMin;
    std::uint64_t seed = 0;
};

[[nodiscard]] std::string to_string(BranchPolicy b);
[[nodiscard]] std::string to_string(PickPolicy p);
[[nodiscard]] std::optional<BranchPolicy> parse_branch_policy(std::string_view s);
[[nodiscard]] std::optional<PickPolicy> parse_pick_policy(std::string_view s);

struct Counters {
    std::uint64_t search_steps = 0;
    /// Partition engine only: Search iterations that found nothing to add and grew U_bad.
    std::uint64_t idle_search_steps = 0;
    std::uint64_t refine_steps = 0;
    std::uint64_t expand_steps = 0;
    std::uint64_t p_splits = 0;
    std::uint64_t q_splits = 0;
    std::uint64_t iterations = 0;
};

enum class Termination { Converged, CapReached, TimedOut };
[[nodiscard]] std::string to_string(Termination t);

struct EngineOptions {
    Strategy strategy;
    /// Bound on loop iterations of all kinds combined.
    std::uint64_t cap = 10'000'000;
    std::optional<std::chrono::steady_clock::time_point> deadline;
    /// Check the loop invariants at every loop head (throws InvariantViolation).
    bool check_invariants = false;
    /// Simulation preorder used for the lower bound of the first invariant, when known.
    const Relation* reference = nullptr;
    /// Record per-iteration snapshots (2PR engine, finite instance).
    bool record_trace = false;
};

/// Resolves the nondeterministic choice between enabled branches.
class BranchChooser {
public:
    explicit BranchChooser(const Strategy& s) : strategy_(s), rng_(s.seed) {}

    /// True for Search, false for Refine. At least one must be enabled.
    bool prefer_search(bool search_enabled, bool refine_enabled);

    [[nodiscard]] PickPolicy pick() const { return strategy_.pick; }
    std::mt19937_64& rng() { return rng_; }
    /// Uniform index in [0, n).
    std::size_t uniform(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

private:
    Strategy strategy_;
    std::mt19937_64 rng_;
    bool last_was_search_ = false;
};

/// Candidate set for a guarded branch. It may hold stale entries. Callers
/// supply a validity test, and peek() discards entries that fail it.
/// CanonicalMin yields the least valid key. Random yields a uniformly drawn
/// pool entry that passes the test.
template <class Key, class Hash = std::hash<Key>>
class CandidatePool {
public:
    CandidatePool(PickPolicy pick, BranchChooser& chooser) : pick_(pick), chooser_(&chooser) {}

    void push(const Key& k)
    {
        if (pick_ == PickPolicy::CanonicalMin) {
            ordered_.insert(k);
            return;
        }
        if (pos_.try_emplace(k, items_.size()).second)
            items_.push_back(k);
    }

    template <class Valid>
    std::optional<Key> peek(Valid&& valid)
    {
        if (pick_ == PickPolicy::CanonicalMin) {
            while (!ordered_.empty()) {
                auto it = ordered_.begin();
                if (valid(*it))
                    return *it;
                ordered_.erase(it);
            }
            return std::nullopt;
        }
        while (!items_.empty()) {
            const std::size_t i = chooser_->uniform(items_.size());
            if (valid(items_[i]))
                return items_[i];
            erase(Key(items_[i]));
        }
        return std::nullopt;
    }

    void erase(const Key& k)
    {
        if (pick_ == PickPolicy::CanonicalMin) {
            ordered_.erase(k);
            return;
        }
        auto it = pos_.find(k);
        if (it == pos_.end())
            return;
        const std::size_t i = it->second;
        pos_.erase(it);
        if (i + 1 != items_.size()) {
            items_[i] = items_.back();
            pos_[items_[i]] = i;
        }
        items_.pop_back();
    }

    [[nodiscard]] std::size_t size() const { return pick_ == PickPolicy::CanonicalMin ? ordered_.size() : items_.size(); }

private:
    PickPolicy pick_;
    BranchChooser* chooser_;
    std::set<Key> ordered_;
    std::vector<Key> items_;
    std::unordered_map<Key, std::size_t, Hash> pos_;
};

/// CandidatePool specialised to dense integer keys in [0, key_space), where
/// integer order is the canonical order.
class DenseCandidatePool {
public:
    DenseCandidatePool(std::size_t key_space, PickPolicy pick, BranchChooser& chooser)
        : pick_(pick), chooser_(&chooser), present_(key_space, 0), pos_(pick == PickPolicy::Random ? key_space : 0)
    {
    }

    void push(std::uint32_t k)
    {
        if (present_[k])
            return;
        present_[k] = 1;
        if (pick_ == PickPolicy::CanonicalMin) {
            heap_.push(k);
        } else {
            pos_[k] = items_.size();
            items_.push_back(k);
        }
    }

    template <class Valid>
    std::optional<std::uint32_t> peek(Valid&& valid)
    {
        if (pick_ == PickPolicy::CanonicalMin) {
            while (!heap_.empty()) {
                const auto k = heap_.top();
                if (valid(k))
                    return k;
                heap_.pop();
                present_[k] = 0;
            }
            return std::nullopt;
        }
        while (!items_.empty()) {
            const auto k = items_[chooser_->uniform(items_.size())];
            if (valid(k))
                return k;
            erase(k);
        }
        return std::nullopt;
    }

    /// Removes k; for CanonicalMin, k must be the key last returned by peek.
    void erase(std::uint32_t k)
    {
        if (!present_[k])
            return;
        present_[k] = 0;
        if (pick_ == PickPolicy::CanonicalMin) {
            heap_.pop();
            return;
        }
        const std::size_t i = pos_[k];
        if (i + 1 != items_.size()) {
            items_[i] = items_.back();
            pos_[items_[i]] = i;
        }
        items_.pop_back();
    }

private:
    PickPolicy pick_;
    BranchChooser* chooser_;
    std::vector<char> present_;
    std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap_;
    std::vector<std::uint32_t> items_;
    std::vector<std::size_t> pos_;
};

/// Wall-clock and iteration budget shared by the engines.
class Budget {
public:
    explicit Budget(const EngineOptions& opt) : cap_(opt.cap), deadline_(opt.deadline) {}

    /// Checked once per loop iteration, before the iteration runs.
    std::optional<Termination> exhausted(std::uint64_t iterations)
    {
        if (iterations >= cap_)
            return Termination::CapReached;
        if (deadline_ && (iterations & 255U) == 0 && std::chrono::steady_clock::now() >= *deadline_)
            return Termination::TimedOut;
        return std::nullopt;
    }

private:
    std::uint64_t cap_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
};

} // namespace reachsim
