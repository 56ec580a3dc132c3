// Copyright (c) reachsim contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <vector>

namespace reachsim {

using StateId = std::uint32_t;
using LabelId = std::uint32_t;

/// Dense bit-indexed subset of [0, universe). All operations between two sets
/// require equal universes.
class StateSet {
public:
    class const_iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = StateId;
        using difference_type = std::ptrdiff_t;
        using pointer = const StateId*;
        using reference = StateId;

        const_iterator() = default;
        const_iterator(const StateSet* set, std::size_t pos) : set_(set), pos_(pos) {}

        StateId operator*() const { return static_cast<StateId>(pos_); }
        const_iterator& operator++()
        {
            pos_ = set_->find_from(pos_ + 1);
            return *this;
        }
        const_iterator operator++(int)
        {
            auto tmp = *this;
            ++*this;
            return tmp;
        }
        bool operator==(const const_iterator& other) const { return pos_ == other.pos_; }

    private:
        const StateSet* set_ = nullptr;
        std::size_t pos_ = 0;
    };

    StateSet() = default;
    explicit StateSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
    StateSet(std::size_t universe, std::initializer_list<StateId> members) : StateSet(universe)
    {
        for (StateId x : members)
            insert(x);
    }

    static StateSet full(std::size_t universe)
    {
        StateSet s(universe);
        for (auto& w : s.words_)
            w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    template <class Range>
    static StateSet from_range(std::size_t universe, const Range& members)
    {
        StateSet s(universe);
        for (auto x : members)
            s.insert(static_cast<StateId>(x));
        return s;
    }

    [[nodiscard]] std::size_t universe() const { return universe_; }

    [[nodiscard]] bool contains(StateId x) const
    {
        assert(x < universe_);
        return (words_[x >> 6] >> (x & 63)) & 1U;
    }
    void insert(StateId x)
    {
        assert(x < universe_);
        words_[x >> 6] |= std::uint64_t{1} << (x & 63);
    }
    void erase(StateId x)
    {
        assert(x < universe_);
        words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63));
    }
    void clear()
    {
        for (auto& w : words_)
            w = 0;
    }

    [[nodiscard]] bool empty() const
    {
        for (auto w : words_)
            if (w != 0)
                return false;
        return true;
    }
    [[nodiscard]] std::size_t count() const
    {
        std::size_t n = 0;
        for (auto w : words_)
            n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    [[nodiscard]] bool intersects(const StateSet& other) const
    {
        assert(universe_ == other.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i])
                return true;
        return false;
    }
    [[nodiscard]] bool subset_of(const StateSet& other) const
    {
        assert(universe_ == other.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i])
                return false;
        return true;
    }

    StateSet& operator&=(const StateSet& other)
    {
        assert(universe_ == other.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= other.words_[i];
        return *this;
    }
    StateSet& operator|=(const StateSet& other)
    {
        assert(universe_ == other.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= other.words_[i];
        return *this;
    }
    StateSet& operator-=(const StateSet& other)
    {
        assert(universe_ == other.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~other.words_[i];
        return *this;
    }
    friend StateSet operator&(StateSet a, const StateSet& b) { return a &= b; }
    friend StateSet operator|(StateSet a, const StateSet& b) { return a |= b; }
    friend StateSet operator-(StateSet a, const StateSet& b) { return a -= b; }

    [[nodiscard]] StateSet complement() const
    {
        StateSet s = *this;
        for (auto& w : s.words_)
            w = ~w;
        s.trim();
        return s;
    }

    /// Lowest member, if any.
    [[nodiscard]] std::optional<StateId> first() const
    {
        auto pos = find_from(0);
        if (pos >= universe_)
            return std::nullopt;
        return static_cast<StateId>(pos);
    }

    /// k-th member in ascending order (0-based).
    [[nodiscard]] std::optional<StateId> nth(std::size_t k) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            auto pc = static_cast<std::size_t>(std::popcount(words_[i]));
            if (k < pc) {
                std::uint64_t w = words_[i];
                for (std::size_t j = 0; j < k; ++j)
                    w &= w - 1;
                return static_cast<StateId>(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
            }
            k -= pc;
        }
        return std::nullopt;
    }

    template <class F>
    void for_each(F&& f) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w != 0) {
                f(static_cast<StateId>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
                w &= w - 1;
            }
        }
    }

    [[nodiscard]] std::vector<StateId> to_vector() const
    {
        std::vector<StateId> out;
        for_each([&](StateId x) { out.push_back(x); });
        return out;
    }

    [[nodiscard]] const_iterator begin() const { return {this, find_from(0)}; }
    [[nodiscard]] const_iterator end() const { return {this, universe_}; }

    [[nodiscard]] std::size_t hash() const
    {
        std::uint64_t h = 1469598103934665603ULL ^ universe_;
        for (auto w : words_) {
            h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }

    friend bool operator==(const StateSet& a, const StateSet& b) = default;

private:
    [[nodiscard]] std::size_t find_from(std::size_t pos) const
    {
        if (pos >= universe_)
            return universe_;
        std::size_t i = pos >> 6;
        std::uint64_t w = words_[i] & (~std::uint64_t{0} << (pos & 63));
        while (true) {
            if (w != 0) {
                std::size_t found = i * 64 + static_cast<std::size_t>(std::countr_zero(w));
                return found < universe_ ? found : universe_;
            }
            if (++i >= words_.size())
                return universe_;
            w = words_[i];
        }
    }

    void trim()
    {
        if (universe_ % 64 != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
    }

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

struct StateSetHash {
    std::size_t operator()(const StateSet& s) const { return s.hash(); }
};

} // namespace reachsim
