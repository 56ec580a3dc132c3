// Copyright (c) reachsim contributors.
// SPDX-License-Identifier: Apache-2.0
#include "reachsim/interval_region.hpp"

#include <algorithm>

namespace reachsim {

namespace {

// hi + 1 without overflowing on the unbounded end.
bool touches(std::int64_t hi, std::int64_t next_lo)
{
    if (hi == IntervalRegion::kPosInf)
        return true;
    return next_lo <= hi + 1;
}

} // namespace

IntervalRegion IntervalRegion::from_intervals(std::vector<Interval> parts)
{
    std::erase_if(parts, [](const Interval& iv) { return iv.lo > iv.hi; });
    std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    IntervalRegion r;
    for (const auto& iv : parts) {
        if (!r.parts_.empty() && touches(r.parts_.back().hi, iv.lo))
            r.parts_.back().hi = std::max(r.parts_.back().hi, iv.hi);
        else
            r.parts_.push_back(iv);
    }
    return r;
}

IntervalRegion IntervalRegion::range(std::int64_t lo, std::int64_t hi)
{
    IntervalRegion r;
    if (lo <= hi)
        r.parts_.push_back({lo, hi});
    return r;
}

bool IntervalRegion::contains(std::int64_t v) const
{
    auto it = std::upper_bound(parts_.begin(), parts_.end(), v,
                               [](std::int64_t x, const Interval& iv) { return x < iv.lo; });
    if (it == parts_.begin())
        return false;
    --it;
    return v <= it->hi;
}

std::optional<std::int64_t> IntervalRegion::min() const
{
    if (parts_.empty() || parts_.front().lo == kNegInf)
        return std::nullopt;
    return parts_.front().lo;
}

std::optional<std::int64_t> IntervalRegion::max() const
{
    if (parts_.empty() || parts_.back().hi == kPosInf)
        return std::nullopt;
    return parts_.back().hi;
}

IntervalRegion IntervalRegion::intersect(const IntervalRegion& other) const
{
    IntervalRegion r;
    std::size_t i = 0, j = 0;
    while (i < parts_.size() && j < other.parts_.size()) {
        const auto& a = parts_[i];
        const auto& b = other.parts_[j];
        std::int64_t lo = std::max(a.lo, b.lo);
        std::int64_t hi = std::min(a.hi, b.hi);
        if (lo <= hi)
            r.parts_.push_back({lo, hi});
        if (a.hi < b.hi)
            ++i;
        else
            ++j;
    }
    return r;
}

IntervalRegion IntervalRegion::unite(const IntervalRegion& other) const
{
    std::vector<Interval> all = parts_;
    all.insert(all.end(), other.parts_.begin(), other.parts_.end());
    return from_intervals(std::move(all));
}

IntervalRegion IntervalRegion::complement() const
{
    IntervalRegion r;
    std::int64_t next = kNegInf;
    bool open = true;
    for (const auto& iv : parts_) {
        if (open && iv.lo != kNegInf && (next == kNegInf || next <= iv.lo - 1))
            r.parts_.push_back({next, iv.lo - 1});
        if (iv.hi == kPosInf) {
            open = false;
            break;
        }
        next = iv.hi + 1;
    }
    if (open)
        r.parts_.push_back({next, kPosInf});
    return r;
}

IntervalRegion IntervalRegion::subtract(const IntervalRegion& other) const
{
    return intersect(other.complement());
}

IntervalRegion IntervalRegion::shift(std::int64_t delta) const
{
    IntervalRegion r;
    for (const auto& iv : parts_) {
        std::int64_t lo = iv.lo == kNegInf ? kNegInf : iv.lo + delta;
        std::int64_t hi = iv.hi == kPosInf ? kPosInf : iv.hi + delta;
        r.parts_.push_back({lo, hi});
    }
    return r;
}

std::string IntervalRegion::to_string() const
{
    if (parts_.empty())
        return "∅";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0)
            out += " ∪ ";
        const auto& iv = parts_[i];
        if (iv.lo == iv.hi) {
            out += "{" + std::to_string(iv.lo) + "}";
            continue;
        }
        out += iv.lo == kNegInf ? "(-inf" : "[" + std::to_string(iv.lo);
        out += ",";
        out += iv.hi == kPosInf ? "+inf)" : std::to_string(iv.hi) + "]";
    }
    return out;
}

} // namespace reachsim
