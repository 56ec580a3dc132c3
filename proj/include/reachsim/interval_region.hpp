// Copyright (c) reachsim contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace reachsim {

/// Finite union of integer intervals with optional unbounded ends.
///
/// Canonical form: intervals are non-empty, sorted, and separated by at least
/// one missing integer (no overlap, no adjacency). The sentinels kNegInf and
/// kPosInf stand for the unbounded ends; finite points must lie strictly between.
class IntervalRegion {
public:
    static constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min();
    static constexpr std::int64_t kPosInf = std::numeric_limits<std::int64_t>::max();

    struct Interval {
        std::int64_t lo;
        std::int64_t hi;
        friend bool operator==(const Interval&, const Interval&) = default;
    };

    IntervalRegion() = default;

    /// Canonicalizes an arbitrary list; empty intervals (lo > hi) are dropped.
    static IntervalRegion from_intervals(std::vector<Interval> parts);
    static IntervalRegion point(std::int64_t v) { return range(v, v); }
    static IntervalRegion range(std::int64_t lo, std::int64_t hi);
    static IntervalRegion at_least(std::int64_t lo) { return range(lo, kPosInf); }
    static IntervalRegion at_most(std::int64_t hi) { return range(kNegInf, hi); }
    static IntervalRegion all() { return range(kNegInf, kPosInf); }

    [[nodiscard]] const std::vector<Interval>& intervals() const { return parts_; }
    [[nodiscard]] bool empty() const { return parts_.empty(); }
    [[nodiscard]] bool contains(std::int64_t v) const;
    [[nodiscard]] bool bounded_below() const { return !parts_.empty() && parts_.front().lo != kNegInf; }
    [[nodiscard]] std::optional<std::int64_t> min() const;
    [[nodiscard]] std::optional<std::int64_t> max() const;

    [[nodiscard]] IntervalRegion intersect(const IntervalRegion& other) const;
    [[nodiscard]] IntervalRegion unite(const IntervalRegion& other) const;
    [[nodiscard]] IntervalRegion subtract(const IntervalRegion& other) const;
    [[nodiscard]] IntervalRegion complement() const;
    [[nodiscard]] bool subset_of(const IntervalRegion& other) const { return subtract(other).empty(); }
    [[nodiscard]] bool intersects(const IntervalRegion& other) const { return !intersect(other).empty(); }

    /// Translates every point by delta; unbounded ends stay unbounded.
    [[nodiscard]] IntervalRegion shift(std::int64_t delta) const;

    /// Text form like "(-inf,-2] ∪ {0} ∪ [3,+inf)"; "∅" when empty.
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const IntervalRegion&, const IntervalRegion&) = default;

private:
    std::vector<Interval> parts_;
};

} // namespace reachsim
