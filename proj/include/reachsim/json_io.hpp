// Copyright (c) reachsim contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "reachsim/explicit_engine.hpp"
#include "reachsim/interval_region.hpp"
#include "reachsim/oracle.hpp"
#include "reachsim/twopr_engine.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace reachsim {

using Json = nlohmann::ordered_json;

[[nodiscard]] Json to_json(const StateSet& s);
[[nodiscard]] Json to_json(const Counters& c);
/// `[lo, hi]` pairs, with null for an unbounded end.
[[nodiscard]] Json to_json(const IntervalRegion& r);

/// "principals" (keyed by the least state of each group of equal principals)
/// and "blocks" (those groups).
void put_relation(Json& out, const Relation& r);

[[nodiscard]] Json outcome_json(const std::string& instance, const std::string& engine, const ExplicitOutcome& o);
[[nodiscard]] Json outcome_json(const std::string& instance, const TwoPrOutcome<FiniteAlgebra>& o);
[[nodiscard]] Json outcome_json(const std::string& instance, const TwoPrOutcome<IntervalAlgebra>& o);
[[nodiscard]] Json ground_truth_json(const std::string& instance, const oracle::GroundTruth& g);

/// An engine result read back for checking.
struct ParsedResult {
    std::string instance;
    std::string engine;
    Relation relation;
    StateSet sigma;
    std::optional<TwoPr> twopr;
    bool final = true;
};

/// Throws InputError on malformed or mismatched input.
[[nodiscard]] ParsedResult parse_result(const Json& j, std::size_t n_states);

} // namespace reachsim
