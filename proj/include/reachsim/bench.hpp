// Copyright (c) reachsim contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "reachsim/lts.hpp"
#include "reachsim/relation.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace reachsim {

/// One timed engine run. For the explicit engine, blocks and induced_blocks
/// both count groups of equal principals. For 2PR, blocks is |P| and
/// induced_blocks counts groups of P-blocks with equal ∪τ. reachable counts
/// the principal groups whose principal meets σ.
struct BenchRow {
    std::string protocol;
    std::string engine;
    std::size_t repetition = 0;
    std::size_t transitions = 0;
    std::size_t states = 0;
    std::size_t sigma = 0;
    std::size_t blocks = 0;
    std::size_t induced_blocks = 0;
    std::size_t reachable = 0;
    double seconds = 0.0;
    bool timed_out = false;
};

/// Σ ≥ P ≥ r for explicit rows, Σ ≥ P ≥ P⟨P,τ,Q⟩ ≥ r for 2PR rows. Timed-out rows hold vacuously.
[[nodiscard]] bool chains_hold(const BenchRow& row);

/// Runs one engine ("explicit" or "twopr") with the given per-run wall-clock limit.
[[nodiscard]] BenchRow bench_run(const std::string& protocol, const std::string& engine, const Lts& lts,
                                 const Relation& r_init, const StateSet& sigma_init, double timeout_seconds,
                                 std::size_t repetition = 0);

/// (t_explicit − t_twopr) / t_explicit over mean times, or nothing if either side timed out.
[[nodiscard]] std::optional<double> gain(const std::vector<BenchRow>& rows, const std::string& protocol);

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const BenchRow& row);
/// One summary line per protocol: protocol, explicit mean, twopr mean, gain ("†" on timeout).
void write_gain_rows(std::ostream& out, const std::vector<BenchRow>& rows);

} // namespace reachsim
