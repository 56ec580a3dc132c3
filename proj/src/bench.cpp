// Copyright (c) reachsim contributors.
// SPDX-License-Identifier: Apache-2.0
#include "reachsim/bench.hpp"

#include "reachsim/errors.hpp"
#include "reachsim/explicit_engine.hpp"
#include "reachsim/twopr_engine.hpp"

#include <chrono>
#include <iomanip>
#include <set>
#include <unordered_set>

namespace reachsim {

bool chains_hold(const BenchRow& row)
{
    if (row.timed_out)
        return true;
    if (row.engine == "twopr")
        return row.states >= row.blocks && row.blocks >= row.induced_blocks && row.induced_blocks >= row.reachable;
    return row.states >= row.blocks && row.blocks >= row.reachable;
}

BenchRow bench_run(const std::string& protocol, const std::string& engine, const Lts& lts, const Relation& r_init,
                   const StateSet& sigma_init, double timeout_seconds, std::size_t repetition)
{
    BenchRow row{protocol, engine, repetition, lts.transition_count(), lts.state_count()};
    EngineOptions opt;
    const auto start = std::chrono::steady_clock::now();
    opt.deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                               std::chrono::duration<double>(timeout_seconds));
    if (engine == "explicit") {
        auto out = run_explicit(lts, r_init, sigma_init, opt);
        row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        row.timed_out = !out.final();
        row.sigma = out.sigma.count();
        std::unordered_set<StateSet, StateSetHash> all;
        std::unordered_set<StateSet, StateSetHash> meeting;
        for (const auto& p : out.relation.principals()) {
            all.insert(p);
            if (p.intersects(out.sigma))
                meeting.insert(p);
        }
        row.blocks = row.induced_blocks = all.size();
        row.reachable = meeting.size();
    } else if (engine == "twopr") {
        auto out = run_twopr(lts, r_init, sigma_init, opt);
        row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        row.timed_out = !out.final();
        row.sigma = out.sigma.size();
        StateSet sigma(lts.state_count());
        for (StateId s : out.sigma)
            sigma.insert(s);
        std::unordered_set<StateSet, StateSetHash> all;
        std::unordered_set<StateSet, StateSetHash> meeting;
        for (BlockHandle b : out.twopr.p.live()) {
            StateSet u = tau_union(out.twopr, b);
            if (u.intersects(sigma))
                meeting.insert(u);
            all.insert(std::move(u));
        }
        row.blocks = out.twopr.p.live_count();
        row.induced_blocks = all.size();
        row.reachable = meeting.size();
    } else {
        throw InputError("bench supports the explicit and twopr engines, not " + engine);
    }
    return row;
}

std::optional<double> gain(const std::vector<BenchRow>& rows, const std::string& protocol)
{
    double t1 = 0, t2 = 0;
    std::size_t n1 = 0, n2 = 0;
    for (const auto& r : rows) {
        if (r.protocol != protocol)
            continue;
        if (r.timed_out)
            return std::nullopt;
        if (r.engine == "explicit") {
            t1 += r.seconds;
            ++n1;
        } else if (r.engine == "twopr") {
            t2 += r.seconds;
            ++n2;
        }
    }
    if (n1 == 0 || n2 == 0 || t1 <= 0)
        return std::nullopt;
    t1 /= static_cast<double>(n1);
    t2 /= static_cast<double>(n2);
    return (t1 - t2) / t1;
}

void write_csv_header(std::ostream& out)
{
    out << "protocol,engine,repetition,transitions,states,sigma,P,P_induced,r,seconds,timeout\n";
}

void write_csv_row(std::ostream& out, const BenchRow& row)
{
    out << row.protocol << ',' << row.engine << ',' << row.repetition << ',' << row.transitions << ',' << row.states
        << ',';
    if (row.timed_out) {
        out << "†,†,†,†,†,†\n";
        return;
    }
    out << row.sigma << ',' << row.blocks << ',' << row.induced_blocks << ',' << row.reachable << ','
        << std::fixed << std::setprecision(6) << row.seconds << std::defaultfloat << ",\n";
}

void write_gain_rows(std::ostream& out, const std::vector<BenchRow>& rows)
{
    out << "protocol,gain\n";
    std::set<std::string> seen;
    for (const auto& r : rows) {
        if (!seen.insert(r.protocol).second)
            continue;
        if (auto g = gain(rows, r.protocol))
            out << r.protocol << ',' << std::fixed << std::setprecision(4) << *g << std::defaultfloat << '\n';
        else
            out << r.protocol << ",†\n";
    }
}

} // namespace reachsim
