// Copyright (c) reachsim contributors.
// SPDX-License-Identifier: Apache-2.0
#include "reachsim/bench.hpp"
#include "reachsim/check.hpp"
#include "reachsim/errors.hpp"
#include "reachsim/explicit_engine.hpp"
#include "reachsim/generate.hpp"
#include "reachsim/json_io.hpp"
#include "reachsim/oracle.hpp"
#include "reachsim/partition_engine.hpp"
#include "reachsim/region_algebra.hpp"
#include "reachsim/twopr_engine.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace reachsim;

namespace {

constexpr int kPass = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;
constexpr int kIncomplete = 3;

struct InstanceArgs {
    std::string input;
    std::string init;
    std::string preorder = "universal";
    bool close = false;

    void attach(CLI::App* app, bool need_input = true)
    {
        auto* opt = app->add_option("--input", input, "system in Aldebaran (.aut) format");
        if (need_input)
            opt->required();
        app->add_option("--init", init, "initial states, one id per line (overrides the header)");
        app->add_option("--preorder", preorder, "universal | identity | partition:FILE | pairs:FILE");
        app->add_flag("--close", close, "close pairs:FILE reflexively and transitively");
    }

    [[nodiscard]] Lts load_system() const
    {
        Lts lts = load_aut(input);
        if (!init.empty())
            lts = lts.with_initial(load_init_sidecar(init, lts.state_count()));
        return lts;
    }

    [[nodiscard]] std::string name() const { return std::filesystem::path(input).stem().string(); }
};

struct StrategyArgs {
    std::string branch = "search-first";
    std::string pick = "min";
    std::uint64_t seed = 0;

    void attach(CLI::App* app)
    {
        app->add_option("--branch", branch, "search-first | refine-first | alternating | random");
        app->add_option("--pick", pick, "min | random");
        app->add_option("--seed", seed, "seed for random choices");
    }

    [[nodiscard]] Strategy resolve() const
    {
        auto b = parse_branch_policy(branch);
        auto p = parse_pick_policy(pick);
        if (!b)
            throw InputError("unknown branch policy " + branch);
        if (!p)
            throw InputError("unknown pick policy " + pick);
        return {*b, *p, seed};
    }
};

void emit(const Json& j, const std::string& path)
{
    const std::string text = j.dump(2) + "\n";
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw InputError("cannot write " + path);
    out << text;
}

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out)
        throw InputError("cannot write " + path);
    out << text;
}

StateSet resolve_sigma(const std::string& policy, const Lts& lts)
{
    if (policy == "empty")
        return lts.empty_set();
    if (policy == "initials")
        return lts.initial();
    return load_init_sidecar(policy, lts.state_count());
}

EngineOptions engine_options(const StrategyArgs& s, std::uint64_t cap, double timeout, bool check)
{
    EngineOptions opt;
    opt.strategy = s.resolve();
    opt.cap = cap;
    opt.check_invariants = check;
    if (timeout > 0)
        opt.deadline = std::chrono::steady_clock::now() +
                       std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                           std::chrono::duration<double>(timeout));
    return opt;
}

int run_demo(const std::string& demo, const EngineOptions& opt, const std::string& output)
{
    SymbolicSystem sys;
    std::vector<IntervalRegion> classes;
    if (demo == "fan-in") {
        sys = fan_in_to_zero_system();
        classes = {sys.universe};
    } else if (demo == "negative-chain") {
        sys = negative_chain_system();
        classes = {IntervalRegion::at_most(-1), IntervalRegion::point(0), IntervalRegion::point(1)};
    } else {
        throw InputError("unknown demo " + demo + " (fan-in | negative-chain)");
    }
    IntervalAlgebra alg(sys);
    auto out = run_twopr(alg, classes, {}, opt);
    emit(outcome_json(demo, out), output);
    return out.final() ? kPass : kIncomplete;
}

Relation reference_if(bool check, const Lts& lts, const Relation& r_init)
{
    return check ? oracle::simulation_pairwise(lts, r_init) : Relation::empty(0);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Reachable simulation preorder and partition on labeled transition systems"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "run one engine and print its result as JSON");
    InstanceArgs run_inst;
    run_inst.attach(run, false);
    StrategyArgs run_strat;
    run_strat.attach(run);
    std::string engine = "explicit";
    std::string sigma_policy = "empty";
    std::string output;
    std::string demo;
    std::uint64_t cap = 10'000'000;
    double timeout = 0;
    bool check_inv = false;
    run->add_option("--engine", engine, "explicit | partition | twopr | sim | refalgo | oracle")
        ->check(CLI::IsMember({"explicit", "partition", "twopr", "sim", "refalgo", "oracle"}));
    run->add_option("--sigma", sigma_policy, "initial σ: empty | initials | FILE");
    run->add_option("--demo", demo, "interval system for the 2PR engine: fan-in | negative-chain");
    run->add_option("--cap", cap, "iteration cap");
    run->add_option("--timeout", timeout, "wall-clock limit in seconds (0: none)");
    run->add_option("--output", output, "JSON output path (default stdout)");
    run->add_flag("--check-invariants", check_inv, "check loop invariants at every iteration");

    // oracle
    auto* orc = app.add_subcommand("oracle", "compute ground truth by brute force");
    InstanceArgs orc_inst;
    orc_inst.attach(orc);
    std::string orc_output;
    orc->add_option("--output", orc_output, "JSON output path (default stdout)");

    // check
    auto* chk = app.add_subcommand("check", "check a run result against the oracle");
    InstanceArgs chk_inst;
    chk_inst.attach(chk);
    std::string result_path;
    std::string check_kind = "auto";
    chk->add_option("--result", result_path, "JSON written by run")->required();
    chk->add_option("--kind", check_kind, "preorder | partition | twopr | auto (from the engine field)");

    // gen-random
    auto* gen = app.add_subcommand("gen-random", "write a seeded random system");
    std::size_t gen_states = 8, gen_labels = 2;
    double gen_density = 0.15;
    std::uint64_t gen_seed = 0;
    bool gen_scc = false;
    std::string gen_output;
    gen->add_option("--states", gen_states, "number of states");
    gen->add_option("--labels", gen_labels, "number of labels");
    gen->add_option("--density", gen_density, "probability of each (x, a, y)");
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_flag("--scc", gen_scc, "add a random cycle through all states");
    gen->add_option("--output", gen_output, ".aut output path (default stdout)");

    // unroll
    auto* unr = app.add_subcommand("unroll", "layered copies with initial states in the last layer");
    InstanceArgs unr_inst;
    unr_inst.attach(unr);
    std::size_t unr_k = 1;
    std::string unr_output;
    unr->add_option("--k", unr_k, "number of extra layers");
    unr->add_option("--output", unr_output, ".aut output path")->required();

    // bench
    auto* bch = app.add_subcommand("bench", "time the explicit and 2PR engines on a suite");
    std::vector<std::string> bench_inputs;
    std::string bench_engines = "explicit,twopr";
    std::size_t bench_repeat = 1;
    double bench_timeout = 60;
    std::string bench_csv;
    std::string bench_sigma = "empty";
    std::string bench_preorder = "universal";
    bch->add_option("inputs", bench_inputs, "directories or .aut files")->required();
    bch->add_option("--engines", bench_engines, "comma-separated engines");
    bch->add_option("--repeat", bench_repeat, "repetitions per engine");
    bch->add_option("--timeout", bench_timeout, "per-run wall-clock limit in seconds");
    bch->add_option("--sigma", bench_sigma, "initial σ: empty | initials");
    bch->add_option("--preorder", bench_preorder, "universal | identity");
    bch->add_option("--csv", bench_csv, "CSV output path (default stdout)");

    // validate
    auto* val = app.add_subcommand("validate", "parse a system and an initial preorder");
    InstanceArgs val_inst;
    val_inst.attach(val);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            const EngineOptions opt_base = engine_options(run_strat, cap, timeout, check_inv);
            if (!demo.empty()) {
                if (engine != "twopr")
                    throw InputError("--demo needs --engine twopr");
                return run_demo(demo, opt_base, output);
            }
            if (run_inst.input.empty())
                throw InputError("--input is required");
            const Lts lts = run_inst.load_system();
            const Relation r_init = load_preorder(run_inst.preorder, lts.state_count(), run_inst.close);
            const std::string name = run_inst.name();
            if (engine == "oracle") {
                emit(ground_truth_json(name, oracle::ground_truth(lts, r_init)), output);
                return kPass;
            }
            const Relation reference = reference_if(check_inv, lts, r_init);
            EngineOptions opt = opt_base;
            if (check_inv)
                opt.reference = &reference;
            if (engine == "sim") {
                ExplicitOutcome o;
                o.relation = sim_fixpoint(lts, r_init, opt);
                o.sigma = lts.empty_set();
                emit(outcome_json(name, engine, o), output);
                return kPass;
            }
            if (engine == "twopr") {
                auto o = run_twopr(lts, r_init, resolve_sigma(sigma_policy, lts), opt);
                emit(outcome_json(name, o), output);
                return o.final() ? kPass : kIncomplete;
            }
            ExplicitOutcome o;
            if (engine == "explicit")
                o = run_explicit(lts, r_init, resolve_sigma(sigma_policy, lts), opt);
            else if (engine == "partition")
                o = run_partition(lts, r_init, resolve_sigma(sigma_policy == "empty" ? "initials" : sigma_policy, lts),
                                  opt);
            else
                o = run_refalgo(lts, r_init, opt);
            emit(outcome_json(name, engine, o), output);
            return o.final() ? kPass : kIncomplete;
        }
        if (*orc) {
            const Lts lts = orc_inst.load_system();
            const Relation r_init = load_preorder(orc_inst.preorder, lts.state_count(), orc_inst.close);
            emit(ground_truth_json(orc_inst.name(), oracle::ground_truth(lts, r_init)), orc_output);
            return kPass;
        }
        if (*chk) {
            const Lts lts = chk_inst.load_system();
            const Relation r_init = load_preorder(chk_inst.preorder, lts.state_count(), chk_inst.close);
            std::ifstream in(result_path);
            if (!in)
                throw InputError("cannot open " + result_path);
            Json j;
            try {
                in >> j;
            } catch (const nlohmann::json::exception& e) {
                throw InputError(std::string("malformed result JSON: ") + e.what());
            }
            const ParsedResult res = parse_result(j, lts.state_count());
            if (res.instance != chk_inst.name())
                throw InputError("result is for instance " + res.instance + ", not " + chk_inst.name());
            const auto truth = oracle::ground_truth(lts, r_init);
            std::string kind = check_kind;
            if (kind == "auto")
                kind = res.engine == "partition" ? "partition" : res.engine == "twopr" ? "twopr" : "preorder";
            CheckReport rep;
            if (kind == "preorder")
                rep = check_reachable_preorder(res.relation, res.sigma, truth);
            else if (kind == "partition")
                rep = check_reachable_partition(res.relation, res.sigma, truth);
            else if (kind == "twopr" && res.twopr)
                rep = check_reachable_twopr(*res.twopr, res.sigma, truth);
            else
                throw InputError("cannot check " + kind + " on this result");
            std::cout << rep.describe();
            return rep.pass() ? kPass : kCheckFailed;
        }
        if (*gen) {
            const Lts lts = gen_scc ? gen_random_scc(gen_states, gen_labels, gen_density, gen_seed)
                                    : gen_random(gen_states, gen_labels, gen_density, gen_seed);
            if (gen_output.empty())
                std::cout << serialize_aut(lts);
            else
                write_text(gen_output, serialize_aut(lts));
            return kPass;
        }
        if (*unr) {
            const Lts lts = unroll(unr_inst.load_system(), unr_k);
            write_text(unr_output, serialize_aut(lts));
            if (lts.initial().count() > 1)
                write_text(unr_output + ".init", serialize_init_sidecar(lts.initial()));
            return kPass;
        }
        if (*bch) {
            std::vector<std::filesystem::path> files;
            for (const auto& in : bench_inputs) {
                if (std::filesystem::is_directory(in)) {
                    for (const auto& e : std::filesystem::directory_iterator(in))
                        if (e.path().extension() == ".aut")
                            files.push_back(e.path());
                } else {
                    files.emplace_back(in);
                }
            }
            std::sort(files.begin(), files.end());
            std::vector<std::string> engines;
            std::stringstream ss(bench_engines);
            for (std::string e; std::getline(ss, e, ',');)
                engines.push_back(e);

            std::ofstream file;
            if (!bench_csv.empty()) {
                file.open(bench_csv);
                if (!file)
                    throw InputError("cannot write " + bench_csv);
            }
            std::ostream& out = bench_csv.empty() ? std::cout : file;
            write_csv_header(out);
            std::vector<BenchRow> rows;
            bool chains_ok = true;
            for (const auto& f : files) {
                Lts lts = load_aut(f.string());
                const auto sidecar = f.string() + ".init";
                if (std::filesystem::exists(sidecar))
                    lts = lts.with_initial(load_init_sidecar(sidecar, lts.state_count()));
                const Relation r_init = load_preorder(bench_preorder, lts.state_count(), false);
                const StateSet sigma = resolve_sigma(bench_sigma, lts);
                for (std::size_t rep = 0; rep < bench_repeat; ++rep) {
                    for (const auto& e : engines) {
                        rows.push_back(bench_run(f.stem().string(), e, lts, r_init, sigma, bench_timeout, rep));
                        write_csv_row(out, rows.back());
                        chains_ok = chains_ok && chains_hold(rows.back());
                    }
                }
            }
            if (!rows.empty()) {
                out << '\n';
                write_gain_rows(out, rows);
            }
            if (!chains_ok) {
                std::cerr << "block-count inequalities violated\n";
                return kCheckFailed;
            }
            const bool any_timeout =
                std::any_of(rows.begin(), rows.end(), [](const BenchRow& r) { return r.timed_out; });
            return any_timeout ? kIncomplete : kPass;
        }
        if (*val) {
            const Lts lts = val_inst.load_system();
            const Relation r = load_preorder(val_inst.preorder, lts.state_count(), val_inst.close);
            std::cout << "states " << lts.state_count() << ", labels " << lts.label_count() << ", transitions "
                      << lts.transition_count() << ", initial " << lts.initial().count() << ", reachable "
                      << post_star(lts).count() << "\n";
            std::cout << "preorder: " << preorder_check(r).describe() << "\n";
            return kPass;
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kPass;
}
