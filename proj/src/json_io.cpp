// Copyright (c) reachsim contributors.
// SPDX-License-Identifier: Apache-2.0
#include "reachsim/json_io.hpp"

#include "reachsim/errors.hpp"

#include <unordered_map>

namespace reachsim {

Json to_json(const StateSet& s)
{
    Json a = Json::array();
    s.for_each([&](StateId x) { a.push_back(x); });
    return a;
}

Json to_json(const Counters& c)
{
    return Json{{"searchSteps", c.search_steps}, {"idleSearchSteps", c.idle_search_steps},
                {"refineSteps", c.refine_steps}, {"expandSteps", c.expand_steps},
                {"pSplits", c.p_splits},         {"qSplits", c.q_splits},
                {"iterations", c.iterations}};
}

Json to_json(const IntervalRegion& r)
{
    Json a = Json::array();
    for (const auto& iv : r.intervals()) {
        Json lo = iv.lo == IntervalRegion::kNegInf ? Json(nullptr) : Json(iv.lo);
        Json hi = iv.hi == IntervalRegion::kPosInf ? Json(nullptr) : Json(iv.hi);
        a.push_back(Json::array({lo, hi}));
    }
    return a;
}

void put_relation(Json& out, const Relation& r)
{
    const Partition p = group_by_principal(r);
    Json principals = Json::object();
    Json blocks = Json::array();
    for (std::size_t i = 0; i < p.size(); ++i) {
        const StateId rep = *p.block(i).first();
        principals[std::to_string(rep)] = to_json(r.principal(rep));
        blocks.push_back(to_json(p.block(i)));
    }
    out["principals"] = std::move(principals);
    out["blocks"] = std::move(blocks);
}

namespace {

template <class Region, class F>
Json twopr_json(const BasicTwoPr<Region>& t, F&& region_json)
{
    Json p = Json::object();
    Json q = Json::object();
    Json tau = Json::object();
    for (BlockHandle h : t.p.live()) {
        p[std::to_string(h)] = region_json(t.p.region(h));
        tau[std::to_string(h)] = t.tau[h];
    }
    for (BlockHandle h : t.q.live())
        q[std::to_string(h)] = region_json(t.q.region(h));
    return Json{{"P", p}, {"Q", q}, {"tau", tau}};
}

Json header(const std::string& instance, const std::string& engine)
{
    return Json{{"instance", instance}, {"engine", engine}};
}

} // namespace

Json outcome_json(const std::string& instance, const std::string& engine, const ExplicitOutcome& o)
{
    Json j = header(instance, engine);
    j["sigma"] = to_json(o.sigma);
    put_relation(j, o.relation);
    j["counters"] = to_json(o.counters);
    j["final"] = o.final();
    j["termination"] = to_string(o.termination);
    if (engine == "partition")
        j["handedOff"] = o.handed_off;
    return j;
}

Json outcome_json(const std::string& instance, const TwoPrOutcome<FiniteAlgebra>& o)
{
    Json j = header(instance, "twopr");
    j["sigma"] = o.sigma;
    put_relation(j, twopr_to_relation(o.twopr));
    j["counters"] = to_json(o.counters);
    j["final"] = o.final();
    j["termination"] = to_string(o.termination);
    j["twopr"] = twopr_json(o.twopr, [](const StateSet& s) { return to_json(s); });
    return j;
}

Json outcome_json(const std::string& instance, const TwoPrOutcome<IntervalAlgebra>& o)
{
    Json j = header(instance, "twopr");
    j["sigma"] = o.sigma;
    j["counters"] = to_json(o.counters);
    j["final"] = o.final();
    j["termination"] = to_string(o.termination);
    j["twopr"] = twopr_json(o.twopr, [](const IntervalRegion& r) { return to_json(r); });
    return j;
}

Json ground_truth_json(const std::string& instance, const oracle::GroundTruth& g)
{
    Json j = header(instance, "oracle");
    j["reach"] = to_json(g.reach);
    put_relation(j, g.rsim);
    Json psim = Json::array();
    for (std::size_t i = 0; i < g.psim.size(); ++i)
        psim.push_back(to_json(g.psim.block(i)));
    j["psim"] = std::move(psim);
    j["principalsIntersecting"] = g.principals_intersecting;
    j["principalsGenerated"] = g.principals_generated;
    j["reachableBlocks"] = g.reachable_blocks;
    return j;
}

namespace {

StateSet read_states(const Json& a, std::size_t n, const char* what)
{
    if (!a.is_array())
        throw InputError(std::string(what) + " must be an array of state ids");
    StateSet s(n);
    for (const auto& v : a) {
        if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= n)
            throw InputError(std::string(what) + " holds an invalid state id");
        s.insert(static_cast<StateId>(v.get<std::uint64_t>()));
    }
    return s;
}

} // namespace

ParsedResult parse_result(const Json& j, std::size_t n)
{
    try {
        ParsedResult out{j.at("instance").get<std::string>(), j.at("engine").get<std::string>(), Relation::empty(n),
                         read_states(j.at("sigma"), n, "sigma"), std::nullopt, j.value("final", true)};
        const auto& principals = j.at("principals");
        std::vector<bool> covered(n, false);
        for (const auto& block : j.at("blocks")) {
            const StateSet b = read_states(block, n, "block");
            if (b.empty())
                throw InputError("empty block in result");
            const std::string key = std::to_string(*b.first());
            if (!principals.contains(key))
                throw InputError("no principal for block " + key);
            const StateSet pr = read_states(principals.at(key), n, "principal");
            b.for_each([&](StateId x) {
                if (covered[x])
                    throw InputError("state " + std::to_string(x) + " appears in two blocks");
                covered[x] = true;
                out.relation.principal(x) = pr;
            });
        }
        for (std::size_t x = 0; x < n; ++x)
            if (!covered[x])
                throw InputError("state " + std::to_string(x) + " is in no block");
        if (j.contains("twopr")) {
            const auto& t = j.at("twopr");
            TwoPr tp;
            std::unordered_map<std::string, BlockHandle> q_index;
            for (const auto& [key, states] : t.at("Q").items())
                q_index[key] = tp.q.mint(read_states(states, n, "Q block"));
            for (const auto& [key, states] : t.at("P").items()) {
                std::vector<BlockHandle> image;
                for (const auto& h : t.at("tau").at(key)) {
                    auto it = q_index.find(std::to_string(h.get<std::uint64_t>()));
                    if (it == q_index.end())
                        throw InputError("τ names an unknown Q block");
                    image.push_back(it->second);
                }
                tp.mint_p(read_states(states, n, "P block"), image);
            }
            if (auto bad = validate_twopr(tp, n))
                throw InputError("malformed triple: " + *bad);
            out.twopr = std::move(tp);
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed result JSON: ") + e.what());
    }
}

} // namespace reachsim
