// Copyright (c) reachsim contributors.
// SPDX-License-Identifier: Apache-2.0
#include "reachsim/lts.hpp"

#include "reachsim/errors.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <istream>
#include <sstream>
#include <tuple>

namespace reachsim {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::optional<std::uint64_t> parse_uint(std::string_view s)
{
    s = trim(s);
    if (s.empty())
        return std::nullopt;
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        return std::nullopt;
    return v;
}

} // namespace

Lts::Lts(std::size_t n_states, std::vector<std::string> labels, std::vector<Transition> transitions,
         StateSet initial)
    : n_states_(n_states), labels_(std::move(labels)), transitions_(std::move(transitions)),
      initial_(std::move(initial))
{
    if (initial_.universe() != n_states_)
        throw InputError("initial-state set does not match the state count");
    for (const auto& t : transitions_) {
        if (t.src >= n_states_ || t.dst >= n_states_)
            throw InputError("transition endpoint out of range");
        if (t.label >= labels_.size())
            throw InputError("transition label out of range");
    }
    std::sort(transitions_.begin(), transitions_.end(), [](const Transition& a, const Transition& b) {
        return std::tie(a.label, a.src, a.dst) < std::tie(b.label, b.src, b.dst);
    });
    transitions_.erase(std::unique(transitions_.begin(), transitions_.end()), transitions_.end());

    fwd_.resize(labels_.size());
    bwd_.resize(labels_.size());
    for (auto& row : fwd_)
        row.offsets.assign(n_states_ + 1, 0);
    for (auto& row : bwd_)
        row.offsets.assign(n_states_ + 1, 0);
    for (const auto& t : transitions_) {
        ++fwd_[t.label].offsets[t.src + 1];
        ++bwd_[t.label].offsets[t.dst + 1];
    }
    for (LabelId a = 0; a < labels_.size(); ++a) {
        for (std::size_t x = 0; x < n_states_; ++x) {
            fwd_[a].offsets[x + 1] += fwd_[a].offsets[x];
            bwd_[a].offsets[x + 1] += bwd_[a].offsets[x];
        }
        fwd_[a].targets.resize(fwd_[a].offsets[n_states_]);
        bwd_[a].targets.resize(bwd_[a].offsets[n_states_]);
    }
    std::vector<std::size_t> fpos(n_states_), bpos(n_states_);
    for (LabelId a = 0; a < labels_.size(); ++a) {
        std::copy(fwd_[a].offsets.begin(), fwd_[a].offsets.end() - 1, fpos.begin());
        std::copy(bwd_[a].offsets.begin(), bwd_[a].offsets.end() - 1, bpos.begin());
        // transitions_ is sorted by (label, src, dst), so forward rows come out sorted;
        // backward rows are filled in src order, which is sorted for a fixed dst.
        auto lo = std::lower_bound(transitions_.begin(), transitions_.end(), a,
                                   [](const Transition& t, LabelId l) { return t.label < l; });
        for (auto it = lo; it != transitions_.end() && it->label == a; ++it) {
            fwd_[a].targets[fpos[it->src]++] = it->dst;
            bwd_[a].targets[bpos[it->dst]++] = it->src;
        }
    }
}

std::optional<LabelId> Lts::find_label(std::string_view name) const
{
    for (LabelId a = 0; a < labels_.size(); ++a)
        if (labels_[a] == name)
            return a;
    return std::nullopt;
}

StateSet Lts::post(LabelId a, const StateSet& xs) const
{
    StateSet out(n_states_);
    xs.for_each([&](StateId x) {
        for (StateId y : successors(a, x))
            out.insert(y);
    });
    return out;
}

StateSet Lts::pre(LabelId a, const StateSet& ys) const
{
    StateSet out(n_states_);
    ys.for_each([&](StateId y) {
        for (StateId x : predecessors(a, y))
            out.insert(x);
    });
    return out;
}

StateSet Lts::post(const StateSet& xs) const
{
    StateSet out(n_states_);
    for (LabelId a = 0; a < labels_.size(); ++a)
        out |= post(a, xs);
    return out;
}

StateSet Lts::pre(const StateSet& ys) const
{
    StateSet out(n_states_);
    for (LabelId a = 0; a < labels_.size(); ++a)
        out |= pre(a, ys);
    return out;
}

Lts Lts::with_initial(StateSet initial) const
{
    if (initial.universe() != n_states_)
        throw InputError("initial-state set does not match the state count");
    Lts copy = *this;
    copy.initial_ = std::move(initial);
    return copy;
}

LabelId LtsBuilder::label(const std::string& name)
{
    auto [it, inserted] = index_.try_emplace(name, static_cast<LabelId>(labels_.size()));
    if (inserted)
        labels_.push_back(name);
    return it->second;
}

Lts LtsBuilder::build() const
{
    return Lts(n_states_, labels_, transitions_, initial_);
}

Lts parse_aut(std::istream& in)
{
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::uint64_t> first_init, n_trans, n_states;

    while (std::getline(in, line)) {
        ++line_no;
        auto s = trim(line);
        if (s.empty())
            continue;
        if (s.substr(0, 3) != "des")
            throw ParseError(line_no, "expected header 'des (init, transitions, states)'");
        s = trim(s.substr(3));
        if (s.size() < 2 || s.front() != '(' || s.back() != ')')
            throw ParseError(line_no, "malformed header");
        s = s.substr(1, s.size() - 2);
        auto c1 = s.find(',');
        auto c2 = c1 == std::string_view::npos ? c1 : s.find(',', c1 + 1);
        if (c2 == std::string_view::npos)
            throw ParseError(line_no, "malformed header");
        first_init = parse_uint(s.substr(0, c1));
        n_trans = parse_uint(s.substr(c1 + 1, c2 - c1 - 1));
        n_states = parse_uint(s.substr(c2 + 1));
        if (!first_init || !n_trans || !n_states)
            throw ParseError(line_no, "malformed header field");
        break;
    }
    if (!n_states)
        throw ParseError(line_no, "missing header");
    if (*first_init >= *n_states)
        throw ParseError(line_no, "initial state out of range");

    LtsBuilder builder(static_cast<std::size_t>(*n_states));
    builder.add_initial(static_cast<StateId>(*first_init));
    std::uint64_t seen = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto s = trim(line);
        if (s.empty())
            continue;
        if (s.front() != '(' || s.back() != ')')
            throw ParseError(line_no, "expected '(src, \"label\", dst)'");
        s = s.substr(1, s.size() - 2);
        auto first_comma = s.find(',');
        auto last_comma = s.rfind(',');
        if (first_comma == std::string_view::npos || first_comma == last_comma)
            throw ParseError(line_no, "expected three fields");
        auto src = parse_uint(s.substr(0, first_comma));
        auto dst = parse_uint(s.substr(last_comma + 1));
        if (!src || !dst)
            throw ParseError(line_no, "malformed state index");
        auto label = trim(s.substr(first_comma + 1, last_comma - first_comma - 1));
        if (!label.empty() && label.front() == '"') {
            if (label.size() < 2 || label.back() != '"')
                throw ParseError(line_no, "unterminated label string");
            label = label.substr(1, label.size() - 2);
        }
        if (*src >= *n_states || *dst >= *n_states)
            throw ParseError(line_no, "state index out of range (n_states = " + std::to_string(*n_states) + ")");
        builder.add(static_cast<StateId>(*src), std::string(label), static_cast<StateId>(*dst));
        ++seen;
    }
    if (seen != *n_trans)
        throw ParseError(line_no, "header declares " + std::to_string(*n_trans) + " transitions, found " +
                                      std::to_string(seen));
    return builder.build();
}

Lts parse_aut_string(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_aut(in);
}

Lts load_aut(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    return parse_aut(in);
}

std::string serialize_aut(const Lts& lts)
{
    std::ostringstream out;
    auto init = lts.initial().first();
    out << "des (" << (init ? *init : 0) << "," << lts.transition_count() << "," << lts.state_count() << ")\n";
    for (const auto& t : lts.transitions())
        out << "(" << t.src << ",\"" << lts.label_name(t.label) << "\"," << t.dst << ")\n";
    return out.str();
}

StateSet parse_init_sidecar(std::istream& in, std::size_t n_states)
{
    StateSet out(n_states);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto s = trim(line);
        if (s.empty())
            continue;
        auto v = parse_uint(s);
        if (!v)
            throw ParseError(line_no, "expected a decimal state id");
        if (*v >= n_states)
            throw ParseError(line_no, "state index out of range");
        out.insert(static_cast<StateId>(*v));
    }
    return out;
}

StateSet load_init_sidecar(const std::string& path, std::size_t n_states)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    return parse_init_sidecar(in, n_states);
}

std::string serialize_init_sidecar(const StateSet& initial)
{
    std::ostringstream out;
    for (StateId x : initial)
        out << x << "\n";
    return out.str();
}

StateSet post_star(const Lts& lts)
{
    return post_star(lts, lts.initial());
}

StateSet post_star(const Lts& lts, const StateSet& from)
{
    StateSet seen = from;
    std::deque<StateId> work(from.begin(), from.end());
    while (!work.empty()) {
        StateId x = work.front();
        work.pop_front();
        for (LabelId a = 0; a < lts.label_count(); ++a) {
            for (StateId y : lts.successors(a, x)) {
                if (!seen.contains(y)) {
                    seen.insert(y);
                    work.push_back(y);
                }
            }
        }
    }
    return seen;
}

} // namespace reachsim
