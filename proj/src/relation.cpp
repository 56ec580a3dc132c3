// Copyright (c) reachsim contributors.
// SPDX-License-Identifier: Apache-2.0
#include "reachsim/relation.hpp"

#include "reachsim/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_map>

namespace reachsim {

Relation::Relation(std::vector<StateSet> principals) : principals_(std::move(principals))
{
    for (const auto& p : principals_)
        if (p.universe() != principals_.size())
            throw ContractError("principal universe does not match the state count");
}

Relation Relation::empty(std::size_t n)
{
    return Relation(std::vector<StateSet>(n, StateSet(n)));
}

Relation Relation::identity(std::size_t n)
{
    Relation r = empty(n);
    for (StateId x = 0; x < n; ++x)
        r.add(x, x);
    return r;
}

Relation Relation::universal(std::size_t n)
{
    return Relation(std::vector<StateSet>(n, StateSet::full(n)));
}

Relation Relation::from_pairs(std::size_t n, const std::vector<std::pair<StateId, StateId>>& pairs)
{
    Relation r = empty(n);
    for (auto [x, y] : pairs) {
        if (x >= n || y >= n)
            throw InputError("relation pair out of range");
        r.add(x, y);
    }
    return r;
}

Relation Relation::inverse() const
{
    Relation inv = empty(state_count());
    for (StateId x = 0; x < state_count(); ++x)
        principals_[x].for_each([&](StateId y) { inv.add(y, x); });
    return inv;
}

Relation Relation::reflexive_transitive_closure() const
{
    Relation c = *this;
    const auto n = static_cast<StateId>(state_count());
    for (StateId x = 0; x < n; ++x)
        c.add(x, x);
    for (StateId k = 0; k < n; ++k) {
        const StateSet via = c.principals_[k];
        for (StateId i = 0; i < n; ++i)
            if (c.principals_[i].contains(k))
                c.principals_[i] |= via;
    }
    return c;
}

bool Relation::subset_of(const Relation& other) const
{
    if (state_count() != other.state_count())
        return false;
    for (std::size_t x = 0; x < state_count(); ++x)
        if (!principals_[x].subset_of(other.principals_[x]))
            return false;
    return true;
}

std::size_t Relation::pair_count() const
{
    std::size_t n = 0;
    for (const auto& p : principals_)
        n += p.count();
    return n;
}

std::string PreorderReport::describe() const
{
    std::ostringstream out;
    if (not_reflexive_at)
        out << "not reflexive: (" << *not_reflexive_at << "," << *not_reflexive_at << ") missing";
    else if (not_transitive_at) {
        auto [x, y, z] = *not_transitive_at;
        out << "not transitive: (" << x << "," << y << ") and (" << y << "," << z << ") but not (" << x << ","
            << z << ")";
    } else if (not_symmetric_at)
        out << "not symmetric: (" << not_symmetric_at->first << "," << not_symmetric_at->second << ")";
    else
        out << "ok";
    return out.str();
}

PreorderReport preorder_check(const Relation& r)
{
    PreorderReport rep;
    const auto n = static_cast<StateId>(r.state_count());
    for (StateId x = 0; x < n && rep.reflexive; ++x) {
        if (!r.contains(x, x)) {
            rep.reflexive = false;
            rep.not_reflexive_at = x;
        }
    }
    // (x,y) ∈ R requires R(y) ⊆ R(x). Equal principals give equal answers, so
    // the check runs once per distinct principal.
    std::unordered_map<StateSet, StateId, StateSetHash> seen;
    for (StateId x = 0; x < n && rep.transitive; ++x) {
        if (!seen.try_emplace(r.principal(x), x).second)
            continue;
        for (StateId y : r.principal(x)) {
            const StateSet missing = r.principal(y) - r.principal(x);
            if (auto z = missing.first()) {
                rep.transitive = false;
                rep.not_transitive_at = std::array<StateId, 3>{x, y, *z};
                break;
            }
        }
    }
    for (StateId x = 0; x < n && rep.symmetric; ++x) {
        for (StateId y : r.principal(x)) {
            if (!r.contains(y, x)) {
                rep.symmetric = false;
                rep.not_symmetric_at = std::pair{x, y};
                break;
            }
        }
    }
    return rep;
}

Partition Partition::from_blocks(std::size_t n, std::vector<StateSet> blocks)
{
    Partition p;
    p.block_of_.assign(n, SIZE_MAX);
    std::erase_if(blocks, [](const StateSet& b) { return b.empty(); });
    std::sort(blocks.begin(), blocks.end(), [](const StateSet& a, const StateSet& b) { return *a.first() < *b.first(); });
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].universe() != n)
            throw ContractError("block universe does not match the state count");
        for (StateId x : blocks[i]) {
            if (p.block_of_[x] != SIZE_MAX)
                throw ContractError("blocks overlap at state " + std::to_string(x));
            p.block_of_[x] = i;
        }
    }
    for (std::size_t x = 0; x < n; ++x)
        if (p.block_of_[x] == SIZE_MAX)
            throw ContractError("blocks do not cover state " + std::to_string(x));
    p.blocks_ = std::move(blocks);
    return p;
}

Partition Partition::from_class_ids(const std::vector<std::size_t>& class_of)
{
    const std::size_t n = class_of.size();
    std::unordered_map<std::size_t, std::size_t> index;
    std::vector<StateSet> blocks;
    for (StateId x = 0; x < n; ++x) {
        auto [it, inserted] = index.try_emplace(class_of[x], blocks.size());
        if (inserted)
            blocks.emplace_back(n);
        blocks[it->second].insert(x);
    }
    // First-appearance order over ascending x is already ordered by minimum.
    Partition p;
    p.block_of_.resize(n);
    for (StateId x = 0; x < n; ++x)
        p.block_of_[x] = index[class_of[x]];
    p.blocks_ = std::move(blocks);
    return p;
}

Partition Partition::single_block(std::size_t n)
{
    if (n == 0)
        return {};
    return from_class_ids(std::vector<std::size_t>(n, 0));
}

Partition Partition::discrete(std::size_t n)
{
    std::vector<std::size_t> ids(n);
    for (std::size_t x = 0; x < n; ++x)
        ids[x] = x;
    return from_class_ids(ids);
}

bool Partition::finer_than(const Partition& other) const
{
    if (state_count() != other.state_count())
        return false;
    for (const auto& b : blocks_) {
        const auto target = other.block_of(*b.first());
        for (StateId x : b)
            if (other.block_of(x) != target)
                return false;
    }
    return true;
}

Partition meet(const Partition& p, const Partition& q)
{
    if (p.state_count() != q.state_count())
        throw ContractError("meet of partitions over different carriers");
    const std::size_t n = p.state_count();
    std::vector<std::size_t> ids(n);
    for (StateId x = 0; x < n; ++x)
        ids[x] = p.block_of(x) * q.size() + q.block_of(x);
    return Partition::from_class_ids(ids);
}

Partition group_by_principal(const Relation& r)
{
    std::unordered_map<StateSet, std::size_t, StateSetHash> index;
    std::vector<std::size_t> ids(r.state_count());
    for (StateId x = 0; x < r.state_count(); ++x)
        ids[x] = index.try_emplace(r.principal(x), index.size()).first->second;
    return Partition::from_class_ids(ids);
}

Partition kernel_partition(const Relation& r)
{
    if (!preorder_check(r).is_preorder())
        throw ContractError("kernel_partition needs a preorder");
    // For a preorder, x and y are mutually related exactly when their principals coincide.
    return group_by_principal(r);
}

Relation equivalence_of(const Partition& p)
{
    Relation r = Relation::empty(p.state_count());
    for (StateId x = 0; x < p.state_count(); ++x)
        r.principal(x) = p.block(p.block_of(x));
    return r;
}

namespace {

std::vector<std::uint64_t> parse_ids(const std::string& line, std::size_t line_no)
{
    std::vector<std::uint64_t> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw ParseError(line_no, "expected a decimal state id, got '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

std::ifstream open_or_throw(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    return in;
}

} // namespace

Relation parse_partition_lines(std::istream& in, std::size_t n)
{
    std::vector<StateSet> blocks;
    StateSet seen(n);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto ids = parse_ids(line, line_no);
        if (ids.empty())
            continue;
        StateSet b(n);
        for (auto v : ids) {
            if (v >= n)
                throw ParseError(line_no, "state index out of range");
            if (seen.contains(static_cast<StateId>(v)))
                throw ParseError(line_no, "state " + std::to_string(v) + " appears in two blocks");
            seen.insert(static_cast<StateId>(v));
            b.insert(static_cast<StateId>(v));
        }
        blocks.push_back(std::move(b));
    }
    // States not mentioned form one extra block.
    StateSet rest = seen.complement();
    if (!rest.empty())
        blocks.push_back(std::move(rest));
    return equivalence_of(Partition::from_blocks(n, std::move(blocks)));
}

Relation parse_pair_lines(std::istream& in, std::size_t n, bool close)
{
    Relation r = Relation::empty(n);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto ids = parse_ids(line, line_no);
        if (ids.empty())
            continue;
        if (ids.size() != 2)
            throw ParseError(line_no, "expected 'x y'");
        if (ids[0] >= n || ids[1] >= n)
            throw ParseError(line_no, "state index out of range");
        r.add(static_cast<StateId>(ids[0]), static_cast<StateId>(ids[1]));
    }
    if (close)
        return r.reflexive_transitive_closure();
    auto rep = preorder_check(r);
    if (!rep.is_preorder())
        throw InputError("pairs do not form a preorder (" + rep.describe() + "); pass --close to take the closure");
    return r;
}

Relation load_preorder(const std::string& source, std::size_t n, bool close)
{
    if (source == "universal")
        return Relation::universal(n);
    if (source == "identity")
        return Relation::identity(n);
    if (source.rfind("partition:", 0) == 0) {
        auto in = open_or_throw(source.substr(10));
        return parse_partition_lines(in, n);
    }
    if (source.rfind("pairs:", 0) == 0) {
        auto in = open_or_throw(source.substr(6));
        return parse_pair_lines(in, n, close);
    }
    throw InputError("unknown preorder source '" + source + "' (expected universal, partition:FILE or pairs:FILE)");
}

} // namespace reachsim
