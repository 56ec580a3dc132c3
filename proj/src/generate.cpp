// Copyright (c) reachsim contributors.
// SPDX-License-Identifier: Apache-2.0
#include "reachsim/generate.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace reachsim {

bool coin(std::mt19937_64& rng, double p)
{
    // 53 random bits mapped to [0, 1).
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return u < p;
}

namespace {

std::size_t below(std::mt19937_64& rng, std::size_t n)
{
    return static_cast<std::size_t>(rng() % n);
}

LtsBuilder random_edges(std::size_t n, std::size_t n_labels, double density, std::mt19937_64& rng)
{
    LtsBuilder b(n);
    for (std::size_t a = 0; a < n_labels; ++a)
        b.label("a" + std::to_string(a));
    for (LabelId a = 0; a < n_labels; ++a)
        for (StateId x = 0; x < n; ++x)
            for (StateId y = 0; y < n; ++y)
                if (coin(rng, density))
                    b.add(x, a, y);
    return b;
}

} // namespace

Lts gen_random(std::size_t n_states, std::size_t n_labels, double density, std::uint64_t seed)
{
    if (n_states == 0 || n_labels == 0 || !(density > 0.0 && density <= 1.0))
        throw InputError("gen_random needs n ≥ 1, at least one label and 0 < density ≤ 1");
    std::mt19937_64 rng(seed);
    LtsBuilder b = random_edges(n_states, n_labels, density, rng);
    b.add_initial(static_cast<StateId>(below(rng, n_states)));
    return b.build();
}

Lts gen_random_scc(std::size_t n_states, std::size_t n_labels, double density, std::uint64_t seed)
{
    if (n_states == 0 || n_labels == 0 || !(density >= 0.0 && density <= 1.0))
        throw InputError("gen_random_scc needs n ≥ 1, at least one label and 0 ≤ density ≤ 1");
    std::mt19937_64 rng(seed);
    LtsBuilder b = random_edges(n_states, n_labels, density, rng);
    std::vector<StateId> order(n_states);
    std::iota(order.begin(), order.end(), StateId{0});
    for (std::size_t i = n_states; i > 1; --i)
        std::swap(order[i - 1], order[below(rng, i)]);
    for (std::size_t i = 0; i < n_states; ++i)
        b.add(order[i], LabelId{0}, order[(i + 1) % n_states]);
    b.add_initial(static_cast<StateId>(below(rng, n_states)));
    return b.build();
}

Lts unroll(const Lts& lts, std::size_t k)
{
    const std::size_t n = lts.state_count();
    LtsBuilder b((k + 1) * n);
    for (const auto& name : lts.labels())
        b.label(name);
    for (std::size_t j = 0; j <= k; ++j) {
        const auto base = static_cast<StateId>(j * n);
        for (const auto& t : lts.transitions()) {
            b.add(base + t.src, t.label, base + t.dst);
            if (j < k)
                b.add(base + t.src, t.label, static_cast<StateId>(base + n + t.dst));
        }
    }
    lts.initial().for_each([&](StateId i) { b.add_initial(static_cast<StateId>(k * n + i)); });
    return b.build();
}

Relation random_relation(std::size_t n, double p, std::mt19937_64& rng)
{
    Relation r = Relation::empty(n);
    for (StateId x = 0; x < n; ++x)
        for (StateId y = 0; y < n; ++y)
            if (coin(rng, p))
                r.add(x, y);
    return r;
}

Relation random_preorder(std::size_t n, double p, std::mt19937_64& rng)
{
    return random_relation(n, p, rng).reflexive_transitive_closure();
}

Partition random_partition(std::size_t n, std::size_t max_blocks, std::mt19937_64& rng)
{
    std::vector<std::size_t> cls(n);
    for (auto& c : cls)
        c = below(rng, std::max<std::size_t>(max_blocks, 1));
    return Partition::from_class_ids(cls);
}

TwoPr random_twopr(std::size_t n, double p, std::mt19937_64& rng)
{
    const Partition pp = random_partition(n, n, rng);
    const Partition qq = random_partition(n, n, rng);
    std::vector<std::vector<std::size_t>> tau(pp.size());
    for (auto& image : tau)
        for (std::size_t c = 0; c < qq.size(); ++c)
            if (coin(rng, p))
                image.push_back(c);
    return make_twopr(pp, qq, tau);
}

} // namespace reachsim
