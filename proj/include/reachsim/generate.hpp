// Copyright (c) reachsim contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "reachsim/lts.hpp"
#include "reachsim/relation.hpp"
#include "reachsim/two_pr.hpp"

#include <cstdint>
#include <random>

namespace reachsim {

/// Each (x, a, y) is present independently with probability density; I is one
/// random state. Labels are named a0, a1, ...
[[nodiscard]] Lts gen_random(std::size_t n_states, std::size_t n_labels, double density, std::uint64_t seed);

/// gen_random plus a random Hamiltonian cycle on label a0, so the graph is
/// strongly connected.
[[nodiscard]] Lts gen_random_scc(std::size_t n_states, std::size_t n_labels, double density, std::uint64_t seed);

/// k+1 layers; state j·n + x is copy j of x. Each (x, a, y) gives (x_j, a, y_j)
/// in every layer and (x_j, a, y_{j+1}) for j < k. I is placed in layer k.
[[nodiscard]] Lts unroll(const Lts& lts, std::size_t k);

/// Bernoulli(p) with a draw that does not depend on the standard library's
/// distribution implementation.
[[nodiscard]] bool coin(std::mt19937_64& rng, double p);

/// Reflexive-transitive closure of pairs drawn with probability p.
[[nodiscard]] Relation random_preorder(std::size_t n, double p, std::mt19937_64& rng);

/// Arbitrary relation; pairs drawn with probability p.
[[nodiscard]] Relation random_relation(std::size_t n, double p, std::mt19937_64& rng);

/// Random partition of [0, n) into at most max_blocks blocks.
[[nodiscard]] Partition random_partition(std::size_t n, std::size_t max_blocks, std::mt19937_64& rng);

/// Random P and Q with τ entries drawn with probability p.
[[nodiscard]] TwoPr random_twopr(std::size_t n, double p, std::mt19937_64& rng);

} // namespace reachsim
