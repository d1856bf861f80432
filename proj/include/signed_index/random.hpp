#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "signed_index/tree.hpp"

namespace signed_index {

/// Seeded generator. mt19937_64's output sequence is fixed by the standard,
/// and the helpers below avoid the implementation-defined distributions, so a
/// seed reproduces the same draws on every platform.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound).
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// Uniform permutation of 0..n-1.
std::vector<Vertex> random_permutation(Rng& rng, int n);

/// Uniform labelled tree on n vertices, via a random Prüfer sequence.
Tree random_tree(Rng& rng, int n);

/// Labelled tree on n vertices with exactly k leaves. A random set of n-k
/// internal vertices each appear at least once in the Prüfer sequence; the
/// result is not uniform over such trees.
Tree random_tree_with_leaves(Rng& rng, int n, int k);

}  // namespace signed_index
