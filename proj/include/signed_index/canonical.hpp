#pragma once

#include <compare>
#include <string>
#include <vector>

#include "signed_index/tree.hpp"

namespace signed_index {

/// Isomorphism-invariant encoding of a free tree: balanced parentheses of the
/// centroid-rooted tree with children in sorted order.
struct CanonicalTreeCode {
  std::string code;

  auto operator<=>(const CanonicalTreeCode&) const = default;
};

/// One or two centroid vertices, ascending.
std::vector<Vertex> centroids(const Tree& t);

/// Sorted-subtree encoding of `t` rooted at `root`.
std::string rooted_code(const Tree& t, Vertex root);

/// Bicentroidal trees take the lexicographically smaller of the two rootings.
CanonicalTreeCode canonical_code(const Tree& t);

}  // namespace signed_index
