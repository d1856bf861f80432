#pragma once

#include <vector>

#include "signed_index/canonical.hpp"
#include "signed_index/tree.hpp"

namespace signed_index {

struct TreeClass {
  CanonicalTreeCode code;
  Tree representative;
};

inline constexpr int kMaxEnumerationOrder = 12;
inline constexpr int kMaxPruferEnumerationOrder = 9;

/// Free trees on n vertices by canonical level-sequence generation, one per
/// isomorphism class, sorted by canonical code. Supports 2 <= n <= 12.
std::vector<TreeClass> enumerate_tree_classes(int n);

/// Same classes found by decoding every Prüfer sequence and deduplicating on
/// canonical code. Supports 2 <= n <= 9. The representative of each class is
/// the tree of its lexicographically smallest Prüfer sequence.
std::vector<TreeClass> enumerate_tree_classes_prufer(int n);

/// Classes from enumerate_tree_classes with exactly k leaves.
std::vector<TreeClass> enumerate_with_leaves(int n, int k);

/// Level sequences (preorder depths) of rooted canonical free trees as
/// produced by the generator, in generation order.
std::vector<std::vector<int>> free_tree_level_sequences(int n);

/// Tree whose vertex i sits at depth levels[i] in preorder.
Tree tree_from_level_sequence(const std::vector<int>& levels);

}  // namespace signed_index
