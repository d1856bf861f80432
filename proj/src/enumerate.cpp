#include "signed_index/enumerate.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "signed_index/errors.hpp"

namespace signed_index {

namespace {

void check_order(int n, int max_n) {
  if (n < 2 || n > max_n) {
    throw DomainError("enumeration supports 2 <= n <= " + std::to_string(max_n) + ", got n=" +
                      std::to_string(n));
  }
}

// Next rooted level sequence in reverse-lexicographic order, rebuilding the
// tail from position p. Returns false when `seq` was the last one.
bool next_rooted(std::vector<int>& seq, int p) {
  if (p <= 0) return false;
  int q = p - 1;
  while (seq[q] != seq[p] - 1) --q;
  for (std::size_t i = p; i < seq.size(); ++i) seq[i] = seq[i - p + q];
  return true;
}

bool next_rooted(std::vector<int>& seq) {
  int p = static_cast<int>(seq.size()) - 1;
  while (p > 0 && seq[p] == 1) --p;
  return next_rooted(seq, p);
}

// Splits at the second child of the root: `left` is the first root subtree
// with depths shifted up by one, `rest` is the root with its other subtrees.
void split(const std::vector<int>& seq, std::vector<int>& left, std::vector<int>& rest) {
  std::size_t m = seq.size();
  bool seen_one = false;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] == 1) {
      if (seen_one) {
        m = i;
        break;
      }
      seen_one = true;
    }
  }
  left.clear();
  for (std::size_t i = 1; i < m; ++i) left.push_back(seq[i] - 1);
  rest.assign(1, 0);
  for (std::size_t i = m; i < seq.size(); ++i) rest.push_back(seq[i]);
}

// Moves `candidate` forward to the next level sequence that is the canonical
// centroid rooting of a free tree: the first root subtree must not be taller
// than the rest, and on equal height not larger.
bool advance_to_free(std::vector<int>& candidate) {
  std::vector<int> left;
  std::vector<int> rest;
  while (true) {
    split(candidate, left, rest);
    const int left_height = *std::max_element(left.begin(), left.end());
    const int rest_height = *std::max_element(rest.begin(), rest.end());
    bool valid = rest_height >= left_height;
    if (valid && rest_height == left_height) {
      if (left.size() > rest.size()) {
        valid = false;
      } else if (left.size() == rest.size() && left > rest) {
        valid = false;
      }
    }
    if (valid) return true;

    const int p = static_cast<int>(left.size());
    const bool deep = candidate[p] > 2;
    if (!next_rooted(candidate, p)) return false;
    if (deep) {
      split(candidate, left, rest);
      const int new_height = *std::max_element(left.begin(), left.end());
      const std::size_t tail = static_cast<std::size_t>(new_height) + 1;
      for (std::size_t i = 0; i < tail; ++i) {
        candidate[candidate.size() - tail + i] = static_cast<int>(i) + 1;
      }
    }
  }
}

std::vector<TreeClass> sorted_classes(std::vector<Tree> trees) {
  std::vector<TreeClass> out;
  out.reserve(trees.size());
  for (auto& t : trees) {
    auto code = canonical_code(t);
    out.push_back(TreeClass{std::move(code), std::move(t)});
  }
  std::sort(out.begin(), out.end(),
            [](const TreeClass& a, const TreeClass& b) { return a.code < b.code; });
  return out;
}

}  // namespace

Tree tree_from_level_sequence(const std::vector<int>& levels) {
  const int n = static_cast<int>(levels.size());
  std::vector<Edge> edges;
  std::vector<int> last_at_depth(n + 1, -1);
  for (int i = 0; i < n; ++i) {
    const int depth = levels[i];
    if (i == 0) {
      if (depth != 0) throw InvariantError("level sequence must start at depth 0");
    } else {
      if (depth < 1 || depth > levels[i - 1] + 1 || last_at_depth[depth - 1] < 0) {
        throw InvariantError("invalid level sequence");
      }
      edges.emplace_back(last_at_depth[depth - 1], i);
    }
    last_at_depth[depth] = i;
  }
  return Tree(n, std::move(edges));
}

std::vector<std::vector<int>> free_tree_level_sequences(int n) {
  check_order(n, kMaxEnumerationOrder);
  // Start: a path of height n/2 followed by a path of height (n-1)/2, both
  // hanging from the root.
  std::vector<int> layout;
  for (int i = 0; i <= n / 2; ++i) layout.push_back(i);
  for (int i = 1; i < (n + 1) / 2; ++i) layout.push_back(i);

  std::vector<std::vector<int>> out;
  while (advance_to_free(layout)) {
    out.push_back(layout);
    if (!next_rooted(layout)) break;
  }
  return out;
}

std::vector<TreeClass> enumerate_tree_classes(int n) {
  check_order(n, kMaxEnumerationOrder);
  std::vector<Tree> trees;
  for (const auto& levels : free_tree_level_sequences(n)) trees.push_back(tree_from_level_sequence(levels));
  return sorted_classes(std::move(trees));
}

std::vector<TreeClass> enumerate_tree_classes_prufer(int n) {
  check_order(n, kMaxPruferEnumerationOrder);
  std::map<CanonicalTreeCode, Tree> seen;
  PruferSequence seq{n, std::vector<int>(n - 2, 0)};
  while (true) {
    Tree t = prufer_decode(seq);
    auto code = canonical_code(t);
    seen.try_emplace(std::move(code), std::move(t));

    // Odometer increment, last symbol fastest.
    int pos = n - 3;
    while (pos >= 0 && seq.symbols[pos] == n - 1) {
      seq.symbols[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++seq.symbols[pos];
  }
  std::vector<TreeClass> out;
  out.reserve(seen.size());
  for (auto& [code, tree] : seen) out.push_back(TreeClass{code, std::move(tree)});
  return out;
}

std::vector<TreeClass> enumerate_with_leaves(int n, int k) {
  if (k < 2 || k > n - 1) {
    throw DomainError("leaf count must satisfy 2 <= k <= n-1, got n=" + std::to_string(n) +
                      " k=" + std::to_string(k));
  }
  std::vector<TreeClass> out;
  for (auto& c : enumerate_tree_classes(n)) {
    if (leaf_count(c.representative) == k) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace signed_index
