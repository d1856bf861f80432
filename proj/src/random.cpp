#include "signed_index/random.hpp"

#include <limits>
#include <numeric>
#include <string>

#include "signed_index/errors.hpp"

namespace signed_index {

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw DomainError("uniform_below needs a positive bound");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

std::vector<Vertex> random_permutation(Rng& rng, int n) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[uniform_below(rng, i + 1)]);
  return perm;
}

Tree random_tree(Rng& rng, int n) {
  if (n < 2) throw DomainError("random tree needs n >= 2");
  PruferSequence seq{n, std::vector<int>(n - 2)};
  for (int& s : seq.symbols) s = static_cast<int>(uniform_below(rng, n));
  return prufer_decode(seq);
}

Tree random_tree_with_leaves(Rng& rng, int n, int k) {
  if (n < 3 || k < 2 || k > n - 1) {
    throw DomainError("random tree with k leaves needs 2 <= k <= n-1, got n=" + std::to_string(n) +
                      " k=" + std::to_string(k));
  }
  const int internal = n - k;
  const auto labels = random_permutation(rng, n);
  const std::vector<int> chosen(labels.begin(), labels.begin() + internal);

  // Every internal vertex takes one random slot; the other slots draw freely.
  PruferSequence seq{n, std::vector<int>(n - 2, -1)};
  const auto slots = random_permutation(rng, n - 2);
  for (int i = 0; i < internal; ++i) seq.symbols[slots[i]] = chosen[i];
  for (int& s : seq.symbols) {
    if (s < 0) s = chosen[uniform_below(rng, internal)];
  }
  return prufer_decode(seq);
}

}  // namespace signed_index
