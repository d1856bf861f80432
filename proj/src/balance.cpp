#include "signed_index/balance.hpp"

#include <algorithm>
#include <string>

#include "signed_index/errors.hpp"

namespace signed_index {

SwitchSet::SwitchSet(int n, std::vector<Vertex> members) : n_(n), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Vertex v : members_) {
    if (v < 0 || v >= n_) {
      throw DomainError("switch vertex " + std::to_string(v) + " outside 0.." + std::to_string(n_ - 1));
    }
  }
}

bool SwitchSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

int cycle_sign(const SignedCompleteGraph& g, std::span<const Vertex> cycle) {
  if (cycle.size() < 3) throw DomainError("cycle needs at least 3 vertices");
  std::vector<char> seen(g.order(), 0);
  for (Vertex v : cycle) {
    if (v < 0 || v >= g.order()) throw DomainError("cycle vertex " + std::to_string(v) + " out of range");
    if (seen[v]) throw DomainError("cycle repeats vertex " + std::to_string(v));
    seen[v] = 1;
  }
  int product = 1;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    product *= g.sign(cycle[i], cycle[(i + 1) % cycle.size()]);
  }
  return product;
}

BalanceWitness balance_witness(const SignedCompleteGraph& g) {
  const int n = g.order();
  BalanceWitness w;
  w.side.assign(n, 1);
  for (Vertex v = 1; v < n; ++v) w.side[v] = g.sign(0, v);
  for (Vertex u = 1; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.sign(u, v) != w.side[u] * w.side[v]) {
        // sigma(0u) sigma(0v) sigma(uv) = s(u) s(v) sigma(uv) = -1
        w.negative_triangle = std::array<Vertex, 3>{0, u, v};
        return w;
      }
    }
  }
  w.balanced = true;
  return w;
}

bool is_balanced(const SignedCompleteGraph& g) { return balance_witness(g).balanced; }

SignedCompleteGraph apply_switching(const SignedCompleteGraph& g, const SwitchSet& u) {
  if (u.order() != g.order()) throw DomainError("switch set order does not match graph order");
  std::vector<Edge> cut;
  for (Vertex a = 0; a < g.order(); ++a) {
    for (Vertex b = a + 1; b < g.order(); ++b) {
      if (u.contains(a) != u.contains(b)) cut.emplace_back(a, b);
    }
  }
  return g.with_flipped(cut);
}

}  // namespace signed_index
