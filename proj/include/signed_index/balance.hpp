#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "signed_index/signed_graph.hpp"

namespace signed_index {

/// Vertex subset for switching. Members are sorted and unique.
class SwitchSet {
 public:
  /// Throws DomainError if a member is outside 0..n-1.
  SwitchSet(int n, std::vector<Vertex> members);

  int order() const noexcept { return n_; }
  const std::vector<Vertex>& members() const noexcept { return members_; }
  bool contains(Vertex v) const;

 private:
  int n_;
  std::vector<Vertex> members_;
};

/// Product of edge signs around the closed walk cycle[0], ..., cycle.back(),
/// cycle[0]. Throws DomainError for fewer than 3 vertices, a repeated vertex,
/// or an out-of-range vertex.
int cycle_sign(const SignedCompleteGraph& g, std::span<const Vertex> cycle);

struct BalanceWitness {
  bool balanced = false;
  /// Harary side assignment s(v) in {-1,+1} with s(0) = +1; only meaningful
  /// when balanced.
  std::vector<int> side;
  /// A triangle with negative sign when unbalanced.
  std::optional<std::array<Vertex, 3>> negative_triangle;
};

/// Propagates s(v) = sigma(0v) from vertex 0 and checks every edge against
/// sigma(uv) = s(u)s(v).
BalanceWitness balance_witness(const SignedCompleteGraph& g);
bool is_balanced(const SignedCompleteGraph& g);

/// Reverses the sign of every edge with exactly one endpoint in `u`.
SignedCompleteGraph apply_switching(const SignedCompleteGraph& g, const SwitchSet& u);

}  // namespace signed_index
