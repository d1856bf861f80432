#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "signed_index/tree.hpp"

namespace signed_index {

/// Complete graph K_n with a signature: the listed negative edges carry -1 and
/// every other pair carries +1.
class SignedCompleteGraph {
 public:
  /// Throws InvariantError on an out-of-range or repeated negative edge.
  SignedCompleteGraph(int n, std::span<const Edge> negative_edges);

  int order() const noexcept { return n_; }

  /// +1 or -1 for u != v. Throws DomainError for a loop or out-of-range vertex.
  int sign(Vertex u, Vertex v) const;
  bool is_negative(Vertex u, Vertex v) const { return sign(u, v) < 0; }

  /// Sorted ascending.
  std::vector<Edge> negative_edges() const;
  std::vector<Edge> positive_edges() const;
  std::size_t negative_edge_count() const noexcept { return negative_count_; }

  /// Copy with the listed pairs' signs reversed.
  SignedCompleteGraph with_flipped(std::span<const Edge> edges) const;

  /// The negative edges as a Tree, when they form a spanning tree.
  std::optional<Tree> negative_tree() const;

  bool operator==(const SignedCompleteGraph& other) const {
    return n_ == other.n_ && signs_ == other.signs_;
  }

 private:
  SignedCompleteGraph() = default;
  std::size_t slot(Vertex u, Vertex v) const { return static_cast<std::size_t>(u) * n_ + v; }

  int n_ = 0;
  std::vector<std::int8_t> signs_;  // n*n, diagonal 0
  std::size_t negative_count_ = 0;
};

/// (K_n, T^-): negative edges are exactly the tree edges.
SignedCompleteGraph signed_complete_from_tree(const Tree& t);

}  // namespace signed_index
