#include "signed_index/signed_graph.hpp"

#include <string>

#include "signed_index/errors.hpp"

namespace signed_index {

SignedCompleteGraph::SignedCompleteGraph(int n, std::span<const Edge> negative_edges)
    : n_(n), signs_(static_cast<std::size_t>(n) * n, 1) {
  if (n < 1) throw InvariantError("signed complete graph needs at least one vertex");
  for (int v = 0; v < n; ++v) signs_[slot(v, v)] = 0;
  for (const Edge& e : negative_edges) {
    if (e.u < 0 || e.v >= n || e.u == e.v) {
      throw InvariantError("negative edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                           " is not an edge of K_" + std::to_string(n));
    }
    if (signs_[slot(e.u, e.v)] < 0) {
      throw InvariantError("negative edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                           " listed twice");
    }
    signs_[slot(e.u, e.v)] = -1;
    signs_[slot(e.v, e.u)] = -1;
    ++negative_count_;
  }
}

int SignedCompleteGraph::sign(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) {
    throw DomainError("pair " + std::to_string(u) + "," + std::to_string(v) + " is not an edge of K_" +
                      std::to_string(n_));
  }
  return signs_[slot(u, v)];
}

std::vector<Edge> SignedCompleteGraph::negative_edges() const {
  std::vector<Edge> out;
  out.reserve(negative_count_);
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (signs_[slot(u, v)] < 0) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<Edge> SignedCompleteGraph::positive_edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (signs_[slot(u, v)] > 0) out.emplace_back(u, v);
    }
  }
  return out;
}

SignedCompleteGraph SignedCompleteGraph::with_flipped(std::span<const Edge> edges) const {
  SignedCompleteGraph out = *this;
  for (const Edge& e : edges) {
    int s = out.sign(e.u, e.v);
    out.signs_[slot(e.u, e.v)] = static_cast<std::int8_t>(-s);
    out.signs_[slot(e.v, e.u)] = static_cast<std::int8_t>(-s);
    if (s > 0) {
      ++out.negative_count_;
    } else {
      --out.negative_count_;
    }
  }
  return out;
}

std::optional<Tree> SignedCompleteGraph::negative_tree() const {
  auto edges = negative_edges();
  if (!is_spanning_tree(n_, edges)) return std::nullopt;
  return Tree(n_, std::move(edges));
}

SignedCompleteGraph signed_complete_from_tree(const Tree& t) {
  return SignedCompleteGraph(t.order(), t.edges());
}

}  // namespace signed_index
