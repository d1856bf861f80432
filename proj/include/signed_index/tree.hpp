#pragma once

#include <compare>
#include <cstddef>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace signed_index {

using Vertex = int;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

/// Labelled tree on vertices 0..n-1. Immutable once built; the constructor
/// rejects anything that is not a spanning tree.
class Tree {
 public:
  /// Throws InvariantError unless `edges` is a spanning tree of {0..n-1}.
  Tree(int n, std::vector<Edge> edges);

  int order() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
  bool has_edge(Vertex a, Vertex b) const;

  /// Degrees indexed by vertex.
  std::vector<int> degrees() const;
  int max_degree() const;

  bool operator==(const Tree& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  int n_;
  std::vector<Edge> edges_;  // sorted
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Number of vertices of degree one.
int leaf_count(const Tree& t);

/// Vertex degrees in ascending order.
std::vector<int> sorted_degree_sequence(const Tree& t);

/// Returns true when `edges` forms a spanning tree on n vertices.
bool is_spanning_tree(int n, std::span<const Edge> edges);

struct PruferSequence {
  int n = 2;
  std::vector<int> symbols;

  bool operator==(const PruferSequence&) const = default;
};

/// Classical Prüfer decoding. Throws MalformedInputError when the length is not
/// n-2 or a symbol falls outside 0..n-1.
Tree prufer_decode(const PruferSequence& seq);
PruferSequence prufer_encode(const Tree& t);

Tree build_star(int n);
Tree build_path(int n);

/// Two adjacent centres carrying a and b pendant vertices. Centre 0 holds the
/// a pendants, centre 1 holds the b pendants.
Tree build_double_star(int a, int b);

/// Hub 0 adjacent to k-1 pendant vertices and to one end of a path through the
/// remaining n-k vertices. build_broom(n, 2) is P_n and build_broom(n, n-1) is
/// the star.
Tree build_broom(int n, int k);

/// Applies the vertex permutation `perm` (old label i becomes perm[i]).
Tree relabel(const Tree& t, std::span<const Vertex> perm);

/// Edge-list format: first line "n", then one "u v" pair per line.
Tree parse_edge_list(std::istream& in);
std::string format_edge_list(const Tree& t);

/// Comma-separated Prüfer symbols; the empty string yields the tree on two vertices.
PruferSequence parse_prufer(std::string_view text);
std::string format_prufer(const PruferSequence& seq);

}  // namespace signed_index
