#include "signed_index/tree.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <string>

#include "signed_index/errors.hpp"

namespace signed_index {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

std::string edge_text(const Edge& e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

bool parse_int(std::string_view token, int& out) {
  while (!token.empty() && (token.front() == ' ' || token.front() == '\t')) token.remove_prefix(1);
  while (!token.empty() && (token.back() == ' ' || token.back() == '\t' || token.back() == '\r')) {
    token.remove_suffix(1);
  }
  if (token.empty()) return false;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

}  // namespace

bool is_spanning_tree(int n, std::span<const Edge> edges) {
  if (n < 2 || static_cast<int>(edges.size()) != n - 1) return false;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n || e.u == e.v) return false;
    int a = find_root(parent, e.u);
    int b = find_root(parent, e.v);
    if (a == b) return false;  // cycle or repeated pair
    parent[a] = b;
  }
  return true;
}

Tree::Tree(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 2) throw InvariantError("tree needs at least 2 vertices, got " + std::to_string(n_));
  if (static_cast<int>(edges_.size()) != n_ - 1) {
    throw InvariantError("tree on " + std::to_string(n_) + " vertices needs " +
                         std::to_string(n_ - 1) + " edges, got " +
                         std::to_string(edges_.size()));
  }
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.v >= n_ || e.u == e.v) {
      throw InvariantError("edge " + edge_text(e) + " is not a valid pair over 0.." +
                           std::to_string(n_ - 1));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw InvariantError("tree edge list contains a repeated pair");
  }
  if (!is_spanning_tree(n_, edges_)) throw InvariantError("edge set is not connected and acyclic");

  adjacency_.assign(n_, {});
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

bool Tree::has_edge(Vertex a, Vertex b) const {
  if (a == b || a < 0 || b < 0 || a >= n_ || b >= n_) return false;
  return std::binary_search(edges_.begin(), edges_.end(), Edge(a, b));
}

std::vector<int> Tree::degrees() const {
  std::vector<int> out(n_);
  for (int v = 0; v < n_; ++v) out[v] = degree(v);
  return out;
}

int Tree::max_degree() const {
  int best = 0;
  for (const auto& adj : adjacency_) best = std::max(best, static_cast<int>(adj.size()));
  return best;
}

int leaf_count(const Tree& t) {
  int count = 0;
  for (int v = 0; v < t.order(); ++v) count += t.degree(v) == 1 ? 1 : 0;
  return count;
}

std::vector<int> sorted_degree_sequence(const Tree& t) {
  auto d = t.degrees();
  std::sort(d.begin(), d.end());
  return d;
}

Tree prufer_decode(const PruferSequence& seq) {
  const int n = seq.n;
  if (n < 2) throw MalformedInputError("Prüfer target order must be at least 2");
  if (static_cast<int>(seq.symbols.size()) != n - 2) {
    throw MalformedInputError("Prüfer sequence for n=" + std::to_string(n) + " must have " +
                              std::to_string(n - 2) + " symbols, got " +
                              std::to_string(seq.symbols.size()));
  }
  std::vector<int> degree(n, 1);
  for (int s : seq.symbols) {
    if (s < 0 || s >= n) {
      throw MalformedInputError("Prüfer symbol " + std::to_string(s) + " outside 0.." +
                                std::to_string(n - 1));
    }
    ++degree[s];
  }

  std::vector<Edge> edges;
  edges.reserve(n - 1);
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int v : seq.symbols) {
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);
  return Tree(n, std::move(edges));
}

PruferSequence prufer_encode(const Tree& t) {
  const int n = t.order();
  PruferSequence out{n, {}};
  if (n == 2) return out;

  // Parent pointers towards n-1.
  std::vector<int> parent(n, -1);
  std::vector<int> stack{n - 1};
  parent[n - 1] = n - 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : t.neighbors(v)) {
      if (parent[w] == -1) {
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }

  std::vector<int> degree = t.degrees();
  out.symbols.reserve(n - 2);
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int i = 0; i < n - 2; ++i) {
    int next = parent[leaf];
    out.symbols.push_back(next);
    if (--degree[next] == 1 && next < ptr) {
      leaf = next;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  return out;
}

Tree build_star(int n) {
  if (n < 2) throw DomainError("star needs n >= 2");
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Tree(n, std::move(edges));
}

Tree build_path(int n) {
  if (n < 2) throw DomainError("path needs n >= 2");
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Tree(n, std::move(edges));
}

Tree build_double_star(int a, int b) {
  if (a < 1 || b < 1) {
    throw DomainError("double star needs a >= 1 and b >= 1, got a=" + std::to_string(a) +
                      " b=" + std::to_string(b));
  }
  const int n = a + b + 2;
  std::vector<Edge> edges{{0, 1}};
  for (int i = 0; i < a; ++i) edges.emplace_back(0, 2 + i);
  for (int i = 0; i < b; ++i) edges.emplace_back(1, 2 + a + i);
  return Tree(n, std::move(edges));
}

Tree build_broom(int n, int k) {
  if (n < 3 || k < 2 || k > n - 1) {
    throw DomainError("broom needs 2 <= k <= n-1, got n=" + std::to_string(n) +
                      " k=" + std::to_string(k));
  }
  std::vector<Edge> edges;
  for (int v = 1; v < k; ++v) edges.emplace_back(0, v);
  int prev = 0;
  for (int v = k; v < n; ++v) {
    edges.emplace_back(prev, v);
    prev = v;
  }
  return Tree(n, std::move(edges));
}

Tree relabel(const Tree& t, std::span<const Vertex> perm) {
  const int n = t.order();
  if (static_cast<int>(perm.size()) != n) throw DomainError("permutation size does not match tree order");
  std::vector<char> seen(n, 0);
  for (Vertex p : perm) {
    if (p < 0 || p >= n || seen[p]) throw DomainError("relabeling is not a permutation");
    seen[p] = 1;
  }
  std::vector<Edge> edges;
  edges.reserve(t.edges().size());
  for (const Edge& e : t.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return Tree(n, std::move(edges));
}

Tree parse_edge_list(std::istream& in) {
  std::string line;
  int n = -1;
  int line_no = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;

    const std::string where = "edge list line " + std::to_string(line_no);
    if (n < 0) {
      if (tokens.size() != 1 || !parse_int(tokens[0], n) || n < 2) {
        throw MalformedInputError(where + ": expected vertex count n >= 2");
      }
      continue;
    }
    int u = 0;
    int v = 0;
    if (tokens.size() != 2 || !parse_int(tokens[0], u) || !parse_int(tokens[1], v)) {
      throw MalformedInputError(where + ": expected \"u v\"");
    }
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
      throw MalformedInputError(where + ": pair " + tokens[0] + " " + tokens[1] +
                                " is not an edge over 0.." + std::to_string(n - 1));
    }
    edges.emplace_back(u, v);
  }
  if (n < 0) throw MalformedInputError("edge list is empty");
  try {
    return Tree(n, std::move(edges));
  } catch (const InvariantError& e) {
    throw MalformedInputError(std::string("edge list does not describe a tree: ") + e.what());
  }
}

std::string format_edge_list(const Tree& t) {
  std::string out = std::to_string(t.order()) + "\n";
  for (const Edge& e : t.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

PruferSequence parse_prufer(std::string_view text) {
  PruferSequence seq;
  bool blank = text.find_first_not_of(" \t\r\n") == std::string_view::npos;
  if (!blank) {
    std::size_t start = 0;
    while (true) {
      std::size_t comma = text.find(',', start);
      std::string_view token = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
      int value = 0;
      if (!parse_int(token, value)) {
        throw MalformedInputError("Prüfer symbol \"" + std::string(token) + "\" is not an integer");
      }
      seq.symbols.push_back(value);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  seq.n = static_cast<int>(seq.symbols.size()) + 2;
  for (int s : seq.symbols) {
    if (s < 0 || s >= seq.n) {
      throw MalformedInputError("Prüfer symbol " + std::to_string(s) + " outside 0.." +
                                std::to_string(seq.n - 1));
    }
  }
  return seq;
}

std::string format_prufer(const PruferSequence& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.symbols.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(seq.symbols[i]);
  }
  return out;
}

}  // namespace signed_index
