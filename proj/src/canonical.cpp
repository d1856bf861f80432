#include "signed_index/canonical.hpp"

#include <algorithm>

namespace signed_index {

namespace {

// Parent pointers and a BFS order from `root`.
void bfs_order(const Tree& t, Vertex root, std::vector<Vertex>& order, std::vector<Vertex>& parent) {
  const int n = t.order();
  order.clear();
  order.reserve(n);
  parent.assign(n, -1);
  order.push_back(root);
  parent[root] = root;
  for (std::size_t head = 0; head < order.size(); ++head) {
    Vertex v = order[head];
    for (Vertex w : t.neighbors(v)) {
      if (parent[w] == -1) {
        parent[w] = v;
        order.push_back(w);
      }
    }
  }
}

}  // namespace

std::vector<Vertex> centroids(const Tree& t) {
  const int n = t.order();
  std::vector<Vertex> order;
  std::vector<Vertex> parent;
  bfs_order(t, 0, order, parent);

  std::vector<int> size(n, 1);
  std::vector<int> heaviest(n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    if (v != 0) {
      size[parent[v]] += size[v];
      heaviest[parent[v]] = std::max(heaviest[parent[v]], size[v]);
    }
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    int worst = std::max(heaviest[v], n - size[v]);
    if (2 * worst <= n) out.push_back(v);
  }
  return out;
}

std::string rooted_code(const Tree& t, Vertex root) {
  const int n = t.order();
  std::vector<Vertex> order;
  std::vector<Vertex> parent;
  bfs_order(t, root, order, parent);

  std::vector<std::vector<std::string>> child_codes(n);
  std::vector<std::string> code(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    auto& kids = child_codes[v];
    std::sort(kids.begin(), kids.end());
    std::string c = "(";
    for (const auto& k : kids) c += k;
    c += ')';
    if (v == root) {
      code[v] = std::move(c);
    } else {
      child_codes[parent[v]].push_back(std::move(c));
    }
    kids.clear();
  }
  return code[root];
}

CanonicalTreeCode canonical_code(const Tree& t) {
  auto roots = centroids(t);
  std::string best = rooted_code(t, roots.front());
  if (roots.size() == 2) best = std::min(best, rooted_code(t, roots.back()));
  return CanonicalTreeCode{std::move(best)};
}

}  // namespace signed_index
