#include "signed_index/perturb.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <utility>

#include "signed_index/errors.hpp"
#include "signed_index/spectra.hpp"

namespace signed_index {

namespace {

std::string edge_name(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

void require_distinct(const std::vector<Vertex>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] < 0) throw DomainError("rotation vertex " + std::to_string(vs[i]) + " is negative");
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (vs[i] == vs[j]) throw DomainError("rotation vertices must be distinct");
    }
  }
}

}  // namespace

std::string to_string(RotationKind kind) { return kind == RotationKind::TypeI ? "type_i" : "type_ii"; }

RotationMove::RotationMove(RotationKind kind, std::vector<Vertex> vertices)
    : kind_(kind), vertices_(std::move(vertices)) {
  require_distinct(vertices_);
}

RotationMove RotationMove::type_i(Vertex r, Vertex s, Vertex t) {
  return RotationMove(RotationKind::TypeI, {r, s, t});
}

RotationMove RotationMove::type_ii(Vertex r, Vertex s, Vertex t, Vertex u) {
  return RotationMove(RotationKind::TypeII, {r, s, t, u});
}

Edge RotationMove::negative_edge() const {
  if (kind_ == RotationKind::TypeI) return {vertices_[0], vertices_[2]};
  return {vertices_[2], vertices_[3]};
}

RotationMove RotationMove::inverse() const {
  const auto& v = vertices_;
  if (kind_ == RotationKind::TypeI) return type_i(v[0], v[2], v[1]);
  return type_ii(v[2], v[3], v[0], v[1]);
}

SignedCompleteGraph apply_rotation(const SignedCompleteGraph& g, const RotationMove& m) {
  for (Vertex v : m.vertices()) {
    if (v >= g.order()) {
      throw DomainError("rotation vertex " + std::to_string(v) + " outside graph of order " +
                        std::to_string(g.order()));
    }
  }
  const Edge pos = m.positive_edge();
  const Edge neg = m.negative_edge();
  if (g.sign(pos.u, pos.v) != 1) {
    throw PreconditionError("edge " + edge_name(pos) + " must be positive for this rotation");
  }
  if (g.sign(neg.u, neg.v) != -1) {
    throw PreconditionError("edge " + edge_name(neg) + " must be negative for this rotation");
  }
  const Edge flips[] = {pos, neg};
  return g.with_flipped(flips);
}

PreconditionReport check_precondition(const SignedCompleteGraph& g, const RotationMove& m,
                                      std::span<const double> x) {
  if (static_cast<int>(x.size()) != g.order()) {
    throw StaleEigenvectorError("eigenvector length does not match graph order", std::numeric_limits<double>::infinity());
  }
  const SymMatrix a = adjacency_matrix(g);
  const double lambda1 = eigen_decompose(a, false).values.front();
  double norm2 = 0.0;
  for (double e : x) norm2 += e * e;
  const double residual = residual_norm(a, lambda1, x);
  if (residual > kEigenvectorResidual || std::abs(norm2 - 1.0) > kEigenvectorResidual) {
    throw StaleEigenvectorError("vector is not a unit lambda1 eigenvector of the graph (residual " +
                                    std::to_string(residual) + ")",
                                residual);
  }

  std::vector<double> entries;
  for (Vertex v : m.vertices()) {
    if (v >= g.order()) throw DomainError("rotation vertex " + std::to_string(v) + " out of range");
    entries.push_back(x[v]);
  }
  return evaluate_precondition(m.kind(), entries);
}

PreconditionReport evaluate_precondition(RotationKind kind, std::span<const double> entries) {
  const std::size_t expected = kind == RotationKind::TypeI ? 3 : 4;
  if (entries.size() != expected) throw DomainError("wrong number of eigenvector entries for rotation");
  PreconditionReport report;
  report.entries_used.assign(entries.begin(), entries.end());
  const auto& e = report.entries_used;

  if (kind == RotationKind::TypeI) {
    const double xr = e[0];
    const double xs = e[1];
    const double xt = e[2];
    const bool upper = xr >= -kPreconditionSlack && xt >= xs - kPreconditionSlack;
    const bool lower = xr <= kPreconditionSlack && xt <= xs + kPreconditionSlack;
    const bool upper_strict = upper && (xr > kStrictMargin || xt - xs > kStrictMargin);
    const bool lower_strict = lower && (xr < -kStrictMargin || xs - xt > kStrictMargin);
    report.satisfied = upper || lower;
    report.strict = upper_strict || lower_strict;
  } else {
    report.satisfied = e[0] * e[1] <= e[2] * e[3] + kPreconditionSlack;
    const bool nonzero =
        std::any_of(e.begin(), e.end(), [](double v) { return std::abs(v) > kStrictMargin; });
    report.strict = report.satisfied && nonzero;
  }
  return report;
}

ClimbResult hill_climb(int n, int k, const Tree& start, int max_steps) {
  if (start.order() != n) {
    throw DomainError("start tree has " + std::to_string(start.order()) + " vertices, expected " +
                      std::to_string(n));
  }
  if (k < 2 || k > n - 1) throw DomainError("hill climb needs 2 <= k <= n-1");
  if (leaf_count(start) != k) {
    throw DomainError("start tree has " + std::to_string(leaf_count(start)) + " leaves, expected " +
                      std::to_string(k));
  }
  if (max_steps < 0) throw DomainError("max_steps must be non-negative");

  std::vector<Edge> edges = start.edges();
  std::vector<int> degree = start.degrees();
  double current = index(signed_complete_from_tree(start));
  ClimbResult result{start, current, current, {}, false};

  auto in_tree = [&](Vertex a, Vertex b) {
    return std::binary_search(edges.begin(), edges.end(), Edge(a, b));
  };

  // Tries replacing tree edge `remove` by non-tree edge `add`.
  auto try_swap = [&](const Edge& remove, const Edge& add, double& lambda_out,
                      std::vector<Edge>& next) {
    std::vector<int> d = degree;
    --d[remove.u];
    --d[remove.v];
    ++d[add.u];
    ++d[add.v];
    if (std::count(d.begin(), d.end(), 1) != k) return false;
    next = edges;
    *std::find(next.begin(), next.end(), remove) = add;
    if (!is_spanning_tree(n, next)) return false;
    std::sort(next.begin(), next.end());
    lambda_out = index(SignedCompleteGraph(n, next));
    return lambda_out > current + kImprovementThreshold;
  };

  for (int step = 1; step <= max_steps; ++step) {
    std::set<std::pair<Edge, Edge>> tried;
    std::vector<Edge> next;
    double lambda = 0.0;
    bool accepted = false;

    auto consider = [&](const RotationMove& move) {
      const Edge remove = move.negative_edge();
      const Edge add = move.positive_edge();
      if (!tried.insert({remove, add}).second) return false;
      if (!try_swap(remove, add, lambda, next)) return false;
      edges = std::move(next);
      degree.assign(n, 0);
      for (const Edge& e : edges) {
        ++degree[e.u];
        ++degree[e.v];
      }
      current = lambda;
      result.trace.push_back(ClimbStep{step, move, lambda});
      return true;
    };

    for (Vertex r = 0; r < n && !accepted; ++r) {
      for (Vertex s = 0; s < n && !accepted; ++s) {
        if (s == r || in_tree(r, s)) continue;
        for (Vertex t = 0; t < n && !accepted; ++t) {
          if (t == r || t == s || !in_tree(r, t)) continue;
          accepted = consider(RotationMove::type_i(r, s, t));
        }
      }
    }
    for (Vertex r = 0; r < n && !accepted; ++r) {
      for (Vertex s = 0; s < n && !accepted; ++s) {
        if (s == r || in_tree(r, s)) continue;
        for (Vertex t = 0; t < n && !accepted; ++t) {
          if (t == r || t == s) continue;
          for (Vertex u = 0; u < n && !accepted; ++u) {
            if (u == r || u == s || u == t || !in_tree(t, u)) continue;
            accepted = consider(RotationMove::type_ii(r, s, t, u));
          }
        }
      }
    }
    if (!accepted) {
      result.local_maximum = true;
      break;
    }
  }

  result.tree = Tree(n, edges);
  result.final_lambda1 = current;
  return result;
}

nlohmann::json step_to_json(const ClimbStep& step) {
  nlohmann::json j;
  j["step"] = step.step;
  j["kind"] = to_string(step.move.kind());
  j["vertices"] = step.move.vertices();
  j["lambda1"] = step.lambda1;
  return j;
}

std::string trace_to_jsonl(std::span<const ClimbStep> trace) {
  std::string out;
  for (const auto& step : trace) {
    out += step_to_json(step).dump();
    out += '\n';
  }
  return out;
}

}  // namespace signed_index
