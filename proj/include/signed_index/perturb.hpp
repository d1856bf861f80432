#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "signed_index/signed_graph.hpp"
#include "signed_index/tree.hpp"

namespace signed_index {

enum class RotationKind { TypeI, TypeII };

std::string to_string(RotationKind kind);

/// Sign rotation: one positive edge becomes negative and one negative edge
/// becomes positive.
///   TypeI  (r, s, t):    rs positive, rt negative.
///   TypeII (r, s, t, u): rs positive, tu negative.
class RotationMove {
 public:
  /// Throws DomainError if the vertices are not distinct and non-negative.
  static RotationMove type_i(Vertex r, Vertex s, Vertex t);
  static RotationMove type_ii(Vertex r, Vertex s, Vertex t, Vertex u);

  RotationKind kind() const noexcept { return kind_; }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  Edge positive_edge() const { return {vertices_[0], vertices_[1]}; }
  Edge negative_edge() const;

  /// The move that undoes this one on the rotated graph.
  RotationMove inverse() const;

  bool operator==(const RotationMove&) const = default;

 private:
  RotationMove(RotationKind kind, std::vector<Vertex> vertices);

  RotationKind kind_;
  std::vector<Vertex> vertices_;
};

/// Flips the move's two edges. Throws PreconditionError naming the edge whose
/// current sign does not match the move, DomainError for vertices outside g.
SignedCompleteGraph apply_rotation(const SignedCompleteGraph& g, const RotationMove& m);

struct PreconditionReport {
  bool satisfied = false;
  bool strict = false;
  /// x_r, x_s, x_t[, x_u]
  std::vector<double> entries_used;
};

/// Slack allowed on the non-strict entry inequalities.
inline constexpr double kPreconditionSlack = 1e-12;
/// An entry inequality counts as strict, or an entry as non-zero, only beyond
/// this margin.
inline constexpr double kStrictMargin = 1e-9;
/// Residual bound for accepting X as a lambda1 eigenvector of g.
inline constexpr double kEigenvectorResidual = 1e-8;

/// The rotation's eigenvector condition on the entries (x_r, x_s, x_t[, x_u]):
///   TypeI:  (x_r >= 0 and x_t >= x_s) or (x_r <= 0 and x_t <= x_s), strict
///           when one of the inequalities in a satisfied branch is strict
///   TypeII: x_r x_s <= x_t x_u, strict when some entry is non-zero
PreconditionReport evaluate_precondition(RotationKind kind, std::span<const double> entries);

/// evaluate_precondition on X's entries at the move's vertices.
/// Throws StaleEigenvectorError if X is not a unit lambda1 eigenvector of g.
PreconditionReport check_precondition(const SignedCompleteGraph& g, const RotationMove& m,
                                      std::span<const double> x);

struct ClimbStep {
  int step = 0;
  RotationMove move;
  double lambda1 = 0.0;
};

struct ClimbResult {
  Tree tree;
  double start_lambda1 = 0.0;
  double final_lambda1 = 0.0;
  std::vector<ClimbStep> trace;
  /// False when max_steps stopped the climb before a local maximum.
  bool local_maximum = false;
};

inline constexpr double kImprovementThreshold = 1e-10;

/// First-improvement local search over spanning trees with k leaves. Moves are
/// tried in lexicographic vertex order, TypeI before TypeII, and kept only if
/// the negative edges still form a spanning tree with k leaves and lambda1
/// rises by more than kImprovementThreshold.
ClimbResult hill_climb(int n, int k, const Tree& start, int max_steps);

/// One JSON object per accepted move: {"step","kind","vertices","lambda1"}.
std::string trace_to_jsonl(std::span<const ClimbStep> trace);
nlohmann::json step_to_json(const ClimbStep& step);

}  // namespace signed_index
