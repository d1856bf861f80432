#pragma once

#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include "signed_index/signed_graph.hpp"

namespace signed_index {

/// Dense real symmetric matrix, row-major.
class SymMatrix {
 public:
  explicit SymMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0.0) {}
  /// Throws InvariantError if `rows` is not square and exactly symmetric.
  static SymMatrix from_rows(const std::vector<std::vector<double>>& rows);

  int dim() const noexcept { return n_; }
  double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  /// Sets both (i,j) and (j,i).
  void set(int i, int j, double value) {
    data_[static_cast<std::size_t>(i) * n_ + j] = value;
    data_[static_cast<std::size_t>(j) * n_ + i] = value;
  }
  double frobenius_norm() const;
  std::vector<double> multiply(std::span<const double> x) const;

 private:
  int n_;
  std::vector<double> data_;
};

struct Spectrum {
  /// Descending.
  std::vector<double> values;
  /// vectors[i] is the unit eigenvector for values[i], when requested.
  std::optional<std::vector<std::vector<double>>> vectors;
  /// Off-diagonal Frobenius norm at termination.
  double off_norm = 0.0;
  int sweeps = 0;
};

struct TopEigenpair {
  double lambda1 = 0.0;
  std::vector<double> vector;
  /// lambda1 - lambda2, or +inf for n = 1.
  double gap = 0.0;
  /// Set when the gap is at most kMultiplicityTolerance.
  bool multiple = false;
};

inline constexpr double kJacobiRelativeTolerance = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kMultiplicityTolerance = 1e-9;

/// Entries are sigma(ij) off the diagonal and 0 on it.
SymMatrix adjacency_matrix(const SignedCompleteGraph& g);

/// Cyclic Jacobi. Stops when the off-diagonal Frobenius norm is at most
/// 1e-12 times the Frobenius norm of `m`; throws ConvergenceError once
/// `max_sweeps` sweeps have not reached that.
Spectrum eigen_decompose(const SymMatrix& m, bool want_vectors, int max_sweeps = kJacobiMaxSweeps);

Spectrum spectrum(const SignedCompleteGraph& g, bool want_vectors = false);

double index(const SignedCompleteGraph& g);
double least_eigenvalue(const SignedCompleteGraph& g);
double spectral_radius(const SignedCompleteGraph& g);

/// Unit eigenvector for lambda1, signed so that its entries sum to a
/// non-negative value; when the sum is zero the largest-magnitude entry is
/// made positive.
TopEigenpair top_eigenvector(const SignedCompleteGraph& g);

/// Applies the sign convention of top_eigenvector in place.
void normalize_eigenvector_sign(std::vector<double>& x);

/// ||m x - lambda x||_2
double residual_norm(const SymMatrix& m, double lambda, std::span<const double> x);

/// {"n", "values", "lambda1", "lambdan", "radius"}
nlohmann::json spectrum_to_json(const Spectrum& s);

}  // namespace signed_index
