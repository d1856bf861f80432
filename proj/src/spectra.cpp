#include "signed_index/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "signed_index/errors.hpp"

namespace signed_index {

namespace {

constexpr double kSignTieTolerance = 1e-12;

double off_diagonal_norm(const std::vector<double>& a, int n) {
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double x = a[static_cast<std::size_t>(i) * n + j];
      sum += x * x;
    }
  }
  return std::sqrt(2.0 * sum);
}

}  // namespace

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  SymMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) throw InvariantError("matrix is not square");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (rows[i][j] != rows[j][i]) {
        throw InvariantError("matrix is not symmetric at (" + std::to_string(i) + "," +
                             std::to_string(j) + ")");
      }
      m.set(i, j, rows[i][j]);
    }
  }
  return m;
}

double SymMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (double x : data_) sum += x * x;
  return std::sqrt(sum);
}

std::vector<double> SymMatrix::multiply(std::span<const double> x) const {
  std::vector<double> y(n_, 0.0);
  for (int i = 0; i < n_; ++i) {
    double acc = 0.0;
    for (int j = 0; j < n_; ++j) acc += (*this)(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

SymMatrix adjacency_matrix(const SignedCompleteGraph& g) {
  const int n = g.order();
  SymMatrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) m.set(i, j, g.sign(i, j));
  }
  return m;
}

Spectrum eigen_decompose(const SymMatrix& m, bool want_vectors, int max_sweeps) {
  const int n = m.dim();
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = m(i, j);
  }
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

  std::vector<double> v;
  if (want_vectors) {
    v.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;
  }
  auto vat = [&](int i, int j) -> double& { return v[static_cast<std::size_t>(i) * n + j]; };

  const double threshold = kJacobiRelativeTolerance * m.frobenius_norm();
  double off = off_diagonal_norm(a, n);
  int sweeps = 0;
  while (off > threshold) {
    if (sweeps >= max_sweeps) {
      throw ConvergenceError("Jacobi did not converge in " + std::to_string(max_sweeps) +
                                 " sweeps; off-diagonal norm " + std::to_string(off),
                             off);
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        at(p, p) -= t * apq;
        at(q, q) += t * apq;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = at(r, p);
          const double arq = at(r, q);
          const double new_rp = c * arp - s * arq;
          const double new_rq = s * arp + c * arq;
          at(r, p) = new_rp;
          at(p, r) = new_rp;
          at(r, q) = new_rq;
          at(q, r) = new_rq;
        }
        if (want_vectors) {
          for (int r = 0; r < n; ++r) {
            const double vrp = vat(r, p);
            const double vrq = vat(r, q);
            vat(r, p) = c * vrp - s * vrq;
            vat(r, q) = s * vrp + c * vrq;
          }
        }
      }
    }
    ++sweeps;
    off = off_diagonal_norm(a, n);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return at(i, i) > at(j, j); });

  Spectrum out;
  out.off_norm = off;
  out.sweeps = sweeps;
  out.values.reserve(n);
  for (int i : order) out.values.push_back(at(i, i));
  if (want_vectors) {
    std::vector<std::vector<double>> vecs;
    vecs.reserve(n);
    for (int col : order) {
      std::vector<double> x(n);
      for (int r = 0; r < n; ++r) x[r] = vat(r, col);
      vecs.push_back(std::move(x));
    }
    out.vectors = std::move(vecs);
  }
  return out;
}

Spectrum spectrum(const SignedCompleteGraph& g, bool want_vectors) {
  return eigen_decompose(adjacency_matrix(g), want_vectors);
}

double index(const SignedCompleteGraph& g) { return spectrum(g).values.front(); }

double least_eigenvalue(const SignedCompleteGraph& g) { return spectrum(g).values.back(); }

double spectral_radius(const SignedCompleteGraph& g) {
  auto s = spectrum(g);
  return std::max(s.values.front(), -s.values.back());
}

void normalize_eigenvector_sign(std::vector<double>& x) {
  if (x.empty()) return;
  const double sum = std::accumulate(x.begin(), x.end(), 0.0);
  bool flip;
  if (std::abs(sum) > kSignTieTolerance) {
    flip = sum < 0.0;
  } else {
    auto largest = std::max_element(x.begin(), x.end(),
                                    [](double a, double b) { return std::abs(a) < std::abs(b); });
    flip = *largest < 0.0;
  }
  if (flip) {
    for (double& e : x) e = -e;
  }
}

TopEigenpair top_eigenvector(const SignedCompleteGraph& g) {
  auto s = spectrum(g, true);
  TopEigenpair out;
  out.lambda1 = s.values.front();
  out.vector = std::move(s.vectors->front());
  normalize_eigenvector_sign(out.vector);
  out.gap = s.values.size() > 1 ? s.values[0] - s.values[1] : std::numeric_limits<double>::infinity();
  out.multiple = out.gap <= kMultiplicityTolerance;
  return out;
}

double residual_norm(const SymMatrix& m, double lambda, std::span<const double> x) {
  auto y = m.multiply(x);
  double sum = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    double d = y[i] - lambda * x[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

nlohmann::json spectrum_to_json(const Spectrum& s) {
  nlohmann::json j;
  j["n"] = s.values.size();
  j["values"] = s.values;
  j["lambda1"] = s.values.front();
  j["lambdan"] = s.values.back();
  j["radius"] = std::max(s.values.front(), -s.values.back());
  return j;
}

}  // namespace signed_index
