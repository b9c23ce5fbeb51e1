#pragma once

#include <vector>

#include <Eigen/Core>

#include "kalliance/graph.hpp"

namespace kalliance {

/// L = D - A.
template <typename Scalar = int>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> laplacian(const Graph& g) {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const int n = g.order();
  Matrix lap = Matrix::Zero(n, n);
  for (Vertex v = 0; v < n; ++v) {
    lap(v, v) = static_cast<Scalar>(g.degree(v));
    for (Vertex u : g.neighbors(v)) lap(v, u) = Scalar(-1);
  }
  return lap;
}

struct SpectralResult {
  /// Second-smallest Laplacian eigenvalue.
  double mu = 0.0;
  /// max_i ||L x_i - lambda_i x_i|| over the computed eigenpairs.
  double residual = 0.0;
  /// Ascending.
  std::vector<double> eigenvalues;
};

inline constexpr double kDefaultSpectralTol = 1e-9;

/// Full symmetric eigendecomposition of the Laplacian. Throws NumericError
/// when the solver does not converge or the residual exceeds tol * max(1, ||L||).
SpectralResult algebraic_connectivity(const Graph& g, double tol = kDefaultSpectralTol);

}  // namespace kalliance
