#include "kalliance/spectral.hpp"

#include <algorithm>
#include <string>

#include <Eigen/Eigenvalues>

#include "kalliance/errors.hpp"

namespace kalliance {

SpectralResult algebraic_connectivity(const Graph& g, double tol) {
  if (g.order() < 2) throw InputError("algebraic connectivity needs n >= 2");
  if (!(tol > 0.0)) throw InputError("tolerance must be positive");

  const Eigen::MatrixXd lap = laplacian<double>(g);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap);
  if (solver.info() != Eigen::Success) throw NumericError("Laplacian eigensolver did not converge");

  const Eigen::VectorXd& values = solver.eigenvalues();
  const Eigen::MatrixXd& vectors = solver.eigenvectors();
  const double residual = (lap * vectors - vectors * values.asDiagonal()).colwise().norm().maxCoeff();
  const double scale = std::max(1.0, lap.norm());
  if (residual > tol * scale) {
    throw NumericError("eigen residual " + std::to_string(residual) + " exceeds tolerance");
  }

  SpectralResult result;
  result.eigenvalues.assign(values.data(), values.data() + values.size());
  std::sort(result.eigenvalues.begin(), result.eigenvalues.end());
  // Round-off can push the zero eigenvalue (and mu of a disconnected graph) slightly negative.
  result.mu = std::max(0.0, result.eigenvalues[1]);
  result.residual = residual;
  return result;
}

}  // namespace kalliance
