#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <vector>

namespace graphharm {

class Graph;

/// Eigen-decomposition of a graph Laplacian with the kernel made explicit.
///
/// Eigenvalues ascend. Eigenvalues at or below `zero_tol` are clamped to
/// exactly 0 and counted in `kernel_dim`; for a Laplacian that equals the
/// number of connected components. Each eigenvector is signed so that its
/// largest-magnitude entry (lowest index on ties) is positive.
struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;  // column i pairs with eigenvalues[i]
  std::size_t kernel_dim = 0;
  double zero_tol = 0.0;

  std::size_t size() const noexcept { return static_cast<std::size_t>(eigenvalues.size()); }
  /// Number of strictly positive eigenvalues.
  std::size_t rank() const noexcept { return size() - kernel_dim; }
  double max_eigenvalue() const { return eigenvalues.size() ? eigenvalues(eigenvalues.size() - 1) : 0.0; }
};

/// n * lambda_max * eps * 64.
double default_zero_tolerance(std::size_t n, double lambda_max);

/// Throws InvalidArgument if `L` is not square or not symmetric to 1e-10
/// relative, and Error if the eigensolver fails. A negative zero_tol selects
/// default_zero_tolerance().
SpectralDecomposition decompose(const Eigen::MatrixXd& L, double zero_tol = -1.0);

/// decompose(laplacian(g)).
SpectralDecomposition decompose(const Graph& g);

/// Coefficients lambda_i^{-k} over the positive spectrum, in eigenvalue order.
/// Values that would underflow are clamped to the smallest normal double and
/// reported through `clamped`.
struct PowerCoefficients {
  Eigen::VectorXd values;  // indexed like the positive eigenvalues
  bool clamped = false;
};
PowerCoefficients power_coefficients(const SpectralDecomposition& dec, double k);

/// (L^+)^k = sum over positive eigenvalues of lambda^{-k} x x^T, k >= 0.
/// k = 0 gives the projector onto the range of L.
Eigen::MatrixXd pinv_power(const SpectralDecomposition& dec, double k);

/// Same sum restricted to the r smallest positive eigenvalues, 1 <= r <= rank.
Eigen::MatrixXd low_rank_power(const SpectralDecomposition& dec, double k, std::size_t r);

/// Rows are vertex coordinates whose Euclidean distances are H^k (or the
/// rank-r H^{k,r} when `rank` is given). Columns are lambda^{-k/2} x over the
/// selected eigenpairs. Without `rank` the source graph must be connected.
Eigen::MatrixXd embedding(const SpectralDecomposition& dec, double k,
                          std::optional<std::size_t> rank = std::nullopt);

/// Rows are the unscaled eigenvectors 2..c+1 (the c smallest positive
/// eigenvalues); the unnormalised spectral-clustering embedding.
Eigen::MatrixXd spectral_embedding(const SpectralDecomposition& dec, std::size_t c);

}  // namespace graphharm
