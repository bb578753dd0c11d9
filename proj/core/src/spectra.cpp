#include "graphharm/spectra.hpp"

#include "graphharm/error.hpp"
#include "graphharm/graph.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace graphharm {

double default_zero_tolerance(std::size_t n, double lambda_max) {
  return static_cast<double>(n) * lambda_max * std::numeric_limits<double>::epsilon() * 64.0;
}

namespace {

void fix_signs(Eigen::MatrixXd& vectors) {
  for (Eigen::Index j = 0; j < vectors.cols(); ++j) {
    Eigen::Index best = 0;
    double best_abs = -1.0;
    for (Eigen::Index i = 0; i < vectors.rows(); ++i) {
      const double a = std::abs(vectors(i, j));
      if (a > best_abs) {
        best_abs = a;
        best = i;
      }
    }
    if (vectors.rows() > 0 && vectors(best, j) < 0.0) vectors.col(j) *= -1.0;
  }
}

}  // namespace

SpectralDecomposition decompose(const Eigen::MatrixXd& L, double zero_tol) {
  if (L.rows() != L.cols()) throw InvalidArgument("decompose: matrix is not square");
  const double scale = std::max(1.0, L.cwiseAbs().maxCoeff());
  if (L.size() > 0 && (L - L.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale) {
    throw InvalidArgument("decompose: matrix is not symmetric");
  }

  SpectralDecomposition dec;
  if (L.rows() == 0) {
    dec.zero_tol = zero_tol < 0.0 ? 0.0 : zero_tol;
    return dec;
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(L);
  if (solver.info() != Eigen::Success) throw Error("decompose: eigensolver did not converge");

  dec.eigenvalues = solver.eigenvalues();
  dec.eigenvectors = solver.eigenvectors();
  const auto n = static_cast<std::size_t>(L.rows());
  const double lambda_max = std::max(0.0, dec.eigenvalues(dec.eigenvalues.size() - 1));
  dec.zero_tol = zero_tol < 0.0 ? default_zero_tolerance(n, lambda_max) : zero_tol;

  if (dec.eigenvalues(0) < -std::max(dec.zero_tol, 1e-12 * scale)) {
    throw InvalidArgument("decompose: matrix is not positive semidefinite (eigenvalue " +
                          std::to_string(dec.eigenvalues(0)) + ")");
  }
  for (Eigen::Index i = 0; i < dec.eigenvalues.size(); ++i) {
    if (dec.eigenvalues(i) <= dec.zero_tol) {
      dec.eigenvalues(i) = 0.0;
      ++dec.kernel_dim;
    }
  }
  fix_signs(dec.eigenvectors);
  return dec;
}

SpectralDecomposition decompose(const Graph& g) { return decompose(laplacian(g)); }

PowerCoefficients power_coefficients(const SpectralDecomposition& dec, double k) {
  if (!(k >= 0.0)) throw InvalidArgument("pseudoinverse power k must be >= 0");
  PowerCoefficients out;
  out.values.resize(static_cast<Eigen::Index>(dec.rank()));
  const auto offset = static_cast<Eigen::Index>(dec.kernel_dim);
  constexpr double tiny = std::numeric_limits<double>::min();
  constexpr double huge = std::numeric_limits<double>::max();
  for (Eigen::Index i = 0; i < out.values.size(); ++i) {
    double c = std::exp(-k * std::log(dec.eigenvalues(offset + i)));
    if (c < tiny) {
      c = tiny;
      out.clamped = true;
    } else if (!(c <= huge)) {
      c = huge;
      out.clamped = true;
    }
    out.values(i) = c;
  }
  return out;
}

namespace {

Eigen::MatrixXd weighted_outer_sum(const SpectralDecomposition& dec, const Eigen::VectorXd& coeff,
                                   Eigen::Index count) {
  const auto offset = static_cast<Eigen::Index>(dec.kernel_dim);
  const Eigen::MatrixXd X = dec.eigenvectors.middleCols(offset, count);
  Eigen::MatrixXd M = X * coeff.head(count).asDiagonal() * X.transpose();
  // Symmetrise to remove round-off asymmetry from the product.
  return 0.5 * (M + M.transpose());
}

}  // namespace

Eigen::MatrixXd pinv_power(const SpectralDecomposition& dec, double k) {
  const auto coeff = power_coefficients(dec, k);
  return weighted_outer_sum(dec, coeff.values, coeff.values.size());
}

Eigen::MatrixXd low_rank_power(const SpectralDecomposition& dec, double k, std::size_t r) {
  if (r < 1 || r > dec.rank()) {
    throw InvalidArgument("rank r = " + std::to_string(r) + " outside [1, " +
                          std::to_string(dec.rank()) + "]");
  }
  const auto coeff = power_coefficients(dec, k);
  return weighted_outer_sum(dec, coeff.values, static_cast<Eigen::Index>(r));
}

Eigen::MatrixXd embedding(const SpectralDecomposition& dec, double k, std::optional<std::size_t> rank) {
  std::size_t cols = dec.rank();
  if (rank) {
    if (*rank < 1 || *rank > dec.rank()) {
      throw InvalidArgument("rank r = " + std::to_string(*rank) + " outside [1, " +
                            std::to_string(dec.rank()) + "]");
    }
    cols = *rank;
  } else if (dec.kernel_dim > 1) {
    throw DisconnectedGraphError(dec.kernel_dim);
  }
  // lambda^{-k/2}, i.e. the square root of the k-th power coefficients.
  const auto coeff = power_coefficients(dec, 0.5 * k);
  const auto c = static_cast<Eigen::Index>(cols);
  return dec.eigenvectors.middleCols(static_cast<Eigen::Index>(dec.kernel_dim), c) *
         coeff.values.head(c).asDiagonal();
}

Eigen::MatrixXd spectral_embedding(const SpectralDecomposition& dec, std::size_t c) {
  if (c < 1 || c > dec.rank()) {
    throw InvalidArgument("spectral embedding needs 1 <= c <= " + std::to_string(dec.rank()));
  }
  return dec.eigenvectors.middleCols(static_cast<Eigen::Index>(dec.kernel_dim),
                                     static_cast<Eigen::Index>(c));
}

}  // namespace graphharm
