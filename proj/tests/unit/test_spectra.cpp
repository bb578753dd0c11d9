#include "helpers.hpp"

#include <graphharm/error.hpp>
#include <graphharm/generators.hpp>
#include <graphharm/spectra.hpp>

#include <gtest/gtest.h>

using namespace graphharm;

TEST(Spectra, CompleteGraphEigenvalues) {
  const SpectralDecomposition dec = decompose(complete_graph(6));
  EXPECT_EQ(dec.kernel_dim, 1u);
  EXPECT_EQ(dec.eigenvalues(0), 0.0);
  for (Eigen::Index i = 1; i < 6; ++i) EXPECT_NEAR(dec.eigenvalues(i), 6.0, 1e-12);
}

TEST(Spectra, MatchesOracleEigenvalues) {
  for (const oracle::OracleGraph* og : oracle::kAll) {
    const SpectralDecomposition dec = decompose(testutil::to_graph(*og));
    ASSERT_EQ(dec.size(), og->eigenvalues.size()) << og->name;
    const double scale = og->eigenvalues.back();
    for (std::size_t i = 0; i < dec.size(); ++i) {
      EXPECT_NEAR(dec.eigenvalues(static_cast<Eigen::Index>(i)), og->eigenvalues[i], 1e-12 * scale)
          << og->name << " eigenvalue " << i;
    }
    EXPECT_EQ(dec.kernel_dim, 1u) << og->name;
  }
}

TEST(Spectra, KernelCountsComponents) {
  const Graph g = testutil::make(7, {{0, 1}, {1, 2}, {3, 4}});
  const SpectralDecomposition dec = decompose(g);
  EXPECT_EQ(dec.kernel_dim, 4u);
  EXPECT_EQ(dec.rank(), 3u);
  for (std::size_t i = 0; i < dec.kernel_dim; ++i) EXPECT_EQ(dec.eigenvalues(static_cast<Eigen::Index>(i)), 0.0);
}

TEST(Spectra, SignConvention) {
  const SpectralDecomposition dec = decompose(erdos_renyi(20, 0.3, 1));
  for (Eigen::Index j = 0; j < dec.eigenvectors.cols(); ++j) {
    Eigen::Index arg = 0;
    dec.eigenvectors.col(j).cwiseAbs().maxCoeff(&arg);
    EXPECT_GT(dec.eigenvectors(arg, j), 0.0);
  }
  EXPECT_TRUE((dec.eigenvectors.transpose() * dec.eigenvectors)
                  .isApprox(Eigen::MatrixXd::Identity(20, 20), 1e-12));
}

TEST(Spectra, RejectsNonSymmetric) {
  Eigen::MatrixXd m(2, 2);
  m << 1, 2, 0, 1;
  EXPECT_THROW(decompose(m), InvalidArgument);
  EXPECT_THROW(decompose(Eigen::MatrixXd(2, 3)), InvalidArgument);
}

TEST(Spectra, PseudoinverseIsMoorePenrose) {
  const Graph g = with_random_weights(erdos_renyi(15, 0.4, 2), 0.1, 10.0, 3);
  const Eigen::MatrixXd L = laplacian(g);
  const Eigen::MatrixXd P = pinv_power(decompose(g), 1.0);
  EXPECT_TRUE((L * P * L).isApprox(L, 1e-10));
  EXPECT_TRUE((P * L * P).isApprox(P, 1e-10));
  EXPECT_TRUE((L * P).isApprox((L * P).transpose(), 1e-10));
  const Eigen::MatrixXd J = Eigen::MatrixXd::Constant(15, 15, 1.0 / 15.0);
  EXPECT_TRUE((L * P).isApprox(Eigen::MatrixXd::Identity(15, 15) - J, 1e-10));
}

TEST(Spectra, PowersComposeAndZeroIsProjector) {
  const SpectralDecomposition dec = decompose(erdos_renyi(12, 0.4, 4));
  const Eigen::MatrixXd P1 = pinv_power(dec, 1.0);
  EXPECT_TRUE(pinv_power(dec, 2.0).isApprox(P1 * P1, 1e-10));
  EXPECT_TRUE(pinv_power(dec, 2.5).isApprox(pinv_power(dec, 1.5) * P1, 1e-10));
  const Eigen::MatrixXd P0 = pinv_power(dec, 0.0);
  EXPECT_TRUE(P0.isApprox(P0 * P0, 1e-12));
  EXPECT_NEAR(P0.trace(), 11.0, 1e-10);
}

TEST(Spectra, LowRankTruncation) {
  const SpectralDecomposition dec = decompose(erdos_renyi(12, 0.4, 5));
  EXPECT_TRUE(low_rank_power(dec, 2.0, dec.rank()).isApprox(pinv_power(dec, 2.0), 1e-12));
  double prev = 0.0;
  for (std::size_t r = 1; r <= dec.rank(); ++r) {
    const double tr = low_rank_power(dec, 2.0, r).trace();
    EXPECT_GT(tr, prev);
    prev = tr;
  }
  EXPECT_THROW(low_rank_power(dec, 2.0, 0), InvalidArgument);
  EXPECT_THROW(low_rank_power(dec, 2.0, dec.rank() + 1), InvalidArgument);
}

TEST(Spectra, PowerCoefficientsClampInsteadOfUnderflow) {
  const SpectralDecomposition dec = decompose(complete_graph(30));
  const PowerCoefficients small = power_coefficients(dec, 2.0);
  EXPECT_FALSE(small.clamped);
  EXPECT_NEAR(small.values(0), 1.0 / 900.0, 1e-15);
  const PowerCoefficients huge = power_coefficients(dec, 400.0);
  EXPECT_TRUE(huge.clamped);
  EXPECT_GT(huge.values.minCoeff(), 0.0);
  EXPECT_THROW(power_coefficients(dec, -1.0), InvalidArgument);
}

TEST(Spectra, EmbeddingReproducesPseudoinverse) {
  const SpectralDecomposition dec = decompose(erdos_renyi(10, 0.5, 6));
  const Eigen::MatrixXd X = embedding(dec, 2.0);
  EXPECT_EQ(X.cols(), 9);
  EXPECT_TRUE((X * X.transpose()).isApprox(pinv_power(dec, 2.0), 1e-10));
  const Eigen::MatrixXd Xr = embedding(dec, 2.0, 3);
  EXPECT_EQ(Xr.cols(), 3);
  EXPECT_TRUE((Xr * Xr.transpose()).isApprox(low_rank_power(dec, 2.0, 3), 1e-10));
  const Eigen::MatrixXd S = spectral_embedding(dec, 2);
  EXPECT_TRUE(S.isApprox(dec.eigenvectors.middleCols(1, 2)));
}

TEST(Spectra, EmbeddingNeedsConnectedGraph) {
  const SpectralDecomposition dec = decompose(testutil::make(4, {{0, 1}, {2, 3}}));
  EXPECT_THROW(embedding(dec, 1.0), DisconnectedGraphError);
}
