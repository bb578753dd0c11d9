#include "helpers.hpp"

#include <graphharm/error.hpp>
#include <graphharm/flow.hpp>
#include <graphharm/generators.hpp>
#include <graphharm/harmonic.hpp>

#include <gtest/gtest.h>

using namespace graphharm;

TEST(Flow, PathPotentialAndFlow) {
  const Graph g = path_graph(3);
  const SpectralDecomposition dec = decompose(g);
  const Potential p = st_potential(g, dec, 0, 2);
  EXPECT_NEAR(p.values(0), 1.0, 1e-12);
  EXPECT_NEAR(p.values(1), 0.0, 1e-12);
  EXPECT_NEAR(p.values(2), -1.0, 1e-12);
  const Flow f = st_flow(g, dec, 0, 2);
  EXPECT_NEAR(f.values(0), 1.0, 1e-12);
  EXPECT_NEAR(f.values(1), 1.0, 1e-12);
}

TEST(Flow, LongPathPotentialIsLinear) {
  const std::size_t n = 9;
  const Graph g = path_graph(n);
  const Potential p = st_potential(g, decompose(g), 0, n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    EXPECT_NEAR(p.values(static_cast<Eigen::Index>(i)), (n - 1.0) / 2.0 - static_cast<double>(i), 1e-10);
  }
}

TEST(Flow, SingleEdge) {
  const Graph g = testutil::make(2, {{0, 1, 4.0}});
  const SpectralDecomposition dec = decompose(g);
  EXPECT_NEAR(st_flow(g, dec, 0, 1).values(0), 1.0, 1e-12);
  EXPECT_NEAR(st_flow(g, dec, 1, 0).values(0), -1.0, 1e-12);
  EXPECT_NEAR(st_potential(g, dec, 0, 1).values(0), 0.125, 1e-12);
}

TEST(Flow, BridgeCarriesWholeCurrent) {
  const Graph g = testutil::barbell();
  const SpectralDecomposition dec = decompose(g);
  for (Vertex s : {0u, 1u, 2u}) {
    for (Vertex t : {3u, 4u, 5u}) EXPECT_NEAR(std::abs(st_flow(g, dec, s, t).values(3)), 1.0, 1e-12);
  }
  EXPECT_NEAR(st_flow(g, dec, 0, 1).values(3), 0.0, 1e-12);
}

TEST(Flow, DivergenceAndEnergy) {
  const Graph g = with_random_weights(erdos_renyi(14, 0.35, 2), 0.1, 10.0, 3);
  const SpectralDecomposition dec = decompose(g);
  const Flow f = st_flow(g, dec, 2, 9);
  Eigen::VectorXd want = Eigen::VectorXd::Zero(14);
  want(2) = 1.0;
  want(9) = -1.0;
  EXPECT_LE((divergence(g, f.values) - want).norm(), 1e-10);
  const double r = effective_resistance(dec, 2, 9);
  EXPECT_NEAR(flow_energy(g, f.values), r, 1e-10 * r);
  EXPECT_TRUE(min_norm_certificate(g, f, 5));
}

TEST(Flow, CertificateRejectsPerturbedFlow) {
  const Graph g = complete_graph(3);
  const SpectralDecomposition dec = decompose(g);
  Flow f = st_flow(g, dec, 0, 1);
  ASSERT_TRUE(min_norm_certificate(g, f));
  const Eigen::MatrixXd cycles = fundamental_cycles(g);
  ASSERT_EQ(cycles.cols(), 1);
  f.values += 0.1 * cycles.col(0);
  EXPECT_LE(divergence(g, f.values).cwiseAbs().maxCoeff(), 1.0 + 1e-12);
  EXPECT_FALSE(min_norm_certificate(g, f));
  Flow wrong = st_flow(g, dec, 0, 2);
  wrong.t = 1;
  EXPECT_FALSE(min_norm_certificate(g, wrong));
}

TEST(Flow, TreesOnlyCheckDivergence) {
  const Graph t = random_tree(12, 4);
  EXPECT_EQ(fundamental_cycles(t).cols(), 0);
  EXPECT_TRUE(min_norm_certificate(t, st_flow(t, decompose(t), 0, 11)));
}

TEST(Flow, Antisymmetry) {
  const Graph g = erdos_renyi(10, 0.5, 6);
  const SpectralDecomposition dec = decompose(g);
  EXPECT_EQ(st_flow(g, dec, 3, 7).values, -st_flow(g, dec, 7, 3).values);
}

TEST(Flow, CyclesHaveZeroDivergence) {
  const Graph g = erdos_renyi(16, 0.3, 7);
  const Eigen::MatrixXd C = fundamental_cycles(g);
  EXPECT_EQ(static_cast<std::size_t>(C.cols()), g.edge_count() - g.vertex_count() + 1);
  EXPECT_LE((boundary(g) * C).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Flow, TransferMatrixReproducesFlow) {
  const Graph g = with_random_weights(erdos_renyi(10, 0.5, 8), 0.1, 10.0, 9);
  const SpectralDecomposition dec = decompose(g);
  const Eigen::MatrixXd T = edge_transfer_matrix(g, dec, 1.0);
  const Flow f = st_flow(g, dec, 1, 6);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto i = static_cast<Eigen::Index>(e);
    EXPECT_NEAR(std::sqrt(g.edge(e).w) * (T(i, 1) - T(i, 6)), f.values(i), 1e-10);
  }
}

TEST(Flow, Preconditions) {
  const Graph g = path_graph(3);
  const SpectralDecomposition dec = decompose(g);
  EXPECT_THROW(st_flow(g, dec, 1, 1), InvalidArgument);
  EXPECT_THROW(st_flow(g, dec, 0, 5), InvalidArgument);
  const Graph split = testutil::make(4, {{0, 1}, {2, 3}});
  EXPECT_THROW(st_flow(split, decompose(split), 0, 3), DisconnectedGraphError);
}
