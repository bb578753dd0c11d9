#include "helpers.hpp"

#include <graphharm/cluster.hpp>
#include <graphharm/error.hpp>
#include <graphharm/generators.hpp>

#include <gtest/gtest.h>

#include <algorithm>

using namespace graphharm;

namespace {

bool same_partition(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if ((a[i] == a[j]) != (b[i] == b[j])) return false;
    }
  }
  return true;
}

const std::vector<std::size_t> kBarbellSplit{0, 0, 0, 1, 1, 1};

}  // namespace

TEST(KMeans, SeparatesTwoBlobs) {
  Eigen::MatrixXd pts(6, 2);
  pts << 0, 0, 0.1, 0, 0, 0.1, 5, 5, 5.1, 5, 5, 5.1;
  const KMeansResult r = kmeans(pts, 2, 3);
  EXPECT_TRUE(same_partition(r.clustering.assignment, kBarbellSplit));
  EXPECT_NEAR(r.inertia, 4 * 0.1 * 0.1 * 2.0 / 3.0, 1e-12);
  EXPECT_EQ(r.centroids.rows(), 2);
  EXPECT_EQ(r.clustering.cluster_sizes(), (std::vector<std::size_t>{3, 3}));
}

TEST(KMeans, InertiaNeverIncreases) {
  const LabeledGraph sbm = stochastic_block_model({30, 30, 30}, 0.5, 0.1, 2);
  const Eigen::MatrixXd X = embedding(decompose(sbm.graph), 1.0);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const KMeansResult r = kmeans(X, 4, seed);
    ASSERT_FALSE(r.inertia_history.empty());
    for (std::size_t i = 1; i < r.inertia_history.size(); ++i) {
      EXPECT_LE(r.inertia_history[i], r.inertia_history[i - 1] * (1 + 1e-12));
    }
    EXPECT_NEAR(r.inertia, r.inertia_history.back(), 1e-12 * r.inertia);
  }
}

TEST(KMeans, Deterministic) {
  Eigen::MatrixXd pts = Eigen::MatrixXd::Random(40, 3);
  EXPECT_EQ(kmeans(pts, 5, 9).clustering.assignment, kmeans(pts, 5, 9).clustering.assignment);
}

TEST(KMeans, Errors) {
  Eigen::MatrixXd pts(3, 1);
  pts << 0, 1, 2;
  EXPECT_THROW(kmeans(pts, 0, 0), InvalidArgument);
  EXPECT_THROW(kmeans(pts, 4, 0), InvalidArgument);
  EXPECT_THROW(kmeans(pts, 2, 0, 0), InvalidArgument);
  EXPECT_THROW(kmeans(Eigen::MatrixXd(3, 0), 1, 0), InvalidArgument);
  const KMeansResult one = kmeans(pts, 3, 0);
  EXPECT_EQ(one.inertia, 0.0);
}

TEST(KHarmonicKMeans, BarbellSplitsAtBridge) {
  const Graph g = testutil::barbell();
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Clustering c = kharmonic_kmeans(g, 2, 2.0, seed);
    EXPECT_TRUE(same_partition(c.assignment, kBarbellSplit)) << "seed " << seed;
    EXPECT_EQ(c.provenance.algorithm, "kharmonic-kmeans");
    EXPECT_EQ(c.provenance.seed, seed);
  }
}

TEST(KHarmonicKMeans, SingleClusterAndErrors) {
  const Graph g = testutil::barbell();
  const Clustering one = kharmonic_kmeans(g, 1, 2.0, 0);
  EXPECT_EQ(one.assignment, std::vector<std::size_t>(6, 0));
  EXPECT_THROW(kharmonic_kmeans(g, 0, 2.0, 0), InvalidArgument);
  EXPECT_THROW(kharmonic_kmeans(g, 7, 2.0, 0), InvalidArgument);
  const Graph split = testutil::make(4, {{0, 1}, {2, 3}});
  EXPECT_THROW(kharmonic_kmeans(split, 2, 2.0, 0), DisconnectedGraphError);
}

TEST(LowRank, FullRankEqualsFullEmbedding) {
  const LabeledGraph sbm = stochastic_block_model({10, 10, 10}, 0.6, 0.1, 4);
  const SpectralDecomposition dec = decompose(sbm.graph);
  const Clustering full = kharmonic_kmeans(sbm.graph, dec, 3, 2.0, 1);
  const Clustering low = low_rank_kharmonic_kmeans(sbm.graph, dec, 3, 2.0, 29, 1);
  EXPECT_EQ(full.assignment, low.assignment);
  EXPECT_EQ(low.provenance.algorithm, "lowrank-kharmonic-kmeans");
  EXPECT_THROW(low_rank_kharmonic_kmeans(sbm.graph, dec, 3, 2.0, 30, 1), InvalidArgument);
  EXPECT_THROW(low_rank_kharmonic_kmeans(sbm.graph, dec, 3, 2.0, 0, 1), InvalidArgument);
}

TEST(LowRank, SmallKApproachesSpectralEmbedding) {
  const SpectralDecomposition dec = decompose(erdos_renyi(20, 0.3, 5));
  const double k = 1e-6;
  const Eigen::MatrixXd X = embedding(dec, k, 3);
  const Eigen::MatrixXd S = spectral_embedding(dec, 3);
  EXPECT_LE((X - S).cwiseAbs().maxCoeff(), 1e-4);
}

TEST(Spectral, KMeansOnUnscaledEigenvectors) {
  const LabeledGraph sbm = stochastic_block_model({30, 30}, 0.8, 0.02, 6);
  const SpectralDecomposition dec = decompose(sbm.graph);
  const Clustering c = spectral_clustering(sbm.graph, dec, 2, 3);
  EXPECT_EQ(c.assignment, kmeans(spectral_embedding(dec, 2), 2, 3).clustering.assignment);
  EXPECT_GE(purity(c, sbm.labels), 0.9);
}

TEST(Spectral, Errors) {
  const Graph g = testutil::barbell();
  EXPECT_THROW(spectral_clustering(g, 6, 0), InvalidArgument);
  EXPECT_THROW(spectral_clustering(g, 0, 0), InvalidArgument);
}

TEST(GirvanNewman, BarbellRemovesBridgeFirst) {
  for (const char* name : {"biharmonic2", "current-flow", "betweenness", "resistance"}) {
    const GirvanNewmanResult r = girvan_newman(testutil::barbell(), 2, Measure::parse(name));
    ASSERT_EQ(r.removed.size(), 1u) << name;
    EXPECT_EQ(r.removed[0], 3u) << name;
    EXPECT_EQ(r.clustering.assignment, kBarbellSplit) << name;
    EXPECT_EQ(r.clustering.provenance.algorithm, "girvan-newman");
  }
}

TEST(GirvanNewman, PathSplitsInTheMiddle) {
  const GirvanNewmanResult r = girvan_newman(path_graph(4), 2, Measure::parse("biharmonic2"));
  EXPECT_EQ(r.removed, (std::vector<EdgeId>{1}));
  EXPECT_EQ(r.clustering.assignment, (std::vector<std::size_t>{0, 0, 1, 1}));
}

TEST(GirvanNewman, TiesGoToLowestIndex) {
  const GirvanNewmanResult r = girvan_newman(testutil::make(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}), 2,
                                             Measure::parse("resistance"));
  EXPECT_EQ(r.removed, (std::vector<EdgeId>{0, 1}));
}

TEST(GirvanNewman, AlreadySplitIsNoOp) {
  const Graph g = testutil::make(5, {{0, 1}, {2, 3}, {3, 4}});
  const GirvanNewmanResult r = girvan_newman(g, 2, Measure::parse("betweenness"));
  EXPECT_TRUE(r.removed.empty());
  EXPECT_EQ(r.clustering.assignment, (std::vector<std::size_t>{0, 0, 1, 1, 1}));
  EXPECT_EQ(girvan_newman(g, 5, Measure::parse("betweenness")).removed.size(), 3u);
}

TEST(SweepCut, BarbellFiedlerVector) {
  const Graph g = testutil::barbell();
  const SpectralDecomposition dec = decompose(g);
  const Cut cut = sweep_cut(g, dec.eigenvectors.col(1));
  EXPECT_EQ(cut.crossing_edges, (std::vector<EdgeId>{3}));
  EXPECT_EQ(cut.side.size(), 3u);
}

TEST(SweepCut, TwoLevelsMergeRoundOff) {
  const Graph g = testutil::barbell();
  Eigen::VectorXd x(6);
  x << 1.0, 1.0 - 1e-14, 1.0, -1.0, -1.0 + 1e-14, -1.0;
  const Cut cut = sweep_cut(g, x);
  EXPECT_EQ(cut.side, (std::vector<Vertex>{0, 1, 2}));
}

TEST(SweepCut, Errors) {
  const Graph g = testutil::barbell();
  EXPECT_THROW(sweep_cut(g, Eigen::VectorXd::Constant(6, 2.0)), PreconditionError);
  EXPECT_THROW(sweep_cut(g, Eigen::VectorXd::Zero(5)), InvalidArgument);
}

TEST(Purity, Examples) {
  EXPECT_DOUBLE_EQ(purity(std::vector<std::size_t>{0, 0, 1, 1}, {0, 0, 1, 1}), 1.0);
  EXPECT_DOUBLE_EQ(purity(std::vector<std::size_t>{0, 0, 0, 0}, {0, 0, 1, 1}), 0.5);
  EXPECT_DOUBLE_EQ(purity(std::vector<std::size_t>{0, 1, 2, 3}, {0, 0, 1, 1}), 1.0);
  EXPECT_DOUBLE_EQ(purity(std::vector<std::size_t>{0, 0, 0, 1, 1, 1}, {0, 0, 1, 1, 1, 2}), 4.0 / 6.0);
  EXPECT_THROW(purity(std::vector<std::size_t>{0}, {0, 1}), InvalidArgument);
  EXPECT_THROW(purity(std::vector<std::size_t>{}, {}), InvalidArgument);
}

TEST(Purity, InvariantUnderRelabelling) {
  const std::vector<std::size_t> a{0, 1, 1, 2, 2, 2, 0};
  const std::vector<std::size_t> b{5, 3, 3, 1, 1, 1, 5};
  const std::vector<int> truth{1, 0, 1, 0, 2, 2, 1};
  EXPECT_DOUBLE_EQ(purity(a, truth), purity(b, truth));
}

TEST(MeanCi95, Values) {
  const MeanInterval one = mean_ci95({0.7});
  EXPECT_DOUBLE_EQ(one.mean, 0.7);
  EXPECT_EQ(one.half_width, 0.0);
  const MeanInterval m = mean_ci95({1.0, 2.0, 3.0, 4.0});
  EXPECT_DOUBLE_EQ(m.mean, 2.5);
  EXPECT_NEAR(m.half_width, 1.96 * std::sqrt(5.0 / 3.0) / 2.0, 1e-12);
}
