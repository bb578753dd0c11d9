#include "helpers.hpp"

#include <graphharm/centrality.hpp>
#include <graphharm/error.hpp>
#include <graphharm/generators.hpp>
#include <graphharm/harmonic.hpp>

#include <gtest/gtest.h>

using namespace graphharm;

TEST(Centrality, MatchesOracle) {
  for (const oracle::OracleGraph* og : oracle::kAll) {
    const Graph g = testutil::to_graph(*og);
    const SpectralDecomposition dec = decompose(g);
    const EdgeScores sq = squared_flow_centrality(g, dec);
    const EdgeScores cf = current_flow_centrality(g, dec);
    const EdgeScores bt = edge_betweenness(g);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      EXPECT_LE(testutil::rel_err(sq.values[e], og->squared_flow[e]), 1e-10) << og->name;
      EXPECT_LE(testutil::rel_err(cf.values[e], og->current_flow[e]), 1e-10) << og->name;
      EXPECT_LE(testutil::rel_err(bt.values[e], og->betweenness[e]), 1e-12) << og->name;
    }
  }
}

TEST(Centrality, SquaredFlowEqualsScaledBiharmonic) {
  const Graph g = with_random_weights(erdos_renyi(18, 0.3, 4), 0.1, 10.0, 5);
  const SpectralDecomposition dec = decompose(g);
  const EdgeScores sq = squared_flow_centrality(g, dec);
  const EdgeScores wb = weighted_biharmonic_edges(g, dec);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    EXPECT_LE(testutil::rel_err(sq.values[e], 18.0 * wb.values[e]), 1e-9);
  }
}

TEST(Centrality, StarIsSymmetric) {
  const Graph g = star_graph(7);
  const SpectralDecomposition dec = decompose(g);
  for (const EdgeScores& s : {current_flow_centrality(g, dec), edge_betweenness(g),
                              edge_kharmonic_squared(g, dec, 2.0)}) {
    for (double v : s.values) EXPECT_NEAR(v, s.values[0], 1e-12 * std::abs(s.values[0]));
  }
  EXPECT_NEAR(edge_betweenness(g).values[0], 6.0, 1e-12);
}

TEST(Centrality, RankingBreaksTiesByIndex) {
  EdgeScores s;
  s.values = {1.0, 3.0, 3.0, 0.5};
  EXPECT_EQ(s.ranking(), (std::vector<EdgeId>{1, 2, 0, 3}));
  EXPECT_EQ(s.rank_positions(), (std::vector<std::size_t>{3, 1, 2, 4}));
}

TEST(Spearman, KnownValues) {
  EdgeScores a, b;
  a.values = {1, 2, 3, 4};
  b.values = {10, 20, 30, 40};
  EXPECT_DOUBLE_EQ(spearman(a, b), 1.0);
  b.values = {4, 3, 2, 1};
  EXPECT_DOUBLE_EQ(spearman(a, b), -1.0);
  a.values = oracle::kSpearmanA;
  b.values = oracle::kSpearmanB;
  EXPECT_NEAR(spearman(a, b), oracle::kSpearmanAB, 1e-12);
}

TEST(Spearman, Errors) {
  EdgeScores a, b;
  a.values = {1, 2, 3};
  b.values = {1, 2};
  EXPECT_THROW(spearman(a, b), InvalidArgument);
  b.values = {5, 5, 5};
  EXPECT_THROW(spearman(a, b), PreconditionError);
  a.values = {1};
  b.values = {1};
  EXPECT_THROW(spearman(a, b), InvalidArgument);
  const Graph g = path_graph(3);
  EdgeScores x = make_scores(g, {1, 2}, "x");
  EdgeScores y = make_scores(star_graph(3), {1, 2}, "y");
  y.endpoints[1] = {0, 2};
  x.endpoints[1] = {1, 2};
  EXPECT_THROW(spearman(x, y), InvalidArgument);
}

TEST(Measure, ParseAndName) {
  for (const char* name : {"biharmonic2", "current-flow", "betweenness", "resistance"}) {
    EXPECT_EQ(Measure::parse(name).name(), name);
  }
  const Measure k = Measure::parse("kharmonic2", 3.0);
  EXPECT_EQ(k.kind, Measure::Kind::KHarmonic2);
  EXPECT_EQ(k.k, 3.0);
  EXPECT_THROW(Measure::parse("pagerank"), InvalidArgument);
  EXPECT_THROW(Measure::parse("kharmonic2", 0.0), InvalidArgument);
}

TEST(Resilience, NoAddedEdgesKeepsRanking) {
  const Graph g = erdos_renyi(15, 0.3, 1);
  for (double rho : resilience_experiment(g, Measure::parse("biharmonic2"), 0, 3, 2)) {
    EXPECT_DOUBLE_EQ(rho, 1.0);
  }
}

TEST(Resilience, SeededAndBounded) {
  const Graph g = erdos_renyi(20, 0.25, 3);
  const Measure m = Measure::parse("current-flow");
  const auto a = resilience_experiment(g, m, 5, 4, 11);
  EXPECT_EQ(a, resilience_experiment(g, m, 5, 4, 11));
  ASSERT_EQ(a.size(), 4u);
  for (double rho : a) {
    EXPECT_LE(rho, 1.0);
    EXPECT_GE(rho, -1.0);
  }
}

TEST(Resilience, Preconditions) {
  EXPECT_THROW(resilience_experiment(complete_graph(5), Measure::parse("resistance"), 1, 1, 0),
               PreconditionError);
  EXPECT_THROW(resilience_experiment(path_graph(4), Measure::parse("resistance"), 4, 1, 0),
               InvalidArgument);
}
