#pragma once

#include "graphharm/centrality.hpp"
#include "graphharm/graph.hpp"
#include "graphharm/spectra.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace graphharm {

struct Provenance {
  std::string algorithm;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::optional<std::uint64_t> seed;
};

/// Vertex -> cluster id in [0, clusters). Empty clusters keep their id.
struct Clustering {
  std::vector<std::size_t> assignment;
  std::size_t clusters = 0;
  Provenance provenance;

  std::vector<std::size_t> cluster_sizes() const;
};

struct KMeansResult {
  Clustering clustering;
  Eigen::MatrixXd centroids;            // clusters x d
  double inertia = 0.0;                 // within-cluster sum of squares
  std::vector<double> inertia_history;  // after every centroid update
  std::size_t iterations = 0;
};

inline constexpr std::size_t kDefaultKMeansIterations = 300;

/// Lloyd's algorithm on the rows of `points`, initialised with `c` distinct
/// rows drawn uniformly by a seeded generator. An emptied cluster is
/// re-seeded with the point farthest from its current centroid. Stops when
/// the assignment is stable or after `max_iters` rounds.
KMeansResult kmeans(const Eigen::MatrixXd& points, std::size_t c, std::uint64_t seed,
                    std::size_t max_iters = kDefaultKMeansIterations);

/// k-means over the full-rank k-harmonic embedding (k = 2: biharmonic
/// k-means; k = 1: effective-resistance k-means).
Clustering kharmonic_kmeans(const Graph& g, const SpectralDecomposition& dec, std::size_t c,
                            double k, std::uint64_t seed);
Clustering kharmonic_kmeans(const Graph& g, std::size_t c, double k, std::uint64_t seed);

/// k-means over the rank-r k-harmonic embedding; r defaults to c.
Clustering low_rank_kharmonic_kmeans(const Graph& g, const SpectralDecomposition& dec,
                                     std::size_t c, double k, std::optional<std::size_t> r,
                                     std::uint64_t seed);
Clustering low_rank_kharmonic_kmeans(const Graph& g, std::size_t c, double k,
                                     std::optional<std::size_t> r, std::uint64_t seed);

/// Unnormalised spectral clustering on eigenvectors 2..c+1. Requires c < n.
Clustering spectral_clustering(const Graph& g, const SpectralDecomposition& dec, std::size_t c,
                               std::uint64_t seed);
Clustering spectral_clustering(const Graph& g, std::size_t c, std::uint64_t seed);

/// Repeatedly deletes the edge with the largest measure until the graph has
/// at least c components. The measure is evaluated per connected component.
/// Scores within kGirvanNewmanTieTolerance (relative) of the maximum count as
/// ties and go to the lowest original edge index. Clusters are the final
/// components, numbered by smallest vertex.
inline constexpr double kGirvanNewmanTieTolerance = 1e-12;
struct GirvanNewmanResult {
  Clustering clustering;
  std::vector<EdgeId> removed;  // original edge indices in deletion order
};
GirvanNewmanResult girvan_newman(const Graph& g, std::size_t c, const Measure& measure);

/// Best superlevel-set cut {v : x(v) >= threshold} by isoperimetric ratio.
/// Values within level_tol * (max x - min x) of a level's top value join
/// that level, so round-off does not split ties. Ties in the ratio prefer
/// the larger side. Throws PreconditionError for (numerically) constant x.
inline constexpr double kSweepLevelTolerance = 1e-9;
Cut sweep_cut(const Graph& g, const Eigen::VectorXd& x, double level_tol = kSweepLevelTolerance);

/// (1/n) sum over predicted clusters of the size of their majority label.
double purity(const std::vector<std::size_t>& predicted, const std::vector<int>& truth);
double purity(const Clustering& predicted, const std::vector<int>& truth);

/// Mean and half-width of a 95% normal-approximation interval (1.96 s/sqrt(N),
/// sample standard deviation; 0 for a single value).
struct MeanInterval {
  double mean = 0.0;
  double half_width = 0.0;
};
MeanInterval mean_ci95(const std::vector<double>& samples);

}  // namespace graphharm
