#pragma once

#include "graphharm/graph.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace graphharm {

/// Number of regeneration attempts for generators that must return a
/// connected graph.
inline constexpr int kMaxConnectAttempts = 100;

/// Seed for the i-th derived stream of `seed` (retries, trials, ...).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
/// Vertex 0 is the hub; spokes 1..n-1.
Graph star_graph(std::size_t n);
/// Breadth-first numbered tree; depth 0 is the single root.
Graph balanced_tree(std::size_t branching, std::size_t depth);

/// G(n, p) conditioned on connectivity by regeneration. Edges come out in
/// lexicographic (u < v) order. Throws PreconditionError after
/// kMaxConnectAttempts disconnected samples.
Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);

/// Uniform random recursive tree: vertex i > 0 attaches to a uniform j < i.
Graph random_tree(std::size_t n, std::uint64_t seed);

struct LabeledGraph {
  Graph graph;
  std::vector<int> labels;
};

/// Stochastic block model conditioned on connectivity. Block b occupies a
/// contiguous vertex range and carries label b.
LabeledGraph stochastic_block_model(const std::vector<std::size_t>& sizes, double p_in,
                                    double p_out, std::uint64_t seed);

/// Unweighted k-nearest-neighbour graph over the rows of `points`, symmetrised
/// by union. Distance ties go to the lower point index.
Graph knn_graph(const Eigen::MatrixXd& points, std::size_t k);

/// Copy of `g` with every weight redrawn uniformly from [lo, hi].
Graph with_random_weights(const Graph& g, double lo, double hi, std::uint64_t seed);

}  // namespace graphharm
