#include "graphharm/generators.hpp"

#include "graphharm/error.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <string>

namespace graphharm {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  edges.reserve(n * (n - (n > 0 ? 1 : 0)) / 2);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v, 1.0});
  }
  return Graph::build(n, std::move(edges));
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({v - 1, v, 1.0});
  return Graph::build(n, std::move(edges));
}

Graph star_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({0, v, 1.0});
  return Graph::build(n, std::move(edges));
}

Graph balanced_tree(std::size_t branching, std::size_t depth) {
  if (branching == 0) throw InvalidArgument("balanced_tree: branching must be >= 1");
  std::size_t n = 1;
  std::size_t level = 1;
  for (std::size_t d = 0; d < depth; ++d) {
    level *= branching;
    n += level;
  }
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({(v - 1) / branching, v, 1.0});
  return Graph::build(n, std::move(edges));
}

namespace {

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidArgument(std::string(name) + " must lie in [0, 1]");
  }
}

}  // namespace

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  check_probability(p, "p");
  if (n == 0) throw InvalidArgument("erdos_renyi: n must be >= 1");
  for (int attempt = 0; attempt < kMaxConnectAttempts; ++attempt) {
    std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (coin(rng) < p) edges.push_back({u, v, 1.0});
      }
    }
    Graph g = Graph::build(n, std::move(edges));
    if (is_connected(g)) return g;
  }
  throw PreconditionError("erdos_renyi: no connected sample after " +
                          std::to_string(kMaxConnectAttempts) + " attempts");
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InvalidArgument("random_tree: n must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<Vertex> parent(0, v - 1);
    edges.push_back({parent(rng), v, 1.0});
  }
  return Graph::build(n, std::move(edges));
}

LabeledGraph stochastic_block_model(const std::vector<std::size_t>& sizes, double p_in,
                                    double p_out, std::uint64_t seed) {
  if (sizes.empty()) throw InvalidArgument("sbm: cluster sizes must be nonempty");
  if (std::any_of(sizes.begin(), sizes.end(), [](std::size_t s) { return s == 0; })) {
    throw InvalidArgument("sbm: cluster sizes must be positive");
  }
  check_probability(p_in, "p_in");
  check_probability(p_out, "p_out");

  std::vector<int> labels;
  for (std::size_t b = 0; b < sizes.size(); ++b) labels.insert(labels.end(), sizes[b], static_cast<int>(b));
  const std::size_t n = labels.size();

  for (int attempt = 0; attempt < kMaxConnectAttempts; ++attempt) {
    std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        const double p = labels[u] == labels[v] ? p_in : p_out;
        if (coin(rng) < p) edges.push_back({u, v, 1.0});
      }
    }
    Graph g = Graph::build(n, std::move(edges));
    if (is_connected(g)) return {std::move(g), labels};
  }
  throw PreconditionError("sbm: no connected sample after " +
                          std::to_string(kMaxConnectAttempts) + " attempts");
}

Graph knn_graph(const Eigen::MatrixXd& points, std::size_t k) {
  const auto n = static_cast<std::size_t>(points.rows());
  if (k == 0) throw InvalidArgument("knn: k must be >= 1");
  if (k >= n) {
    throw InvalidArgument("knn: k = " + std::to_string(k) + " must be smaller than the " +
                          std::to_string(n) + " points");
  }
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::vector<std::pair<double, Vertex>> dist(n - 1);
  for (Vertex i = 0; i < n; ++i) {
    std::size_t j = 0;
    for (Vertex o = 0; o < n; ++o) {
      if (o == i) continue;
      dist[j++] = {(points.row(static_cast<Eigen::Index>(i)) - points.row(static_cast<Eigen::Index>(o)))
                       .squaredNorm(),
                   o};
    }
    std::partial_sort(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(k), dist.end());
    for (std::size_t r = 0; r < k; ++r) {
      const Vertex o = dist[r].second;
      adj[i][o] = adj[o][i] = 1;
    }
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (adj[u][v]) edges.push_back({u, v, 1.0});
    }
  }
  return Graph::build(n, std::move(edges));
}

Graph with_random_weights(const Graph& g, double lo, double hi, std::uint64_t seed) {
  if (!(lo > 0.0 && hi >= lo)) throw InvalidArgument("weights need 0 < lo <= hi");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> draw(lo, hi);
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) e.w = draw(rng);
  return Graph::build(g.vertex_count(), std::move(edges));
}

}  // namespace graphharm
