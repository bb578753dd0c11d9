#include "graphharm/cluster.hpp"

#include "graphharm/error.hpp"
#include "graphharm/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <string>

namespace graphharm {

namespace {

std::string fmt_real(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

void check_clusters(const Graph& g, std::size_t c) {
  if (c == 0) throw InvalidArgument("cluster count must be >= 1");
  if (c > g.vertex_count()) {
    throw InvalidArgument("cluster count " + std::to_string(c) + " exceeds vertex count " +
                          std::to_string(g.vertex_count()));
  }
}

Clustering run_kmeans(const Eigen::MatrixXd& points, std::size_t c, std::uint64_t seed,
                      Provenance provenance) {
  Clustering out = kmeans(points, c, seed).clustering;
  provenance.seed = seed;
  out.provenance = std::move(provenance);
  return out;
}

}  // namespace

Clustering kharmonic_kmeans(const Graph& g, const SpectralDecomposition& dec, std::size_t c,
                            double k, std::uint64_t seed) {
  require_connected(dec);
  check_clusters(g, c);
  if (g.vertex_count() == 1) return {{0}, 1, {"kharmonic-kmeans", {}, seed}};
  return run_kmeans(embedding(dec, k), c, seed,
                    {"kharmonic-kmeans", {{"clusters", std::to_string(c)}, {"k", fmt_real(k)}}, seed});
}

Clustering kharmonic_kmeans(const Graph& g, std::size_t c, double k, std::uint64_t seed) {
  return kharmonic_kmeans(g, decompose(g), c, k, seed);
}

Clustering low_rank_kharmonic_kmeans(const Graph& g, const SpectralDecomposition& dec,
                                     std::size_t c, double k, std::optional<std::size_t> r,
                                     std::uint64_t seed) {
  require_connected(dec);
  check_clusters(g, c);
  const std::size_t rank = r.value_or(c);
  if (rank < 1 || rank + 1 > g.vertex_count()) {
    throw InvalidArgument("rank r = " + std::to_string(rank) + " outside [1, n-1]");
  }
  return run_kmeans(embedding(dec, k, rank), c, seed,
                    {"lowrank-kharmonic-kmeans",
                     {{"clusters", std::to_string(c)}, {"k", fmt_real(k)}, {"rank", std::to_string(rank)}},
                     seed});
}

Clustering low_rank_kharmonic_kmeans(const Graph& g, std::size_t c, double k,
                                     std::optional<std::size_t> r, std::uint64_t seed) {
  return low_rank_kharmonic_kmeans(g, decompose(g), c, k, r, seed);
}

Clustering spectral_clustering(const Graph& g, const SpectralDecomposition& dec, std::size_t c,
                               std::uint64_t seed) {
  require_connected(dec);
  if (c == 0 || c >= g.vertex_count()) {
    throw InvalidArgument("spectral clustering needs 1 <= c < n");
  }
  return run_kmeans(spectral_embedding(dec, c), c, seed,
                    {"spectral", {{"clusters", std::to_string(c)}}, seed});
}

Clustering spectral_clustering(const Graph& g, std::size_t c, std::uint64_t seed) {
  return spectral_clustering(g, decompose(g), c, seed);
}

GirvanNewmanResult girvan_newman(const Graph& g, std::size_t c, const Measure& measure) {
  check_clusters(g, c);
  const std::size_t m = g.edge_count();
  std::vector<char> alive(m, 1);
  std::vector<double> score(m, 0.0);
  std::vector<char> stale(g.vertex_count(), 1);  // per vertex: component needs rescoring
  GirvanNewmanResult result;

  while (true) {
    std::vector<Edge> kept;
    std::vector<EdgeId> kept_original;
    for (EdgeId i = 0; i < m; ++i) {
      if (alive[i]) {
        kept.push_back(g.edge(i));
        kept_original.push_back(i);
      }
    }
    const Graph current = Graph::build(g.vertex_count(), kept);
    const auto components = connected_components(current);
    if (components.size() >= c || kept.empty()) break;

    for (const auto& comp : components) {
      if (comp.size() < 2 || !stale[comp.front()]) continue;
      const InducedSubgraph sub = induced_subgraph(current, comp);
      const EdgeScores local = compute_measure(sub.graph, measure);
      for (EdgeId j = 0; j < sub.edge_map.size(); ++j) {
        score[kept_original[sub.edge_map[j]]] = local.values[j];
      }
      for (Vertex v : comp) stale[v] = 0;
    }

    double top = -std::numeric_limits<double>::infinity();
    for (EdgeId i = 0; i < m; ++i) {
      if (alive[i]) top = std::max(top, score[i]);
    }
    const double cutoff = top - kGirvanNewmanTieTolerance * std::abs(top);
    EdgeId best = m;
    for (EdgeId i = 0; i < m && best == m; ++i) {
      if (alive[i] && score[i] >= cutoff) best = i;
    }
    alive[best] = 0;
    result.removed.push_back(best);
    // Only the component that held the deleted edge changes.
    const auto labels = component_labels(current);
    const std::size_t hit = labels[g.edge(best).u];
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (labels[v] == hit) stale[v] = 1;
    }
  }

  std::vector<Edge> kept;
  for (EdgeId i = 0; i < m; ++i) {
    if (alive[i]) kept.push_back(g.edge(i));
  }
  const auto labels = component_labels(Graph::build(g.vertex_count(), std::move(kept)));
  result.clustering.assignment = labels;
  result.clustering.clusters = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  std::vector<std::pair<std::string, std::string>> params{{"clusters", std::to_string(c)},
                                                          {"measure", measure.name()}};
  if (measure.kind == Measure::Kind::KHarmonic2) params.emplace_back("k", fmt_real(measure.k));
  result.clustering.provenance = {"girvan-newman", std::move(params), std::nullopt};
  return result;
}

Cut sweep_cut(const Graph& g, const Eigen::VectorXd& x, double level_tol) {
  const std::size_t n = g.vertex_count();
  if (x.size() != static_cast<Eigen::Index>(n)) throw InvalidArgument("sweep vector length != n");
  if (!(level_tol >= 0.0)) throw InvalidArgument("level tolerance must be >= 0");
  const double spread = n < 2 ? 0.0 : x.maxCoeff() - x.minCoeff();
  if (!(spread > level_tol * std::max(std::abs(x.maxCoeff()), std::abs(x.minCoeff())))) {
    throw PreconditionError("sweep vector is constant");
  }
  const double merge = level_tol * spread;

  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return x(static_cast<Eigen::Index>(a)) > x(static_cast<Eigen::Index>(b));
  });

  std::vector<char> in(n, 0);
  std::uint64_t crossing = 0;
  std::size_t best_size = 0;
  std::uint64_t best_cross = 0;
  std::size_t i = 0;
  while (i < n) {
    // Add every vertex at the current threshold value.
    const double level = x(static_cast<Eigen::Index>(order[i]));
    while (i < n && x(static_cast<Eigen::Index>(order[i])) >= level - merge) {
      const Vertex v = order[i++];
      in[v] = 1;
      for (const Incidence& inc : g.incident(v)) {
        if (in[inc.neighbor]) --crossing;
        else ++crossing;
      }
    }
    if (i == n) break;  // S = V is not a cut
    const std::size_t size = i;
    // ratio = n cross / (|S| |V\S|); compare exactly by cross-multiplication.
    const auto denom = static_cast<std::uint64_t>(size) * (n - size);
    const auto best_denom = static_cast<std::uint64_t>(best_size) * (n - best_size);
    if (best_size == 0 || crossing * best_denom < best_cross * denom ||
        (crossing * best_denom == best_cross * denom && size > best_size)) {
      best_size = size;
      best_cross = crossing;
    }
  }
  return cut_from_side(g, std::span<const Vertex>(order.data(), best_size));
}

double purity(const std::vector<std::size_t>& predicted, const std::vector<int>& truth) {
  if (predicted.size() != truth.size()) {
    throw InvalidArgument("purity: " + std::to_string(predicted.size()) + " predictions vs " +
                          std::to_string(truth.size()) + " labels");
  }
  if (predicted.empty()) throw InvalidArgument("purity: empty clustering");
  std::map<std::size_t, std::map<int, std::size_t>> overlap;
  for (std::size_t i = 0; i < predicted.size(); ++i) ++overlap[predicted[i]][truth[i]];
  std::size_t total = 0;
  for (const auto& [cluster, counts] : overlap) {
    std::size_t best = 0;
    for (const auto& [label, count] : counts) best = std::max(best, count);
    total += best;
  }
  return static_cast<double>(total) / static_cast<double>(predicted.size());
}

double purity(const Clustering& predicted, const std::vector<int>& truth) {
  return purity(predicted.assignment, truth);
}

MeanInterval mean_ci95(const std::vector<double>& samples) {
  MeanInterval out;
  if (samples.empty()) return out;
  const double n = static_cast<double>(samples.size());
  out.mean = std::accumulate(samples.begin(), samples.end(), 0.0) / n;
  if (samples.size() < 2) return out;
  double ss = 0.0;
  for (double s : samples) ss += (s - out.mean) * (s - out.mean);
  out.half_width = 1.96 * std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
  return out;
}

}  // namespace graphharm
