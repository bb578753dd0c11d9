#include "graphharm/centrality.hpp"

#include "graphharm/error.hpp"
#include "graphharm/flow.hpp"
#include "graphharm/generators.hpp"
#include "graphharm/harmonic.hpp"
#include "graphharm/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <random>
#include <string>

namespace graphharm {

namespace {

// Row e of the flow-transfer matrix: f_st(e) = row(s) - row(t).
Eigen::MatrixXd flow_rows(const Graph& g, const SpectralDecomposition& dec) {
  require_connected(dec);
  if (dec.size() != g.vertex_count()) throw InvalidArgument("decomposition does not match graph");
  const Eigen::MatrixXd P = pinv_power(dec, 1.0);
  Eigen::MatrixXd A(static_cast<Eigen::Index>(g.edge_count()), P.cols());
  for (EdgeId i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    A.row(static_cast<Eigen::Index>(i)) =
        e.w * (P.row(static_cast<Eigen::Index>(e.u)) - P.row(static_cast<Eigen::Index>(e.v)));
  }
  return A;
}

}  // namespace

EdgeScores squared_flow_centrality(const Graph& g, const SpectralDecomposition& dec) {
  const Eigen::MatrixXd A = flow_rows(g, dec);
  const auto n = A.cols();
  std::vector<double> values(g.edge_count(), 0.0);
  parallel_for(g.edge_count(), [&](std::size_t i) {
    const auto row = A.row(static_cast<Eigen::Index>(i));
    double sum = 0.0;
    for (Eigen::Index s = 0; s < n; ++s) {
      for (Eigen::Index t = s + 1; t < n; ++t) {
        const double f = row(s) - row(t);
        sum += f * f;
      }
    }
    values[i] = sum / g.edge(i).w;
  });
  return make_scores(g, std::move(values), "sum f_st(e)^2/w_e");
}

EdgeScores current_flow_centrality(const Graph& g, const SpectralDecomposition& dec) {
  const Eigen::MatrixXd A = flow_rows(g, dec);
  const auto n = static_cast<std::size_t>(A.cols());
  std::vector<double> values(g.edge_count(), 0.0);
  parallel_for(g.edge_count(), [&](std::size_t i) {
    std::vector<double> row(n);
    for (std::size_t s = 0; s < n; ++s) row[s] = A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(s));
    std::sort(row.begin(), row.end());
    // sum_{a<b} |x_a - x_b| over sorted x is sum_j x_j (2j - n + 1).
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      sum += row[j] * (2.0 * static_cast<double>(j) - static_cast<double>(n) + 1.0);
    }
    values[i] = sum;
  });
  return make_scores(g, std::move(values), "C_e");
}

EdgeScores edge_betweenness(const Graph& g) {
  const std::size_t components = component_count(g);
  if (components > 1) throw DisconnectedGraphError(components);
  const std::size_t n = g.vertex_count();
  std::vector<double> values(g.edge_count(), 0.0);

  std::vector<long> dist(n);
  std::vector<double> sigma(n), delta(n);
  std::vector<Vertex> order;
  order.reserve(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    order.clear();
    dist[s] = 0;
    sigma[s] = 1.0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      order.push_back(v);
      for (const Incidence& inc : g.incident(v)) {
        const Vertex w = inc.neighbor;
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          q.push(w);
        }
        if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const Vertex w = *it;
      for (const Incidence& inc : g.incident(w)) {
        const Vertex v = inc.neighbor;
        if (dist[v] == dist[w] - 1) {
          const double c = sigma[v] / sigma[w] * (1.0 + delta[w]);
          values[inc.edge] += c;
          delta[v] += c;
        }
      }
    }
  }
  // Every unordered pair was accumulated once from each endpoint.
  for (double& v : values) v *= 0.5;
  return make_scores(g, std::move(values), "edge betweenness");
}

namespace {

std::vector<double> average_ranks(const std::vector<double>& x) {
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> ranks(x.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && x[order[j + 1]] == x[order[i]]) ++j;
    const double avg = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

bool same_edge(const std::pair<Vertex, Vertex>& a, const std::pair<Vertex, Vertex>& b) {
  return (a.first == b.first && a.second == b.second) || (a.first == b.second && a.second == b.first);
}

}  // namespace

double spearman(const EdgeScores& a, const EdgeScores& b) {
  if (a.size() != b.size()) {
    throw InvalidArgument("mismatched edge sets: " + std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()) + " edges");
  }
  if (!a.endpoints.empty() && !b.endpoints.empty()) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!same_edge(a.endpoints.at(i), b.endpoints.at(i))) {
        throw InvalidArgument("mismatched edge sets at edge index " + std::to_string(i));
      }
    }
  }
  if (a.size() < 2) throw InvalidArgument("spearman needs at least two edges");

  const auto ra = average_ranks(a.values);
  const auto rb = average_ranks(b.values);
  const double n = static_cast<double>(ra.size());
  const double mean = (n + 1.0) / 2.0;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < ra.size(); ++i) {
    const double da = ra[i] - mean;
    const double db = rb[i] - mean;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  if (saa == 0.0 || sbb == 0.0) throw PreconditionError("degenerate ranking: all scores tied");
  return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

Measure Measure::parse(const std::string& name, double k) {
  Measure m;
  if (name == "biharmonic2") {
    m.kind = Kind::Biharmonic2;
  } else if (name == "kharmonic2") {
    if (!(k > 0.0)) throw InvalidArgument("kharmonic2 needs k > 0");
    m.kind = Kind::KHarmonic2;
    m.k = k;
  } else if (name == "current-flow") {
    m.kind = Kind::CurrentFlow;
  } else if (name == "betweenness") {
    m.kind = Kind::Betweenness;
  } else if (name == "resistance") {
    m.kind = Kind::Resistance;
  } else {
    throw InvalidArgument("unknown measure '" + name + "'");
  }
  return m;
}

std::string Measure::name() const {
  switch (kind) {
    case Kind::Biharmonic2: return "biharmonic2";
    case Kind::KHarmonic2: return "kharmonic2";
    case Kind::CurrentFlow: return "current-flow";
    case Kind::Betweenness: return "betweenness";
    case Kind::Resistance: return "resistance";
  }
  return "unknown";
}

EdgeScores compute_measure(const Graph& g, const SpectralDecomposition& dec, const Measure& m) {
  switch (m.kind) {
    case Measure::Kind::Biharmonic2: return edge_kharmonic_squared(g, dec, 2.0);
    case Measure::Kind::KHarmonic2: return edge_kharmonic_squared(g, dec, m.k);
    case Measure::Kind::Resistance: return edge_kharmonic_squared(g, dec, 1.0);
    case Measure::Kind::CurrentFlow: return current_flow_centrality(g, dec);
    case Measure::Kind::Betweenness: return edge_betweenness(g);
  }
  throw InvalidArgument("unknown measure");
}

EdgeScores compute_measure(const Graph& g, const Measure& m) {
  if (m.kind == Measure::Kind::Betweenness) return edge_betweenness(g);
  return compute_measure(g, decompose(g), m);
}

std::vector<double> resilience_experiment(const Graph& g, const Measure& measure,
                                          std::size_t num_added, std::size_t trials,
                                          std::uint64_t seed) {
  const std::size_t n = g.vertex_count();
  std::vector<Edge> non_edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) non_edges.push_back({u, v, 1.0});
    }
  }
  if (non_edges.empty()) throw PreconditionError("graph is already complete");
  if (num_added > non_edges.size()) {
    throw InvalidArgument("cannot add " + std::to_string(num_added) + " edges; only " +
                          std::to_string(non_edges.size()) + " non-edges exist");
  }

  const EdgeScores original = compute_measure(g, measure);
  std::vector<double> out;
  out.reserve(trials);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng(derive_seed(seed, trial));
    std::vector<Edge> pool = non_edges;
    // Partial Fisher-Yates: the first num_added slots are a uniform sample.
    for (std::size_t i = 0; i < num_added; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
      std::swap(pool[i], pool[pick(rng)]);
    }
    const Graph perturbed = g.with_added_edges(std::span<const Edge>(pool.data(), num_added));
    EdgeScores after = compute_measure(perturbed, measure);
    after.values.resize(g.edge_count());
    after.endpoints.resize(g.edge_count());
    out.push_back(spearman(original, after));
  }
  return out;
}

}  // namespace graphharm
