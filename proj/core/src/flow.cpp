#include "graphharm/flow.hpp"

#include "graphharm/error.hpp"
#include "graphharm/harmonic.hpp"

#include <cmath>
#include <queue>
#include <random>
#include <string>

namespace graphharm {

namespace {

void check_pair(const SpectralDecomposition& dec, Vertex s, Vertex t) {
  require_connected(dec);
  if (s >= dec.size() || t >= dec.size()) throw InvalidArgument("vertex out of range");
  if (s == t) throw InvalidArgument("st-potential needs s != t");
}

}  // namespace

Potential st_potential(const Graph& g, const SpectralDecomposition& dec, Vertex s, Vertex t) {
  if (dec.size() != g.vertex_count()) throw InvalidArgument("decomposition does not match graph");
  check_pair(dec, s, t);
  const auto offset = static_cast<Eigen::Index>(dec.kernel_dim);
  const auto r = static_cast<Eigen::Index>(dec.rank());
  const auto coeff = power_coefficients(dec, 1.0);
  const Eigen::MatrixXd X = dec.eigenvectors.middleCols(offset, r);
  const Eigen::VectorXd diff =
      X.row(static_cast<Eigen::Index>(s)).transpose() - X.row(static_cast<Eigen::Index>(t)).transpose();
  return {s, t, X * coeff.values.cwiseProduct(diff)};
}

Flow st_flow(const Graph& g, const SpectralDecomposition& dec, Vertex s, Vertex t) {
  const Potential p = st_potential(g, dec, s, t);
  Eigen::VectorXd f(static_cast<Eigen::Index>(g.edge_count()));
  for (EdgeId i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    f(static_cast<Eigen::Index>(i)) =
        e.w * (p.values(static_cast<Eigen::Index>(e.u)) - p.values(static_cast<Eigen::Index>(e.v)));
  }
  return {s, t, std::move(f)};
}

Eigen::VectorXd divergence(const Graph& g, const Eigen::VectorXd& flow) {
  if (flow.size() != static_cast<Eigen::Index>(g.edge_count())) {
    throw InvalidArgument("flow length does not match edge count");
  }
  Eigen::VectorXd d = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(g.vertex_count()));
  for (EdgeId i = 0; i < g.edge_count(); ++i) {
    const double fe = flow(static_cast<Eigen::Index>(i));
    d(static_cast<Eigen::Index>(g.edge(i).u)) += fe;
    d(static_cast<Eigen::Index>(g.edge(i).v)) -= fe;
  }
  return d;
}

double flow_energy(const Graph& g, const Eigen::VectorXd& flow) {
  double sum = 0.0;
  for (EdgeId i = 0; i < g.edge_count(); ++i) {
    const double fe = flow(static_cast<Eigen::Index>(i));
    sum += fe * fe / g.edge(i).w;
  }
  return sum;
}

Eigen::MatrixXd fundamental_cycles(const Graph& g) {
  const std::size_t n = g.vertex_count();
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> depth(n, unset);
  std::vector<Vertex> parent(n, 0);
  std::vector<EdgeId> parent_edge(n, g.edge_count());
  std::vector<char> in_tree(g.edge_count(), 0);

  for (Vertex root = 0; root < n; ++root) {
    if (depth[root] != unset) continue;
    depth[root] = 0;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      for (const Incidence& inc : g.incident(v)) {
        if (depth[inc.neighbor] != unset) continue;
        depth[inc.neighbor] = depth[v] + 1;
        parent[inc.neighbor] = v;
        parent_edge[inc.neighbor] = inc.edge;
        in_tree[inc.edge] = 1;
        q.push(inc.neighbor);
      }
    }
  }

  std::vector<EdgeId> chords;
  for (EdgeId i = 0; i < g.edge_count(); ++i) {
    if (!in_tree[i]) chords.push_back(i);
  }
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(g.edge_count()),
                                            static_cast<Eigen::Index>(chords.size()));
  for (std::size_t j = 0; j < chords.size(); ++j) {
    const auto col = static_cast<Eigen::Index>(j);
    const Edge& chord = g.edge(chords[j]);
    C(static_cast<Eigen::Index>(chords[j]), col) = 1.0;
    // Route the unit current back from chord.v to chord.u through the tree.
    Vertex a = chord.v;  // walks upward carrying current away from a
    Vertex b = chord.u;  // walks upward carrying current towards b
    while (a != b) {
      if (depth[a] >= depth[b]) {
        const EdgeId pe = parent_edge[a];
        C(static_cast<Eigen::Index>(pe), col) += g.edge(pe).u == a ? 1.0 : -1.0;
        a = parent[a];
      } else {
        const EdgeId pe = parent_edge[b];
        C(static_cast<Eigen::Index>(pe), col) += g.edge(pe).v == b ? 1.0 : -1.0;
        b = parent[b];
      }
    }
  }
  return C;
}

bool min_norm_certificate(const Graph& g, const Flow& f, std::uint64_t seed, int circulations) {
  if (f.values.size() != static_cast<Eigen::Index>(g.edge_count())) return false;
  if (f.s >= g.vertex_count() || f.t >= g.vertex_count()) return false;

  Eigen::VectorXd demand = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(g.vertex_count()));
  demand(static_cast<Eigen::Index>(f.s)) += 1.0;
  demand(static_cast<Eigen::Index>(f.t)) -= 1.0;
  const double scale = std::max(1.0, f.values.cwiseAbs().maxCoeff());
  if ((divergence(g, f.values) - demand).cwiseAbs().maxCoeff() > 1e-8 * scale) return false;

  const Eigen::MatrixXd C = fundamental_cycles(g);
  if (C.cols() == 0) return true;

  Eigen::VectorXd scaled = f.values;
  for (EdgeId i = 0; i < g.edge_count(); ++i) scaled(static_cast<Eigen::Index>(i)) /= g.edge(i).w;
  const double tol = 1e-8 * std::max(1.0, scaled.norm());

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int trial = 0; trial < circulations; ++trial) {
    Eigen::VectorXd mix(C.cols());
    for (Eigen::Index j = 0; j < mix.size(); ++j) mix(j) = gauss(rng);
    Eigen::VectorXd c = C * mix;
    const double norm = c.norm();
    if (norm == 0.0) continue;
    c /= norm;
    if (std::abs(c.dot(scaled)) > tol) return false;
  }
  return true;
}

Eigen::MatrixXd edge_transfer_matrix(const Graph& g, const SpectralDecomposition& dec, double k) {
  require_connected(dec);
  return weighted_boundary(g).transpose() * pinv_power(dec, k);
}

}  // namespace graphharm
