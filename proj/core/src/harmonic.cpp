#include "graphharm/harmonic.hpp"

#include "graphharm/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <type_traits>

namespace graphharm {

std::vector<EdgeId> EdgeScores::ranking() const {
  std::vector<EdgeId> order(values.size());
  std::iota(order.begin(), order.end(), EdgeId{0});
  std::stable_sort(order.begin(), order.end(),
                   [this](EdgeId a, EdgeId b) { return values[a] > values[b]; });
  return order;
}

std::vector<std::size_t> EdgeScores::rank_positions() const {
  const auto order = ranking();
  std::vector<std::size_t> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i + 1;
  return pos;
}

EdgeScores make_scores(const Graph& g, std::vector<double> values, std::string meaning) {
  EdgeScores s;
  s.values = std::move(values);
  s.meaning = std::move(meaning);
  s.endpoints.reserve(g.edge_count());
  for (const Edge& e : g.edges()) s.endpoints.emplace_back(e.u, e.v);
  return s;
}

void require_connected(const SpectralDecomposition& dec) {
  if (dec.kernel_dim > 1) throw DisconnectedGraphError(dec.kernel_dim);
}

namespace {

void check_vertex(const SpectralDecomposition& dec, Vertex v) {
  if (v >= dec.size()) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
}

std::string power_tag(double k) {
  if (k == 1.0) return "R_e";
  if (k == 2.0) return "B_e^2";
  std::string num = std::to_string(k);
  num.erase(num.find_last_not_of('0') + 1);
  if (!num.empty() && num.back() == '.') num.pop_back();
  return "(H^" + num + "_e)^2";
}

}  // namespace

double kharmonic_distance(const SpectralDecomposition& dec, double k, Vertex s, Vertex t) {
  require_connected(dec);
  check_vertex(dec, s);
  check_vertex(dec, t);
  if (s == t) return 0.0;
  const auto coeff = power_coefficients(dec, k);
  const auto offset = static_cast<Eigen::Index>(dec.kernel_dim);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < coeff.values.size(); ++i) {
    const double d = dec.eigenvectors(static_cast<Eigen::Index>(s), offset + i) -
                     dec.eigenvectors(static_cast<Eigen::Index>(t), offset + i);
    sum += coeff.values(i) * d * d;
  }
  return std::sqrt(sum);
}

double kharmonic_distance(const Graph& g, double k, Vertex s, Vertex t) {
  return kharmonic_distance(decompose(g), k, s, t);
}

Eigen::MatrixXd squared_distances(const Eigen::MatrixXd& M) {
  const Eigen::Index n = M.rows();
  Eigen::MatrixXd D(n, n);
  for (Eigen::Index s = 0; s < n; ++s) {
    D(s, s) = 0.0;
    for (Eigen::Index t = s + 1; t < n; ++t) {
      const double v = std::max(0.0, M(s, s) + M(t, t) - 2.0 * M(s, t));
      D(s, t) = D(t, s) = v;
    }
  }
  return D;
}

Eigen::MatrixXd kharmonic_all_pairs(const SpectralDecomposition& dec, double k) {
  require_connected(dec);
  return squared_distances(pinv_power(dec, k)).cwiseSqrt();
}

double effective_resistance(const SpectralDecomposition& dec, Vertex s, Vertex t) {
  const double h = kharmonic_distance(dec, 1.0, s, t);
  return h * h;
}

double effective_resistance(const Graph& g, Vertex s, Vertex t) {
  return effective_resistance(decompose(g), s, t);
}

EdgeScores edge_kharmonic_squared(const Graph& g, const SpectralDecomposition& dec, double k,
                                  std::optional<std::size_t> rank) {
  require_connected(dec);
  const Eigen::MatrixXd M = rank ? low_rank_power(dec, k, *rank) : pinv_power(dec, k);
  std::vector<double> values(g.edge_count());
  for (EdgeId i = 0; i < g.edge_count(); ++i) {
    const auto u = static_cast<Eigen::Index>(g.edge(i).u);
    const auto v = static_cast<Eigen::Index>(g.edge(i).v);
    values[i] = std::max(0.0, M(u, u) + M(v, v) - 2.0 * M(u, v));
  }
  std::string tag = power_tag(k);
  if (rank) tag += " rank " + std::to_string(*rank);
  return make_scores(g, std::move(values), std::move(tag));
}

EdgeScores weighted_biharmonic_edges(const Graph& g, const SpectralDecomposition& dec) {
  EdgeScores s = edge_kharmonic_squared(g, dec, 2.0);
  for (EdgeId i = 0; i < g.edge_count(); ++i) s.values[i] *= g.edge(i).w;
  s.meaning = "w_e*B_e^2";
  return s;
}

EdgeScores biharmonic_edges_via_down_laplacian(const Graph& g) {
  const std::size_t components = component_count(g);
  if (components > 1) throw DisconnectedGraphError(components);
  const std::size_t m = g.edge_count();
  std::vector<double> values(m, 0.0);
  if (m > 0) {
    // L_down = Q (R R^T) Q^T with Q R the thin QR of the weighted boundary's
    // transpose; Q has orthonormal columns, so L_down^+ = Q (R R^T)^+ Q^T.
    const Eigen::MatrixXd Dt = weighted_boundary(g).transpose();
    const Eigen::Index p = std::min(Dt.rows(), Dt.cols());
    const Eigen::HouseholderQR<Eigen::MatrixXd> qr(Dt);
    const Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(Dt.rows(), p);
    const Eigen::MatrixXd R = qr.matrixQR().topRows(p).triangularView<Eigen::Upper>();
    const Eigen::MatrixXd core = R * R.transpose();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(core);
    if (solver.info() != Eigen::Success) throw Error("down Laplacian eigensolver did not converge");
    // The nonzero spectrum of the down Laplacian is that of L: n - 1 values.
    const auto rank = static_cast<Eigen::Index>(g.vertex_count() - components);
    const Eigen::MatrixXd X = Q * solver.eigenvectors().rightCols(rank);
    const Eigen::VectorXd inv = solver.eigenvalues().tail(rank).cwiseInverse();
    for (Eigen::Index e = 0; e < static_cast<Eigen::Index>(m); ++e) {
      values[static_cast<std::size_t>(e)] = X.row(e).cwiseAbs2().dot(inv);
    }
  }
  return make_scores(g, std::move(values), "w_e*B_e^2");
}

double total_resistance(const SpectralDecomposition& dec) {
  require_connected(dec);
  const auto coeff = power_coefficients(dec, 1.0);
  return static_cast<double>(dec.size()) * coeff.values.sum();
}

double total_resistance(const Graph& g) { return total_resistance(decompose(g)); }

DerivativeCheck rtot_derivative_check(const Graph& g, EdgeId e, double h) {
  if (e >= g.edge_count()) throw InvalidArgument("edge index out of range");
  if (!(h > 0.0)) throw InvalidArgument("step h must be positive");
  const double w = g.edge(e).w;
  if (w - h <= 0.0) throw InvalidArgument("perturbed weight w_e - h must stay positive");
  const auto dec = decompose(g);
  require_connected(dec);
  const Edge& edge = g.edge(e);
  const double b = kharmonic_distance(dec, 2.0, edge.u, edge.v);
  DerivativeCheck out;
  out.analytic = -static_cast<double>(g.vertex_count()) * b * b;
  out.numeric = (total_resistance(g.with_weight(e, w + h)) - total_resistance(g.with_weight(e, w - h))) /
                (2.0 * h);
  return out;
}

EdgeDeletionCheck edge_deletion_check(const Graph& g, EdgeId e) {
  if (e >= g.edge_count()) throw InvalidArgument("edge index out of range");
  const auto dec = decompose(g);
  require_connected(dec);
  const auto cut_edges = bridges(g);
  if (std::binary_search(cut_edges.begin(), cut_edges.end(), e)) {
    throw PreconditionError("edge " + std::to_string(e) + " is a bridge; G \\ e is disconnected");
  }
  const Edge& edge = g.edge(e);
  const double n = static_cast<double>(g.vertex_count());
  const double b = kharmonic_distance(dec, 2.0, edge.u, edge.v);
  const double r = effective_resistance(dec, edge.u, edge.v);

  EdgeDeletionCheck out;
  out.lhs = total_resistance(dec) - total_resistance(g.without_edge(e));
  out.plus_form = -n * edge.w * b * b / (1.0 + edge.w * r);
  out.minus_form = -n * edge.w * b * b / (1.0 - edge.w * r);
  const auto close = [&](double x) {
    return std::abs(x - out.lhs) <= 1e-8 * std::max(1.0, std::abs(out.lhs));
  };
  out.matched = close(out.minus_form)  ? EdgeDeletionCheck::Match::MinusDenominator
                : close(out.plus_form) ? EdgeDeletionCheck::Match::PlusDenominator
                                       : EdgeDeletionCheck::Match::Neither;
  return out;
}

double DistanceQuery::power() const {
  return std::visit(
      [](const auto& q) -> double {
        using T = std::decay_t<decltype(q)>;
        if constexpr (std::is_same_v<T, Resistance>) return 1.0;
        else if constexpr (std::is_same_v<T, Biharmonic>) return 2.0;
        else return q.k;
      },
      kind);
}

std::optional<std::size_t> DistanceQuery::rank() const {
  if (const auto* q = std::get_if<KHarmonicRank>(&kind)) return q->r;
  return std::nullopt;
}

std::vector<DistanceRow> evaluate(const Graph& g, const SpectralDecomposition& dec,
                                  const DistanceQuery& query) {
  require_connected(dec);
  const double k = query.power();
  if (!(k > 0.0)) throw InvalidArgument("k must be > 0 for distance queries");
  const auto r = query.rank();
  const Eigen::MatrixXd M = r ? low_rank_power(dec, k, *r) : pinv_power(dec, k);

  std::vector<DistanceRow> rows;
  const auto push = [&](Vertex s, Vertex t) {
    if (s >= g.vertex_count() || t >= g.vertex_count()) {
      throw InvalidArgument("pair (" + std::to_string(s) + ", " + std::to_string(t) + ") out of range");
    }
    const auto a = static_cast<Eigen::Index>(s);
    const auto b = static_cast<Eigen::Index>(t);
    const double sq = s == t ? 0.0 : std::max(0.0, M(a, a) + M(b, b) - 2.0 * M(a, b));
    rows.push_back({s, t, std::sqrt(sq), sq});
  };
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, DistanceQuery::AllPairs>) {
          for (Vertex s = 0; s < g.vertex_count(); ++s) {
            for (Vertex t = s + 1; t < g.vertex_count(); ++t) push(s, t);
          }
        } else if constexpr (std::is_same_v<T, DistanceQuery::EdgesOnly>) {
          for (const Edge& e : g.edges()) push(e.u, e.v);
        } else {
          for (const auto& [s, t] : p) push(s, t);
        }
      },
      query.pairs);
  return rows;
}

}  // namespace graphharm
