#include "graphharm/graph.hpp"

#include "graphharm/error.hpp"

#include <algorithm>
#include <cstdint>
#include <cmath>
#include <functional>
#include <string>
#include <unordered_set>

namespace graphharm {

namespace {

std::string describe(EdgeId index, const Edge& e) {
  return "edge " + std::to_string(index) + " (" + std::to_string(e.u) + ", " +
         std::to_string(e.v) + ", " + std::to_string(e.w) + ")";
}

std::uint64_t pair_key(Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
}

}  // namespace

Graph Graph::build(std::size_t n, std::vector<Edge> edges) {
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  for (EdgeId i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.u >= n || e.v >= n) {
      throw GraphError(GraphError::Kind::InvalidEndpoint, i,
                       describe(i, e) + ": endpoint out of range for n = " + std::to_string(n));
    }
    if (e.u == e.v) {
      throw GraphError(GraphError::Kind::SelfLoop, i, describe(i, e) + ": self-loop");
    }
    if (!(e.w > 0.0) || !std::isfinite(e.w)) {
      throw GraphError(GraphError::Kind::NonPositiveWeight, i,
                       describe(i, e) + ": weight must be positive and finite");
    }
    if (!seen.insert(pair_key(e.u, e.v)).second) {
      throw GraphError(GraphError::Kind::DuplicateEdge, i, describe(i, e) + ": duplicate edge");
    }
  }

  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.adjacency_.assign(n, {});
  for (EdgeId i = 0; i < g.edges_.size(); ++i) {
    const Edge& e = g.edges_[i];
    g.adjacency_[e.u].push_back({e.v, i});
    g.adjacency_[e.v].push_back({e.u, i});
  }
  return g;
}

double Graph::weighted_degree(Vertex v) const {
  double d = 0.0;
  for (const Incidence& inc : adjacency_.at(v)) d += edges_[inc.edge].w;
  return d;
}

double Graph::max_weighted_degree() const {
  double best = 0.0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, weighted_degree(v));
  return best;
}

bool Graph::is_unweighted() const noexcept {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.w == 1.0; });
}

EdgeId Graph::find_edge(Vertex a, Vertex b) const {
  if (a >= n_ || b >= n_) return edge_count();
  const auto& smaller = adjacency_[a].size() <= adjacency_[b].size() ? adjacency_[a] : adjacency_[b];
  const Vertex other = adjacency_[a].size() <= adjacency_[b].size() ? b : a;
  for (const Incidence& inc : smaller) {
    if (inc.neighbor == other) return inc.edge;
  }
  return edge_count();
}

Graph Graph::without_edge(EdgeId e) const {
  if (e >= edges_.size()) throw InvalidArgument("edge index out of range");
  std::vector<Edge> kept;
  kept.reserve(edges_.size() - 1);
  for (EdgeId i = 0; i < edges_.size(); ++i) {
    if (i != e) kept.push_back(edges_[i]);
  }
  return build(n_, std::move(kept));
}

Graph Graph::with_weight(EdgeId e, double w) const {
  if (e >= edges_.size()) throw InvalidArgument("edge index out of range");
  std::vector<Edge> copy = edges_;
  copy[e].w = w;
  return build(n_, std::move(copy));
}

Graph Graph::with_added_edges(std::span<const Edge> extra) const {
  std::vector<Edge> all = edges_;
  all.insert(all.end(), extra.begin(), extra.end());
  return build(n_, std::move(all));
}

Eigen::MatrixXd laplacian(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) {
    const auto u = static_cast<Eigen::Index>(e.u);
    const auto v = static_cast<Eigen::Index>(e.v);
    L(u, u) += e.w;
    L(v, v) += e.w;
    L(u, v) -= e.w;
    L(v, u) -= e.w;
  }
  return L;
}

Eigen::MatrixXd boundary(const Graph& g) {
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(g.vertex_count()),
                                            static_cast<Eigen::Index>(g.edge_count()));
  for (EdgeId i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    B(static_cast<Eigen::Index>(e.u), static_cast<Eigen::Index>(i)) = 1.0;
    B(static_cast<Eigen::Index>(e.v), static_cast<Eigen::Index>(i)) = -1.0;
  }
  return B;
}

Eigen::MatrixXd weighted_boundary(const Graph& g) {
  Eigen::MatrixXd B = boundary(g);
  for (EdgeId i = 0; i < g.edge_count(); ++i) {
    B.col(static_cast<Eigen::Index>(i)) *= std::sqrt(g.edge(i).w);
  }
  return B;
}

std::vector<std::size_t> component_labels(const Graph& g) {
  const std::size_t n = g.vertex_count();
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(n, unset);
  std::vector<Vertex> stack;
  std::size_t next = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (label[root] != unset) continue;
    label[root] = next;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (const Incidence& inc : g.incident(v)) {
        if (label[inc.neighbor] == unset) {
          label[inc.neighbor] = next;
          stack.push_back(inc.neighbor);
        }
      }
    }
    ++next;
  }
  return label;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const auto labels = component_labels(g);
  std::size_t count = 0;
  for (auto l : labels) count = std::max(count, l + 1);
  std::vector<std::vector<Vertex>> out(count);
  for (Vertex v = 0; v < labels.size(); ++v) out[labels[v]].push_back(v);
  return out;
}

std::size_t component_count(const Graph& g) {
  const auto labels = component_labels(g);
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

std::vector<EdgeId> bridges(const Graph& g) {
  // Iterative Tarjan low-link; the parent edge (not the parent vertex) is
  // skipped so the test stays correct for any simple graph.
  const std::size_t n = g.vertex_count();
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(n, unset), low(n, 0);
  std::vector<EdgeId> out;

  struct Frame {
    Vertex v;
    EdgeId via;
    std::size_t next;
  };
  std::vector<Frame> stack;
  std::size_t timer = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != unset) continue;
    disc[root] = low[root] = timer++;
    stack.push_back({root, g.edge_count(), 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto inc = g.incident(f.v);
      if (f.next < inc.size()) {
        const Incidence step = inc[f.next++];
        if (step.edge == f.via) continue;
        if (disc[step.neighbor] == unset) {
          disc[step.neighbor] = low[step.neighbor] = timer++;
          stack.push_back({step.neighbor, step.edge, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[step.neighbor]);
        }
      } else {
        const Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Frame& parent = stack.back();
          low[parent.v] = std::min(low[parent.v], low[done.v]);
          if (low[done.v] > disc[parent.v]) out.push_back(done.via);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> local(g.vertex_count(), unset);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= g.vertex_count()) throw InvalidArgument("vertex out of range");
    local[vertices[i]] = i;
  }
  InducedSubgraph sub;
  sub.vertex_map.assign(vertices.begin(), vertices.end());
  std::vector<Edge> edges;
  for (EdgeId i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (local[e.u] != unset && local[e.v] != unset) {
      edges.push_back({local[e.u], local[e.v], e.w});
      sub.edge_map.push_back(i);
    }
  }
  sub.graph = Graph::build(vertices.size(), std::move(edges));
  return sub;
}

Cut cut_from_side(const Graph& g, std::span<const Vertex> side) {
  const std::size_t n = g.vertex_count();
  std::vector<char> in(n, 0);
  for (Vertex v : side) {
    if (v >= n) throw InvalidArgument("cut side names vertex " + std::to_string(v) + " >= n");
    in[v] = 1;
  }
  const auto size = static_cast<std::size_t>(std::count(in.begin(), in.end(), 1));
  if (size == 0 || size == n) {
    throw InvalidArgument("cut side must be a proper nonempty subset of the vertices");
  }
  Cut cut;
  for (Vertex v = 0; v < n; ++v) {
    if (in[v]) cut.side.push_back(v);
  }
  for (EdgeId i = 0; i < g.edge_count(); ++i) {
    if (in[g.edge(i).u] != in[g.edge(i).v]) cut.crossing_edges.push_back(i);
  }
  cut.ratio = static_cast<double>(n) * static_cast<double>(cut.crossing_edges.size()) /
              (static_cast<double>(size) * static_cast<double>(n - size));
  return cut;
}

}  // namespace graphharm
