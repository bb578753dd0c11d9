#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <span>
#include <vector>

namespace graphharm {

using Vertex = std::size_t;
using EdgeId = std::size_t;

struct Edge {
  Vertex u;
  Vertex v;
  double w = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  Vertex neighbor;
  EdgeId edge;
};

/// Weighted undirected simple graph on vertices 0..n-1.
///
/// Edges keep the order and orientation they were given in: edge index e
/// always names the e-th listed edge and (u, v) fixes the sign of its column
/// in the boundary matrix. A Graph is immutable once built; the modifying
/// helpers return new graphs.
class Graph {
 public:
  Graph() = default;

  /// Validates and builds. Throws GraphError naming the first offending edge.
  static Graph build(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const Incidence> incident(Vertex v) const { return adjacency_.at(v); }

  double weighted_degree(Vertex v) const;
  double max_weighted_degree() const;
  bool is_unweighted() const noexcept;

  /// Index of edge {a, b} in either orientation, or edge_count() if absent.
  EdgeId find_edge(Vertex a, Vertex b) const;
  bool has_edge(Vertex a, Vertex b) const { return find_edge(a, b) != edge_count(); }

  Graph without_edge(EdgeId e) const;
  Graph with_weight(EdgeId e, double w) const;
  /// Appends edges after the existing ones; existing indices are unchanged.
  Graph with_added_edges(std::span<const Edge> extra) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

/// L = D - A, dense.
Eigen::MatrixXd laplacian(const Graph& g);

/// Signed incidence matrix: column e is +1 at u and -1 at v.
Eigen::MatrixXd boundary(const Graph& g);

/// boundary(g) with column e scaled by sqrt(w_e).
Eigen::MatrixXd weighted_boundary(const Graph& g);

/// Components ordered by their smallest vertex; vertices ascending inside.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
std::size_t component_count(const Graph& g);
bool is_connected(const Graph& g);

/// Component id per vertex, numbered like connected_components().
std::vector<std::size_t> component_labels(const Graph& g);

/// Cut edges, ascending by index.
std::vector<EdgeId> bridges(const Graph& g);

/// Subgraph induced by `vertices` (renumbered 0..k-1 in the given order).
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> vertex_map;  // local -> original vertex
  std::vector<EdgeId> edge_map;    // local -> original edge
};
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

struct Cut {
  std::vector<Vertex> side;             // sorted
  std::vector<EdgeId> crossing_edges;   // sorted
  double ratio = 0.0;                   // n |E(S, V\S)| / (|S| |V\S|)
};

/// Throws InvalidArgument if `side` is empty, covers V, or names a bad vertex.
Cut cut_from_side(const Graph& g, std::span<const Vertex> side);

}  // namespace graphharm
