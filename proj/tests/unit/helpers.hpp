#pragma once

#include "oracle_data.hpp"

#include <graphharm/graph.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace testutil {

inline graphharm::Graph to_graph(const oracle::OracleGraph& og) {
  std::vector<graphharm::Edge> edges;
  for (const auto& [u, v, w] : og.edges) {
    edges.push_back({static_cast<graphharm::Vertex>(u), static_cast<graphharm::Vertex>(v), w});
  }
  return graphharm::Graph::build(static_cast<std::size_t>(og.n), std::move(edges));
}

inline graphharm::Graph make(std::size_t n, std::vector<graphharm::Edge> edges) {
  return graphharm::Graph::build(n, std::move(edges));
}

// Two triangles {0,1,2} and {3,4,5} joined by the bridge 2-3 (edge 3).
inline graphharm::Graph barbell() {
  return make(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}});
}

inline double rel_err(double got, double want) {
  const double scale = std::max(std::abs(want), 1e-300);
  return std::abs(got - want) / scale;
}

}  // namespace testutil
