#pragma once

#include "graphharm/graph.hpp"

#include <string>
#include <utility>
#include <vector>

namespace graphharm {

/// One real score per edge, e.g. B_e^2 or current-flow centrality.
struct EdgeScores {
  std::vector<double> values;  // indexed by edge
  std::string meaning;         // short tag such as "B_e^2" or "C_e"
  std::vector<std::pair<Vertex, Vertex>> endpoints;  // optional; empty or one per edge

  std::size_t size() const noexcept { return values.size(); }

  /// Edge indices by descending score; equal scores by ascending index.
  std::vector<EdgeId> ranking() const;

  /// 1-based position of each edge in ranking().
  std::vector<std::size_t> rank_positions() const;
};

/// Scores tagged with the endpoints of `g`.
EdgeScores make_scores(const Graph& g, std::vector<double> values, std::string meaning);

}  // namespace graphharm
