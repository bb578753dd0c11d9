#pragma once

#include "graphharm/graph.hpp"
#include "graphharm/scores.hpp"
#include "graphharm/spectra.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace graphharm {

/// Sum over unordered pairs {s,t} of f_st(e)^2 / w_e, by an explicit loop
/// over all pairs. Equals n w_e B_e^2 on connected graphs.
EdgeScores squared_flow_centrality(const Graph& g, const SpectralDecomposition& dec);

/// C_e: sum over unordered pairs of |f_st(e)|. Per edge the pair sum is
/// evaluated on the sorted flow-transfer row, O(n log n) per edge.
EdgeScores current_flow_centrality(const Graph& g, const SpectralDecomposition& dec);

/// Shortest-path edge betweenness on hop distances (weights ignored): sum
/// over unordered pairs of the fraction of shortest s-t paths through e.
EdgeScores edge_betweenness(const Graph& g);

/// Spearman correlation with average ranks for ties. Throws InvalidArgument
/// for mismatched edge sets or fewer than two edges and PreconditionError for
/// a constant score vector.
double spearman(const EdgeScores& a, const EdgeScores& b);

/// Edge measure selector shared by the ranking experiments and the CLI.
struct Measure {
  enum class Kind { Biharmonic2, KHarmonic2, CurrentFlow, Betweenness, Resistance };

  Kind kind = Kind::Biharmonic2;
  double k = 2.0;  // only for KHarmonic2

  /// "biharmonic2", "kharmonic2", "current-flow", "betweenness", "resistance".
  static Measure parse(const std::string& name, double k = 2.0);
  std::string name() const;
};

EdgeScores compute_measure(const Graph& g, const Measure& m);
EdgeScores compute_measure(const Graph& g, const SpectralDecomposition& dec, const Measure& m);

/// For each trial, adds `num_added` distinct non-edges drawn uniformly
/// (derived sub-seed per trial), recomputes `measure` and returns the Spearman
/// correlation between the original and perturbed scores on the original
/// edges.
std::vector<double> resilience_experiment(const Graph& g, const Measure& measure,
                                          std::size_t num_added, std::size_t trials,
                                          std::uint64_t seed);

}  // namespace graphharm
