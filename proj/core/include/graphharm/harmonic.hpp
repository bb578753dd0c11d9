#pragma once

#include "graphharm/graph.hpp"
#include "graphharm/scores.hpp"
#include "graphharm/spectra.hpp"

#include <Eigen/Dense>

#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace graphharm {

// All distances here are defined through powers of the Laplacian
// pseudoinverse: (H^k_st)^2 = (1_s - 1_t)^T (L^+)^k (1_s - 1_t). k = 1 gives
// the effective resistance R_st = (H^1_st)^2 and k = 2 the biharmonic
// distance B_st = H^2_st. Every function rejects disconnected graphs with
// DisconnectedGraphError.

/// Throws DisconnectedGraphError unless the decomposition has a 1-dim kernel.
void require_connected(const SpectralDecomposition& dec);

double kharmonic_distance(const SpectralDecomposition& dec, double k, Vertex s, Vertex t);
double kharmonic_distance(const Graph& g, double k, Vertex s, Vertex t);

/// Squared distances M_ss + M_tt - 2 M_st from any symmetric matrix M
/// (clamped at 0 against round-off).
Eigen::MatrixXd squared_distances(const Eigen::MatrixXd& M);

/// n x n matrix of H^k_st (not squared).
Eigen::MatrixXd kharmonic_all_pairs(const SpectralDecomposition& dec, double k);

double effective_resistance(const SpectralDecomposition& dec, Vertex s, Vertex t);
double effective_resistance(const Graph& g, Vertex s, Vertex t);

/// (H^k_e)^2 for every edge; with `rank`, the rank-r truncation.
EdgeScores edge_kharmonic_squared(const Graph& g, const SpectralDecomposition& dec, double k,
                                  std::optional<std::size_t> rank = std::nullopt);

/// w_e * B_e^2 for every edge, from (L^+)^2.
EdgeScores weighted_biharmonic_edges(const Graph& g, const SpectralDecomposition& dec);

/// w_e * B_e^2 read off the diagonal of the pseudoinverse of the down
/// Laplacian (weighted boundary)^T (weighted boundary). Independent of the
/// vertex-space decomposition; O(m n^2).
EdgeScores biharmonic_edges_via_down_laplacian(const Graph& g);

/// Sum of R_st over unordered pairs {s, t}; equals n * trace(L^+).
double total_resistance(const SpectralDecomposition& dec);
double total_resistance(const Graph& g);

struct DerivativeCheck {
  double analytic;  // -n B_e^2
  double numeric;   // central difference of total_resistance in w_e
};

/// Throws InvalidArgument if w_e - h <= 0.
DerivativeCheck rtot_derivative_check(const Graph& g, EdgeId e, double h);

struct EdgeDeletionCheck {
  enum class Match { PlusDenominator, MinusDenominator, Neither };

  double lhs;         // R_tot(G) - R_tot(G \ e)
  double plus_form;   // -n w B_e^2 / (1 + w R_e)
  double minus_form;  // -n w B_e^2 / (1 - w R_e)
  Match matched;      // which form agrees with lhs to 1e-8 relative
};

/// Throws PreconditionError if e is a bridge. For unit weights the forms
/// reduce to -n B_e^2 / (1 +- R_e).
EdgeDeletionCheck edge_deletion_check(const Graph& g, EdgeId e);

/// What to measure and on which vertex pairs.
struct DistanceQuery {
  struct Resistance {};
  struct Biharmonic {};
  struct KHarmonic {
    double k;
  };
  struct KHarmonicRank {
    double k;
    std::size_t r;
  };
  struct AllPairs {};
  struct EdgesOnly {};
  using PairList = std::vector<std::pair<Vertex, Vertex>>;

  std::variant<Resistance, Biharmonic, KHarmonic, KHarmonicRank> kind;
  std::variant<AllPairs, EdgesOnly, PairList> pairs;

  /// The pseudoinverse power behind `kind` (1 for resistance, 2 for biharmonic).
  double power() const;
  std::optional<std::size_t> rank() const;
};

struct DistanceRow {
  Vertex s;
  Vertex t;
  double value;          // H^k_st (sqrt of R_st for resistance queries)
  double value_squared;  // (H^k_st)^2
};

/// All-pairs rows come out with s < t in lexicographic order, edge rows in
/// edge order, explicit pairs as given.
std::vector<DistanceRow> evaluate(const Graph& g, const SpectralDecomposition& dec,
                                  const DistanceQuery& query);

}  // namespace graphharm
