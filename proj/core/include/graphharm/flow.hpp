#pragma once

#include "graphharm/graph.hpp"
#include "graphharm/spectra.hpp"

#include <Eigen/Dense>

#include <cstdint>

namespace graphharm {

/// p_st = L^+ (1_s - 1_t): vertex voltages of the unit s -> t current.
struct Potential {
  Vertex s;
  Vertex t;
  Eigen::VectorXd values;
};

/// f_st = W boundary^T p_st, signed relative to each edge's stored (u, v).
struct Flow {
  Vertex s;
  Vertex t;
  Eigen::VectorXd values;
};

/// Both throw DisconnectedGraphError on disconnected graphs and
/// InvalidArgument when s == t or a vertex is out of range.
Potential st_potential(const Graph& g, const SpectralDecomposition& dec, Vertex s, Vertex t);
Flow st_flow(const Graph& g, const SpectralDecomposition& dec, Vertex s, Vertex t);

/// boundary * f: net current leaving each vertex.
Eigen::VectorXd divergence(const Graph& g, const Eigen::VectorXd& flow);

/// f^T W^{-1} f.
double flow_energy(const Graph& g, const Eigen::VectorXd& flow);

/// Checks that `f` is the minimum-energy unit s-t flow: its divergence is
/// 1_s - 1_t (to 1e-8) and it is W^{-1}-orthogonal to `circulations` random
/// unit-norm circulations built from fundamental cycles (|c^T W^{-1} f| <=
/// 1e-8 max(1, |W^{-1} f|)). Trees have no circulations and only the
/// divergence is tested.
bool min_norm_certificate(const Graph& g, const Flow& f, std::uint64_t seed = 0,
                          int circulations = 20);

/// Basis of the cycle space: one signed edge vector per non-tree edge of a
/// BFS spanning forest. Each column c satisfies boundary * c = 0.
Eigen::MatrixXd fundamental_cycles(const Graph& g);

/// T = (weighted boundary)^T (L^+)^k, an m x n matrix; row e, column s holds
/// (boundary_w 1_e)^T (L^+)^k 1_s. At k = 1, sqrt(w_e) (T(e,s) - T(e,t)) is
/// f_st(e).
Eigen::MatrixXd edge_transfer_matrix(const Graph& g, const SpectralDecomposition& dec, double k);

}  // namespace graphharm
