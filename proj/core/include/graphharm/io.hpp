#pragma once

#include "graphharm/graph.hpp"

#include <Eigen/Dense>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

namespace graphharm {

// Edge-list text format: one "u v [w]" per line, '#' comment lines, blank
// lines ignored, optional first data line "n <count>". Without the header n
// is 1 + the largest vertex id.
Graph read_edge_list(std::istream& in);
Graph load_edge_list(const std::filesystem::path& path);

/// Writes "n <count>" then one "u v w" line per edge with round-trip
/// precision, so load_edge_list(save_edge_list(g)) == g.
void write_edge_list(const Graph& g, std::ostream& out);
void save_edge_list(const Graph& g, const std::filesystem::path& path);

struct PointSet {
  Eigen::MatrixXd points;  // one row per point
  std::optional<std::vector<int>> labels;
};

/// Comma-separated floats with a mandatory header row. If the last header
/// field is "label" the final column is read as integer labels.
PointSet read_points_csv(std::istream& in);
PointSet load_points_csv(const std::filesystem::path& path);

/// One integer label per line ('#' comments and blank lines skipped).
std::vector<int> load_labels(const std::filesystem::path& path);
void save_labels(const std::vector<int>& labels, const std::filesystem::path& path);

}  // namespace graphharm
