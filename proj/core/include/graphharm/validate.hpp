#pragma once

#include "graphharm/graph.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace graphharm {

/// Outcome of one check over one graph family. `pass` holds exactly when
/// the tracked deviation (relative or absolute, see `tolerance_kind`) is at
/// most `threshold` and no structural failure was recorded.
struct CheckReport {
  std::string name;
  std::string family;
  std::uint64_t seed = 0;  // sub-seed the family's graphs were drawn from
  std::size_t instances = 0;
  double worst_abs = 0.0;
  double worst_rel = 0.0;
  std::string tolerance_kind = "relative";  // "relative" or "absolute"
  double threshold = 0.0;
  std::size_t failures = 0;  // structural failures (separation, certificates, ...)
  bool pass = true;
  std::string note;

  double deviation() const { return tolerance_kind == "absolute" ? worst_abs : worst_rel; }
};

struct SuiteOptions {
  std::vector<std::string> checks{"all"};
  std::size_t n_min = 10;
  std::size_t n_max = 200;
  std::size_t trials = 20;
  std::uint64_t seed = 0;
};

/// Every check name known to run_suite, in execution order.
const std::vector<std::string>& check_names();

/// Runs the requested checks ("all" expands to check_names()) over seeded
/// graph families. Checks with a cubic-or-worse brute-force side cap n below
/// n_max; each report's note records the cap. Throws InvalidArgument on an
/// unknown check name or an empty n range.
std::vector<CheckReport> run_suite(const SuiteOptions& options);

bool all_passed(const std::vector<CheckReport>& reports);

/// Fixed-width text table, one row per report.
void write_table(std::ostream& os, const std::vector<CheckReport>& reports);

/// (H^k_st)^2 through a route that shares nothing with the spectral code:
/// L^+ = (L + J/n)^{-1} - J/n by LU solves, then k explicit products.
/// Throws DisconnectedGraphError on disconnected input and InvalidArgument
/// for k < 1 or a vertex out of range.
double brute_force_distance(const Graph& g, int k, Vertex s, Vertex t);

}  // namespace graphharm
