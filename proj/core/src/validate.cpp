#include "graphharm/validate.hpp"

#include "graphharm/centrality.hpp"
#include "graphharm/cluster.hpp"
#include "graphharm/error.hpp"
#include "graphharm/flow.hpp"
#include "graphharm/generators.hpp"
#include "graphharm/harmonic.hpp"
#include "graphharm/parallel.hpp"
#include "graphharm/spectra.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

namespace graphharm {

namespace {

Eigen::MatrixXd brute_force_pinv_power(const Graph& g, int k) {
  if (k < 1) throw InvalidArgument("brute_force_distance needs integer k >= 1");
  const std::size_t components = component_count(g);
  if (components > 1) throw DisconnectedGraphError(components);
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  const Eigen::MatrixXd J = Eigen::MatrixXd::Constant(n, n, 1.0 / static_cast<double>(n));
  const Eigen::MatrixXd deflated = laplacian(g) + J;
  const Eigen::MatrixXd pinv = deflated.partialPivLu().solve(Eigen::MatrixXd::Identity(n, n)) - J;
  Eigen::MatrixXd power = pinv;
  for (int i = 1; i < k; ++i) power = power * pinv;
  return power;
}

double quadratic_form(const Eigen::MatrixXd& M, Vertex s, Vertex t) {
  const auto a = static_cast<Eigen::Index>(s);
  const auto b = static_cast<Eigen::Index>(t);
  return M(a, a) + M(b, b) - M(a, b) - M(b, a);
}

// ---------------------------------------------------------------------------
// Deviation bookkeeping

struct Tracker {
  double worst_abs = 0.0;
  double worst_rel = 0.0;
  std::size_t failures = 0;
  std::string first_failure;

  // |got - want|, relative to `scale` (defaults to |want|).
  void compare(double got, double want, double scale = -1.0) {
    const double abs = std::abs(got - want);
    if (scale < 0.0) scale = std::abs(want);
    record(abs, abs / std::max(scale, DBL_MIN));
  }
  // Inequality lhs >= rhs; only the shortfall counts.
  void at_least(double lhs, double rhs) {
    const double shortfall = std::max(0.0, rhs - lhs);
    record(shortfall, shortfall / std::max(std::abs(rhs), DBL_MIN));
  }
  void at_most(double lhs, double rhs) { at_least(-lhs, -rhs); }
  void record(double abs, double rel) {
    if (std::isnan(abs) || std::isnan(rel)) {
      fail("NaN deviation");
      return;
    }
    worst_abs = std::max(worst_abs, abs);
    worst_rel = std::max(worst_rel, rel);
  }
  void fail(const std::string& why) {
    if (failures++ == 0) first_failure = why;
  }
};

// ---------------------------------------------------------------------------
// Graph families

enum class Family { Er, Tree, Sbm, ErWeighted, TreeWeighted, SbmWeighted, Bridged, ClosedForm };

std::string family_name(Family f) {
  switch (f) {
    case Family::Er: return "er(p=0.5)";
    case Family::Tree: return "random-tree";
    case Family::Sbm: return "sbm(3,0.6,0.2)";
    case Family::ErWeighted: return "er(p=0.5)+w[0.1,10]";
    case Family::TreeWeighted: return "random-tree+w[0.1,10]";
    case Family::SbmWeighted: return "sbm(3,0.6,0.2)+w[0.1,10]";
    case Family::Bridged: return "bridged-er";
    case Family::ClosedForm: return "closed-form";
  }
  return "?";
}

Graph sample(Family f, std::size_t n, std::uint64_t seed) {
  switch (f) {
    case Family::Er: return erdos_renyi(n, 0.5, seed);
    case Family::Tree: return random_tree(n, seed);
    case Family::Sbm: {
      const std::size_t a = n / 3, b = (n - a) / 2;
      return stochastic_block_model({a, b, n - a - b}, 0.6, 0.2, seed).graph;
    }
    case Family::ErWeighted: return with_random_weights(sample(Family::Er, n, seed), 0.1, 10.0, derive_seed(seed, 1));
    case Family::TreeWeighted:
      return with_random_weights(sample(Family::Tree, n, seed), 0.1, 10.0, derive_seed(seed, 1));
    case Family::SbmWeighted:
      return with_random_weights(sample(Family::Sbm, n, seed), 0.1, 10.0, derive_seed(seed, 1));
    case Family::Bridged: {
      // Two dense blobs joined by a single edge, plus a pendant vertex.
      const std::size_t a = (n - 1) / 2, b = n - 1 - a;
      const Graph left = erdos_renyi(a, 0.5, derive_seed(seed, 2));
      const Graph right = erdos_renyi(b, 0.5, derive_seed(seed, 3));
      std::vector<Edge> edges = left.edges();
      for (const Edge& e : right.edges()) edges.push_back({e.u + a, e.v + a, 1.0});
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<Vertex> pick_l(0, a - 1), pick_r(a, a + b - 1);
      edges.push_back({pick_l(rng), pick_r(rng), 1.0});
      edges.push_back({pick_r(rng), n - 1, 1.0});
      return Graph::build(n, std::move(edges));
    }
    case Family::ClosedForm: break;
  }
  throw InvalidArgument("family has no sampler");
}

std::size_t min_size(Family f) {
  switch (f) {
    case Family::Sbm:
    case Family::SbmWeighted: return 6;
    case Family::Bridged: return 7;
    default: return 3;
  }
}

const std::vector<Family> kAll{Family::Er,         Family::Tree,         Family::Sbm,
                               Family::ErWeighted, Family::TreeWeighted, Family::SbmWeighted};
const std::vector<Family> kUnweighted{Family::Er, Family::Tree, Family::Sbm};

std::vector<Vertex> random_side(std::size_t n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  while (true) {
    std::vector<Vertex> side;
    for (Vertex v = 0; v < n; ++v) {
      if (coin(rng)) side.push_back(v);
    }
    if (!side.empty() && side.size() < n) return side;
  }
}

std::pair<Vertex, Vertex> random_pair(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  const Vertex s = pick(rng);
  Vertex t = pick(rng);
  while (t == s) t = pick(rng);
  return {s, t};
}

double upper_pair_sum(const Eigen::MatrixXd& D) {
  double sum = 0.0;
  for (Eigen::Index s = 0; s < D.rows(); ++s) {
    for (Eigen::Index t = s + 1; t < D.cols(); ++t) sum += D(s, t);
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Checks

using Rng = std::mt19937_64;

void foster(const Graph& g, Rng&, Tracker& t) {
  const auto dec = decompose(g);
  const auto R = edge_kharmonic_squared(g, dec, 1.0);
  double sum = 0.0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) sum += g.edge(e).w * R.values[e];
  t.compare(sum, static_cast<double>(g.vertex_count() - 1));
}

void biharmonic_foster(const Graph& g, Rng&, Tracker& t) {
  const auto dec = decompose(g);
  const auto wb = weighted_biharmonic_edges(g, dec);
  double sum = 0.0;
  for (double v : wb.values) sum += v;
  t.compare(static_cast<double>(g.vertex_count()) * sum, total_resistance(dec));
}

void kharmonic_foster(const Graph& g, Rng&, Tracker& t) {
  const auto dec = decompose(g);
  const double n = static_cast<double>(g.vertex_count());
  for (double k : {0.5, 1.0, 1.5, 2.0, 3.0}) {
    const double lhs = upper_pair_sum(squared_distances(pinv_power(dec, 2.0 * k - 1.0)));
    const auto he = edge_kharmonic_squared(g, dec, 2.0 * k);
    double rhs = 0.0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) rhs += g.edge(e).w * he.values[e];
    t.compare(lhs, n * rhs);
  }
}

void down_laplacian(const Graph& g, Rng&, Tracker& t) {
  const auto dec = decompose(g);
  const auto direct = weighted_biharmonic_edges(g, dec);
  const auto down = biharmonic_edges_via_down_laplacian(g);
  for (EdgeId e = 0; e < g.edge_count(); ++e) t.compare(down.values[e], direct.values[e]);
}

void flow_identity(const Graph& g, Rng&, Tracker& t) {
  const auto dec = decompose(g);
  const auto sq = squared_flow_centrality(g, dec);
  const auto wb = weighted_biharmonic_edges(g, dec);
  const double n = static_cast<double>(g.vertex_count());
  double sum = 0.0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    t.compare(sq.values[e], n * wb.values[e]);
    sum += sq.values[e];
  }
  t.compare(sum, total_resistance(dec));
}

void generalized_flow(const Graph& g, Rng&, Tracker& t) {
  const auto dec = decompose(g);
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  for (double k : {0.5, 1.0, 2.0}) {
    const Eigen::MatrixXd T = edge_transfer_matrix(g, dec, k);
    const Eigen::MatrixXd E = embedding(dec, 2.0 * k - 1.0);
    for (Eigen::Index s = 0; s < n; ++s) {
      for (Eigen::Index u = s + 1; u < n; ++u) {
        t.compare((T.col(s) - T.col(u)).squaredNorm(), (E.row(s) - E.row(u)).squaredNorm());
      }
    }
    // Edge sums over pairs: n sum_s T(e,s)^2 - (sum_s T(e,s))^2.
    const Eigen::VectorXd row_sq = T.rowwise().squaredNorm();
    const Eigen::VectorXd row_sum = T.rowwise().sum();
    const auto he = edge_kharmonic_squared(g, dec, 2.0 * k);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const auto i = static_cast<Eigen::Index>(e);
      const double edge_sum = static_cast<double>(n) * row_sq(i) - row_sum(i) * row_sum(i);
      t.compare(edge_sum, static_cast<double>(n) * g.edge(e).w * he.values[e]);
    }
  }
}

void cut_edge(const Graph& g, Rng&, Tracker& t) {
  const auto dec = decompose(g);
  const auto B2 = edge_kharmonic_squared(g, dec, 2.0);
  const double n = static_cast<double>(g.vertex_count());
  for (EdgeId e : bridges(g)) {
    const auto labels = component_labels(g.without_edge(e));
    const std::size_t side = labels[g.edge(e).u];
    const auto s = static_cast<double>(std::count(labels.begin(), labels.end(), side));
    t.compare(B2.values[e], s * (n - s) / n);
  }
}

void tree_resistance(const Graph& g, Rng&, Tracker& t) {
  const auto R = edge_kharmonic_squared(g, decompose(g), 1.0);
  for (double r : R.values) t.compare(r, 1.0);
}

void bounds(const Graph& g, Rng&, Tracker& t) {
  const auto dec = decompose(g);
  const double n = static_cast<double>(g.vertex_count());
  for (int k : {1, 2, 3, 5}) {
    const Eigen::MatrixXd D = squared_distances(pinv_power(dec, k));
    const double lower = 2.0 / std::pow(n, k);
    const double upper = k == 2 ? n * n * n : std::pow(n, 2 * k);
    for (Eigen::Index s = 0; s < D.rows(); ++s) {
      for (Eigen::Index u = s + 1; u < D.cols(); ++u) {
        t.at_least(D(s, u), lower);
        t.at_most(D(s, u), upper);
      }
    }
  }
  for (double b : edge_kharmonic_squared(g, dec, 2.0).values) t.at_most(b, n);
}

void derivative(const Graph& g, Rng& rng, Tracker& t) {
  std::uniform_int_distribution<EdgeId> pick(0, g.edge_count() - 1);
  for (int i = 0; i < 3; ++i) {
    const auto check = rtot_derivative_check(g, pick(rng), 1e-4);
    t.compare(check.numeric, check.analytic, std::max(1.0, std::abs(check.analytic)));
  }
}

struct DeletionTally {
  std::size_t minus = 0, plus = 0, total = 0;
};

void edge_deletion(const Graph& g, Rng& rng, Tracker& t, DeletionTally& tally) {
  const auto bridge_list = bridges(g);
  std::vector<EdgeId> candidates;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!std::binary_search(bridge_list.begin(), bridge_list.end(), e)) candidates.push_back(e);
  }
  if (candidates.empty()) return;
  std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
  for (int i = 0; i < 3; ++i) {
    const auto c = edge_deletion_check(g, candidates[pick(rng)]);
    const double scale = std::abs(c.lhs);
    const double err_minus = std::abs(c.lhs - c.minus_form) / scale;
    const double err_plus = std::abs(c.lhs - c.plus_form) / scale;
    ++tally.total;
    if (c.matched == EdgeDeletionCheck::Match::MinusDenominator) ++tally.minus;
    if (c.matched == EdgeDeletionCheck::Match::PlusDenominator) ++tally.plus;
    const double best = std::min(err_minus, err_plus);
    t.record(best * scale, best);
  }
}

void potentials(const Graph& g, Rng& rng, Tracker& t) {
  const auto dec = decompose(g);
  for (int i = 0; i < 5; ++i) {
    const auto [s, u] = random_pair(g.vertex_count(), rng);
    const auto p = st_potential(g, dec, s, u).values;
    const double b = kharmonic_distance(dec, 2.0, s, u);
    t.compare(p.squaredNorm(), b * b);
    const double ps = p(static_cast<Eigen::Index>(s));
    const double pt = p(static_cast<Eigen::Index>(u));
    t.compare(ps - pt, effective_resistance(dec, s, u));
    t.at_least(ps, p.maxCoeff());
    t.at_most(pt, p.minCoeff());
    t.compare(p.sum(), 0.0, p.cwiseAbs().sum());
  }
}

void flows(const Graph& g, Rng& rng, Tracker& t) {
  const auto dec = decompose(g);
  for (int i = 0; i < 5; ++i) {
    const auto [s, u] = random_pair(g.vertex_count(), rng);
    const Flow f = st_flow(g, dec, s, u);
    t.compare(flow_energy(g, f.values), effective_resistance(dec, s, u));
    if (!min_norm_certificate(g, f, rng())) t.fail("flow failed the minimum-energy certificate");
    const Flow back = st_flow(g, dec, u, s);
    if (back.values != -f.values) t.fail("f_ts != -f_st");
  }
}

void cut_flow(const Graph& g, Rng& rng, Tracker& t) {
  const auto dec = decompose(g);
  for (int i = 0; i < 10; ++i) {
    const auto side = random_side(g.vertex_count(), rng);
    const Cut cut = cut_from_side(g, side);
    std::vector<char> in(g.vertex_count(), 0);
    for (Vertex v : side) in[v] = 1;
    std::vector<Vertex> outside;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (!in[v]) outside.push_back(v);
    }
    const Vertex s = side[std::uniform_int_distribution<std::size_t>(0, side.size() - 1)(rng)];
    const Vertex u = outside[std::uniform_int_distribution<std::size_t>(0, outside.size() - 1)(rng)];
    const Flow f = st_flow(g, dec, s, u);
    double crossing = 0.0;
    for (EdgeId e : cut.crossing_edges) crossing += std::abs(f.values(static_cast<Eigen::Index>(e)));
    t.at_least(crossing, 1.0 - 1e-8);
    if (cut.crossing_edges.size() == 1) t.compare(crossing, 1.0);
  }
}

void cut_bound(const Graph& g, Rng& rng, Tracker& t) {
  const auto B2 = edge_kharmonic_squared(g, decompose(g), 2.0);
  for (int i = 0; i < 50; ++i) {
    const Cut cut = cut_from_side(g, random_side(g.vertex_count(), rng));
    double sum = 0.0, best = 0.0;
    for (EdgeId e : cut.crossing_edges) {
      sum += B2.values[e];
      best = std::max(best, B2.values[e]);
    }
    t.at_least(sum, 1.0 / cut.ratio - 1e-8);
    t.at_least(best, 1.0 / cut.ratio / static_cast<double>(cut.crossing_edges.size()) - 1e-8);
  }
}

struct SweepTally {
  double min_diagnostic = INFINITY;
};

void sweep(const Graph& g, Rng&, Tracker& t, SweepTally& tally) {
  const auto dec = decompose(g);
  const auto B2 = edge_kharmonic_squared(g, dec, 2.0);
  const double dmax = g.max_weighted_degree();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    const Cut cut = sweep_cut(g, st_potential(g, dec, edge.u, edge.v).values);
    const bool has_u = std::binary_search(cut.side.begin(), cut.side.end(), edge.u);
    const bool has_v = std::binary_search(cut.side.begin(), cut.side.end(), edge.v);
    if (has_u == has_v) t.fail("sweep cut of p_st does not separate edge " + std::to_string(e));
    tally.min_diagnostic = std::min(tally.min_diagnostic, B2.values[e] * cut.ratio * cut.ratio / dmax);
  }
}

void oracle(const Graph& g, Rng&, Tracker& t) {
  const auto dec = decompose(g);
  for (int k : {1, 2, 3, 5}) {
    const Eigen::MatrixXd brute = brute_force_pinv_power(g, k);
    const Eigen::MatrixXd spectral = squared_distances(pinv_power(dec, k));
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
      for (Vertex u = s + 1; u < g.vertex_count(); ++u) {
        t.compare(spectral(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(u)),
                  quadratic_form(brute, s, u));
      }
    }
  }
}

void triangle(const Graph& g, Rng&, Tracker& t) {
  const auto dec = decompose(g);
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  for (double k : {1.0, 2.0, 3.0}) {
    const Eigen::MatrixXd D = kharmonic_all_pairs(dec, k);
    for (Eigen::Index a = 0; a < n; ++a) {
      for (Eigen::Index b = 0; b < n; ++b) {
        for (Eigen::Index c = 0; c < n; ++c) t.at_most(D(a, c), D(a, b) + D(b, c));
      }
    }
  }
}

void tightness(Tracker& t, std::size_t& instances) {
  for (std::size_t n = 3; n <= 12; ++n) {
    const Graph g = complete_graph(n);
    const Eigen::MatrixXd D = squared_distances(pinv_power(decompose(g), 2.0));
    const double want = 2.0 / static_cast<double>(n * n);
    for (Eigen::Index s = 0; s < D.rows(); ++s) {
      for (Eigen::Index u = s + 1; u < D.cols(); ++u) t.compare(D(s, u), want);
    }
    ++instances;
  }
  for (std::size_t n : {11u, 21u, 41u}) {
    const double b = kharmonic_distance(path_graph(n), 2.0, 0, n - 1);
    t.at_least(b * b, std::pow(static_cast<double>(n), 3) / 20.0);
    ++instances;
  }
  for (std::size_t n : {4u, 10u, 20u, 40u}) {
    const double b = kharmonic_distance(path_graph(n), 2.0, n / 2 - 1, n / 2);
    t.compare(b * b, static_cast<double>(n) / 4.0);
    ++instances;
  }
}

// ---------------------------------------------------------------------------
// Registry

struct Context {
  DeletionTally deletion;
  SweepTally sweep;
};

using CheckFn = std::function<void(const Graph&, Rng&, Tracker&, Context&)>;

struct CheckSpec {
  std::string name;
  std::vector<Family> families;
  std::size_t n_cap;
  const char* kind;
  double threshold;
  CheckFn run;
};

template <typename F>
CheckFn plain(F f) {
  return [f](const Graph& g, Rng& r, Tracker& t, Context&) { f(g, r, t); };
}

const std::vector<CheckSpec>& registry() {
  static const std::vector<CheckSpec> specs = [] {
    std::vector<Family> bridged{Family::Tree, Family::Bridged};
    std::vector<Family> deletion{Family::Er, Family::Sbm, Family::ErWeighted, Family::SbmWeighted};
    std::vector<CheckSpec> v;
    v.push_back({"foster", kAll, 1000, "relative", 1e-8, plain(foster)});
    v.push_back({"biharmonic_foster", kAll, 1000, "relative", 1e-8, plain(biharmonic_foster)});
    v.push_back({"kharmonic_foster", kAll, 1000, "relative", 1e-8, plain(kharmonic_foster)});
    v.push_back({"down_laplacian", kAll, 1000, "relative", 1e-8, plain(down_laplacian)});
    v.push_back({"flow_identity", kAll, 1000, "relative", 1e-8, plain(flow_identity)});
    v.push_back({"generalized_flow", kAll, 1000, "relative", 1e-8, plain(generalized_flow)});
    v.push_back({"cut_edge", bridged, 1000, "relative", 1e-9, plain(cut_edge)});
    v.push_back({"tree_resistance", {Family::Tree}, 1000, "relative", 1e-9, plain(tree_resistance)});
    v.push_back({"bounds", kUnweighted, 60, "relative", 1e-9, plain(bounds)});
    v.push_back({"tightness", {Family::ClosedForm}, 0, "relative", 1e-9, nullptr});
    v.push_back({"derivative", kAll, 100, "relative", 1e-5, plain(derivative)});
    v.push_back({"edge_deletion", deletion, 60, "relative", 1e-8,
                 [](const Graph& g, Rng& r, Tracker& t, Context& c) { edge_deletion(g, r, t, c.deletion); }});
    v.push_back({"potentials", kAll, 1000, "relative", 1e-8, plain(potentials)});
    v.push_back({"flows", kAll, 1000, "relative", 1e-8, plain(flows)});
    v.push_back({"cut_flow", kAll, 1000, "relative", 1e-8, plain(cut_flow)});
    v.push_back({"cut_bound", kUnweighted, 40, "relative", 1e-8, plain(cut_bound)});
    v.push_back({"sweep_cut", kUnweighted, 40, "relative", 1e-8,
                 [](const Graph& g, Rng& r, Tracker& t, Context& c) { sweep(g, r, t, c.sweep); }});
    v.push_back({"oracle", kAll, 25, "relative", 1e-6, plain(oracle)});
    v.push_back({"triangle", kAll, 30, "relative", 1e-10, plain(triangle)});
    return v;
  }();
  return specs;
}

std::uint64_t name_hash(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string real(double x) {
  std::ostringstream os;
  os << std::setprecision(3) << x;
  return os.str();
}

CheckReport run_family(const CheckSpec& spec, Family family, const SuiteOptions& opt) {
  CheckReport report;
  report.name = spec.name;
  report.family = family_name(family);
  report.seed = derive_seed(opt.seed, name_hash(spec.name + "/" + report.family));
  report.tolerance_kind = spec.kind;
  report.threshold = spec.threshold;

  Tracker tracker;
  Context context;
  std::ostringstream note;
  if (family == Family::ClosedForm) {
    tightness(tracker, report.instances);
    note << "K_n n=3..12, path endpoints n=11,21,41, path centre edge n=4..40";
  } else {
    const std::size_t hi = std::max(min_size(family), std::min(opt.n_max, spec.n_cap));
    const std::size_t lo = std::clamp(opt.n_min, min_size(family), hi);
    for (std::size_t trial = 0; trial < opt.trials; ++trial) {
      const std::uint64_t graph_seed = derive_seed(report.seed, trial);
      Rng rng(derive_seed(graph_seed, 0x9e3779b9ull));
      const std::size_t n = std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
      const Graph g = sample(family, n, graph_seed);
      try {
        spec.run(g, rng, tracker, context);
      } catch (const std::exception& ex) {
        tracker.fail(std::string("exception: ") + ex.what());
      }
      ++report.instances;
    }
    note << "n in [" << lo << "," << hi << "]";
  }
  if (spec.name == "edge_deletion") {
    const auto& d = context.deletion;
    note << "; minus-form matched " << d.minus << "/" << d.total << ", plus-form matched " << d.plus
         << "/" << d.total;
  }
  if (spec.name == "sweep_cut" && std::isfinite(context.sweep.min_diagnostic)) {
    note << "; min B^2 theta^2/d_max = " << real(context.sweep.min_diagnostic);
  }
  if (tracker.failures > 0) note << "; " << tracker.failures << " failure(s), first: " << tracker.first_failure;

  report.worst_abs = tracker.worst_abs;
  report.worst_rel = tracker.worst_rel;
  report.failures = tracker.failures;
  report.pass = tracker.failures == 0 && report.deviation() <= report.threshold;
  report.note = note.str();
  return report;
}

}  // namespace

double brute_force_distance(const Graph& g, int k, Vertex s, Vertex t) {
  if (s >= g.vertex_count() || t >= g.vertex_count()) throw InvalidArgument("vertex out of range");
  if (s == t) {
    brute_force_pinv_power(g, k);  // still validate connectivity and k
    return 0.0;
  }
  return std::max(0.0, quadratic_form(brute_force_pinv_power(g, k), s, t));
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& spec : registry()) v.push_back(spec.name);
    return v;
  }();
  return names;
}

std::vector<CheckReport> run_suite(const SuiteOptions& options) {
  if (options.n_min > options.n_max) throw InvalidArgument("empty n range");
  std::vector<const CheckSpec*> selected;
  for (const std::string& name : options.checks) {
    if (name == "all") {
      for (const auto& spec : registry()) selected.push_back(&spec);
      continue;
    }
    const auto it = std::find_if(registry().begin(), registry().end(),
                                 [&](const CheckSpec& s) { return s.name == name; });
    if (it == registry().end()) throw InvalidArgument("unknown check '" + name + "'");
    selected.push_back(&*it);
  }
  std::vector<std::pair<const CheckSpec*, Family>> jobs;
  for (const CheckSpec* spec : selected) {
    if (std::any_of(jobs.begin(), jobs.end(), [&](const auto& j) { return j.first == spec; })) continue;
    for (Family f : spec->families) jobs.emplace_back(spec, f);
  }
  std::vector<CheckReport> reports(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t i) { reports[i] = run_family(*jobs[i].first, jobs[i].second, options); });
  return reports;
}

bool all_passed(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.pass; });
}

void write_table(std::ostream& os, const std::vector<CheckReport>& reports) {
  os << std::left << std::setw(18) << "check" << std::setw(26) << "family" << std::right << std::setw(6)
     << "runs" << std::setw(12) << "worst_abs" << std::setw(12) << "worst_rel" << std::setw(14) << "threshold"
     << "  " << std::left << std::setw(8) << "status" << "note\n";
  for (const CheckReport& r : reports) {
    os << std::left << std::setw(18) << r.name << std::setw(26) << r.family << std::right << std::setw(6)
       << r.instances << std::setw(12) << real(r.worst_abs) << std::setw(12) << real(r.worst_rel)
       << std::setw(14) << (real(r.threshold) + (r.tolerance_kind == "absolute" ? " abs" : " rel")) << "  "
       << std::left << std::setw(8) << (r.pass ? "PASS" : "FAIL") << r.note << "\n";
  }
  os << std::right;
}

}  // namespace graphharm
