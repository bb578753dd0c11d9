#include "cli.hpp"

#include "output.hpp"

#include <graphharm/centrality.hpp>
#include <graphharm/cluster.hpp>
#include <graphharm/error.hpp>
#include <graphharm/generators.hpp>
#include <graphharm/harmonic.hpp>
#include <graphharm/io.hpp>
#include <graphharm/spectra.hpp>
#include <graphharm/validate.hpp>

#include "CLI11.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace graphharm::cli {

namespace {

// ---------------------------------------------------------------------------
// Small parsers for list-valued flags

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    if (!cur.empty()) parts.push_back(cur);
  }
  return parts;
}

template <typename T>
T parse_number(const std::string& text, const std::string& flag) {
  T value{};
  if constexpr (std::is_floating_point_v<T>) {
    try {
      std::size_t used = 0;
      value = static_cast<T>(std::stod(text, &used));
      if (used != text.size()) throw std::invalid_argument(text);
    } catch (const std::exception&) {
      throw InvalidArgument(flag + ": invalid number '" + text + "'");
    }
  } else {
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
      throw InvalidArgument(flag + ": invalid integer '" + text + "'");
    }
  }
  return value;
}

template <typename T>
std::vector<T> parse_list(const std::string& text, const std::string& flag) {
  std::vector<T> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_number<T>(part, flag));
  if (out.empty()) throw InvalidArgument(flag + ": empty list");
  return out;
}

// "0,3,7" or an inclusive range "0..9".
std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) return parse_list<std::uint64_t>(text, "--seeds");
  const auto lo = parse_number<std::uint64_t>(text.substr(0, dots), "--seeds");
  const auto hi = parse_number<std::uint64_t>(text.substr(dots + 2), "--seeds");
  if (hi < lo) throw InvalidArgument("--seeds: empty range");
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = lo; s <= hi; ++s) out.push_back(s);
  return out;
}

DistanceQuery::PairList parse_pairs(const std::string& text) {
  DistanceQuery::PairList pairs;
  for (const auto& item : split(text, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw InvalidArgument("--pairs: expected s-t, got '" + item + "'");
    pairs.emplace_back(parse_number<Vertex>(item.substr(0, dash), "--pairs"),
                       parse_number<Vertex>(item.substr(dash + 1), "--pairs"));
  }
  if (pairs.empty()) throw InvalidArgument("--pairs: empty list");
  return pairs;
}

Json nullable(const std::optional<double>& x) { return x ? Json(*x) : Json(nullptr); }

// ---------------------------------------------------------------------------
// Options

struct Options {
  std::string manifest;

  std::string graph;
  std::string output;
  std::string format = "json";
  double k = 2.0;
  std::size_t rank = 0;
  std::string pairs = "all";
  std::string measure;
  std::string plot;
  std::string scores_a, scores_b;
  std::size_t added = 10;
  std::size_t trials = 5;
  std::uint64_t seed = 0;
  std::string algo;
  std::size_t clusters = 0;
  std::string labels;
  std::string seeds;
  std::string k_sweep;

  std::string model;
  std::size_t n = 0;
  double p = 0.5;
  std::string sizes;
  double p_in = 0.6, p_out = 0.2;
  std::size_t branching = 2, depth = 3;
  std::string points;
  std::size_t neighbors = 25;
  std::string weights;
  std::string labels_out;

  std::string suite = "all";
  std::size_t n_min = 10, n_max = 200;
  std::size_t validate_trials = 20;

  std::string manifest_in;
};

struct Result {
  std::string payload;
  std::string destination;  // empty: stdout
  int code = kOk;
  std::optional<std::uint64_t> seed;
};

Json meta_base(const std::string& command, const Graph& g) {
  return {{"command", command},
          {"version", GRAPHHARM_VERSION},
          {"graph_digest", graph_digest(g)},
          {"n", g.vertex_count()},
          {"m", g.edge_count()}};
}

// ---------------------------------------------------------------------------
// Subcommands

Result cmd_distances(const Options& o) {
  const Graph g = load_edge_list(o.graph);
  const auto dec = decompose(g);
  require_connected(dec);
  if (!(o.k >= 0.0)) throw InvalidArgument("--k must be >= 0");

  DistanceQuery q;
  if (o.rank > 0) q.kind = DistanceQuery::KHarmonicRank{o.k, o.rank};
  else if (o.k == 1.0) q.kind = DistanceQuery::Resistance{};
  else if (o.k == 2.0) q.kind = DistanceQuery::Biharmonic{};
  else q.kind = DistanceQuery::KHarmonic{o.k};
  if (o.pairs == "all") q.pairs = DistanceQuery::AllPairs{};
  else if (o.pairs == "edges") q.pairs = DistanceQuery::EdgesOnly{};
  else q.pairs = parse_pairs(o.pairs);

  const auto rows = evaluate(g, dec, q);
  Result r;
  r.destination = o.output;
  if (o.format == "csv") {
    std::string csv = "s,t,value,value_squared\n";
    for (const auto& row : rows) {
      csv += std::to_string(row.s) + "," + std::to_string(row.t) + "," + number(row.value) + "," +
             number(row.value_squared) + "\n";
    }
    r.payload = csv;
    return r;
  }
  Json meta = meta_base("distances", g);
  meta["k"] = o.k;
  meta["rank"] = o.rank > 0 ? Json(o.rank) : Json(nullptr);
  meta["pairs"] = o.pairs;
  meta["seed"] = nullptr;
  meta["clamped"] = power_coefficients(dec, o.k).clamped;
  Json out{{"meta", meta}, {"rows", Json::array()}};
  for (const auto& row : rows) {
    out["rows"].push_back({{"s", row.s}, {"t", row.t}, {"value", row.value}, {"value_squared", row.value_squared}});
  }
  r.payload = dump(out);
  return r;
}

Measure measure_from(const Options& o, bool k_given) {
  if (o.measure == "kharmonic2" && !k_given) throw InvalidArgument("--measure kharmonic2 needs --k");
  return Measure::parse(o.measure, o.k);
}

Json measure_meta(const Measure& m) {
  return m.kind == Measure::Kind::KHarmonic2 ? Json(m.k) : Json(nullptr);
}

Result cmd_centrality(const Options& o, bool k_given) {
  const Measure m = measure_from(o, k_given);
  const Graph g = load_edge_list(o.graph);
  const EdgeScores scores = compute_measure(g, m);
  const auto ranks = scores.rank_positions();

  if (!o.plot.empty()) {
    std::string csv = "rank,index,u,v,score\n";
    for (EdgeId e : scores.ranking()) {
      csv += std::to_string(ranks[e]) + "," + std::to_string(e) + "," + std::to_string(g.edge(e).u) + "," +
             std::to_string(g.edge(e).v) + "," + number(scores.values[e]) + "\n";
    }
    write_file(o.plot, csv);
  }

  Result r;
  r.destination = o.output;
  if (o.format == "csv") {
    std::string csv = "index,u,v,score,rank\n";
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      csv += std::to_string(e) + "," + std::to_string(g.edge(e).u) + "," + std::to_string(g.edge(e).v) + "," +
             number(scores.values[e]) + "," + std::to_string(ranks[e]) + "\n";
    }
    r.payload = csv;
    return r;
  }
  Json meta = meta_base("centrality", g);
  meta["measure"] = m.name();
  meta["k"] = measure_meta(m);
  meta["meaning"] = scores.meaning;
  meta["seed"] = nullptr;
  Json out{{"meta", meta}, {"edges", Json::array()}};
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out["edges"].push_back({{"index", e},
                            {"u", g.edge(e).u},
                            {"v", g.edge(e).v},
                            {"score", scores.values[e]},
                            {"rank", ranks[e]}});
  }
  r.payload = dump(out);
  return r;
}

Result cmd_compare(const Options& o) {
  const EdgeScores a = load_scores(o.scores_a);
  const EdgeScores b = load_scores(o.scores_b);
  const double rho = spearman(a, b);
  Result r;
  r.destination = o.output;
  if (o.format == "csv") {
    r.payload = "edges,spearman\n" + std::to_string(a.size()) + "," + number(rho) + "\n";
    return r;
  }
  Json meta{{"command", "compare"},
            {"version", GRAPHHARM_VERSION},
            {"scores_a_digest", file_sha256(o.scores_a)},
            {"scores_b_digest", file_sha256(o.scores_b)},
            {"measure_a", a.meaning},
            {"measure_b", b.meaning}};
  r.payload = dump(Json{{"meta", meta}, {"edges", a.size()}, {"spearman", rho}});
  return r;
}

Result cmd_resilience(const Options& o, bool k_given) {
  const Measure m = measure_from(o, k_given);
  const Graph g = load_edge_list(o.graph);
  const auto rhos = resilience_experiment(g, m, o.added, o.trials, o.seed);
  const MeanInterval mi = mean_ci95(rhos);
  Result r;
  r.destination = o.output;
  r.seed = o.seed;
  if (o.format == "csv") {
    std::string csv = "trial,spearman\n";
    for (std::size_t i = 0; i < rhos.size(); ++i) csv += std::to_string(i) + "," + number(rhos[i]) + "\n";
    r.payload = csv;
    return r;
  }
  Json meta = meta_base("resilience", g);
  meta["measure"] = m.name();
  meta["k"] = measure_meta(m);
  meta["added"] = o.added;
  meta["trials"] = o.trials;
  meta["seed"] = o.seed;
  r.payload = dump(Json{{"meta", meta},
                        {"correlations", rhos},
                        {"mean", rhos.empty() ? Json(nullptr) : Json(mi.mean)},
                        {"ci95", rhos.size() > 1 ? Json(mi.half_width) : Json(nullptr)}});
  return r;
}

Clustering run_algorithm(const Graph& g, const std::optional<SpectralDecomposition>& dec,
                         const std::string& algo, std::size_t c, double k, std::size_t rank,
                         std::uint64_t seed) {
  if (algo == "kmeans") return kharmonic_kmeans(g, *dec, c, k, seed);
  if (algo == "lowrank") {
    return low_rank_kharmonic_kmeans(g, *dec, c, k, rank > 0 ? std::optional(rank) : std::nullopt, seed);
  }
  if (algo == "spectral") return spectral_clustering(g, *dec, c, seed);
  if (algo == "gn") {
    const Measure m = k == 2.0 ? Measure::parse("biharmonic2") : Measure::parse("kharmonic2", k);
    return girvan_newman(g, c, m).clustering;
  }
  if (algo == "gn-betweenness") return girvan_newman(g, c, Measure::parse("betweenness")).clustering;
  throw InvalidArgument("unknown algorithm '" + algo + "'");
}

Json provenance_json(const Provenance& p) {
  Json params = Json::object();
  for (const auto& [key, value] : p.parameters) params[key] = value;
  return {{"algorithm", p.algorithm},
          {"parameters", params},
          {"seed", p.seed ? Json(*p.seed) : Json(nullptr)}};
}

struct SeedSweep {
  Clustering first;
  std::vector<double> purities;  // empty without labels
};

SeedSweep sweep_seeds(const Graph& g, const std::optional<SpectralDecomposition>& dec, const Options& o,
                      double k, const std::vector<std::uint64_t>& seeds,
                      const std::optional<std::vector<int>>& labels) {
  SeedSweep out;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    Clustering c = run_algorithm(g, dec, o.algo, o.clusters, k, o.rank, seeds[i]);
    if (labels) out.purities.push_back(purity(c, *labels));
    if (i == 0) out.first = std::move(c);
  }
  return out;
}

Result cmd_cluster(const Options& o) {
  const Graph g = load_edge_list(o.graph);
  if (o.clusters == 0) throw InvalidArgument("--clusters must be >= 1");
  std::optional<std::vector<int>> labels;
  if (!o.labels.empty()) {
    labels = load_labels(o.labels);
    if (labels->size() != g.vertex_count()) {
      throw InvalidArgument("--labels has " + std::to_string(labels->size()) + " entries for " +
                            std::to_string(g.vertex_count()) + " vertices");
    }
  }
  const bool repeated = !o.seeds.empty();
  const std::vector<std::uint64_t> seeds = repeated ? parse_seeds(o.seeds) : std::vector<std::uint64_t>{o.seed};

  std::optional<SpectralDecomposition> dec;
  if (o.algo != "gn" && o.algo != "gn-betweenness") {
    dec = decompose(g);
    require_connected(*dec);
  }
  const SeedSweep main = sweep_seeds(g, dec, o, o.k, seeds, labels);

  Json sweep = nullptr;
  if (!o.k_sweep.empty()) {
    if (!labels) throw InvalidArgument("--k-sweep needs --labels");
    sweep = Json::array();
    std::string csv = "k,purity,ci95\n";
    for (double k : parse_list<double>(o.k_sweep, "--k-sweep")) {
      const MeanInterval mi = mean_ci95(sweep_seeds(g, dec, o, k, seeds, labels).purities);
      sweep.push_back({{"k", k}, {"purity", mi.mean}, {"ci95", mi.half_width}});
      csv += number(k) + "," + number(mi.mean) + "," + number(mi.half_width) + "\n";
    }
    if (!o.plot.empty()) write_file(o.plot, csv);
  } else if (!o.plot.empty()) {
    throw InvalidArgument("--plot for cluster needs --k-sweep");
  }

  std::optional<double> pur, ci;
  if (labels) {
    const MeanInterval mi = mean_ci95(main.purities);
    pur = mi.mean;
    if (repeated) ci = mi.half_width;
  }

  Result r;
  r.destination = o.output;
  r.seed = seeds.front();
  if (o.format == "csv") {
    std::string csv = "vertex,cluster\n";
    for (std::size_t v = 0; v < main.first.assignment.size(); ++v) {
      csv += std::to_string(v) + "," + std::to_string(main.first.assignment[v]) + "\n";
    }
    r.payload = csv;
    return r;
  }
  Json meta = meta_base("cluster", g);
  meta["algo"] = o.algo;
  meta["clusters"] = o.clusters;
  meta["k"] = o.k;
  meta["rank"] = o.rank > 0 ? Json(o.rank) : Json(nullptr);
  meta["seed"] = seeds.front();
  meta["seeds"] = repeated ? Json(seeds) : Json(nullptr);
  meta["labels_digest"] = labels ? Json(file_sha256(o.labels)) : Json(nullptr);
  meta["provenance"] = provenance_json(main.first.provenance);
  Json out{{"meta", meta},
           {"assignment", main.first.assignment},
           {"cluster_sizes", main.first.cluster_sizes()},
           {"purity", nullable(pur)},
           {"ci95", nullable(ci)}};
  if (repeated && labels) out["purities"] = main.purities;
  if (!sweep.is_null()) out["k_sweep"] = sweep;
  r.payload = dump(out);
  return r;
}

Result cmd_generate(const Options& o, const CLI::App& sub) {
  auto need = [&](const char* flag) {
    if (sub.count(flag) == 0) throw InvalidArgument("model '" + o.model + "' needs " + flag);
  };
  Graph g;
  std::optional<std::vector<int>> labels;
  if (o.model == "path" || o.model == "complete" || o.model == "star") {
    need("--n");
    if (o.n == 0) throw InvalidArgument("--n must be >= 1");
    g = o.model == "path" ? path_graph(o.n) : o.model == "complete" ? complete_graph(o.n) : star_graph(o.n);
  } else if (o.model == "balanced-tree") {
    g = balanced_tree(o.branching, o.depth);
  } else if (o.model == "random-tree") {
    need("--n");
    g = random_tree(o.n, o.seed);
  } else if (o.model == "er") {
    need("--n");
    if (!(o.p >= 0.0 && o.p <= 1.0)) throw InvalidArgument("--p must lie in [0, 1]");
    g = erdos_renyi(o.n, o.p, o.seed);
  } else if (o.model == "sbm") {
    need("--sizes");
    if (!(o.p_in >= 0.0 && o.p_in <= 1.0 && o.p_out >= 0.0 && o.p_out <= 1.0)) {
      throw InvalidArgument("--p-in and --p-out must lie in [0, 1]");
    }
    auto sbm = stochastic_block_model(parse_list<std::size_t>(o.sizes, "--sizes"), o.p_in, o.p_out, o.seed);
    g = std::move(sbm.graph);
    labels = std::move(sbm.labels);
  } else if (o.model == "knn") {
    need("--points");
    PointSet ps = load_points_csv(o.points);
    g = knn_graph(ps.points, o.neighbors);
    labels = std::move(ps.labels);
  } else {
    throw InvalidArgument("unknown model '" + o.model + "'");
  }
  if (!o.weights.empty()) {
    const auto range = parse_list<double>(o.weights, "--weights");
    if (range.size() != 2 || !(range[0] > 0.0) || range[1] < range[0]) {
      throw InvalidArgument("--weights must be LO,HI with 0 < LO <= HI");
    }
    g = with_random_weights(g, range[0], range[1], derive_seed(o.seed, 7));
  }
  if (!o.labels_out.empty()) {
    if (!labels) throw InvalidArgument("model '" + o.model + "' has no labels to write");
    save_labels(*labels, o.labels_out);
  }
  std::ostringstream os;
  write_edge_list(g, os);
  Result r;
  r.payload = os.str();
  r.destination = o.output;
  r.seed = o.seed;
  return r;
}

Result cmd_validate(const Options& o) {
  SuiteOptions so;
  so.checks = split(o.suite, ',');
  so.n_min = o.n_min;
  so.n_max = o.n_max;
  so.trials = o.validate_trials;
  so.seed = o.seed;
  const auto reports = run_suite(so);
  Result r;
  r.destination = o.output;
  r.seed = o.seed;
  if (o.format == "json") {
    r.payload = dump(to_json(reports));
  } else {
    std::ostringstream os;
    write_table(os, reports);
    r.payload = os.str();
  }
  r.code = all_passed(reports) ? kOk : kCheckFailed;
  return r;
}

// ---------------------------------------------------------------------------
// Manifests

const std::vector<std::string> kInputFlags{"--graph", "--labels", "--scores-a", "--scores-b", "--points"};

std::vector<std::string> strip_manifest_flag(const std::vector<std::string>& args) {
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--manifest") {
      ++i;
      continue;
    }
    if (args[i].rfind("--manifest=", 0) == 0) continue;
    kept.push_back(args[i]);
  }
  return kept;
}

Json build_manifest(const CLI::App& sub, const std::vector<std::string>& args, const Result& r) {
  Json params = Json::object();
  Json inputs = Json::array();
  for (const CLI::Option* opt : sub.get_options()) {
    const std::string name = opt->get_name();
    if (name == "--help" || name.empty()) continue;
    if (opt->count() > 0) {
      const auto& res = opt->results();
      params[name] = res.size() == 1 ? Json(res.front()) : Json(res);
    } else {
      params[name] = opt->get_default_str().empty() ? Json(nullptr) : Json(opt->get_default_str());
    }
    if (opt->count() > 0 && std::find(kInputFlags.begin(), kInputFlags.end(), name) != kInputFlags.end()) {
      const std::string path = opt->results().front();
      inputs.push_back({{"option", name}, {"path", path}, {"sha256", file_sha256(path)}});
    }
  }
  return {{"subcommand", sub.get_name()},
          {"arguments", strip_manifest_flag(args)},
          {"parameters", params},
          {"seed", r.seed ? Json(*r.seed) : Json(nullptr)},
          {"version", GRAPHHARM_VERSION},
          {"inputs", inputs},
          {"output_sha256", sha256_hex(r.payload)}};
}

void emit(const Result& r, std::ostream& out) {
  if (r.destination.empty()) out << r.payload;
  else write_file(r.destination, r.payload);
}

int cmd_replay(const Options& o, std::ostream& out, std::ostream& err) {
  Json manifest;
  try {
    manifest = Json::parse(read_file(o.manifest_in));
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("manifest: ") + ex.what());
  }
  std::vector<std::string> args;
  std::string expected;
  try {
    for (const auto& input : manifest.at("inputs")) {
      const std::string path = input.at("path").get<std::string>();
      if (file_sha256(path) != input.at("sha256").get<std::string>()) {
        err << "replay: input '" << path << "' changed since the manifest was written\n";
        return kIoError;
      }
    }
    args = manifest.at("arguments").get<std::vector<std::string>>();
    expected = manifest.at("output_sha256").get<std::string>();
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("manifest: ") + ex.what());
  }
  if (!args.empty() && args.front() == "replay") throw InvalidArgument("manifest replays itself");

  std::ostringstream captured;
  const int code = run(args, captured, err);
  if (code != kOk && code != kCheckFailed) return code;
  // Output may have gone to a file named in the arguments.
  std::string produced = captured.str();
  for (std::size_t i = 0; i + 1 < args.size(); ++i) {
    if (args[i] == "--output" || (args[i] == "--out" && args.front() == "generate")) produced = read_file(args[i + 1]);
  }
  if (sha256_hex(produced) != expected) {
    err << "replay: output differs from the manifest (sha256 " << sha256_hex(produced) << " vs " << expected
        << ")\n";
    return kCheckFailed;
  }
  if (o.output.empty()) out << produced;
  else write_file(o.output, produced);
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Harmonic distances, centralities and clusterings on graphs", "graphharm"};
  app.set_version_flag("--version", std::string(GRAPHHARM_VERSION));
  app.require_subcommand(1);
  app.add_option("--manifest", o.manifest, "Write a replayable run manifest (JSON) to this path");

  const std::vector<std::string> measures{"biharmonic2", "kharmonic2", "current-flow", "betweenness", "resistance"};
  auto add_graph = [&](CLI::App* sub) { sub->add_option("--graph", o.graph, "Edge-list file")->required(); };
  auto add_output = [&](CLI::App* sub, std::vector<std::string> formats) {
    sub->add_option("--out", o.format, "Output format")->check(CLI::IsMember(formats))->capture_default_str();
    sub->add_option("--output", o.output, "Write the result here instead of stdout");
  };

  auto* distances = app.add_subcommand("distances", "k-harmonic distances between vertex pairs");
  add_graph(distances);
  distances->add_option("--k", o.k, "Pseudoinverse power (1: resistance, 2: biharmonic)")->capture_default_str();
  distances->add_option("--rank", o.rank, "Truncate to the r smallest positive eigenpairs");
  distances->add_option("--pairs", o.pairs, "all | edges | s-t,s-t,...")->capture_default_str();
  add_output(distances, {"json", "csv"});

  auto* centrality = app.add_subcommand("centrality", "Edge centrality scores and ranking");
  add_graph(centrality);
  centrality->add_option("--measure", o.measure, "Edge measure")->required()->check(CLI::IsMember(measures));
  centrality->add_option("--k", o.k, "Power for kharmonic2");
  centrality->add_option("--plot", o.plot, "Write score-vs-rank CSV here");
  add_output(centrality, {"json", "csv"});

  auto* compare = app.add_subcommand("compare", "Spearman correlation of two score dumps");
  compare->add_option("--scores-a", o.scores_a, "First scores file")->required();
  compare->add_option("--scores-b", o.scores_b, "Second scores file")->required();
  add_output(compare, {"json", "csv"});

  auto* resilience = app.add_subcommand("resilience", "Rank stability after adding random edges");
  add_graph(resilience);
  resilience->add_option("--measure", o.measure, "Edge measure")->required()->check(CLI::IsMember(measures));
  resilience->add_option("--k", o.k, "Power for kharmonic2");
  resilience->add_option("--added", o.added, "Random non-edges added per trial")->capture_default_str();
  resilience->add_option("--trials", o.trials, "Number of trials")->capture_default_str();
  resilience->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  add_output(resilience, {"json", "csv"});

  auto* cluster = app.add_subcommand("cluster", "Cluster the vertices of a graph");
  add_graph(cluster);
  cluster->add_option("--algo", o.algo, "Algorithm")
      ->required()
      ->check(CLI::IsMember({"kmeans", "lowrank", "spectral", "gn", "gn-betweenness"}));
  cluster->add_option("--clusters", o.clusters, "Number of clusters")->required();
  cluster->add_option("--k", o.k, "Pseudoinverse power")->capture_default_str();
  cluster->add_option("--rank", o.rank, "Rank for lowrank (default: clusters)");
  cluster->add_option("--seed", o.seed, "k-means seed")->capture_default_str();
  cluster->add_option("--seeds", o.seeds, "Repeat over seeds: 0,1,2 or 0..9");
  cluster->add_option("--labels", o.labels, "Ground-truth labels, one per line");
  cluster->add_option("--k-sweep", o.k_sweep, "Purity for each k in this list");
  cluster->add_option("--plot", o.plot, "Write purity-vs-k CSV here (with --k-sweep)");
  add_output(cluster, {"json", "csv"});

  auto* generate = app.add_subcommand("generate", "Write a generated graph as an edge list");
  generate->add_option("--model", o.model, "path | complete | star | balanced-tree | random-tree | er | sbm | knn")
      ->required();
  generate->add_option("--n", o.n, "Vertex count");
  generate->add_option("--p", o.p, "Edge probability (er)")->capture_default_str();
  generate->add_option("--sizes", o.sizes, "Block sizes (sbm), e.g. 50,50,50");
  generate->add_option("--p-in", o.p_in, "Within-block probability (sbm)")->capture_default_str();
  generate->add_option("--p-out", o.p_out, "Between-block probability (sbm)")->capture_default_str();
  generate->add_option("--branching", o.branching, "Children per node (balanced-tree)")->capture_default_str();
  generate->add_option("--depth", o.depth, "Depth (balanced-tree)")->capture_default_str();
  generate->add_option("--points", o.points, "Points CSV (knn)");
  generate->add_option("--neighbors", o.neighbors, "Neighbours per point (knn)")->capture_default_str();
  generate->add_option("--weights", o.weights, "Redraw weights uniformly from LO,HI");
  generate->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  generate->add_option("--out", o.output, "Edge-list path (default stdout)");
  generate->add_option("--labels-out", o.labels_out, "Write block or point labels here");

  auto* validate = app.add_subcommand("validate", "Check the library's identities and bounds on random graphs");
  validate->add_option("--suite", o.suite, "Comma-separated checks or 'all'")->capture_default_str();
  validate->add_option("--trials", o.validate_trials, "Graphs per family")->capture_default_str();
  validate->add_option("--seed", o.seed, "Suite seed")->capture_default_str();
  validate->add_option("--n-min", o.n_min, "Smallest vertex count")->capture_default_str();
  validate->add_option("--n-max", o.n_max, "Largest vertex count")->capture_default_str();
  validate->add_option("--out", o.format, "Output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->default_val("table");
  validate->add_option("--output", o.output, "Write the report here instead of stdout");

  auto* replay = app.add_subcommand("replay", "Re-run a manifest and confirm identical output");
  replay->add_option("manifest", o.manifest_in, "Manifest written by --manifest")->required();
  replay->add_option("--output", o.output, "Write the reproduced output here instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (replay->parsed()) return cmd_replay(o, out, err);
    const bool k_given = (centrality->parsed() && centrality->count("--k") > 0) ||
                         (resilience->parsed() && resilience->count("--k") > 0);
    Result r;
    const CLI::App* sub = nullptr;
    if (distances->parsed()) r = cmd_distances(o), sub = distances;
    else if (centrality->parsed()) r = cmd_centrality(o, k_given), sub = centrality;
    else if (compare->parsed()) r = cmd_compare(o), sub = compare;
    else if (resilience->parsed()) r = cmd_resilience(o, k_given), sub = resilience;
    else if (cluster->parsed()) r = cmd_cluster(o), sub = cluster;
    else if (generate->parsed()) r = cmd_generate(o, *generate), sub = generate;
    else if (validate->parsed()) r = cmd_validate(o), sub = validate;
    emit(r, out);
    if (!o.manifest.empty() && sub != nullptr) write_file(o.manifest, dump(build_manifest(*sub, args, r)));
    return r.code;
  } catch (const DisconnectedGraphError& e) {
    err << "error: " << e.what() << "\n";
    return kMathError;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kMathError;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const GraphError& e) {
    err << "error: invalid graph: " << e.what() << "\n";
    return kIoError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
}

}  // namespace graphharm::cli
