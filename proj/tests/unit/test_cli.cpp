#include "cli.hpp"
#include "output.hpp"

#include <graphharm/generators.hpp>
#include <graphharm/io.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace graphharm;
using graphharm::cli::Json;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli_run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("graphharm_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write_graph(const std::string& name, const Graph& g) const {
    save_edge_list(g, path(name));
    return path(name);
  }

  std::string write_text(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, DistancesOnPath) {
  const std::string g = write_graph("p3.txt", path_graph(3));
  const CliRun r = cli_run({"distances", "--graph", g, "--k", "2", "--pairs", "edges"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  ASSERT_EQ(j["rows"].size(), 2u);
  EXPECT_NEAR(j["rows"][0]["value_squared"].get<double>(), 2.0 / 3.0, 1e-12);
  EXPECT_EQ(j["meta"]["n"], 3);
  EXPECT_EQ(j["meta"]["command"], "distances");
  EXPECT_TRUE(j["meta"]["seed"].is_null());
}

TEST_F(CliTest, DistancesCsvAndPairs) {
  const std::string g = write_graph("k4.txt", complete_graph(4));
  const CliRun r = cli_run({"distances", "--graph", g, "--k", "1", "--pairs", "0-3,2-1", "--out", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  EXPECT_EQ(header, "s,t,value,value_squared");
  EXPECT_EQ(row.substr(0, 4), "0,3,");
  EXPECT_NE(row.find(",0.5"), std::string::npos);
}

TEST_F(CliTest, CentralityJsonAndPlot) {
  const std::string g = write_graph("bar.txt",
                                    Graph::build(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}}));
  const CliRun r = cli_run({"centrality", "--graph", g, "--measure", "biharmonic2", "--plot", path("plot.csv")});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  ASSERT_EQ(j["edges"].size(), 7u);
  EXPECT_EQ(j["edges"][3]["rank"], 1);
  std::ifstream plot(path("plot.csv"));
  std::string header, first;
  std::getline(plot, header);
  std::getline(plot, first);
  EXPECT_EQ(header, "rank,index,u,v,score");
  EXPECT_EQ(first.substr(0, 8), "1,3,2,3,");
}

TEST_F(CliTest, CentralityUsageErrors) {
  const std::string g = write_graph("p4.txt", path_graph(4));
  EXPECT_EQ(cli_run({"centrality", "--graph", g, "--measure", "pagerank"}).code, 4);
  EXPECT_EQ(cli_run({"centrality", "--graph", g, "--measure", "kharmonic2"}).code, 4);
  EXPECT_EQ(cli_run({"centrality", "--graph", g, "--measure", "kharmonic2", "--k", "3"}).code, 0);
  EXPECT_EQ(cli_run({"centrality", "--graph", path("missing.txt"), "--measure", "resistance"}).code, 2);
  EXPECT_EQ(cli_run({"frobnicate"}).code, 4);
  EXPECT_EQ(cli_run({}).code, 4);
  EXPECT_EQ(cli_run({"--help"}).code, 0);
}

TEST_F(CliTest, ErrorCodes) {
  const std::string split = write_text("split.txt", "0 1\n2 3\n");
  EXPECT_EQ(cli_run({"distances", "--graph", split}).code, 3);
  const std::string bad = write_text("bad.txt", "0 1\n1 1\n");
  const CliRun r = cli_run({"distances", "--graph", bad});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
  const std::string complete = write_graph("k5.txt", complete_graph(5));
  EXPECT_EQ(cli_run({"resilience", "--graph", complete, "--measure", "resistance"}).code, 3);
}

TEST_F(CliTest, CompareScoreDumps) {
  const std::string g = write_graph("er.txt", erdos_renyi(20, 0.3, 2));
  const std::string a = path("a.json"), b = path("b.csv");
  ASSERT_EQ(cli_run({"centrality", "--graph", g, "--measure", "biharmonic2", "--output", a}).code, 0);
  ASSERT_EQ(cli_run({"centrality", "--graph", g, "--measure", "current-flow", "--out", "csv", "--output", b}).code, 0);
  const CliRun r = cli_run({"compare", "--scores-a", a, "--scores-b", b});
  ASSERT_EQ(r.code, 0) << r.err;
  const double rho = Json::parse(r.out)["spearman"].get<double>();
  EXPECT_GT(rho, 0.5);
  EXPECT_LE(rho, 1.0);
  const std::string other = write_graph("p5.txt", path_graph(5));
  const std::string c = path("c.json");
  ASSERT_EQ(cli_run({"centrality", "--graph", other, "--measure", "betweenness", "--output", c}).code, 0);
  EXPECT_EQ(cli_run({"compare", "--scores-a", a, "--scores-b", c}).code, 4);
}

TEST_F(CliTest, ResilienceReportsInterval) {
  const std::string g = write_graph("er.txt", erdos_renyi(25, 0.25, 3));
  const CliRun r = cli_run({"resilience", "--graph", g, "--measure", "resistance", "--added", "3", "--trials", "4",
                         "--seed", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["correlations"].size(), 4u);
  EXPECT_TRUE(j["ci95"].is_number());
  EXPECT_EQ(j["meta"]["seed"], 5);
  EXPECT_EQ(cli_run({"resilience", "--graph", g, "--measure", "resistance", "--added", "3", "--trials", "4",
                     "--seed", "5"})
                .out,
            r.out);
}

TEST_F(CliTest, ClusterWithLabelsAndSeeds) {
  const std::string g = path("sbm.txt"), labels = path("sbm.labels");
  ASSERT_EQ(cli_run({"generate", "--model", "sbm", "--sizes", "15,15", "--p-in", "0.7", "--p-out", "0.05",
                     "--seed", "3", "--out", g, "--labels-out", labels})
                .code,
            0);
  const CliRun r = cli_run({"cluster", "--graph", g, "--algo", "lowrank", "--clusters", "2", "--labels", labels,
                         "--seeds", "0..4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["assignment"].size(), 30u);
  EXPECT_EQ(j["purities"].size(), 5u);
  EXPECT_TRUE(j["ci95"].is_number());
  EXPECT_GE(j["purity"].get<double>(), 0.9);
  EXPECT_EQ(j["meta"]["provenance"]["algorithm"], "lowrank-kharmonic-kmeans");
}

TEST_F(CliTest, ClusterKSweepAndErrors) {
  const std::string g = path("sbm.txt"), labels = path("sbm.labels");
  ASSERT_EQ(cli_run({"generate", "--model", "sbm", "--sizes", "10,10", "--seed", "1", "--out", g, "--labels-out",
                     labels})
                .code,
            0);
  const CliRun r = cli_run({"cluster", "--graph", g, "--algo", "kmeans", "--clusters", "2", "--labels", labels,
                         "--k-sweep", "1,2,4", "--plot", path("sweep.csv")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["k_sweep"].size(), 3u);
  EXPECT_TRUE(fs::exists(path("sweep.csv")));
  EXPECT_EQ(cli_run({"cluster", "--graph", g, "--algo", "kmeans", "--clusters", "0"}).code, 4);
  EXPECT_EQ(cli_run({"cluster", "--graph", g, "--algo", "magic", "--clusters", "2"}).code, 4);
  EXPECT_EQ(cli_run({"cluster", "--graph", g, "--algo", "kmeans", "--clusters", "2", "--plot", "x.csv"}).code, 4);
  const CliRun gn = cli_run({"cluster", "--graph", g, "--algo", "gn-betweenness", "--clusters", "2"});
  ASSERT_EQ(gn.code, 0) << gn.err;
  EXPECT_EQ(Json::parse(gn.out)["meta"]["provenance"]["algorithm"], "girvan-newman");
}

TEST_F(CliTest, GenerateIsDeterministic) {
  const CliRun a = cli_run({"generate", "--model", "er", "--n", "30", "--p", "0.2", "--seed", "9"});
  const CliRun b = cli_run({"generate", "--model", "er", "--n", "30", "--p", "0.2", "--seed", "9"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  std::istringstream in(a.out);
  EXPECT_EQ(read_edge_list(in).vertex_count(), 30u);
  EXPECT_EQ(cli_run({"generate", "--model", "er"}).code, 4);
  EXPECT_EQ(cli_run({"generate", "--model", "path", "--n", "4", "--weights", "2,1"}).code, 4);
  const CliRun knn = cli_run({"generate", "--model", "knn", "--points", std::string(GRAPHHARM_DATA_DIR) + "/iris.csv",
                           "--neighbors", "5"});
  ASSERT_EQ(knn.code, 0) << knn.err;
}

TEST_F(CliTest, ValidateSmallSuite) {
  const CliRun r = cli_run({"validate", "--suite", "foster,tightness", "--trials", "2", "--n-max", "15", "--out",
                         "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j.size(), 7u);
  EXPECT_EQ(cli_run({"validate", "--suite", "nope"}).code, 4);
}

TEST_F(CliTest, ManifestReplay) {
  const std::string g = write_graph("er.txt", erdos_renyi(15, 0.3, 4));
  const std::string manifest = path("run.json");
  const CliRun first = cli_run({"--manifest", manifest, "resilience", "--graph", g, "--measure", "biharmonic2",
                             "--added", "2", "--trials", "3", "--seed", "1"});
  ASSERT_EQ(first.code, 0) << first.err;
  const Json m = Json::parse(cli::read_file(manifest));
  EXPECT_EQ(m["subcommand"], "resilience");
  EXPECT_EQ(m["seed"], 1);
  EXPECT_EQ(m["inputs"][0]["sha256"], cli::file_sha256(g));
  EXPECT_EQ(m["output_sha256"], cli::sha256_hex(first.out));

  const CliRun again = cli_run({"replay", manifest});
  ASSERT_EQ(again.code, 0) << again.err;
  EXPECT_EQ(again.out, first.out);

  save_edge_list(erdos_renyi(15, 0.3, 5), g);
  EXPECT_EQ(cli_run({"replay", manifest}).code, 2);
  EXPECT_EQ(cli_run({"replay", path("absent.json")}).code, 2);
}

TEST(CliOutput, Sha256KnownVector) {
  EXPECT_EQ(cli::sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
