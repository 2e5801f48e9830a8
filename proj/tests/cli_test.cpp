#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "expc/cli.hpp"

using namespace expc;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("expc_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string file(const std::string& name, const std::string& body = "") const {
    const auto p = (path_ / name).string();
    if (!body.empty()) std::ofstream(p) << body;
    return p;
  }

 private:
  std::filesystem::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(Cli, ProductOfFiles) {
  TempDir dir;
  const auto k2 = dir.file("k2.col", "p edge 2 1\ne 1 2\n");
  const auto k3 = dir.file("k3.col", "c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
  const auto out = dir.file("p.col");
  const auto r = run({"product", "--kind", "tensor", "--in1", k2, "--in2", k3, "--out", out});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "vertices=6 edges=6 loops=0\n");
  std::ifstream in(out);
  const Graph p = read_graph(in);
  EXPECT_EQ(p.order(), 6u);
  EXPECT_EQ(run({"chi", "--in", out}).out, "2\n");
  const auto strong = run({"product", "--kind", "strong", "--in1", k2, "--in2", k3});
  EXPECT_EQ(strong.code, kExitOk);
  EXPECT_NE(strong.out.find("vertices=6 edges=15 loops=0"), std::string::npos);
}

TEST(Cli, MalformedAndMissingInput) {
  TempDir dir;
  const auto bad = dir.file("bad.col", "p edge 3 1\ne 1 9\n");
  const auto r = run({"chi", "--in", bad});
  EXPECT_EQ(r.code, kExitParse);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
  EXPECT_EQ(run({"chi", "--in", dir.file("absent.col")}).code, kExitUsage);
  EXPECT_EQ(run({"chi", "--in", "Q9"}).code, kExitInvalid);
}

TEST(Cli, LoopsWhereForbidden) {
  TempDir dir;
  const auto looped = dir.file("l.col", "p edge 2 2\ne 1 1\ne 1 2\n");
  EXPECT_EQ(run({"chi", "--in", looped}).code, kExitInvalid);
  EXPECT_EQ(run({"girth", "--in", looped}).code, kExitInvalid);
  EXPECT_EQ(run({"product", "--kind", "strong", "--in1", looped, "--in2", "K2"}).code, kExitInvalid);
  // A tensor product of two looped factors keeps a loop.
  const auto p = dir.file("p.col");
  EXPECT_EQ(run({"product", "--kind", "tensor", "--in1", looped, "--in2", looped, "--out", p}).code, kExitOk);
  EXPECT_EQ(run({"chi", "--in", p}).code, kExitInvalid);
  EXPECT_EQ(run({"alpha", "--in", looped}).out, "1\n");
}

TEST(Cli, SolversAndGirth) {
  EXPECT_EQ(run({"chi", "--in", "C5"}).out, "3\n");
  EXPECT_EQ(run({"chi", "--in", "petersen"}).out, "3\n");
  EXPECT_EQ(run({"alpha", "--in", "petersen"}).out, "4\n");
  EXPECT_EQ(run({"girth", "--in", "petersen"}).out, "5\n");
  EXPECT_EQ(run({"girth", "--in", "heawood"}).out, "6\n");
  EXPECT_EQ(run({"chi", "--in", "petersen", "--budget", "1"}).code, kExitBudget);
}

TEST(Cli, WitnessFiles) {
  TempDir dir;
  const auto w = dir.file("w.col");
  EXPECT_EQ(run({"chi", "--in", "C5", "--witness", w}).code, kExitOk);
  std::ifstream in(w);
  const auto coloring = read_coloring(in);
  EXPECT_TRUE(is_proper_coloring(cycle_graph(5), coloring));
  const auto a = dir.file("a.txt");
  EXPECT_EQ(run({"alpha", "--in", "C5", "--witness", a}).code, kExitOk);
  std::istringstream set(slurp(a));
  std::vector<Vertex> members;
  for (Vertex v; set >> v;) members.push_back(v - 1);
  ASSERT_EQ(members.size(), 2u);
  EXPECT_FALSE(cycle_graph(5).adjacent(members[0], members[1]));
}

TEST(Cli, ExponentialGraph) {
  const auto r = run({"expgraph", "--H", "K3", "--c", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("p edge 8 "), std::string::npos);
  EXPECT_NE(r.out.find("c v 1 m c=2 1 1 1"), std::string::npos);
  EXPECT_NE(r.out.find("vertices=8 edges="), std::string::npos);
  EXPECT_EQ(run({"expgraph", "--H", "K3", "--c", "6", "--cap", "100"}).code, kExitBudget);
  EXPECT_EQ(run({"expgraph", "--H", "K3"}).code, kExitUsage);
}

TEST(Cli, VerifySuites) {
  const auto unknown = run({"verify", "no-such-suite"});
  EXPECT_EQ(unknown.code, kExitUsage);
  EXPECT_NE(unknown.err.find("product-min"), std::string::npos);
  const auto ind = run({"verify", "independence", "--H", "K2o", "--c", "4"});
  EXPECT_EQ(ind.code, kExitOk) << ind.out;
  EXPECT_NE(ind.out.find("alpha_le_bound\t7\t8\tpass"), std::string::npos);
  EXPECT_EQ(run({"verify", "suited"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "suited", "--H", "C4", "--c", "2"}).code, kExitInvalid);
  EXPECT_EQ(run({"verify", "product-min", "--catalog", "small3"}).code, kExitOk);
  EXPECT_EQ(run({"verify", "product-coloring", "--H", "C5", "--c", "2"}).code, kExitOk);
  EXPECT_EQ(run({"verify", "headline"}).code, kExitOk);
  EXPECT_EQ(run({"verify", "random-girth"}).code, kExitOk);
  EXPECT_EQ(run({"verify", "witness", "--q", "abc"}).code, kExitUsage);
  // Schedule checks fail at a small q: a failed check, not a usage error.
  EXPECT_EQ(run({"verify", "witness", "--q", "1000"}).code, kExitCheckFailed);
}

TEST(Cli, GenIsDeterministic) {
  EXPECT_EQ(run({"gen", "--n", "200", "--p", "1/100"}).code, kExitUsage);
  const std::vector<std::string> args = {"gen", "--n", "300", "--p", "1/150", "--seed", "4", "--trials", "3"};
  const auto a = run(args);
  const auto b = run(args);
  EXPECT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("# census seed=4 ", 0), 0u);
  EXPECT_NE(a.out.find("# mean_X="), std::string::npos);
  EXPECT_EQ(run({"gen", "--n", "300", "--p", "2", "--seed", "1"}).code, kExitInvalid);
  EXPECT_EQ(run({"gen", "--n", "300", "--p", "x", "--seed", "1"}).code, kExitInvalid);
}

TEST(Cli, GenWritesPrunedGraph) {
  TempDir dir;
  const auto g = dir.file("g.col");
  EXPECT_EQ(run({"gen", "--n", "200", "--p", "1/40", "--seed", "2", "--out", g}).code, kExitOk);
  const auto r = run({"girth", "--in", g});
  EXPECT_EQ(r.code, kExitOk);
  const std::string value = r.out.substr(0, r.out.size() - 1);
  EXPECT_TRUE(value == "inf" || std::stoi(value) >= 6) << value;
}

TEST(Cli, Replay) {
  const auto r = run({"replay", "--G", "C7", "--q", "1", "--c", "2", "--t", "1"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("stopped_at=sigma_select"), std::string::npos);
  EXPECT_EQ(r.out, run({"replay", "--G", "C7", "--q", "1", "--c", "2", "--t", "1"}).out);
  EXPECT_EQ(run({"replay", "--G", "C6", "--q", "1", "--c", "4", "--t", "1"}).code, kExitInvalid);
}

TEST(Cli, ReplayFromColoringFile) {
  TempDir dir;
  const auto w = dir.file("psi.col");
  const auto first = run({"replay", "--G", "C7", "--q", "1", "--c", "2", "--t", "1", "--witness", w});
  ASSERT_EQ(first.code, kExitOk);
  const auto again = run({"replay", "--G", "C7", "--q", "1", "--c", "2", "--t", "1", "--coloring", w});
  EXPECT_EQ(again.code, kExitOk) << again.err;
  EXPECT_EQ(first.out, again.out);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"--help"}).code, kExitOk);
  EXPECT_EQ(run({"chi", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
}
