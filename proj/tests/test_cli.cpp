#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "onep/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = onep::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("onep_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    auto p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
};

const char* kK4 = "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";

}  // namespace

TEST_F(Cli, DecideK4Geometric) {
  auto r = run({"decide", "--in", file("k4.edges", kK4), "--geometric"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "YES\n");
}

TEST_F(Cli, DecideNoStillExitsZero) {
  std::string k7;
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j) k7 += std::to_string(i) + " " + std::to_string(j) + "\n";
  auto r = run({"decide", "--in", file("k7.edges", k7)});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "NO\n");
}

TEST_F(Cli, WitnessIsRevalidated) {
  std::string k5;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) k5 += std::to_string(i) + " " + std::to_string(j) + "\n";
  auto r = run({"decide", "--in", file("k5.edges", k5), "--geometric", "--witness", path("w.json")});
  ASSERT_EQ(r.out, "YES\n");
  auto c = run({"check-embedding", "--in", path("w.json"), "--geometric"});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out, "VALID\nSTRAIGHTENABLE\n");
}

TEST_F(Cli, CapExceededExitsThree) {
  std::string k6;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) k6 += std::to_string(i) + " " + std::to_string(j) + "\n";
  auto r = run({"decide", "--in", file("k6.edges", k6), "--max-edges", "5"});
  EXPECT_EQ(r.code, 3);
}

TEST_F(Cli, BoundsClosedForm) {
  auto r = run({"bounds", "--variant", "1p", "--ell", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "252\n");
  EXPECT_EQ(run({"bounds", "--triangulation", "2"}).out, "11\n");
}

TEST_F(Cli, BadEmbeddingReportsViolation) {
  auto r = run({"check-embedding", "--in", file("bad.json", R"({"vertices":[0,1],"edges":[[0,1]],"rotation":{"0":[[0,0]]}})"),
                "--report", path("rep.json")});
  EXPECT_NE(r.code, 0);
  EXPECT_EQ(r.out.rfind("INVALID", 0), 0u);
  auto rep = nlohmann::json::parse(slurp(path("rep.json")));
  EXPECT_EQ(rep["valid"], false);
  EXPECT_TRUE(rep.contains("violation"));
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"decide"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(Cli, MalformedInputIsFailure) {
  auto r = run({"decide", "--in", file("bad.edges", "0 x\n")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("bad vertex id"), std::string::npos);
}

TEST_F(Cli, KernelizeWritesReport) {
  auto r = run({"kernelize", "--variant", "1p", "--in", file("c.edges", "0 1\n1 2\n2 3\n3 0\n0 4\n4 2\n"), "--out",
                path("k.edges"), "--report", path("k.json")});
  EXPECT_EQ(r.code, 0);
  auto rep = nlohmann::json::parse(slurp(path("k.json")));
  EXPECT_EQ(rep["variant"], "1p");
  EXPECT_TRUE(rep.contains("provenance"));
  EXPECT_FALSE(slurp(path("k.edges")).empty());
}

TEST_F(Cli, Deterministic) {
  std::string g = file("g.edges", "0 1\n1 2\n2 3\n3 0\n0 2\n1 3\n3 4\n");
  auto a = run({"td-run", "--in", g, "--log", path("a.json")});
  auto b = run({"td-run", "--in", g, "--log", path("b.json")});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, "YES\n");
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
}

TEST_F(Cli, TdRunWithDecompositionAndOverrides) {
  std::string g = file("p.edges", "0 1\n1 2\n");
  std::string d = file("p.td", "1 -1\n0 1\n2 1\n");
  auto r = run({"td-run", "--in", g, "--decomposition", d, "--override-thresholds", R"({"rule2-baseline": 0})"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "YES\n");
  EXPECT_EQ(run({"td-run", "--in", g, "--override-thresholds", R"({"bogus": 1})"}).code, 1);
}

TEST_F(Cli, GenBinpackWritesWitnesses) {
  auto r = run({"gen-binpack", "--items", "3,1,2,2", "--bins", "2", "--capacity", "4", "--raw", "--out",
                path("inst.edges"), "--witnesses", path("w"), "--report", path("rep.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto rep = nlohmann::json::parse(slurp(path("rep.json")));
  EXPECT_EQ(rep["left_path_length"], 5);
  EXPECT_EQ(rep["right_path_length"], 8);
  EXPECT_EQ(rep["fvs_size"], 48);
  EXPECT_LE(rep["pathwidth_bound"].get<int>(), 15);
  EXPECT_TRUE(fs::exists(path("w/fvs.txt")));
  EXPECT_TRUE(fs::exists(path("w/pathdecomp.txt")));
  auto trivial = run({"gen-binpack", "--items", "5", "--bins", "2", "--capacity", "2", "--out", path("x.edges")});
  EXPECT_EQ(trivial.out, "TRIVIAL NO\n");
}

TEST_F(Cli, ReplaceAndLift) {
  std::string g = file("p3.edges", "0 1\n1 2\n");
  std::string h = file("tri.json", R"({"vertices": 3, "edges": [[0,1],[1,2],[0,2]], "alpha": 0, "beta": 1})");
  auto r = run({"gen-replace", "--graph", g, "--gadget", h, "--out", path("r.edges")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "5 vertices, 6 edges\n");
  auto l = run({"lift-bandwidth", "--graph", g, "--ordering", file("o.txt", "0 1 2\n"), "--gadget", h});
  EXPECT_EQ(l.code, 0);
  EXPECT_EQ(l.out.rfind("b 1, bound 4", 0), 0u);
}

TEST_F(Cli, ConvexCertificate) {
  auto r = run({"convex-cert", "--in", file("theta.edges", "0 2\n2 1\n0 3\n3 1\n0 4\n4 1\n"), "--out", path("c.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "VALID\n");
}

TEST_F(Cli, SimplifyRoundTrip) {
  // path 0-1-2-3-4-5 whose first and fourth edges cross
  onep::Graph g = onep::path_graph(6);
  std::optional<onep::PlaneEmbedding> e;
  onep::for_each_rotation_system(g, {{0, 3}}, false, [&](const onep::PlaneEmbedding& x) {
    e = onep::with_nesting(x, *std::min_element(x.faces()[0].begin(), x.faces()[0].end()), {});
    return false;
  });
  ASSERT_TRUE(e);
  auto sys = onep::make_arc_system(*e, {});
  auto r = run({"simplify", "--in", file("s.json", onep::to_json(sys).dump()), "--out", path("o.json"), "--report",
                path("rep.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "1 -> 0 crossings\n");
  auto back = onep::arc_system_from_json(nlohmann::ordered_json::parse(slurp(path("o.json"))));
  EXPECT_EQ(back.host.crossing_count(), 0);
  auto rep = nlohmann::json::parse(slurp(path("rep.json")));
  EXPECT_EQ(rep["rule_one"], 1);
}
