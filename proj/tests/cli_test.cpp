// Copyright 2026 The triprof Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "generators.hpp"
#include "triprof/cli.hpp"

namespace triprof {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Result RunCli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::Run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("triprof_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    const auto path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }
  std::string Graph(const std::string& name, const UndirectedGraph& g) {
    return Write(name, testing::ToEdgeListText(g));
  }
  std::string Path(const std::string& name) const { return (dir_ / name).string(); }
  static std::string Slurp(const std::string& path) {
    std::ifstream in(path);
    return {std::istreambuf_iterator<char>(in), {}};
  }

  fs::path dir_;
};

TEST_F(CliTest, ProfileGoldens) {
  const auto k4 = RunCli({"profile", Graph("k4.txt", testing::Complete(4))});
  ASSERT_EQ(k4.code, 0) << k4.err;
  EXPECT_EQ(k4.json()["global"], (Json{{"n0", 0}, {"n1", 0}, {"n2", 0}, {"n3", 4}}));
  const auto c5 = RunCli({"profile", Graph("c5.txt", testing::Cycle(5))});
  ASSERT_EQ(c5.code, 0) << c5.err;
  EXPECT_EQ(c5.json()["global"], (Json{{"n0", 0}, {"n1", 5}, {"n2", 5}, {"n3", 0}}));
  EXPECT_EQ(c5.json()["graph"]["edges"], 5);
  EXPECT_TRUE(c5.json()["phases"].is_array());
  EXPECT_TRUE(c5.json().contains("wall_seconds"));
}

TEST_F(CliTest, SampledRunsReportShape) {
  const auto r = RunCli({"profile", Graph("c5.txt", testing::Cycle(5)), "--p", "0.5", "--seed", "7",
                         "--runs", "20", "--compare-exact"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = r.json();
  ASSERT_EQ(j["runs"].size(), 20u);
  EXPECT_EQ(j["runs"][0]["seed"], 7);
  EXPECT_EQ(j["runs"][19]["seed"], 26);
  for (const char* k : {"n0", "n1", "n2", "n3"}) {
    EXPECT_TRUE(j["estimate"]["mean"].contains(k));
    EXPECT_TRUE(j["estimate"]["stddev"].contains(k));
    EXPECT_TRUE(j["accuracy_ratio"]["mean"].contains(k));
    EXPECT_TRUE(j["accuracy_ratio"]["stddev"].contains(k));
  }
  EXPECT_EQ(j["exact"]["n1"], 5);
  // Exact n0 and n3 are zero on C5 while estimates scatter around zero, so
  // negative estimates must have been flagged.
  EXPECT_FALSE(j["warnings"].empty());
  for (const auto& run : j["runs"]) {
    double total = 0;
    for (const auto& [k, v] : run["estimate"].items()) total += v.get<double>();
    EXPECT_NEAR(total, 10.0, 1e-9);
  }
}

TEST_F(CliTest, ExactCompareGivesUnitRatios) {
  const auto r = RunCli({"profile", Graph("er.txt", testing::ErdosRenyi(30, 0.3, 1)), "--compare-exact"});
  ASSERT_EQ(r.code, 0) << r.err;
  for (const auto& [k, v] : r.json()["accuracy_ratio"].items()) EXPECT_EQ(v, 1.0) << k;
}

TEST_F(CliTest, LocalOutTsv) {
  const auto tsv = Path("local.tsv");
  const auto r = RunCli({"profile", Write("c5.txt", "a b\nb c\nc d\nd e\ne a\n"), "--local-out", tsv});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["local_path"], tsv);
  EXPECT_EQ(Slurp(tsv),
            "vertex\tn0\tn1_e\tn1_d\tn2_e\tn2_c\tn3\n"
            "a\t0\t2\t1\t2\t1\t0\nb\t0\t2\t1\t2\t1\t0\nc\t0\t2\t1\t2\t1\t0\n"
            "d\t0\t2\t1\t2\t1\t0\ne\t0\t2\t1\t2\t1\t0\n");
  EXPECT_EQ(RunCli({"profile", Path("c5.txt"), "--p", "0.5", "--local-out", tsv}).code, 1);
}

TEST_F(CliTest, VertexCountOverrideAndHugeCounts) {
  const auto r = RunCli({"profile", Write("e.txt", "0 1\n"), "--vertex-count", "10000000"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = r.json();
  EXPECT_EQ(j["graph"]["vertices"], 10000000);
  // C(10^7, 3) - n1 exceeds 64 bits and is written as a decimal string.
  EXPECT_EQ(j["global"]["n0"], "166666616666660000002");
  EXPECT_EQ(j["global"]["n1"], 9999998);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(RunCli({}).code, 1);
  EXPECT_EQ(RunCli({"frobnicate"}).code, 1);
  EXPECT_EQ(RunCli({"--help"}).code, 0);
  EXPECT_EQ(RunCli({"profile", Path("missing.txt")}).code, 2);
  const auto bad = RunCli({"profile", Write("bad.txt", "0 1\n2\n")});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("line 2"), std::string::npos);
  const auto g = Graph("c5.txt", testing::Cycle(5));
  EXPECT_EQ(RunCli({"profile", g, "--p", "0"}).code, 1);
  EXPECT_EQ(RunCli({"profile", g, "--p", "1.5"}).code, 1);
  EXPECT_EQ(RunCli({"profile", g, "--threads", "0"}).code, 1);
  EXPECT_EQ(RunCli({"profile", g, "--runs", "0", "--p", "0.5"}).code, 1);
  EXPECT_EQ(RunCli({"profile", g, "--vertex-count", "2"}).code, 1);
  EXPECT_EQ(RunCli({"ego", g}).code, 1);
  EXPECT_EQ(RunCli({"ego", g, "--all", "--random", "2"}).code, 1);
  EXPECT_EQ(RunCli({"ego", g, "--all", "--mode", "fast"}).code, 1);
  EXPECT_EQ(RunCli({"sparsifier-check", g, "--epsilon", "0"}).code, 1);
  EXPECT_EQ(RunCli({"sparsifier-check", g, "--log-base", "10"}).code, 1);
  EXPECT_EQ(RunCli({"profile", g, "--out", Path("no/such/dir/report.json")}).code, 2);
}

TEST_F(CliTest, DeterministicAcrossWorkerCounts) {
  const auto g = Graph("er.txt", testing::ErdosRenyi(300, 0.05, 4));
  for (std::vector<std::string> flags :
       {std::vector<std::string>{"profile", g, "--p", "0.6", "--runs", "3", "--compare-exact"},
        std::vector<std::string>{"ego", g, "--all"}}) {
    std::string first;
    for (const char* threads : {"1", "4", "8"}) {
      auto args = flags;
      args.insert(args.end(), {"--no-timing", "--threads", threads});
      const auto r = RunCli(args);
      ASSERT_EQ(r.code, 0) << r.err;
      EXPECT_FALSE(r.json().contains("wall_seconds"));
      if (first.empty()) first = r.out;
      EXPECT_EQ(r.out, first) << "threads " << threads;
    }
  }
}

TEST_F(CliTest, EgoTables) {
  const auto g = Write("k4.txt", "a b\na c\na d\nb c\nb d\nc d\n");
  const auto inline_table = RunCli({"ego", g, "--all", "--mode", "serial"});
  ASSERT_EQ(inline_table.code, 0) << inline_table.err;
  const Json rows = inline_table.json()["table"];
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0], (Json{{"center", "a"}, {"f0", 0}, {"f1", 0}, {"f2", 0}, {"f3", 1}}));

  const auto tsv = Path("ego.tsv");
  const auto centers = Write("centers.txt", "c\n# comment\n\na\nc\n");
  const auto r = RunCli({"ego", g, "--centers", centers, "--table", tsv});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["centers"], 2);
  EXPECT_EQ(Slurp(tsv), "center\tf0\tf1\tf2\tf3\nc\t0\t0\t0\t1\na\t0\t0\t0\t1\n");

  const auto unknown = RunCli({"ego", g, "--centers", Write("bad.txt", "a\nzz\n")});
  EXPECT_EQ(unknown.code, 1);
  EXPECT_NE(unknown.err.find("zz"), std::string::npos);

  const auto random = RunCli({"ego", g, "--random", "3", "--seed", "5"});
  ASSERT_EQ(random.code, 0);
  EXPECT_EQ(random.json()["table"].size(), 3u);
  EXPECT_EQ(RunCli({"ego", g, "--random", "5"}).code, 1);
}

TEST_F(CliTest, OracleMirrorsPipeline) {
  const auto g = Graph("er.txt", testing::ErdosRenyi(40, 0.3, 2));
  const auto exact = RunCli({"profile", g, "--local-out", Path("a.tsv")});
  const auto brute = RunCli({"oracle", g, "--local-out", Path("b.tsv"), "--all"});
  ASSERT_EQ(brute.code, 0) << brute.err;
  EXPECT_EQ(exact.json()["global"], brute.json()["global"]);
  EXPECT_EQ(Slurp(Path("a.tsv")), Slurp(Path("b.tsv")));
  const auto ego = RunCli({"ego", g, "--all"});
  EXPECT_EQ(ego.json()["table"], brute.json()["table"]);
  EXPECT_EQ(RunCli({"oracle", Graph("big.txt", testing::Path(300))}).code, 1);
}

TEST_F(CliTest, SparsifierCheckOnCycle) {
  const auto g = Graph("c5.txt", testing::Cycle(5));
  const auto r = RunCli({"sparsifier-check", g, "--p", "0.5", "--epsilon", "0.1", "--gamma", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json t = r.json()["theorem"];
  EXPECT_FALSE(t["feasible"].get<bool>());
  ASSERT_EQ(t["conditions"].size(), 4u);
  for (const auto& c : t["conditions"]) {
    EXPECT_TRUE(c.contains("lhs"));
    EXPECT_TRUE(c["rhs"].is_number());
  }
  EXPECT_EQ(r.json()["extremes"], (Json{{"alpha", 1}, {"beta", 2}, {"delta", 0}}));
  const auto doubled = RunCli({"sparsifier-check", g, "--p", "0.5", "--epsilon", "0.2", "--gamma", "1"});
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(doubled.json()["theorem"]["conditions"][i]["rhs"].get<double>(),
              t["conditions"][i]["rhs"].get<double>() / 4);
  }
  const auto pre = RunCli({"sparsifier-check", g, "--prefinal", "--log-base", "2"});
  ASSERT_EQ(pre.code, 0);
  EXPECT_EQ(pre.json()["theorem"]["form"], "prefinal");
  EXPECT_EQ(pre.json()["theorem"]["log_base"], "2");
}

TEST_F(CliTest, PolysReportsZeroResiduals) {
  const auto g = Graph("er.txt", testing::ErdosRenyi(30, 0.3, 5));
  const auto r = RunCli({"polys", g, "--p", "0.4", "--seed", "3", "--runs", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = r.json();
  EXPECT_TRUE(j["identities_hold"].get<bool>());
  ASSERT_EQ(j["runs"].size(), 5u);
  for (const auto& run : j["runs"]) {
    EXPECT_EQ(run["residuals"]["y1"], 0);
    EXPECT_EQ(run["residuals"]["y2"], 0);
  }
  const auto refused = RunCli({"polys", g, "--wedge-budget", "10"});
  EXPECT_EQ(refused.code, 1);
  EXPECT_NE(refused.err.find("wedge-budget"), std::string::npos);
}

TEST_F(CliTest, BenchReportsTwoTimingsAndRatio) {
  const auto r = RunCli({"bench", Graph("er.txt", testing::ErdosRenyi(200, 0.1, 1)), "--repeats", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = r.json();
  EXPECT_EQ(j["triangles_only"]["seconds"].size(), 3u);
  EXPECT_EQ(j["full_profile"]["seconds"].size(), 3u);
  EXPECT_TRUE(j["triangles_only"]["median_seconds"].is_number());
  EXPECT_TRUE(j["ratio"].is_number());
}

TEST_F(CliTest, OutFlagWritesReport) {
  const auto out = Path("report.json");
  const auto r = RunCli({"profile", Graph("k4.txt", testing::Complete(4)), "--out", out});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(Json::parse(Slurp(out))["global"]["n3"], 4);
}

TEST(AccuracyRatio, Examples) {
  const ExactProfile exact{{1, 2, 3, 4}};
  for (const auto& r : cli::AccuracyRatio(exact, to_estimate(exact))) EXPECT_EQ(r, 1.0);
  EXPECT_EQ(cli::AccuracyRatio(exact, Estimate{{1, 2, 3, 8}})[3], 0.5);
  const auto zero = cli::AccuracyRatio(exact, Estimate{{0, 2, 3, 4}});
  EXPECT_FALSE(zero[0].has_value());
  EXPECT_TRUE(zero[1].has_value());
}

}  // namespace
}  // namespace triprof
