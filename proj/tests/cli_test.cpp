#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "rcop/cli.hpp"

namespace rcop {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("rcop_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& content) {
    const fs::path p = dir_ / name;
    std::ofstream(p, std::ios::binary) << content;
    return p.string();
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  int run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    args.insert(args.begin(), "rcop");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    return cli::run(static_cast<int>(argv.size()), argv.data(), out_, err_);
  }

  std::string slurp(const std::string& p) { return cli::read_file(p); }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, RcPrintsValueAndWitness) {
  const std::string g = file("c6.txt", "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
  EXPECT_EQ(run({"rc", g}), 0);
  const std::string text = out_.str();
  EXPECT_EQ(text.substr(0, 8), "rc = 3\n0");
  const std::string coloring = file("c6.col", text.substr(text.find('\n') + 1));
  EXPECT_EQ(run({"check-coloring", g, coloring}), 0);
  EXPECT_EQ(out_.str(), "pass\n");

  EXPECT_EQ(run({"rc", file("c5.g6", "Dhc\n"), "--format", "graph6"}), 0);
  EXPECT_EQ(out_.str().substr(0, 7), "rc = 3\n");
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run({"rc", file("bad.txt", "3 1\n0 x\n")}), 2);
  EXPECT_NE(err_.str().find("line 2, column 3"), std::string::npos) << err_.str();
  EXPECT_EQ(run({"rc", file("loop.txt", "5 1\n4 4\n")}), 3);
  EXPECT_EQ(run({"rc", file("split.txt", "4 2\n0 1\n2 3\n")}), 3);
  EXPECT_EQ(run({"rc", path("missing.txt")}), 2);
  EXPECT_EQ(run({"enumerate", "--class", "bridgeless-outerplanar", "--n", "11"}), 4);
  EXPECT_EQ(run({"enumerate", "--class", "all", "--n", "8"}), 4);
  EXPECT_EQ(run({"verify", "diam3", "--max-n", "11", "--report", path("r.txt")}), 4);
  EXPECT_EQ(run({"verify", "nonsense"}), 2);
  EXPECT_EQ(run({"frobnicate"}), 2);
  EXPECT_EQ(run({"--help"}), 0);
}

TEST_F(CliTest, CheckColoringFailureListsPairs) {
  const std::string g = file("c4.txt", "4 4\n0 1\n1 2\n2 3\n3 0\n");
  EXPECT_EQ(run({"check-coloring", g, file("bad.col", "0 1 0\n1 2 0\n2 3 1\n0 3 1\n")}), 1);
  EXPECT_EQ(out_.str(), "fail\n0 2\n");
  EXPECT_EQ(run({"check-coloring", g, file("short.col", "0 1 0\n")}), 2);
}

TEST_F(CliTest, EnumerateStreams) {
  EXPECT_EQ(run({"enumerate", "--class", "bridgeless-outerplanar", "--n", "5", "--diameter", "2"}), 0);
  std::istringstream lines(out_.str());
  std::vector<std::string> codes;
  for (std::string line; std::getline(lines, line);) codes.push_back(line);
  EXPECT_EQ(codes.size(), 4u);
  EXPECT_TRUE(std::is_sorted(codes.begin(), codes.end()));
  EXPECT_NE(std::find(codes.begin(), codes.end(), canonical_code(cycle(5)).bytes), codes.end());

  EXPECT_EQ(run({"enumerate", "--class", "mop", "--n", "4", "--format", "edgelist"}), 0);
  EXPECT_EQ(out_.str(), render_edge_list(canonical_form(fan(3))));
  EXPECT_EQ(run({"enumerate", "--class", "all", "--n", "3"}), 0);
  EXPECT_EQ(out_.str(), "B?\nBG\nBW\nBw\n");
}

TEST_F(CliTest, FormulasPass) {
  EXPECT_EQ(run({"verify", "formulas", "--max-n", "9", "--report", path("f.txt")}), 0);
  const std::string report = slurp(path("f.txt"));
  EXPECT_NE(report.find("verdict: pass"), std::string::npos);
  EXPECT_NE(report.find(" C9 "), std::string::npos);
  EXPECT_NE(report.find(" F8 "), std::string::npos);
  EXPECT_EQ(out_.str().substr(0, report.size()), report);
}

TEST_F(CliTest, ReportsDoNotDependOnWorkerCount) {
  for (const std::string theorem : {"diam2", "diam3", "formulas"}) {
    ASSERT_NE(run({"verify", theorem, "--max-n", "7", "--jobs", "1", "--report", path("a.txt")}), 2);
    ASSERT_NE(run({"verify", theorem, "--max-n", "7", "--jobs", "3", "--report", path("b.txt")}), 2);
    EXPECT_EQ(slurp(path("a.txt")), slurp(path("b.txt"))) << theorem;
  }
}

TEST(VerifyTest, Diam3AtSevenFindsSharpness) {
  const auto report = verify_diam3(7, 2);
  EXPECT_TRUE(report.pass());
  ASSERT_TRUE(report.sharpness);
  const auto& s = report.records[*report.sharpness];
  EXPECT_EQ(s.rc, 4);
  EXPECT_EQ(s.graph.order(), kExpectedSharpnessOrder);
  for (const auto& r : report.records) {
    EXPECT_EQ(diameter(r.graph), 3);
    EXPECT_LE(r.rc, 4);
    EXPECT_TRUE(is_rainbow_connected(r.graph, r.witness));
    EXPECT_EQ(r.witness.distinct_colors(), r.rc);
  }
}

TEST(VerifyTest, Diam2TwoConnectedClassHolds) {
  const auto report = verify_diam2(7);
  for (const auto& r : report.records) {
    EXPECT_EQ(diameter(r.graph), 2);
    if (!r.has_cut_vertex) {
      EXPECT_TRUE(r.holds) << r.code.bytes;
    }
  }
  for (std::size_t i : report.counterexamples) EXPECT_TRUE(report.records[i].has_cut_vertex);
}

TEST(VerifyTest, RenderedRecordColumns) {
  const auto report = verify_formulas(5);
  const std::string text = render_report(report);
  EXPECT_EQ(text.substr(0, text.find('\n')), "theorem: formulas");
  EXPECT_NE(text.find("    4    4    2   0   2    =2   yes C4    C]         0-2:0,0-3:0,1-2:0,1-3:1\n"), std::string::npos) << text;
}

}  // namespace
}  // namespace rcop
