#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = poplab::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Expand) {
  const Result r = run({"expand", "k=3; 1>3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "231\n312\n321\n3 patterns\n");
  EXPECT_EQ(run({"expand", "--pop", "k=2; 1>2"}).out, "21\n1 pattern\n");
  EXPECT_EQ(run({"expand", "k=4; 3>1, 1>2, 3>4"}).out, "2143\n3142\n3241\n3 patterns\n");
}

TEST(Cli, Count) {
  EXPECT_EQ(run({"count", "k=4;", "--nmax", "4"}).out, "1,1,2,6,0\n");
  EXPECT_EQ(run({"count", "--pop", "k=4; 1>2", "--n", "5"}).out, "20\n");
  const Result j = run({"count", "k=4; 1>2", "--nmax", "5", "--json"});
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["schema"], 1);
  EXPECT_EQ(doc["counts"][5], "20");
}

TEST(Cli, CountWithOeis) {
  const Result r = run({"count", "k=5; 1>2", "--oeis", POPLAB_FIXTURE_PATH});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("matches: A007531"), std::string::npos);
}

TEST(Cli, Verify) {
  const Result r = run({"verify", "thm-3.1", "--nmax", "8"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS thm-3.1"), std::string::npos);
  EXPECT_NE(r.out.find("1/1 passed"), std::string::npos);
  const Result j = run({"verify", "--theorem", "thm-3.6", "--nmax", "7", "--json"});
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["schema"], 1);
  EXPECT_EQ(doc["reports"][0]["id"], "thm-3.6");
}

TEST(Cli, Conjectures) {
  const Result r = run({"conjectures", "--nmax", "7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("6/6 conjectures supported at n <= 7"), std::string::npos);
}

TEST(Cli, ScanToFile) {
  const std::string path = ::testing::TempDir() + "poplab_scan.json";
  const Result r = run({"scan", "--length", "3", "--nmax", "5", "--out", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("19 POPs processed", 0), 0U);
  std::ifstream in(path);
  const auto doc = nlohmann::json::parse(in);
  EXPECT_EQ(doc["schema"], 1);
}

TEST(Cli, ScanIsDeterministicAcrossJobs) {
  const Result a = run({"scan", "--nmax", "6", "--oeis", POPLAB_FIXTURE_PATH});
  const Result b = run({"scan", "--nmax", "6", "--oeis", POPLAB_FIXTURE_PATH, "--jobs", "4"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.err, "219 POPs processed, 66 symmetry orbits, 29 empirical classes at n <= 6\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"count", "k=2; 1>2, 2>1"}).code, 2);
  EXPECT_EQ(run({"count", "k=4; 1>2", "--n", "12"}).code, 2);
  EXPECT_EQ(run({"count", "k=2; 1>2", "--n", "11", "--ceiling", "11"}).out, "1\n");
  EXPECT_EQ(run({"count", "k=4; 1>2", "--n", "5", "--nmax", "6"}).code, 2);
  EXPECT_EQ(run({"verify", "thm-0.0"}).code, 2);
  EXPECT_EQ(run({"verify"}).code, 2);
  EXPECT_EQ(run({"scan", "--oeis", "/nonexistent/stripped"}).code, 3);
  EXPECT_EQ(run({"scan", "--length", "3", "--out", "/nonexistent/dir/out.json"}).code, 3);
  EXPECT_EQ(run({"--version"}).code, 0);
}
