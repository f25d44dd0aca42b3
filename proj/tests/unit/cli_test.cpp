#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = combfam::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("combfam_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

std::string gen_file(const std::string& name, const std::string& descriptor, int window) {
  const Outcome g = run({"gen", descriptor, "--window", std::to_string(window)});
  EXPECT_EQ(g.code, 0) << g.err;
  return temp_file(name, g.out);
}

TEST(Cli, RankOfSchreierPoint) {
  const Outcome r = run({"rank", "schreier", "--point", "{4}"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "4\n");
  EXPECT_EQ(run({"rank", "cube 3"}).out, "4\n");
}

TEST(Cli, Norm) {
  const Outcome r = run({"norm", "cube 1", "3,-4,1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "4\n");
  EXPECT_EQ(run({"norm", "schreier", "1,1,1,1"}).out, "2\n");
}

TEST(Cli, CheckExitCodes) {
  const std::string good = gen_file("good", "cube 2", 5);
  EXPECT_EQ(run({"check", good}).code, combfam::cli::kOk);
  const std::string bad = temp_file("bad", "ground 0 3\n-\n0 1\n");
  EXPECT_EQ(run({"check", bad, "--hereditary"}).code, combfam::cli::kViolation);
  const std::string broken = temp_file("broken", "ground 0 3\n-\n0 x\n");
  const Outcome b = run({"check", broken});
  EXPECT_EQ(b.code, combfam::cli::kUsage);
  EXPECT_NE(b.err.find("line 3"), std::string::npos) << b.err;
}

TEST(Cli, Iso) {
  const std::string f = gen_file("pf", "ex-4-perm-pair.F", 6);
  const std::string g = gen_file("pg", "ex-4-perm-pair.G", 6);
  const Outcome r = run({"iso", f, g});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "[1>3 2>1 3>2]\n");
  const std::string hf = gen_file("hf", "ex-homeo-not-pi.F", 8);
  const std::string hg = gen_file("hg", "ex-homeo-not-pi.G", 8);
  const Outcome n = run({"iso", hf, hg});
  EXPECT_EQ(n.out, "none\n");
}

TEST(Cli, Census) {
  const Outcome r = run({"census", "--members", "2", "--window", "8"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "families: 2, pairs: 1, counterexamples: 0\n");
  const Outcome m = run({"--machine", "census", "--members", "2", "--window", "6"});
  EXPECT_EQ(m.out.rfind("{", 0), 0u);
}

TEST(Cli, Usage) {
  EXPECT_EQ(run({}).code, combfam::cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, combfam::cli::kUsage);
  EXPECT_EQ(run({"rank", "cube"}).code, combfam::cli::kUsage);
  EXPECT_EQ(run({"census", "--members", "3", "--window", "4"}).code, combfam::cli::kUsage);
}

TEST(Cli, Reach) {
  const std::string f = gen_file("adj", "adjacent-removed", 6);
  const Outcome r = run({"reach", f, "--members", "5", "--window", "15"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("matches: 0"), std::string::npos) << r.out;
}

}  // namespace
