#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>

#include "json.hpp"

using Json = nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
  Json json() const { return Json::parse(out); }
};

Run greenscan(const std::string& args) {
  Run r;
  const std::string cmd = std::string(GREENSCAN_EXE) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string alg(const std::string& name) { return std::string(ALGEBRA_DIR) + "/" + name; }

}  // namespace

TEST(Cli, MgsOnA2) {
  const auto r = greenscan("mgs " + alg("a2.alg"));
  ASSERT_EQ(r.code, 0);
  const auto j = r.json();
  EXPECT_EQ(j["schema"], "greenscan/1");
  EXPECT_EQ(j["count"], 2);
  EXPECT_EQ(j["complete"], true);
  std::multiset<int> lengths;
  for (const auto& c : j["chains"]) lengths.insert(c["length"].get<int>());
  EXPECT_EQ(lengths, (std::multiset<int>{2, 3}));
  EXPECT_EQ(j["bounds"]["label"], "complete up to dim <= 6");
}

TEST(Cli, StraightPathIsNotDiscrete) {
  const auto r = greenscan("path " + alg("a2.alg") + " --path \"(1,1);(-1,-1)\"");
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.json()["refusal"]["code"], "NOT_DISCRETE");
}

TEST(Cli, BentPathGivesTheLongSequence) {
  const auto r = greenscan("path " + alg("a2.alg") + " --path \"(1,1);(1,-1/2);(-1,-1)\"");
  ASSERT_EQ(r.code, 0);
  const auto j = r.json();
  EXPECT_EQ(j["length"], 3);
  EXPECT_EQ(j["chain"][2]["pair"], "(P(1)+S(1), 0)");
}

TEST(Cli, PathFromChainRoundTrips) {
  const auto r = greenscan("path " + alg("a2.alg") + " --from-chain 1");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.json().contains("round_trip"));
}

TEST(Cli, NonGreenPathIsRefused) {
  const auto r = greenscan("path " + alg("a2.alg") + " --path \"(1,1);(-1,-1);(1,1);(-1,-1)\"");
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.json()["refusal"]["code"], "NOT_GREEN_PATH");
}

TEST(Cli, MarkovObstruction) {
  const auto r = greenscan("markov " + alg("markov.alg") + " --dim-bound 3");
  ASSERT_EQ(r.code, 2);
  const auto j = r.json();
  std::set<std::vector<int>> dims;
  for (const auto& w : j["report"]["witnesses"]) {
    dims.insert(w["dims"].get<std::vector<int>>());
    EXPECT_EQ(w["certified"], true);
  }
  EXPECT_EQ(dims, (std::set<std::vector<int>>{{1, 0, 1}, {1, 1, 0}, {0, 1, 1}}));
}

TEST(Cli, InputErrors) {
  const auto missing = greenscan("check /nonexistent/x.alg");
  EXPECT_EQ(missing.code, 1);
  EXPECT_EQ(missing.json()["error"]["kind"], "input");

  EXPECT_EQ(greenscan("path " + alg("a2.alg") + " --path \"(1,1);(2\"").code, 1);
  EXPECT_EQ(greenscan("render " + alg("a3.alg")).code, 1);

  const auto bad = std::filesystem::temp_directory_path() / "greenscan_bad.alg";
  std::ofstream(bad) << "algebra bad\nvertices 1 2\narrow a : 1 -> 3\n";
  const auto parsed = greenscan("check " + bad.string());
  EXPECT_EQ(parsed.code, 1);
  EXPECT_NE(parsed.json()["error"]["message"].get<std::string>().find("line 3"), std::string::npos);
  std::filesystem::remove(bad);
}

TEST(Cli, TruncatedGraphIsInconclusive) {
  const auto r = greenscan("tau-pairs " + alg("kronecker.alg") + " --node-cap 20");
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.json()["complete"], false);
}

TEST(Cli, OutputIsDeterministic) {
  for (const std::string args : {"tau-pairs " + alg("a2.alg"), "render " + alg("a2.alg"),
                                 "walls " + alg("a2.alg"), "exchange-graph " + alg("a3.alg") + " --format dot"}) {
    const auto a = greenscan(args), b = greenscan(args);
    EXPECT_EQ(a.code, 0) << args;
    EXPECT_EQ(a.out, b.out) << args;
  }
}

TEST(Cli, Formats) {
  const auto svg = greenscan("render " + alg("a2.alg") + " --path \"(1,1);(-1,1);(-1,-1)\"");
  ASSERT_EQ(svg.code, 0);
  EXPECT_EQ(svg.out.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.out.find("viewBox=\"0 0 800 800\""), std::string::npos);

  const auto dot = greenscan("exchange-graph " + alg("a2.alg") + " --format dot");
  ASSERT_EQ(dot.code, 0);
  EXPECT_EQ(dot.out.rfind("digraph", 0), 0u);

  const auto text = greenscan("hn " + alg("a2.alg") + " --charge \"a=(1,-1);b=(1,1)\" --format text");
  ASSERT_EQ(text.code, 0);
  EXPECT_EQ(text.out.rfind("schema: greenscan/1", 0), 0u);

  const auto rank3 = greenscan("render " + alg("a3.alg") + " --slice x+y+z=1");
  EXPECT_EQ(rank3.code, 0);
}

TEST(Cli, CheckSummarizesTheAlgebra) {
  const auto r = greenscan("check " + alg("a3_zero.alg"));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["schema"], "greenscan/1");
}
