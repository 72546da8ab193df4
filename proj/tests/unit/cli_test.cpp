#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdlib>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bnelim/network.hpp"
#include "bnelim/reduction.hpp"
#include "bnelim/verify.hpp"
#include "cli.hpp"

using namespace bnelim;
using Json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string model(const std::string& name) { return std::string(BNELIM_MODELS_DIR) + "/" + name; }

}  // namespace

TEST(CliAttractorsTest, ReducedExampleHasTwoOscillations) {
  const auto r = run({"attractors", model("small_example_reduced.bnet")});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["version"], "0.1.0");
  EXPECT_EQ(j["fingerprint"].get<std::string>().size(), 16u);
  ASSERT_EQ(j["attractors"].size(), 2u);
  EXPECT_EQ(j["attractors"][0]["kind"], "cyclic");
  EXPECT_EQ(j["attractors"][0]["states"], (Json{"00", "10"}));
  EXPECT_EQ(j["attractors"][1]["states"], (Json{"01", "11"}));
  EXPECT_EQ(j["S"], 0);
  EXPECT_EQ(j["A"], 2);
  EXPECT_EQ(j["A_i"]["x1"], 2);
  EXPECT_EQ(j["A_i"]["x3"], 0);
}

TEST(CliAttractorsTest, ConstantZeroHasOneFixedPoint) {
  const auto r = run({"attractors", "--format", "text", model("zero.bnet")});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "S=1 A=0\nA(a)=0 A(b)=0\nfixed  00\n");
}

TEST(CliAttractorsTest, StdinInput) {
  const auto r = run({"fixed-points", "-", "--format", "text"}, "a, a\nb, !a\n");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "10\n01\n");  // ascending integer encoding
}

TEST(CliErrorsTest, CapExceeded) {
  const auto r = run({"attractors", model("large25.bnet")});
  EXPECT_EQ(r.code, cli::kExitCap);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("cap"), std::string::npos);

  EXPECT_EQ(run({"attractors", "--max-components", "2", model("small_example.bnet")}).code, cli::kExitCap);
}

TEST(CliErrorsTest, EnvironmentCap) {
  ::setenv("BNELIM_STATE_CAP", "2", 1);
  const auto capped = run({"stg", model("small_example.bnet")});
  ::unsetenv("BNELIM_STATE_CAP");
  EXPECT_EQ(capped.code, cli::kExitCap);
  EXPECT_EQ(run({"stg", model("small_example.bnet")}).code, 0);
}

TEST(CliErrorsTest, InputErrors) {
  const auto syntax = run({"attractors", "-"}, "a, b &\n");
  EXPECT_EQ(syntax.code, cli::kExitInput);
  EXPECT_NE(syntax.err.find("line 1"), std::string::npos);
  EXPECT_TRUE(syntax.out.empty());
  EXPECT_EQ(run({"attractors", "/nonexistent/file.bnet"}).code, cli::kExitInput);
  EXPECT_EQ(run({"reduce", model("small_example.bnet"), "--eliminate", "nope"}).code, cli::kExitInput);
  EXPECT_EQ(run({"attractors", "--format", "dot", model("zero.bnet")}).code, cli::kExitInput);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitInput);
  EXPECT_EQ(run({}).code, cli::kExitInput);
  EXPECT_EQ(run({"verify", model("forward.bnet")}).code, cli::kExitInput);
}

TEST(CliErrorsTest, Forbidden) {
  const auto r = run({"reduce", model("identity.bnet"), "--eliminate", "x1"});
  EXPECT_EQ(r.code, cli::kExitForbidden);
  EXPECT_NE(r.err.find("x1"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(CliErrorsTest, HelpAndVersion) {
  const auto help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("attractors"), std::string::npos);
  const auto version = run({"--version"});
  EXPECT_EQ(version.code, 0);
  EXPECT_NE(version.out.find("0.1.0"), std::string::npos);
}

TEST(CliReduceTest, ThreeComponentExample) {
  const auto r = run({"reduce", model("small_example.bnet"), "--eliminate", "x2", "--format", "text"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(same_tables(parse_network(r.out), parse_network("x1, !x1\nx3, x3")));
  EXPECT_NE(r.out.find("classical"), std::string::npos);

  const Json j = Json::parse(run({"reduce", model("small_example.bnet"), "--eliminate", "x2"}).out);
  EXPECT_EQ(j["steps"][0]["mode"], "classical");
  EXPECT_EQ(j["index_map"]["x1"], 0);
  EXPECT_TRUE(j["index_map"]["x2"].is_null());
  EXPECT_EQ(j["index_map"]["x3"], 1);
}

TEST(CliReduceTest, NegativeLoopExample) {
  const auto r = run({"reduce", model("neg_loop.bnet"), "--eliminate", "x2", "--format", "text"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(same_tables(parse_network(r.out), parse_network("x1, !x1")));
  EXPECT_NE(r.out.find("generalized"), std::string::npos);
}

TEST(CliReduceTest, SequenceFoldsLeftToRight) {
  const auto r = run({"reduce", model("chain1.bnet"), "--eliminate", "v1,v2", "--format", "text"});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::vector<std::string> order{"v1", "v2"};
  EXPECT_TRUE(same_tables(parse_network(r.out), eliminate_sequence(chain_counterexample(1), order).result()));
}

TEST(CliRoundTripTest, BundledModelsAreFixpoints) {
  for (const auto& entry : std::filesystem::directory_iterator(BNELIM_MODELS_DIR)) {
    const std::string path = entry.path().string();
    const auto once = run({"reduce", "--max-components", "25", "--format", "text", path});
    ASSERT_EQ(once.code, 0) << path << " " << once.err;
    const auto twice = run({"reduce", "--max-components", "25", "--format", "text", "-"}, once.out);
    ASSERT_EQ(twice.code, 0) << path;
    EXPECT_EQ(once.out, twice.out) << path;
    Limits wide;
    wide.max_table_components = 25;
    std::ostringstream original;
    original << std::ifstream(path).rdbuf();
    EXPECT_TRUE(same_tables(parse_network(original.str(), wide), parse_network(once.out, wide))) << path;
  }
}

TEST(CliGraphTest, InteractionGraphFormats) {
  const Json j = Json::parse(run({"igraph", model("neg_loop.bnet")}).out);
  ASSERT_EQ(j["edges"].size(), 2u);
  EXPECT_EQ(j["edges"][0], (Json{{"source", "x2"}, {"target", "x1"}, {"sign", -1}}));
  const auto dot = run({"igraph", "--format", "dot", model("forward.bnet")});
  EXPECT_EQ(dot.out.rfind("digraph", 0), 0u);
  EXPECT_NE(dot.out.find("dashed"), std::string::npos);
  EXPECT_EQ(run({"igraph", "--format", "text", model("neg_loop.bnet")}).out, "x2 -> x1 -1\nx2 -> x2 -1\n");
}

TEST(CliGraphTest, StateGraphDefaultsToDot) {
  const auto r = run({"stg", model("toggle.bnet")});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("digraph", 0), 0u);
  std::size_t nodes = 0;
  for (auto at = r.out.find("label="); at != std::string::npos; at = r.out.find("label=", at + 1)) {
    ++nodes;
  }
  EXPECT_EQ(nodes, 4u);
  const Json j = Json::parse(run({"stg", "--format", "json", model("zero.bnet")}).out);
  EXPECT_EQ(j["states"], 4);
  EXPECT_EQ(j["edges"].size(), 4u);
}

TEST(CliBoundTest, ForwardExample) {
  const Json j = Json::parse(run({"bound", model("forward.bnet")}).out);
  EXPECT_EQ(j["pfvs"], (Json{"w"}));
  EXPECT_EQ(j["bound"], 2);
  EXPECT_EQ(j["attractors"], 1);
  const Json p = Json::parse(run({"pfvs", model("toggle.bnet")}).out);
  EXPECT_EQ(p["pfvs"].size(), 1u);
  EXPECT_EQ(p["all_minimum"].size(), 2u);
}

TEST(CliChainTest, WritesTheChainNetwork) {
  const auto r = run({"chain", "1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 6);
  EXPECT_TRUE(same_tables(parse_network(r.out), chain_counterexample(1)));
  EXPECT_EQ(run({"chain", "0"}).code, cli::kExitInput);
  EXPECT_EQ(run({"chain", "20"}).code, cli::kExitCap);
}

TEST(CliVerifyTest, FileReports) {
  const auto forward = run({"verify", model("forward.bnet"), "--var", "v"});
  ASSERT_EQ(forward.code, 0) << forward.out;
  const Json j = Json::parse(forward.out);
  EXPECT_EQ(j["preserved"], false);
  EXPECT_TRUE(j["shape"].is_null());
  EXPECT_EQ(j["reports"].size(), 19u);

  const Json cascade = Json::parse(run({"verify", model("cascade.bnet"), "--var", "x2"}).out);
  EXPECT_EQ(cascade["reports"].back()["statement"], "Thm.pres-attr");
  EXPECT_EQ(cascade["reports"].back()["passed"], true);

  EXPECT_EQ(run({"verify", model("identity.bnet"), "--var", "x1"}).code, cli::kExitForbidden);
}

TEST(CliVerifyTest, FailingStatementSetsExitCode) {
  // Eliminating x1 creates the positive cycle x2 <-> x4 that the PFVS {x3} misses.
  const auto r = run({"verify", "-", "--var", "x1", "--format", "text"},
                     "x1, !x2 | x4\nx2, x1 | !x3\nx3, !x1 & x3\nx4, !x1\nx5, x1 & !x5\n");
  EXPECT_EQ(r.code, cli::kExitCheckFailed);
  EXPECT_NE(r.out.find("FAIL Lemma.pfvs"), std::string::npos);
  EXPECT_NE(r.out.find("{x3}"), std::string::npos);
}

TEST(CliVerifyTest, Suites) {
  const Json j = Json::parse(run({"verify", "--suite", "--count", "12", "--seed", "5"}).out);
  EXPECT_EQ(j["networks"], 12);
  EXPECT_EQ(j["suite"], "property");
  const auto shaped = run({"verify", "--shaped", "10", "--seed", "3"});
  EXPECT_EQ(shaped.code, 0);
  EXPECT_EQ(Json::parse(shaped.out)["networks"], 10);
}

TEST(FingerprintTest, KnownVectors) {
  EXPECT_EQ(cli::fingerprint(""), "cbf29ce484222325");
  EXPECT_EQ(cli::fingerprint("a"), "af63dc4c8601ec8c");
}
