#include <gtest/gtest.h>

#include <sstream>

#include "crystal/cli.hpp"

using namespace crystal;
using json::Json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "crystal");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  const auto r = run(std::move(args));
  EXPECT_EQ(r.code, 0) << r.err;
  return Json::parse(r.out);
}

}  // namespace

TEST(Cli, WordsList) {
  const Json j = run_json({"words", "list", "--n", "4"});
  EXPECT_EQ(j["count"], 16);
  EXPECT_EQ(j["words"].size(), 16u);
}

TEST(Cli, WordsInfoAndPath) {
  const Json info = run_json({"words", "info", "--word", "1,2,1"});
  EXPECT_EQ(info["reflection_ordering"], Json::parse("[[1,2],[1,3],[2,3]]"));
  const Json path = run_json({"words", "path", "--from", "1,2,1", "--to", "2,1,2"});
  EXPECT_EQ(path["moves"].size(), 1u);
}

TEST(Cli, DiagramRoundTrip) {
  const Json j = run_json({"diagram", "show", "--word", "1,2,1"});
  EXPECT_EQ(j["n"], 3);
  ASSERT_EQ(j["vertices"].size(), 3u);
  const Vertex v = json::decode_vertex(j["vertices"][1]);
  EXPECT_EQ(v.inversion.p, 1);
  EXPECT_EQ(v.inversion.q, 3);
}

TEST(Cli, CrossingsRoundTrip) {
  const Json j = run_json({"crossings", "list", "--word", "1,2,1", "--a", "2"});
  ASSERT_EQ(j["paths"].size(), 2u);
  std::set<IntVec> rs;
  for (const auto& p : j["paths"]) {
    const CrossingPath g = json::decode_path(p);
    EXPECT_EQ(json::encode(g), p);
    rs.insert(g.r());
  }
  EXPECT_EQ(rs, (std::set<IntVec>{{-1, 1, 0}, {0, 0, 1}}));
}

TEST(Cli, PolytopeRoundTrip) {
  const Json j = run_json({"polytope", "--word", "1,2,1", "--lambda", "1,1", "--kind", "nz", "--points"});
  EXPECT_EQ(j["count"], 8);
  EXPECT_EQ(j["weyl_dim"], 8);
  const auto sys = json::decode_system(j);
  EXPECT_EQ(lattice_points(sys).size(), 8u);
}

TEST(Cli, OperatorApply) {
  const Json j = run_json({"op", "apply", "--word", "1,2,1", "--structure", "star", "--x", "1,1,0", "--op", "f", "--a", "2"});
  EXPECT_EQ(j["result"], Json::parse("[1,2,0]"));
  const Json bot = run_json({"op", "apply", "--word", "1,2,1", "--structure", "nz", "--lambda", "1,1", "--x", "0,0,0", "--op", "e", "--a", "1"});
  EXPECT_TRUE(bot["result"].is_null());
  const auto bad = run({"op", "apply", "--word", "1,2,1", "--structure", "bz", "--lambda", "1,1", "--x", "5,0,0", "--op", "f", "--a", "1"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_FALSE(bad.err.empty());
}

TEST(Cli, StarMatrix) {
  const Json j = run_json({"star", "matrix", "--n", "3"});
  EXPECT_EQ(j["matrix"], Json::parse("[[0,1,-1],[1,0,1],[0,0,1]]"));
  EXPECT_EQ(j["determinant"], -1);
  const auto text = run({"--format", "text", "star", "matrix", "--n", "3"});
  EXPECT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("0 1 -1"), std::string::npos);
}

TEST(Cli, GraphFormats) {
  const Json j = run_json({"crystal", "graph", "--word", "1,2,1", "--lambda", "1,1", "--structure", "bz"});
  const CrystalGraph g = json::decode_graph(j);
  EXPECT_EQ(g.nodes.size(), 8u);
  EXPECT_EQ(json::encode(g), j);
  const auto dot = run({"crystal", "graph", "--word", "1,2,1", "--lambda", "1,1", "--format", "dot"});
  EXPECT_EQ(dot.code, 0);
  EXPECT_EQ(dot.out.rfind("digraph", 0), 0u);
  EXPECT_NE(dot.out.find("[label=2]"), std::string::npos);
}

TEST(Cli, Verify) {
  const Json j = run_json({"verify", "--suite", "paper-example", "--n", "3"});
  EXPECT_TRUE(j["passed"].get<bool>());
  const auto fail = run({"verify", "--suite", "psi-coherence", "--n", "3", "--psi-variant", "paper"});
  EXPECT_EQ(fail.code, 1);
  EXPECT_FALSE(Json::parse(fail.out)["passed"].get<bool>());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "nonsense"}).code, 2);
  EXPECT_EQ(run({"words", "info", "--word", "1,1"}).code, 2);
  EXPECT_EQ(run({"--format", "xml", "words", "list", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"crystal", "graph", "--word", "1,2,1", "--structure", "binf", "--depth", "99"}).code, 2);
}
