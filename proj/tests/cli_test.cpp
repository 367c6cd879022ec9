#include "rvc/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "rvc/constructions.hpp"
#include "rvc/graph6.hpp"

namespace rvc::cli {
namespace {

using nlohmann::json;

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;

  json parsed() const { return json::parse(out); }
};

Outcome invoke(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  Outcome o;
  o.code = run(args, in, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("rvc_cli_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(ComputeCommandTest, FivePath) {
  const Outcome o = invoke({"compute", to_graph6(path_graph(5))});
  ASSERT_EQ(o.code, kOk) << o.err;
  const json j = o.parsed();
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["graph6"], "DhC");
  EXPECT_EQ(j["n"], 5);
  EXPECT_EQ(j["diameter"], 4);
  EXPECT_EQ(j["rvc"], 3);
  EXPECT_EQ(j["coloring"].size(), 5U);
  EXPECT_EQ(j["lower_bound_reason"], "diameter-minus-one");
}

TEST(ComputeCommandTest, CompleteGraph) {
  const json j = invoke({"compute", "D~{"}).parsed();
  EXPECT_EQ(j["rvc"], 0);
  EXPECT_TRUE(j["coloring"].is_array());
  EXPECT_TRUE(j["coloring"].empty());
  EXPECT_EQ(j["lower_bound_reason"], "complete-graph");
}

TEST(ComputeCommandTest, FiveCycleOneBasedColoring) {
  const json j = invoke({"compute", "Dhc"}).parsed();
  EXPECT_EQ(j["rvc"], 1);
  EXPECT_EQ(j["coloring"], json::array({1, 1, 1, 1, 1}));
}

TEST(ComputeCommandTest, ExhaustedReason) {
  const json j = invoke({"compute", to_graph6(cycle_graph(7))}).parsed();
  EXPECT_EQ(j["rvc"], 3);
  EXPECT_EQ(j["lower_bound_reason"], "exhausted-k");
  EXPECT_EQ(j["exhausted_k"], json::array({2}));
}

TEST(ComputeCommandTest, BatchFromStdin) {
  const Outcome o = invoke({"compute"}, "DhC\n\nDhc\n");
  ASSERT_EQ(o.code, kOk);
  std::istringstream lines(o.out);
  std::string a;
  std::string b;
  std::getline(lines, a);
  std::getline(lines, b);
  EXPECT_EQ(json::parse(a)["rvc"], 3);
  EXPECT_EQ(json::parse(b)["rvc"], 1);
}

TEST(ComputeCommandTest, DataErrors) {
  Outcome bad = invoke({"compute", "D h"});
  EXPECT_EQ(bad.code, kDataError);
  EXPECT_TRUE(bad.out.empty());
  EXPECT_FALSE(bad.err.empty());
  EXPECT_EQ(invoke({"compute", "A?"}).code, kDataError);  // disconnected
  const Outcome batch = invoke({"compute"}, "DhC\nbad line\n");
  EXPECT_EQ(batch.code, kDataError);
  EXPECT_TRUE(batch.out.empty());
  EXPECT_NE(batch.err.find("line 2"), std::string::npos);
}

TEST(CheckCommandTest, Examples) {
  const std::string p4 = to_graph6(path_graph(4));
  const json ok = invoke({"check", p4, "1,2,3,4"}).parsed();
  EXPECT_EQ(ok["rainbow_vertex_connected"], true);
  EXPECT_FALSE(ok.contains("failing_pair"));

  const json bad = invoke({"check", p4, "1,2,2,1"}).parsed();
  EXPECT_EQ(bad["rainbow_vertex_connected"], false);
  EXPECT_EQ(bad["failing_pair"], json::array({0, 3}));

  EXPECT_EQ(invoke({"check", "Bw", "1,1,1"}).parsed()["rainbow_vertex_connected"], true);
}

TEST(CheckCommandTest, DataErrors) {
  EXPECT_EQ(invoke({"check", "Ch", "1,2,3"}).code, kDataError);
  EXPECT_EQ(invoke({"check", "Ch", "1,2,0,1"}).code, kDataError);
  EXPECT_EQ(invoke({"check", "Ch", "1,x,2,1"}).code, kDataError);
}

// The witness printed by compute always passes check.
TEST(CheckCommandTest, AgreesWithCompute) {
  for (const Graph& g : {path_graph(6), cycle_graph(7), theorem2_graph(8), star_graph(6),
                         complete_graph(4), Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3},
                                                                   {3, 4}, {4, 5}})}) {
    const json computed = invoke({"compute", to_graph6(g)}).parsed();
    // An empty palette (complete graph) is checked with every vertex at 1.
    std::vector<int> values = computed["coloring"].get<std::vector<int>>();
    if (values.empty()) values.assign(static_cast<std::size_t>(g.order()), 1);
    std::string colors;
    for (int c : values) colors += (colors.empty() ? "" : ",") + std::to_string(c);
    const json checked = invoke({"check", to_graph6(g), colors}).parsed();
    EXPECT_EQ(checked["rainbow_vertex_connected"], true) << to_graph6(g);
  }
}

TEST(ConstructCommandTest, Families) {
  const json path = invoke({"construct", "path-pair", "--n", "7"}).parsed();
  EXPECT_EQ(path["sum"], 6);
  EXPECT_EQ(path["rvc_g"], 5);
  EXPECT_EQ(path["rvc_gbar"], 1);
  EXPECT_EQ(path["graph6"], to_graph6(path_graph(7)));
  EXPECT_EQ(path["complement_graph6"], to_graph6(complement(path_graph(7))));

  const json diam2 = invoke({"construct", "diam2", "--n", "8"}).parsed();
  EXPECT_EQ(diam2["sum"], 2);

  const json cycle = invoke({"construct", "cycle", "--n", "5"}).parsed();
  EXPECT_EQ(cycle["sum"], 2);
}

TEST(ConstructCommandTest, ExitCodes) {
  EXPECT_EQ(invoke({"construct", "diam2", "--n", "4"}).code, kDataError);
  EXPECT_EQ(invoke({"construct", "cycle", "--n", "4"}).code, kDataError);
  EXPECT_EQ(invoke({"construct", "wheel", "--n", "6"}).code, kUsage);
  EXPECT_EQ(invoke({"construct", "diam2"}).code, kUsage);
}

TEST(UsageTest, Errors) {
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsage);
  EXPECT_EQ(invoke({"census"}).code, kUsage);
  EXPECT_EQ(invoke({"census", "--n", "5", "--builtin", "--file", "x"}).code, kUsage);
  EXPECT_EQ(invoke({"census", "--n", "5", "--workers", "0"}).code, kUsage);
  const Outcome help = invoke({"--help"});
  EXPECT_EQ(help.code, kOk);
  EXPECT_NE(help.out.find("census"), std::string::npos);
}

TEST(CensusCommandTest, FiveVertices) {
  const Outcome o = invoke({"census", "--n", "5", "--builtin"});
  ASSERT_EQ(o.code, kOk) << o.err;
  const json j = o.parsed();
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["min_sum"], 2);
  EXPECT_EQ(j["max_sum"], 4);
  EXPECT_EQ(j["violations"], json::array());
}

TEST(CensusCommandTest, FourVerticesWarns) {
  const Outcome o = invoke({"census", "--n", "4", "--builtin", "--dedup"});
  EXPECT_EQ(o.code, kOk);
  EXPECT_EQ(o.parsed()["max_sum"], 4);
  EXPECT_NE(o.err.find("warning"), std::string::npos);
}

TEST(CensusCommandTest, WorkersGiveIdenticalCsv) {
  const auto one = temp_path("one.csv");
  const auto four = temp_path("four.csv");
  const auto summary = temp_path("summary.json");
  ASSERT_EQ(invoke({"census", "--n", "6", "--builtin", "--out-csv", one.string()}).code, kOk);
  ASSERT_EQ(invoke({"census", "--n", "6", "--builtin", "--workers", "4", "--out-csv",
                    four.string(), "--out-summary", summary.string()})
                .code,
            kOk);
  const std::string a = slurp(one);
  EXPECT_EQ(a, slurp(four));
  EXPECT_EQ(a.substr(0, a.find('\n')), "graph6,n,rvc_g,rvc_gbar,sum,diam_g,diam_gbar,bounds_ok");
  const json s = json::parse(slurp(summary));
  EXPECT_EQ(s["max_sum"], 5);
  EXPECT_EQ(s["n"], 6);
  std::filesystem::remove(one);
  std::filesystem::remove(four);
  std::filesystem::remove(summary);
}

TEST(CensusCommandTest, FileIngestion) {
  const auto file = temp_path("input.g6");
  {
    std::ofstream f(file);
    f << "DhC\nDhc\nD h\n" << to_graph6(path_graph(5).relabeled({1, 0, 2, 4, 3})) << '\n';
  }
  const Outcome lenient = invoke({"census", "--n", "5", "--file", file.string()});
  EXPECT_EQ(lenient.code, kOk);
  EXPECT_EQ(lenient.parsed()["total_pairs"], 3);
  EXPECT_NE(lenient.err.find("line 3"), std::string::npos);

  const Outcome dedup = invoke({"census", "--n", "5", "--file", file.string(), "--dedup"});
  EXPECT_EQ(dedup.parsed()["total_pairs"], 2);

  const Outcome strict = invoke({"census", "--n", "5", "--file", file.string(), "--strict"});
  EXPECT_EQ(strict.code, kDataError);
  EXPECT_TRUE(strict.out.empty());

  EXPECT_EQ(invoke({"census", "--n", "6", "--file", file.string()}).code, kDataError);
  EXPECT_EQ(invoke({"census", "--n", "5", "--file", temp_path("missing").string()}).code,
            kDataError);
  std::filesystem::remove(file);
}

TEST(CensusCommandTest, StdinIngestion) {
  const Outcome o = invoke({"census", "--n", "5", "--file", "-"}, "Dhc\n");
  EXPECT_EQ(o.code, kOk);
  EXPECT_EQ(o.parsed()["min_sum"], 2);
}

TEST(CensusCommandTest, BuiltinRange) {
  EXPECT_EQ(invoke({"census", "--n", "9", "--builtin"}).code, kDataError);
}

}  // namespace
}  // namespace rvc::cli
