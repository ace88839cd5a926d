#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "infoclust/io.hpp"

using namespace infoclust;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
  Json doc() const { return Json::parse(out); }
};

Outcome run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(INFOCLUST_DATA_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("infoclust_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST(Cli, ClusterSharedBits) {
  const auto r = run_cli({"cluster", "--input", data("shared_bits.json")});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto doc = r.doc();
  EXPECT_EQ(doc.at("critical_values"), Json::parse("[0.0, 1.0, 2.0]"));
  EXPECT_EQ(doc.at("psp").size(), 4u);
  EXPECT_EQ(doc.at("provenance").at("input_hash").get<std::string>().size(), 16u);
  EXPECT_EQ(doc.at("provenance").at("config").at("command"), "cluster");
  const auto again = run_cli({"cluster", "--input", data("shared_bits.json")});
  EXPECT_EQ(again.out, r.out);
}

TEST(Cli, ClusterAtGammaAndDot) {
  auto r = run_cli({"cluster", "--input", data("shared_bits.json"), "--gamma", "1"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(r.doc().at("clusters_at_gamma"), Json::parse(R"([["z1", "z2"]])"));
  r = run_cli({"cluster", "--input", data("shared_bits.json"), "--output", "dot"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(r.out.rfind("digraph psp {", 0), 0u);
}

TEST(Cli, LogBaseOverride) {
  const auto r = run_cli({"cluster", "--input", data("shared_bits.json"), "--log-base", "4"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(r.doc().at("critical_values"), Json::parse("[0.0, 0.5, 1.0]"));
  const auto e = run_cli({"mmi", "--input", data("shared_bits.json"), "--log-base", "e"});
  ASSERT_EQ(e.code, cli::kOk) << e.err;
  EXPECT_EQ(e.doc().at("mmi"), 0.0);
}

TEST(Cli, MmiCovariance) {
  const auto r = run_cli({"mmi", "--input", data("correlated_pair.csv"), "--format", "cov"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NEAR(r.doc().at("mmi").get<double>(), 0.143841036226, 1e-11);
  EXPECT_EQ(r.doc().at("fundamental_partition"), Json::parse(R"([["x"], ["y"]])"));
}

TEST(Cli, MmiTriangleTriple) {
  const auto r = run_cli({"mmi", "--input", data("pairwise_triangle.json")});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NEAR(r.doc().at("mmi").get<double>(), 0.0, 1e-12);
  EXPECT_EQ(r.doc().at("fundamental_partition"), Json::parse(R"([["z1", "z2", "z3"], ["z4"]])"));
}

TEST(Cli, Segregation) {
  auto r = run_cli({"segregation", "--input", data("shared_bits.json")});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(r.doc().at("integration"), 0.0);
  r = run_cli({"segregation", "--input", data("pairwise_triangle.json")});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto p = temp_file("chain.hg", "1 a b\n1 b c\n");
  r = run_cli({"segregation", "--input", p, "--cluster", "a,b,c"});
  ASSERT_EQ(r.code, cli::kInputError);
  r = run_cli({"segregation", "--input", data("shared_bits.json"), "--cluster", "z1,z2"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NEAR(r.doc().at("segregation").get<double>(), 1.0, 1e-12);
  r = run_cli({"segregation", "--input", data("shared_bits.json"), "--cluster", "z2,z3"});
  EXPECT_EQ(r.code, cli::kInputError);
}

TEST(Cli, MirnAtGammaOne) {
  const auto r = run_cli({"mirn", "--input", data("shared_bits.json"), "--gamma", "1", "--verify"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto doc = r.doc();
  EXPECT_EQ(doc.at("clusters"), Json::parse(R"([["z1", "z2"]])"));
  EXPECT_TRUE(doc.at("equivalence").at("ok").get<bool>());
  const auto half = run_cli({"mirn", "--input", data("shared_bits.json"), "--gamma", "0.5"});
  ASSERT_EQ(half.code, cli::kOk) << half.err;
  EXPECT_EQ(half.doc().at("clusters"), Json::parse(R"([["z1", "z2", "z3"], ["z4", "z5"]])"));
  EXPECT_EQ(run_cli({"mirn", "--input", data("shared_bits.json")}).code, cli::kInputError);
}

TEST(Cli, ChowLiu) {
  const auto r = run_cli({"chowliu", "--input", data("shared_bits.json"), "--gamma", "1"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto doc = r.doc();
  EXPECT_EQ(doc.at("tree").size(), 5u);
  EXPECT_NEAR(doc.at("tree_weight").get<double>(), 2.0 + 1.0 + 1.0, 1e-12);
  EXPECT_TRUE(doc.contains("tree_solution"));
}

TEST(Cli, MacOnPath) {
  auto r = run_cli({"mac", "--input", data("path.hg"), "--k", "2"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  auto doc = r.doc();
  EXPECT_EQ(doc.at("cost"), 4.5);
  EXPECT_EQ(doc.at("partition"), Json::parse(R"([["1"], ["2"], ["3"], ["4"]])"));
  EXPECT_EQ(doc.at("psp_partition"), Json::parse(R"([["1"], ["2"], ["3", "4"]])"));
  r = run_cli({"mac", "--input", data("pairwise_triangle.json"), "--k", "1", "--shift", "hV"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  doc = r.doc();
  EXPECT_EQ(doc.at("shift"), 5.0);
  EXPECT_EQ(doc.at("cost"), -5.0);
  EXPECT_EQ(doc.at("partition"), Json::parse(R"([["z1", "z2", "z3"], ["z4"]])"));
  EXPECT_EQ(run_cli({"mac", "--input", data("path.hg"), "--k", "0"}).code, cli::kInputError);
}

TEST(Cli, HypergraphFunctions) {
  const auto r = run_cli({"cluster", "--input", data("path.hg"), "--function", "cut"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(r.doc().at("critical_values"), Json::parse("[4.0, 6.0, 8.0]"));
  const auto e = run_cli({"cluster", "--input", data("path.hg")});
  ASSERT_EQ(e.code, cli::kOk) << e.err;
  EXPECT_EQ(e.doc().at("critical_values"), Json::parse("[2.0, 3.0, 4.0]"));
  EXPECT_EQ(e.doc().at("psp"), r.doc().at("psp"));
}

TEST(Cli, SamplesInput) {
  const auto r = run_cli({"cluster", "--input", data("two_pairs_samples.csv"), "--format", "samples", "--bins", "4"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(r.doc().at("psp")[1], Json::parse(R"([["a", "b"], ["c", "d"]])"));
}

TEST(Cli, OracleCheckPasses) {
  for (const auto* name : {"shared_bits.json", "pairwise_triangle.json"}) {
    const auto r = run_cli({"oracle-check", "--input", data(name)});
    ASSERT_EQ(r.code, cli::kOk) << name << ": " << r.err;
    const auto doc = r.doc();
    EXPECT_TRUE(doc.at("ok").get<bool>());
    EXPECT_EQ(doc.at("checks").size(), 6u);
  }
  const auto p = run_cli({"oracle-check", "--input", data("path.hg"), "--function", "in-cut"});
  EXPECT_EQ(p.code, cli::kOk) << p.err;
}

TEST(Cli, OracleCheckMismatch) {
  const auto r = run_cli({"oracle-check", "--input", data("not_submodular.json"), "--format", "table"});
  EXPECT_EQ(r.code, cli::kOracleMismatch);
  EXPECT_NE(r.err.find("submodularity"), std::string::npos);
  const auto doc = r.doc();
  EXPECT_FALSE(doc.at("ok").get<bool>());
  EXPECT_FALSE(doc.at("checks")[0].at("ok").get<bool>());
  const auto inferred = run_cli({"oracle-check", "--input", data("not_submodular.json")});
  EXPECT_EQ(inferred.code, cli::kOracleMismatch);
}

TEST(Cli, OracleCheckSizeLimit) {
  std::string edges;
  for (int i = 1; i < 11; ++i) edges += "1 " + std::to_string(i) + " " + std::to_string(i + 1) + "\n";
  const auto p = temp_file("eleven.hg", edges);
  EXPECT_EQ(run_cli({"oracle-check", "--input", p}).code, cli::kInputError);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({"cluster", "--input", data("single_variable.json")}).code, cli::kInputError);
  EXPECT_EQ(run_cli({}).code, cli::kInputError);
  EXPECT_EQ(run_cli({"cluster"}).code, cli::kInputError);
  EXPECT_EQ(run_cli({"frobnicate"}).code, cli::kInputError);
  EXPECT_EQ(run_cli({"cluster", "--input", data("shared_bits.json"), "--bins", "1"}).code, cli::kInputError);
  EXPECT_EQ(run_cli({"cluster", "--input", data("shared_bits.json"), "--sfm", "magic"}).code, cli::kInputError);
  EXPECT_EQ(run_cli({"cluster", "--input", data("shared_bits.json"), "--log-base", "1"}).code, cli::kInputError);
  EXPECT_EQ(run_cli({"cluster", "--input", data("no_such_file.json")}).code, cli::kInputError);
  EXPECT_EQ(run_cli({"cluster", "--input", data("correlated_pair.csv")}).code, cli::kInputError);
  const auto bad = temp_file("bad.hg", "1 a b\nnope a b\n");
  const auto r = run_cli({"cluster", "--input", bad});
  EXPECT_EQ(r.code, cli::kInputError);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
  EXPECT_EQ(run_cli({"cluster", "--input", data("path.hg"), "--function", "entropy", "--format", "pmf"}).code,
            cli::kInputError);
}

TEST(Cli, SfmRoutesAgree) {
  std::string base;
  for (const auto* route : {"auto", "exhaustive", "mnp"}) {
    const auto r = run_cli({"cluster", "--input", data("pairwise_triangle.json"), "--sfm", route});
    ASSERT_EQ(r.code, cli::kOk) << route << ": " << r.err;
    auto doc = r.doc();
    doc.erase("provenance");
    if (base.empty()) {
      base = doc.dump();
    } else {
      EXPECT_EQ(doc.dump(), base) << route;
    }
  }
}
