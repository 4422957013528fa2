#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "pgph/error.hpp"

namespace pgph {
namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "pgph");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, MatrixOfTheDihedralGroupOfOrder64) {
  const auto r = run({"matrix", "--group", "catalog:64.dihedral", "--series", "L", "--degree", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["matrix"], nlohmann::json::parse("[[3,2,2,2,2],[0,3,2,2,2],[0,0,3,2,2],[0,0,0,3,2],[0,0,0,0,3]]"));
  EXPECT_EQ(j["group"], "64.dihedral");
}

TEST(Cli, ClassifyOrderEight) {
  const auto r = run({"classify", "--catalog", "bundled8", "--series", "Z", "--max-degree", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["classes"], 5);
  EXPECT_EQ(j["maxClassSize"], 1);
  EXPECT_EQ(j["stableT"], 3);
  EXPECT_EQ(j["partition"].size(), 5u);
}

TEST(Cli, CsvRowsForOrderEight) {
  const std::vector<std::pair<std::string, std::string>> expected{
      {"Z", "Z,5,1,3,5,1,3"}, {"Zp", "Zp,5,1,3,5,1,3"}, {"L", "L,5,1,3,5,1,3"},
      {"Lp", "Lp,4,2,3,4,2,3"}, {"D", "D,5,1,3,5,1,3"}};
  for (const auto& [series, row] : expected) {
    const auto r = run({"classify", "--catalog", "bundled8", "--series", series, "--max-degree", "3", "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "functor,classes,max,t,single_classes,single_max,d\n" + row + "\n");
  }
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"barcode", "--group", "catalog:8.3", "--series", "X", "--degree", "2"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"matrix", "--group", "catalog:8.3", "--series", "L"}).code, 2);
  EXPECT_EQ(run({"coclass", "--family", "dihedral", "--levels", "6..3", "--degree", "1"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, DataErrors) {
  EXPECT_EQ(run({"matrix", "--group", "/nonexistent.json", "--series", "L", "--degree", "1"}).code, 4);
  EXPECT_EQ(run({"matrix", "--group", "catalog:12.1", "--series", "L", "--degree", "1"}).code, 4);
  EXPECT_EQ(run({"classify", "--catalog", "/nonexistent", "--series", "L", "--max-degree", "1"}).code, 4);
}

TEST(Cli, BudgetExceeded) {
  const auto saved = budget();
  Budget tiny = saved;
  tiny.fp_entries = 1000;
  set_budget(tiny);
  const auto r = run({"matrix", "--group", "catalog:64.dihedral", "--series", "L", "--degree", "3"});
  set_budget(saved);
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("budget"), std::string::npos);
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"matrix", "--group", "catalog:16.9", "--series", "Zp", "--degree", "3"},
           {"classify", "--catalog", "bundled16", "--series", "D", "--max-degree", "3"},
           {"integral", "--group", "catalog:8.4", "--series", "Zp", "--max-degree", "2"},
           {"coclass", "--family", "quaternion", "--levels", "3..5", "--degree", "2"}}) {
    const auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, BarcodeOutputs) {
  const auto txt = run({"barcode", "--group", "catalog:64.dihedral", "--series", "L", "--degree", "2", "--txt"});
  ASSERT_EQ(txt.code, 0);
  EXPECT_NE(txt.out.find("[1,5] x 2"), std::string::npos);
  const auto path = (std::filesystem::temp_directory_path() / "pgph_cli_barcode.svg").string();
  const auto svg = run({"barcode", "--group", "catalog:64.dihedral", "--series", "L", "--degree", "2", "--svg", path});
  ASSERT_EQ(svg.code, 0);
  std::ifstream in(path);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(text.rfind("<svg", 0), 0u);
  std::filesystem::remove(path);
}

TEST(Cli, CoclassReport) {
  const auto r = run({"coclass", "--family", "dihedral", "--levels", "3..6", "--degree", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["family"], "dihedral");
  EXPECT_EQ(j["levels"], nlohmann::json::parse("[3,4,5,6]"));
  EXPECT_EQ(j["stabilizedDim"], 2);
  EXPECT_EQ(j["secondHomology"]["consistent"], true);
}

TEST(Cli, HomologyWithOracle) {
  const auto r = run({"homology", "--group", "catalog:8.4", "--max-degree", "3", "--oracle"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["dims"], j["oracle"]);
  EXPECT_EQ(j["agree"], true);
}

TEST(Cli, IntegralMatrices) {
  const auto r = run({"integral", "--group", "catalog:8.3", "--series", "Zp", "--max-degree", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["matrix"][0][0]["A"], nlohmann::json::parse("[2,2]"));
}

}  // namespace
}  // namespace pgph
