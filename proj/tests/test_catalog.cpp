#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>

#include <nlohmann/json.hpp>

#include "pgph/catalog.hpp"
#include "pgph/error.hpp"
#include "pgph/persistence.hpp"
#include "pgph/render.hpp"
#include "support.hpp"

namespace pgph {
namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("pgph_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

TEST(Catalog, BundledCounts) {
  EXPECT_EQ(load_catalog(resolve_catalog_dir("bundled8")).size(), 5u);
  EXPECT_EQ(load_catalog(resolve_catalog_dir("bundled16")).size(), 14u);
  EXPECT_EQ(load_catalog(resolve_catalog_dir("bundled27")).size(), 5u);
}

TEST(Catalog, EmptyDirectory) {
  TempDir d;
  EXPECT_TRUE(load_catalog(d.path).empty());
}

TEST(Catalog, MalformedFileNamesTheFile) {
  TempDir d;
  write(d.path / "index.json", R"({"groups":["2.1"]})");
  write(d.path / "2.1.json", R"({"name":"2.1","degree":2,"generators":[[1,1]]})");
  try {
    load_catalog(d.path);
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("2.1.json"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("not a permutation"), std::string::npos);
  }
}

TEST(Catalog, RejectsOrderMismatchAndDuplicates) {
  TempDir d;
  write(d.path / "index.json", R"({"groups":["4.1"]})");
  write(d.path / "4.1.json", R"({"name":"4.1","degree":2,"generators":[[2,1]],"tags":[]})");
  EXPECT_THROW(load_catalog(d.path), DataError);
  write(d.path / "index.json", R"({"groups":["2.1","2.1"]})");
  write(d.path / "2.1.json", R"({"name":"2.1","degree":2,"generators":[[2,1]],"tags":[]})");
  EXPECT_THROW(load_catalog(d.path), DataError);
}

TEST(Catalog, MissingIndexNextToFiles) {
  TempDir d;
  write(d.path / "2.1.json", R"({"name":"2.1","degree":2,"generators":[[2,1]],"tags":[]})");
  EXPECT_THROW(load_catalog(d.path), DataError);
}

TEST(Catalog, IngestedProvenance) {
  TempDir d;
  write(d.path / "index.json", R"({"groups":["2.1"]})");
  write(d.path / "2.1.json", R"({"name":"2.1","degree":2,"generators":[[2,1]],"tags":["C2"]})");
  const auto c = load_catalog(d.path);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].provenance, Provenance::ingested);
  EXPECT_EQ(test::bundled("order8")[0].provenance, Provenance::bundled);
}

TEST(CatalogProperty, EveryBundledGroupRoundTrips) {
  TempDir d;
  for (const auto& e : test::bundled_groups(1, 512)) {
    const auto file = d.path / (e.id + ".json");
    write_group_file(file, e.file);
    const auto again = read_group_file(file);
    EXPECT_EQ(again, e.file) << e.id;
    EXPECT_TRUE(*build_group(again) == *e.group) << e.id;
  }
}

TEST(CatalogProperty, IdsAreUniqueAndMatchOrders) {
  std::set<std::string> ids;
  for (const auto& e : test::bundled_groups(1, 512)) {
    EXPECT_TRUE(ids.insert(e.id).second);
    EXPECT_EQ(std::stoull(e.id.substr(0, e.id.find('.'))), e.group->order());
  }
}

TEST(LoadGroup, SelectorsAndErrors) {
  EXPECT_EQ(load_group("catalog:16.7").group->order(), 16u);
  EXPECT_EQ(load_group("catalog:64.dihedral").group->order(), 64u);
  EXPECT_THROW(load_group("catalog:99.9"), DataError);
  EXPECT_THROW(load_group("/nonexistent/group.json"), DataError);
}

// Structural reading of the SVG output.
struct SvgShape {
  std::size_t segments = 0, endpoints = 0, vertices = 0, labels = 0;
};

SvgShape shape(const std::string& svg) {
  SvgShape s;
  auto count = [&](const std::string& pat) {
    const std::regex re(pat);
    return static_cast<std::size_t>(std::distance(std::sregex_iterator(svg.begin(), svg.end(), re), std::sregex_iterator()));
  };
  s.segments = count("<line class=\"bar\"");
  s.endpoints = count("<circle class=\"endpoint\"");
  s.vertices = count("<circle class=\"vertex\"");
  s.labels = count("<text ");
  return s;
}

TEST(RenderSvg, EmptyBarcodeHasAxesOnly) {
  const auto svg = render_svg(Barcode{2, 3, {}});
  const auto s = shape(svg);
  EXPECT_EQ(s.segments + s.endpoints + s.vertices, 0u);
  EXPECT_EQ(s.labels, 3u);
  EXPECT_NE(svg.find("class=\"axes\""), std::string::npos);
}

TEST(RenderSvg, OneFullBar) {
  const auto s = shape(render_svg(Barcode{1, 3, {{1, 3, 1}}}));
  EXPECT_EQ(s.segments, 1u);
  EXPECT_EQ(s.endpoints, 2u);
  EXPECT_EQ(s.vertices, 0u);
}

TEST(RenderSvg, DihedralDegreeTwo) {
  const auto b = barcode(persistence_matrix(test::named("64.dihedral"), Functor::L, 2));
  const auto svg = render_svg(b);
  const auto s = shape(svg);
  EXPECT_EQ(s.segments, 2u);
  EXPECT_EQ(s.endpoints, 4u);
  EXPECT_EQ(s.vertices, 5u);
  EXPECT_EQ(s.segments + s.vertices, b.total());
  EXPECT_EQ(svg, render_svg(b));
}

TEST(RenderSvg, ColumnOneIsLeftmost) {
  const auto svg = render_svg(Barcode{1, 3, {{1, 3, 1}}});
  std::smatch m;
  ASSERT_TRUE(std::regex_search(svg, m, std::regex("class=\"bar\" x1=\"(\\d+)\" y1=\"\\d+\" x2=\"(\\d+)\"")));
  EXPECT_LT(std::stoi(m[1]), std::stoi(m[2]));
}

TEST(RenderJson, MatrixShape) {
  const auto j = to_json(persistence_matrix(test::named("64.dihedral"), Functor::L, 2));
  EXPECT_EQ(j["functor"], "L");
  EXPECT_EQ(j["degree"], 2);
  EXPECT_EQ(j["termOrders"], nlohmann::json::parse("[64,32,16,8,4]"));
  EXPECT_EQ(j["matrix"][0], nlohmann::json::parse("[3,2,2,2,2]"));
  EXPECT_EQ(j["matrix"][4], nlohmann::json::parse("[0,0,0,0,3]"));
}

TEST(RenderJson, IntegralTriples) {
  const auto j = to_json(integral_persistence_matrix(test::cyclic(4), Functor::Zp, 1));
  EXPECT_EQ(j["matrix"][0][1], nlohmann::json::parse(R"({"A":[4],"B":[2],"C":[]})"));
  EXPECT_TRUE(j["matrix"][1][0].is_null());
}

TEST(RenderText, OneLinePerBar) {
  EXPECT_EQ(render_text(Barcode{2, 2, {{1, 2, 2}, {2, 2, 1}}}), "degree 2, 2 columns, 3 bars\n[1,2] x 2\n[2,2] x 1\n");
}

}  // namespace
}  // namespace pgph
