#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>

#include "pgph/catalog.hpp"
#include "pgph/classify.hpp"
#include "pgph/persistence.hpp"

namespace pgph {
namespace {

// Groups 158 and 160 of order 64 need ingested Small Groups data:
// set PGPH_INGESTED to a directory holding 64.158.json and 64.160.json.
TEST(Ingested, UpperCentralDegreeThreeSeparates158And160) {
  const char* dir = std::getenv("PGPH_INGESTED");
  if (dir == nullptr) GTEST_SKIP() << "PGPH_INGESTED not set";
  const std::filesystem::path root(dir);
  if (!std::filesystem::exists(root / "64.158.json") || !std::filesystem::exists(root / "64.160.json"))
    GTEST_SKIP() << "64.158.json / 64.160.json not found";
  const auto a = load_group((root / "64.158.json").string()).group;
  const auto b = load_group((root / "64.160.json").string()).group;
  const auto pa = persistence_sequence(a, Functor::Z, 3);
  const auto pb = persistence_sequence(b, Functor::Z, 3);
  EXPECT_NE(barcode(pa.matrices[2]), barcode(pb.matrices[2]));
}

}  // namespace
}  // namespace pgph
