#include <gtest/gtest.h>

#include "pgph/classify.hpp"
#include "pgph/error.hpp"
#include "support.hpp"

namespace pgph {
namespace {

std::vector<GroupPtr> groups_of(const std::string& dir) {
  std::vector<GroupPtr> out;
  for (const auto& e : test::bundled(dir)) out.push_back(e.group);
  return out;
}

TEST(Serialize, UpperTriangleInRowOrder) {
  PersistenceMatrix m;
  m.functor = Functor::Lp;
  m.entries = {{3, 2}, {0, 4}};
  EXPECT_EQ(serialize(m), "Lp:2:3,2,4");
}

TEST(Fingerprint, DeterministicAndPrefixed) {
  const auto g = test::named("16.7");
  const auto a = fingerprint(g, Functor::L, 3);
  const auto b = fingerprint(g, Functor::L, 3);
  EXPECT_EQ(a.degrees, b.degrees);
  ASSERT_EQ(a.degrees.size(), 3u);
  EXPECT_EQ(a.prefix(2), a.degrees[0] + "|" + a.degrees[1] + "|");
}

TEST(Classify, OrderEightCenter) {
  const auto r = classify(groups_of("order8"), Functor::Z, 3);
  EXPECT_EQ(r.stats, (PartitionStats{5, 1}));
  EXPECT_FALSE(r.partial);
}

TEST(Classify, OrderEightLowerPCentralMergesTwoGroups) {
  const auto r = classify(groups_of("order8"), Functor::Lp, 3);
  EXPECT_EQ(r.stats, (PartitionStats{4, 2}));
  std::size_t pairs = 0;
  for (const auto& c : r.classes) pairs += c.size() == 2;
  EXPECT_EQ(pairs, 1u);
}

TEST(Classify, SingleGroup) {
  const auto r = classify({test::named("8.3")}, Functor::L, 2);
  EXPECT_EQ(r.stats, (PartitionStats{1, 1}));
  EXPECT_EQ(r.classes, (std::vector<std::vector<std::string>>{{"8.3"}}));
}

TEST(Classify, StabilityDegreeIsOneBeyondTheStrongestPrefix) {
  const auto r = classify(groups_of("order8"), Functor::Z, 3);
  EXPECT_EQ(r.strongest_t, 2);
  EXPECT_EQ(r.stable_t, 3);
  EXPECT_TRUE(r.stable_confirmed);
  const auto capped = classify(groups_of("order8"), Functor::Z, 2);
  EXPECT_EQ(capped.stable_t, 2);
  EXPECT_FALSE(capped.stable_confirmed);
}

TEST(Classify, ThreadCountDoesNotChangeTheReport) {
  const auto groups = groups_of("order16");
  const auto one = classify(groups, Functor::D, 3, false, 1);
  const auto many = classify(groups, Functor::D, 3, false, 8);
  EXPECT_EQ(one.classes, many.classes);
  EXPECT_EQ(one.cumulative, many.cumulative);
}

TEST(Classify, BudgetFailuresMarkThePartition) {
  const auto saved = budget();
  Budget tiny = saved;
  tiny.fp_entries = 50'000;
  set_budget(tiny);
  const auto r = classify({test::named("8.3"), test::named("64.dihedral")}, Functor::L, 3);
  set_budget(saved);
  EXPECT_TRUE(r.partial);
  ASSERT_EQ(r.failures.size(), 1u);
  EXPECT_EQ(r.failures[0].rfind("64.dihedral", 0), 0u);
  EXPECT_EQ(r.stats.classes, 1u);
}

TEST(Classify, CumulativePartitionsRefine) {
  const auto r = classify(groups_of("order16"), Functor::L, 4);
  for (std::size_t d = 1; d < r.cumulative.size(); ++d)
    EXPECT_GE(r.cumulative[d].classes, r.cumulative[d - 1].classes);
  EXPECT_EQ(r.cumulative.back(), r.stats);
}

TEST(Classify, IntegralOrderEight) {
  const auto r = classify(groups_of("order8"), Functor::Zp, 3, true);
  EXPECT_EQ(r.stats, (PartitionStats{5, 1}));
}

TEST(CsvSummary, Shape) {
  const auto r = classify(groups_of("order8"), Functor::Lp, 3);
  EXPECT_EQ(csv_summary({r}), "functor,classes,max,t,single_classes,single_max,d\nLp,4,2,3,4,2,3\n");
}

}  // namespace
}  // namespace pgph
