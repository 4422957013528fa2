#include <gtest/gtest.h>

#include <map>

#include "pgph/classify.hpp"
#include "pgph/error.hpp"
#include "pgph/persistence.hpp"
#include "support.hpp"

namespace pgph {
namespace {

PersistenceMatrix make(std::vector<std::vector<std::size_t>> rows) {
  PersistenceMatrix m;
  m.degree = 2;
  m.entries = std::move(rows);
  return m;
}

const std::vector<std::vector<std::size_t>> dihedral64_degree2{
    {3, 2, 2, 2, 2}, {0, 3, 2, 2, 2}, {0, 0, 3, 2, 2}, {0, 0, 0, 3, 2}, {0, 0, 0, 0, 3}};

TEST(PersistenceMatrix, DihedralOfOrder64) {
  const auto m = persistence_matrix(test::named("64.dihedral"), Functor::L, 2);
  EXPECT_EQ(m.entries, dihedral64_degree2);
  EXPECT_EQ(m.term_orders, (std::vector<std::size_t>{64, 32, 16, 8, 4}));
}

TEST(PersistenceMatrix, AbelianLowerCentralIsOneByOne) {
  const auto g = test::named("16.abelian_2x8");
  for (int n = 1; n <= 3; ++n) {
    const auto m = persistence_matrix(g, Functor::L, n);
    ASSERT_EQ(m.size(), 1u);
    EXPECT_EQ(m.at(1, 1), homology_dims(g, 2, n)[static_cast<std::size_t>(n)]);
  }
}

TEST(Barcode, SmallExamples) {
  const auto b = barcode(make({{3, 2}, {0, 3}}));
  EXPECT_EQ(b.bars, (std::vector<Bar>{{1, 1, 1}, {1, 2, 2}, {2, 2, 1}}));
  EXPECT_EQ(barcode(make({{4}})).bars, (std::vector<Bar>{{1, 1, 4}}));
  EXPECT_THROW(barcode(make({{1, 2}, {0, 1}})), DataError);
}

TEST(Barcode, DihedralOfOrder64) {
  const auto b = barcode(make(dihedral64_degree2));
  EXPECT_EQ(b.bars, (std::vector<Bar>{{1, 1, 1}, {1, 5, 2}, {2, 2, 1}, {3, 3, 1}, {4, 4, 1}, {5, 5, 1}}));
  EXPECT_EQ(matrix_from_barcode(b).entries, dihedral64_degree2);
}

TEST(Barcode, InverseExamples) {
  Barcode b{2, 2, {{1, 2, 2}, {1, 1, 1}, {2, 2, 1}}};
  EXPECT_EQ(matrix_from_barcode(b).entries, (std::vector<std::vector<std::size_t>>{{3, 2}, {0, 3}}));
  EXPECT_EQ(matrix_from_barcode(Barcode{1, 3, {}}).entries,
            (std::vector<std::vector<std::size_t>>(3, std::vector<std::size_t>(3, 0))));
}

TEST(VerifyMatrix, DetectsViolations) {
  EXPECT_FALSE(verify_matrix(make(dihedral64_degree2)));
  EXPECT_TRUE(verify_matrix(make({{1, 2}, {0, 3}})));
  EXPECT_TRUE(verify_matrix(make({{1, 0}, {1, 1}})));
}

TEST(PersistenceSequence, Examples) {
  const auto d = persistence_sequence(test::named("64.dihedral"), Functor::L, 3);
  ASSERT_EQ(d.matrices.size(), 3u);
  EXPECT_EQ(d.matrices[1].entries, dihedral64_degree2);
  for (unsigned p : {2u, 3u, 5u}) {
    const auto c = persistence_sequence(test::cyclic(p), Functor::L, 5);
    for (const auto& m : c.matrices) EXPECT_EQ(m.entries, (std::vector<std::vector<std::size_t>>{{1}}));
  }
  const auto k = persistence_sequence(test::named("4.abelian_2x2"), Functor::L, 2);
  EXPECT_EQ(k.matrices[0].entries, (std::vector<std::vector<std::size_t>>{{2}}));
  EXPECT_EQ(k.matrices[1].entries, (std::vector<std::vector<std::size_t>>{{3}}));
}

TEST(PersistenceSequence, PartialOnBudget) {
  const auto saved = budget();
  Budget tiny = saved;
  tiny.fp_entries = 30'000;
  set_budget(tiny);
  const auto g = test::named("64.dihedral");
  EXPECT_THROW(persistence_sequence(g, Functor::L, 3), BudgetExceeded);
  const auto s = persistence_sequence(g, Functor::L, 3, true);
  set_budget(saved);
  EXPECT_TRUE(s.partial);
  EXPECT_LT(s.matrices.size(), 3u);
  EXPECT_FALSE(s.note.empty());
}

// Matrices for all functors in degrees 1..3 on the catalog up to order 32.
const std::vector<std::pair<std::string, PersistenceSequence>>& computed() {
  static const auto all = [] {
    std::vector<std::pair<std::string, PersistenceSequence>> out;
    for (const auto& e : test::bundled_groups(2, 32))
      for (auto f : all_functors) out.emplace_back(e.id, persistence_sequence(e.group, f, e.group->order() <= 16 ? 3 : 2));
    return out;
  }();
  return all;
}

TEST(PersistenceProperty, MonotoneAndBarcodeRoundTrip) {
  for (const auto& [id, seq] : computed())
    for (const auto& m : seq.matrices) {
      EXPECT_FALSE(verify_matrix(m)) << id;
      const auto b = barcode(m);
      EXPECT_EQ(matrix_from_barcode(b).entries, m.entries) << id;
      EXPECT_EQ(barcode(matrix_from_barcode(b)), b) << id;
    }
}

TEST(PersistenceProperty, DegreeOneDiagonalIsTheGeneratorCount) {
  for (const auto& [id, seq] : computed())
    for (std::size_t t = 0; t < seq.chain.size(); ++t)
      EXPECT_EQ(seq.matrices[0].entries[t][t], test::brute_rank(*seq.chain.groups[t])) << id;
}

TEST(PersistenceProperty, CentralColumnCountIsTheClass) {
  for (const auto& e : test::bundled_groups(2, 256)) {
    const unsigned c = nilpotency_class(*e.group);
    EXPECT_EQ(persistence_matrix(e.group, Functor::L, 1).size(), c) << e.id;
    EXPECT_EQ(persistence_matrix(e.group, Functor::Z, 1).size(), c) << e.id;
  }
}

TEST(RecoverOrder, Examples) {
  for (const char* id : {"4.abelian_4", "8.abelian_2x2x2", "8.3"}) {
    const auto g = test::named(id);
    const auto s = persistence_sequence(g, Functor::Zp, 2);
    EXPECT_EQ(recover_order(s.matrices[0], s.matrices[1]), g->order()) << id;
  }
}

TEST(RecoverOrder, RejectsOtherFunctorsAndMixedInputs) {
  const auto g = test::named("8.3");
  const auto l = persistence_sequence(g, Functor::L, 2);
  EXPECT_THROW(recover_order(l.matrices[0], l.matrices[1]), DataError);
  const auto zp = persistence_sequence(g, Functor::Zp, 2);
  EXPECT_THROW(recover_order(zp.matrices[1], zp.matrices[0]), DataError);
}

TEST(RecoverOrderProperty, EveryCatalogGroupUnderBothPCentralSeries) {
  for (const auto& e : test::bundled_groups(2, 128))
    for (auto f : {Functor::Zp, Functor::Lp}) {
      const auto s = persistence_sequence(e.group, f, 2);
      EXPECT_EQ(recover_order(s.matrices[0], s.matrices[1]), e.group->order()) << e.id << ' ' << to_string(f);
    }
}

std::vector<std::uint64_t> recovered(const GroupPtr& g) {
  const auto s = persistence_sequence(g, Functor::Zp, 2);
  return recover_abelian_invariants(s.matrices[0], s.matrices[1]);
}

TEST(RecoverAbelianInvariants, Examples) {
  EXPECT_EQ(recovered(test::named("512.abelian_2x4x4x16")), (std::vector<std::uint64_t>{2, 4, 4, 16}));
  EXPECT_EQ(recovered(test::named("16.abelian_2x2x2x2")), (std::vector<std::uint64_t>{2, 2, 2, 2}));
  EXPECT_EQ(recovered(test::named("27.abelian_3x3x3")), (std::vector<std::uint64_t>{3, 3, 3}));
  EXPECT_EQ(recovered(test::named("9.abelian_9")), (std::vector<std::uint64_t>{9}));
}

TEST(RecoverAbelianInvariantsProperty, AllBundledAbelianGroups) {
  for (const auto& e : test::bundled("abelian")) {
    if (e.group->order() > 81) continue;
    EXPECT_EQ(recovered(e.group), abelian_invariants(*e.group)) << e.id;
  }
}

// The degree-1 Zp diagonal alone: p_{t,t} counts the invariants of size at least p^t.
TEST(RecoverAbelianInvariantsProperty, DegreeOneDiagonalAlreadyDeterminesTheInvariants) {
  std::map<std::size_t, std::map<std::string, std::string>> by_order;
  for (const auto& e : test::bundled("abelian")) {
    if (e.group->order() > 81) continue;
    const auto p1 = persistence_matrix(e.group, Functor::Zp, 1);
    const auto inv = abelian_invariants(*e.group);
    std::uint64_t pt = 1;
    for (std::size_t t = 1; t <= p1.size(); ++t) {
      pt *= e.group->prime();
      const auto at_least = static_cast<std::size_t>(std::count_if(inv.begin(), inv.end(), [&](auto x) { return x >= pt; }));
      EXPECT_EQ(p1.at(t, t), at_least) << e.id << " t=" << t;
    }
    const auto key = serialize(p1);
    const auto [it, fresh] = by_order[e.group->order()].emplace(key, e.id);
    EXPECT_TRUE(fresh) << e.id << " shares its degree 1 matrix with " << it->second;
  }
}

TEST(LowerCentralStructure, DihedralOfOrder64) {
  const auto g = test::named("64.dihedral");
  const auto r = check_lower_central_structure(g);
  EXPECT_TRUE(r.passed()) << (r.failures.empty() ? "" : r.failures.front());
  const auto b1 = barcode(persistence_matrix(g, Functor::L, 1));
  EXPECT_EQ(b1.bars, (std::vector<Bar>{{1, 5, 2}}));
}

TEST(LowerCentralStructure, DihedralOfOrder8RightmostColumn) {
  const auto g = test::named("8.3");
  const auto b2 = barcode(persistence_matrix(g, Functor::L, 2));
  // dim L_2/L_3 (x) F_2 = 1 isolated vertex in column 2
  std::size_t isolated = 0;
  for (const auto& bar : b2.bars)
    if (bar.birth == 2 && bar.death == 2) isolated += bar.multiplicity;
  EXPECT_EQ(isolated, 1u);
  EXPECT_TRUE(check_lower_central_structure(g).passed());
}

TEST(LowerCentralStructure, AbelianIsVacuous) {
  EXPECT_TRUE(check_lower_central_structure(test::named("16.abelian_4x4")).passed());
}

TEST(LowerCentralStructureProperty, AllNonabelianGroupsUpToOrder32) {
  for (const auto& e : test::bundled_groups(2, 32)) {
    if (e.group->is_abelian()) continue;
    const auto r = check_lower_central_structure(e.group);
    EXPECT_TRUE(r.passed()) << e.id << ": " << (r.failures.empty() ? "" : r.failures.front());
  }
}

TEST(IntegralPersistence, CyclicOfOrderFour) {
  const auto m = integral_persistence_matrix(test::cyclic(4), Functor::Zp, 1);
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m.entries[0][1], (IntegralTriple{{4}, {2}, {}}));
}

TEST(IntegralPersistence, DiagonalEntriesHaveEmptyCokernel) {
  for (const char* id : {"8.3", "8.4", "9.abelian_3x3"}) {
    const auto seq = integral_persistence_sequence(test::named(id), Functor::Zp, 3);
    for (const auto& m : seq)
      for (std::size_t i = 0; i < m.size(); ++i) {
        EXPECT_EQ(m.entries[i][i].source, m.entries[i][i].target) << id;
        EXPECT_TRUE(m.entries[i][i].cokernel.empty()) << id;
      }
  }
}

}  // namespace
}  // namespace pgph
