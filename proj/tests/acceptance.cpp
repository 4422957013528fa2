// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "pgph/bar_complex.hpp"
#include "pgph/catalog.hpp"
#include "pgph/classify.hpp"
#include "pgph/coclass.hpp"
#include "pgph/persistence.hpp"
#include "support.hpp"

using namespace pgph;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, const std::function<std::string()>& body) {
  const auto start = std::chrono::steady_clock::now();
  std::string why;
  try {
    why = body();
  } catch (const std::exception& e) {
    why = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream t;
  t.precision(1);
  t << std::fixed << secs << "s";
  if (why.empty()) {
    std::cout << "PASS " << number << " " << title << " (" << t.str() << ")" << std::endl;
  } else {
    std::cout << "FAIL " << number << " " << title << " (" << t.str() << "): " << why << std::endl;
    ++failures;
  }
}

std::vector<GroupPtr> catalog_groups(const std::string& alias) {
  std::vector<GroupPtr> out;
  for (const auto& e : load_catalog(resolve_catalog_dir(alias))) out.push_back(e.group);
  return out;
}

struct Row {
  Functor functor;
  std::size_t classes, max;
  int t;
  std::size_t single_classes, single_max;
  int single_degree;
};

std::string check_rows(const std::string& alias, int max_degree, const std::vector<Row>& rows, bool integral = false) {
  const auto groups = catalog_groups(alias);
  std::string why;
  for (const auto& row : rows) {
    const auto r = classify(groups, row.functor, max_degree, integral);
    const auto& s = r.single[static_cast<std::size_t>(r.single_degree) - 1];
    std::ostringstream got, want;
    got << "(" << r.stats.classes << "," << r.stats.max_class_size << ") t=" << r.stable_t << " (" << s.classes << ","
        << s.max_class_size << "," << r.single_degree << ")";
    want << "(" << row.classes << "," << row.max << ") t=" << row.t << " (" << row.single_classes << ","
         << row.single_max << "," << row.single_degree << ")";
    const bool ok = r.stats.classes == row.classes && r.stats.max_class_size == row.max && !r.partial &&
                    (row.t == 0 || r.stable_t == row.t) &&
                    (row.single_degree == 0 || (s.classes == row.single_classes && s.max_class_size == row.single_max &&
                                                r.single_degree == row.single_degree));
    if (!ok)
      why += std::string(why.empty() ? "" : "; ") + std::string(to_string(row.functor)) + (integral ? "-integral" : "") +
             " got " + got.str() + " want " + want.str();
  }
  return why;
}

}  // namespace

int main() {
  criterion(1, "lower central degree 2 matrix of the dihedral group of order 64", [] {
    const auto m = persistence_matrix(test::named("64.dihedral"), Functor::L, 2);
    const std::vector<std::vector<std::size_t>> want{
        {3, 2, 2, 2, 2}, {0, 3, 2, 2, 2}, {0, 0, 3, 2, 2}, {0, 0, 0, 3, 2}, {0, 0, 0, 0, 3}};
    return m.entries == want ? std::string() : std::string("matrix differs");
  });

  criterion(2, "classification of the groups of order 8", [] {
    return check_rows("bundled8", 3,
                      {{Functor::Z, 5, 1, 3, 5, 1, 3},
                       {Functor::Zp, 5, 1, 3, 5, 1, 3},
                       {Functor::L, 5, 1, 3, 5, 1, 3},
                       {Functor::Lp, 4, 2, 3, 4, 2, 3},
                       {Functor::D, 5, 1, 3, 5, 1, 3}});
  });

  criterion(3, "classification of the groups of order 16", [] {
    return check_rows("bundled16", 5,
                      {{Functor::Z, 13, 2, 4, 13, 2, 4},
                       {Functor::Zp, 13, 2, 4, 13, 2, 4},
                       {Functor::L, 12, 2, 5, 12, 2, 4},
                       {Functor::Lp, 9, 2, 4, 9, 2, 4},
                       {Functor::D, 10, 2, 4, 10, 2, 4}});
  });

  criterion(4, "classification of the groups of order 27", [] {
    std::vector<Row> rows;
    for (auto f : all_functors) rows.push_back({f, 5, 1, 3, 5, 1, 3});
    return check_rows("bundled27", 3, rows);
  });

  criterion(5, "integral upper p-central classification of the groups of order 8", [] {
    return check_rows("bundled8", 3, {{Functor::Zp, 5, 1, 0, 0, 0, 0}}, true);
  });

  criterion(6, "structural properties on the bundled catalog", [] {
    std::string why;
    auto fail = [&](const std::string& s) {
      if (why.empty()) why = s;
    };
    for (const auto& e : test::bundled_groups(2, 256)) {
      for (auto f : all_functors) {
        const auto seq = persistence_sequence(e.group, f, 2);
        for (std::size_t t = 0; t < seq.chain.size(); ++t)
          if (seq.matrices[0].entries[t][t] != min_generators(*seq.chain.groups[t]))
            fail(e.id + ": degree 1 diagonal differs from the generator count");
        if ((f == Functor::L || f == Functor::Z) && seq.chain.size() != nilpotency_class(*e.group))
          fail(e.id + ": column count differs from the class");
        if ((f == Functor::Zp || f == Functor::Lp) && recover_order(seq.matrices[0], seq.matrices[1]) != e.group->order())
          fail(e.id + ": recovered order is wrong");
        if (f == Functor::Zp && e.group->is_abelian() && e.group->order() <= 81 &&
            recover_abelian_invariants(seq.matrices[0], seq.matrices[1]) != abelian_invariants(*e.group))
          fail(e.id + ": recovered abelian invariants are wrong");
      }
      if (e.group->order() <= 32 && !e.group->is_abelian()) {
        const auto r = check_lower_central_structure(e.group);
        if (!r.passed()) fail(e.id + ": " + r.failures.front());
      }
    }
    return why;
  });

  criterion(7, "minimal resolution agrees with the bar complex", [] {
    for (const auto& e : test::bundled_groups(2, 16)) {
      const int top = e.group->order() <= 8 ? 4 : 3;
      const auto dims = homology_dims(e.group, e.group->prime(), top);
      for (int n = 1; n <= top; ++n)
        if (dims[static_cast<std::size_t>(n)] != bar_homology_fp(e.group, e.group->prime(), n))
          return e.id + ": degree " + std::to_string(n);
    }
    return std::string();
  });

  criterion(8, "coclass tree persistence and second homology", [] {
    for (int n = 1; n <= 4; ++n) {
      const auto r = tree_persistence(n, 3, 6);
      if (!r.stabilized_dim || *r.stabilized_dim != 2)
        return "degree " + std::to_string(n) + " does not stabilize at 2";
    }
    const auto h = check_second_homology(FamilyKind::dihedral, 3, 6);
    for (const auto& e : h.entries)
      if (e.h2 != 3 || !e.consistent) return "dihedral level " + std::to_string(e.level) + " has dim H_2 = " + std::to_string(e.h2);
    return std::string();
  });

  criterion(10, "barcode round trips and monotonicity", [] {
    std::size_t checked = 0;
    for (const auto& e : test::bundled_groups(2, 64))
      for (auto f : all_functors)
        for (const auto& m : persistence_sequence(e.group, f, e.group->order() <= 16 ? 4 : 2).matrices) {
          if (auto why = verify_matrix(m)) return e.id + ": " + *why;
          const auto b = barcode(m);
          if (matrix_from_barcode(b).entries != m.entries || barcode(matrix_from_barcode(b)) != b)
            return e.id + ": round trip";
          ++checked;
        }
    std::cout << "  " << checked << " matrices checked" << std::endl;
    return std::string();
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
