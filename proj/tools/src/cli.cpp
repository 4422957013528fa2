#include "cli.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "pgph/bar_complex.hpp"
#include "pgph/catalog.hpp"
#include "pgph/classify.hpp"
#include "pgph/coclass.hpp"
#include "pgph/error.hpp"
#include "pgph/persistence.hpp"
#include "pgph/render.hpp"
#include "pgph/resolution.hpp"

namespace pgph::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw DataError(path + ": cannot write");
  f << text;
}

Functor functor_of(const std::string& s) {
  if (auto f = parse_functor(s)) return *f;
  throw UsageError("unknown series '" + s + "' (expected L, Lp, D, Z or Zp)");
}

std::vector<std::string> series_names() {
  std::vector<std::string> v;
  for (auto f : all_functors) v.emplace_back(to_string(f));
  return v;
}

std::pair<unsigned, unsigned> parse_levels(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const auto l = static_cast<unsigned>(std::stoul(s));
      return {l, l};
    }
    return {static_cast<unsigned>(std::stoul(s.substr(0, dots))), static_cast<unsigned>(std::stoul(s.substr(dots + 2)))};
  } catch (const std::exception&) {
    throw UsageError("--levels expects a..b, got '" + s + "'");
  }
}

// selftest: named checks over the bundled catalog
struct Suite {
  std::ostream& out;
  int failures = 0;

  void check(const std::string& name, const std::function<std::string()>& body) {
    std::string why;
    try {
      why = body();
    } catch (const std::exception& e) {
      why = e.what();
    }
    if (why.empty()) {
      out << "PASS " << name << '\n';
    } else {
      out << "FAIL " << name << ": " << why << '\n';
      ++failures;
    }
  }
};

int selftest(std::ostream& out) {
  Suite s{out};
  std::vector<CatalogEntry> all;
  for (const char* dir : {"small", "order8", "order16", "order27", "abelian", "families"})
    s.check(std::string("catalog ") + dir, [&] {
      auto entries = load_catalog(bundled_root() / dir);
      for (auto& e : entries) {
        const auto again = build_group(json(e.file).get<GroupFile>());
        if (!(*again == *e.group)) return e.id + " does not round-trip";
        all.push_back(std::move(e));
      }
      return std::string();
    });

  s.check("resolutions", [&] {
    for (const auto& e : all) {
      if (e.group->order() > 16 || e.group->order() < 2) continue;
      const auto r = minimal_resolution(e.group, e.group->prime(), e.group->order() <= 8 ? 3 : 2);
      if (auto why = verify_resolution(r)) return e.id + ": " + *why;
    }
    return std::string();
  });

  s.check("persistence matrices", [&] {
    for (const auto& e : all) {
      if (e.group->order() > 16 || e.group->order() < 2) continue;
      for (auto f : all_functors)
        for (const auto& m : persistence_sequence(e.group, f, 2).matrices) {
          if (auto why = verify_matrix(m)) return e.id + ": " + *why;
          if (matrix_from_barcode(barcode(m)).entries != m.entries) return e.id + ": barcode round trip";
          if (m.at(1, 1) != 0 && m.degree == 1 && m.at(1, 1) != min_generators(*e.group))
            return e.id + ": degree 1 diagonal is not d(G)";
        }
    }
    return std::string();
  });

  s.check("lower central structure", [&] {
    for (const auto& e : all) {
      if (e.group->order() > 32 || e.group->is_abelian()) continue;
      const auto r = check_lower_central_structure(e.group);
      if (!r.passed()) return e.id + ": " + r.failures.front();
    }
    return std::string();
  });

  s.check("order and abelian invariants", [&] {
    for (const auto& e : all) {
      if (e.group->order() > 32 || e.group->order() < 2) continue;
      const auto seq = persistence_sequence(e.group, Functor::Zp, 2);
      if (recover_order(seq.matrices[0], seq.matrices[1]) != e.group->order()) return e.id + ": order";
      if (e.group->is_abelian() &&
          recover_abelian_invariants(seq.matrices[0], seq.matrices[1]) != abelian_invariants(*e.group))
        return e.id + ": abelian invariants";
    }
    return std::string();
  });

  s.check("order 8 classification", [&] {
    std::vector<GroupPtr> groups;
    for (const auto& e : load_catalog(resolve_catalog_dir("bundled8"))) groups.push_back(e.group);
    const std::vector<std::tuple<Functor, std::size_t, std::size_t, int>> rows{
        {Functor::Z, 5, 1, 3}, {Functor::Zp, 5, 1, 3}, {Functor::L, 5, 1, 3}, {Functor::Lp, 4, 2, 3}, {Functor::D, 5, 1, 3}};
    for (const auto& [f, classes, max, t] : rows) {
      const auto r = classify(groups, f, 3);
      if (r.stats.classes != classes || r.stats.max_class_size != max || r.stable_t != t)
        return std::string(to_string(f)) + ": got (" + std::to_string(r.stats.classes) + "," +
               std::to_string(r.stats.max_class_size) + ")," + std::to_string(r.stable_t);
    }
    return std::string();
  });

  out << (s.failures == 0 ? "selftest passed\n" : "selftest failed\n");
  return s.failures == 0 ? ok : failed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Persistent homology of finite p-groups", "pgph"};
  app.require_subcommand(1);

  std::string group, series, json_out, svg_out, catalog, family, levels, csv_out, format = "json";
  int degree = 0, max_degree = 0;
  bool txt = false, integral = false, oracle = false;
  unsigned threads = 0;
  const auto names = series_names();

  auto* matrix = app.add_subcommand("matrix", "Persistence matrix of one group");
  matrix->add_option("--group", group, "Group file or catalog:ID")->required();
  matrix->add_option("--series", series, "L, Lp, D, Z or Zp")->required()->check(CLI::IsMember(names));
  matrix->add_option("--degree", degree, "Homology degree")->required()->check(CLI::PositiveNumber);
  matrix->add_option("--json", json_out, "Write the JSON here instead of stdout");

  auto* bars = app.add_subcommand("barcode", "Bar code of one group");
  bars->add_option("--group", group, "Group file or catalog:ID")->required();
  bars->add_option("--series", series, "L, Lp, D, Z or Zp")->required()->check(CLI::IsMember(names));
  bars->add_option("--degree", degree, "Homology degree")->required()->check(CLI::PositiveNumber);
  auto* svg_opt = bars->add_option("--svg", svg_out, "Write an SVG rendering");
  bars->add_flag("--txt", txt, "Print the bars as text")->excludes(svg_opt);

  auto* cls = app.add_subcommand("classify", "Partition a catalog by persistence matrices");
  cls->add_option("--catalog", catalog, "Directory, bundled8|bundled16|bundled27 or a bundled subdirectory")
      ->required();
  cls->add_option("--series", series, "L, Lp, D, Z or Zp")->required()->check(CLI::IsMember(names));
  cls->add_option("--max-degree", max_degree, "Degrees 1..t")->required()->check(CLI::PositiveNumber);
  cls->add_flag("--integral", integral, "Use integral persistence matrices");
  cls->add_option("--threads", threads, "Worker threads (0 = all cores)");
  cls->add_option("--format", format, "Stdout format")->check(CLI::IsMember({"json", "csv"}));
  cls->add_option("--json", json_out, "Also write the JSON report here");
  cls->add_option("--csv", csv_out, "Also write the CSV summary here");

  auto* integ = app.add_subcommand("integral", "Integral persistence matrices");
  integ->add_option("--group", group, "Group file or catalog:ID")->required();
  integ->add_option("--series", series, "L, Lp, D, Z or Zp")->required()->check(CLI::IsMember(names));
  integ->add_option("--max-degree", max_degree, "Degrees 1..t")->required()->check(CLI::PositiveNumber);
  integ->add_option("--json", json_out, "Write the JSON here instead of stdout");

  auto* coc = app.add_subcommand("coclass", "Persistence along the coclass 1 tree of 2-groups");
  coc->add_option("--family", family, "dihedral, quaternion or semidihedral")
      ->required()
      ->check(CLI::IsMember({"dihedral", "quaternion", "semidihedral"}));
  coc->add_option("--levels", levels, "Level window a..b (order 2^a to 2^b)")->required();
  coc->add_option("--degree", degree, "Homology degree")->required()->check(CLI::PositiveNumber);
  coc->add_option("--json", json_out, "Write the JSON here instead of stdout");

  auto* hom = app.add_subcommand("homology", "Mod-p homology dimensions");
  hom->add_option("--group", group, "Group file or catalog:ID")->required();
  hom->add_option("--max-degree", max_degree, "Degrees 0..n")->required()->check(CLI::NonNegativeNumber);
  hom->add_flag("--oracle", oracle, "Cross-check against the bar resolution");

  auto* self = app.add_subcommand("selftest", "Invariant checks on the bundled catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  auto emit = [&](const json& j, const std::string& path) {
    if (path.empty()) out << j.dump(2) << '\n';
    else write_file(path, j.dump(2) + "\n");
  };

  try {
    if (matrix->parsed()) {
      emit(to_json(persistence_matrix(load_group(group).group, functor_of(series), degree)), json_out);
    } else if (bars->parsed()) {
      const auto b = barcode(persistence_matrix(load_group(group).group, functor_of(series), degree));
      if (!svg_out.empty()) write_file(svg_out, render_svg(b));
      else out << render_text(b);
    } else if (cls->parsed()) {
      std::vector<GroupPtr> groups;
      for (const auto& e : load_catalog(resolve_catalog_dir(catalog))) groups.push_back(e.group);
      const auto report = classify(groups, functor_of(series), max_degree, integral, threads);
      const auto j = to_json(report);
      const auto csv = csv_summary({report});
      if (!json_out.empty()) write_file(json_out, j.dump(2) + "\n");
      if (!csv_out.empty()) write_file(csv_out, csv);
      if (format == "csv") out << csv;
      else out << j.dump(2) << '\n';
    } else if (integ->parsed()) {
      json arr = json::array();
      for (const auto& m : integral_persistence_sequence(load_group(group).group, functor_of(series), max_degree))
        arr.push_back(to_json(m));
      emit(arr, json_out);
    } else if (coc->parsed()) {
      const auto [a, b] = parse_levels(levels);
      if (a < 3 || b < a) throw UsageError("--levels needs 3 <= a <= b");
      const auto kind = *parse_family(family);
      auto j = to_json(tree_persistence(degree, a, b));
      j["family"] = family;
      if (degree == 2 && b > a) j["secondHomology"] = to_json(check_second_homology(kind, a, b, a, b));
      emit(j, json_out);
    } else if (hom->parsed()) {
      const auto e = load_group(group);
      const unsigned p = e.group->prime();
      if (p == 0) throw DataError("the trivial group has no prime");
      const auto dims = homology_dims(e.group, p, max_degree);
      json j{{"group", e.group->name()}, {"prime", p}, {"dims", dims}};
      bool agree = true;
      if (oracle) {
        std::vector<std::size_t> bar{1};
        for (int n = 1; n <= max_degree; ++n) bar.push_back(bar_homology_fp(e.group, p, n));
        agree = bar == dims;
        j["oracle"] = bar;
        j["agree"] = agree;
      }
      out << j.dump(2) << '\n';
      if (!agree) return failed;
    } else if (self->parsed()) {
      return selftest(out);
    }
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << '\n';
    return usage;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return budget;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << '\n';
    return data;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << '\n';
    return failed;
  }
  return ok;
}

}  // namespace pgph::cli
