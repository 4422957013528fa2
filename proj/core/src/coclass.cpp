#include "pgph/coclass.hpp"

#include <algorithm>
#include <future>

#include "pgph/error.hpp"
#include "pgph/linalg.hpp"
#include "pgph/resolution.hpp"
#include "pgph/series.hpp"

namespace pgph {

namespace {

// <x, y | x^m, y^2 = x^square, x^y = x^s> on pairs (a, b), index b*m + a,
// as right multiplication by x and by y.
std::vector<Permutation> metacyclic_regular(std::uint32_t m, std::uint32_t s, std::uint32_t square) {
  auto mul = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) {
    const std::uint64_t e = a + std::uint64_t{c} * (b ? s : 1) + (b && d ? square : 0);
    return static_cast<std::uint32_t>((b ^ d) * m + e % m);
  };
  Permutation x(2 * m), y(2 * m);
  for (std::uint32_t b = 0; b < 2; ++b)
    for (std::uint32_t a = 0; a < m; ++a) {
      x[b * m + a] = mul(a, b, 1, 0);
      y[b * m + a] = mul(a, b, 0, 1);
    }
  return {x, y};
}

std::vector<Permutation> polygon(std::uint32_t n) {
  Permutation rot(n), ref(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    ref[i] = (n - i) % n;
  }
  return {rot, ref};
}

}  // namespace

std::string_view to_string(FamilyKind k) noexcept {
  switch (k) {
    case FamilyKind::dihedral: return "dihedral";
    case FamilyKind::quaternion: return "quaternion";
    case FamilyKind::semidihedral: return "semidihedral";
  }
  return "?";
}

std::optional<FamilyKind> parse_family(std::string_view s) noexcept {
  for (auto k : {FamilyKind::dihedral, FamilyKind::quaternion, FamilyKind::semidihedral})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

GroupPtr family(FamilyKind kind, unsigned l) {
  if (l < 3 || (kind == FamilyKind::semidihedral && l < 4))
    throw DataError(std::string(to_string(kind)) + " family has no member of order 2^" + std::to_string(l));
  if (l > 30) throw BudgetExceeded("family level " + std::to_string(l) + " is beyond the order cap", -1);
  const std::uint32_t m = 1u << (l - 1);
  std::vector<Permutation> gens;
  switch (kind) {
    case FamilyKind::dihedral: gens = polygon(m); break;
    case FamilyKind::quaternion: gens = metacyclic_regular(m, m - 1, m / 2); break;
    case FamilyKind::semidihedral: gens = metacyclic_regular(m, m / 2 - 1, 0); break;
  }
  auto g = group_from_permutations(gens, std::to_string(2 * m) + "." + std::string(to_string(kind)));
  if (g->order() != 2 * m || nilpotency_class(*g) != l - 1)
    throw InvariantViolation("family construction of " + g->name() + " is wrong");
  return g;
}

GroupHom tree_link(FamilyKind kind, unsigned l) {
  const GroupPtr src = family(kind, l + 1);
  const GroupPtr dst = family(FamilyKind::dihedral, l);
  const NormalSeries s = series(*src, Functor::L);
  const Subgroup& last = s.terms[s.terms.size() - 2];
  if (last.size() != 2) throw InvariantViolation("last lower central term of " + src->name() + " is not of order 2");
  const Quotient q = quotient(src, last);
  const auto& qg = *q.group;

  // an isomorphism dst -> G/N by a search over generator images of matching orders
  const auto gens = dst->generators();
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t x = 0; x < qg.order(); ++x)
      if (qg.element_order(static_cast<Elem>(x)) == dst->element_order(gens[i]))
        candidates[i].push_back(static_cast<Elem>(x));
  if (gens.size() != 2) throw InvariantViolation("dihedral group without two generators");
  for (Elem a : candidates[0])
    for (Elem b : candidates[1]) {
      const std::vector<Elem> images{a, b};
      auto iso = hom_from_generator_images(dst, images, q.group);
      if (!iso || !iso->surjective()) continue;
      std::vector<Elem> back(qg.order());
      for (std::size_t x = 0; x < dst->order(); ++x) back[(*iso)(static_cast<Elem>(x))] = static_cast<Elem>(x);
      std::vector<Elem> map(src->order());
      for (std::size_t x = 0; x < src->order(); ++x) map[x] = back[q.projection(static_cast<Elem>(x))];
      return GroupHom(src, dst, std::move(map));
    }
  throw InvariantViolation("no tree edge from " + src->name() + " to " + dst->name());
}

TreePersistenceReport tree_persistence(int n, unsigned l_min, unsigned l_max) {
  if (n < 1 || l_min < 3 || l_max < l_min) throw DataError("tree_persistence: empty or invalid window");
  TreePersistenceReport r;
  r.degree = n;
  std::vector<GroupPtr> groups;
  for (unsigned l = l_min; l <= l_max; ++l) {
    r.levels.push_back(l);
    groups.push_back(family(FamilyKind::dihedral, l));
  }
  std::vector<std::future<MinimalResolution>> pending;
  for (std::size_t i = 0; i < groups.size(); ++i)
    pending.push_back(std::async(std::launch::async, [&, i] {
      return minimal_resolution(groups[i], 2, i + 1 == groups.size() ? n - 1 : n);
    }));
  std::vector<MinimalResolution> res;
  for (auto& f : pending) res.push_back(f.get());
  for (const auto& x : res) r.homology_dims.push_back(x.rank(n));

  // maps[i]: H_n(G_{l+1}) -> H_n(G_l) with l = l_min + i
  std::vector<FpMatrix> maps;
  for (std::size_t i = 0; i + 1 < groups.size(); ++i) {
    const GroupHom link = tree_link(FamilyKind::dihedral, r.levels[i]);
    // tree_link rebuilds the groups; transport the map onto the cached ones
    const GroupHom edge(groups[i + 1], groups[i], std::vector<Elem>(link.map().begin(), link.map().end()));
    maps.push_back(induced_map(edge, n, res[i + 1], res[i]).matrix);
    r.image_dims.push_back(rank(maps.back()));
  }
  for (std::size_t i = 0; i < maps.size(); ++i) {
    FpMatrix prod = maps.back();
    for (std::size_t k = maps.size() - 1; k-- > i;) prod = prod * maps[k];
    r.intersection_dims.push_back(rank(prod));
  }
  for (std::size_t i = 0; i + 1 < r.image_dims.size(); ++i)
    if (std::all_of(r.image_dims.begin() + static_cast<std::ptrdiff_t>(i), r.image_dims.end(),
                    [&](std::size_t d) { return d == r.image_dims[i]; })) {
      r.stabilization_level = r.levels[i];
      r.stabilized_dim = r.image_dims[i];
      break;
    }
  return r;
}

bool SecondHomologyReport::consistent() const noexcept {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.consistent; });
}

SecondHomologyReport check_second_homology(FamilyKind kind, unsigned l_min, unsigned l_max, unsigned window_min,
                                           unsigned window_max) {
  SecondHomologyReport r;
  r.family = kind;
  if (l_max < l_min) return r;
  const auto tree = tree_persistence(2, window_min, window_max);
  r.estimate = tree.stabilized_dim;
  r.stabilization_level = tree.stabilization_level;
  for (unsigned l = std::max(l_min, kind == FamilyKind::semidihedral ? 4u : 3u); l <= l_max; ++l) {
    SecondHomologyEntry e;
    const GroupPtr g = family(kind, l);
    e.level = l;
    e.order = g->order();
    e.h2 = homology_dims(g, 2, 2)[2];
    e.leaf = kind != FamilyKind::dihedral;
    if (!r.estimate) {
      e.consistent = false;
    } else if (e.leaf) {
      e.consistent = e.h2 >= *r.estimate;
    } else {
      e.relator_bound = *r.estimate + 1;
      if (l >= *r.stabilization_level) e.consistent = e.h2 == *r.estimate + 1;
    }
    r.entries.push_back(e);
  }
  return r;
}

}  // namespace pgph
