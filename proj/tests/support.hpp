#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "pgph/catalog.hpp"
#include "pgph/series.hpp"

namespace pgph::test {

/// Bundled catalog subdirectory, loaded once per process.
inline const std::vector<CatalogEntry>& bundled(const std::string& dir) {
  static std::map<std::string, std::vector<CatalogEntry>> cache;
  auto it = cache.find(dir);
  if (it == cache.end()) it = cache.emplace(dir, load_catalog(bundled_root() / dir)).first;
  return it->second;
}

/// Every bundled group of order in [lo, hi], deduplicated by id.
inline std::vector<CatalogEntry> bundled_groups(std::size_t lo, std::size_t hi) {
  std::vector<CatalogEntry> out;
  std::set<std::string> ids;
  for (const char* dir : {"small", "order8", "order16", "order27", "abelian", "families"})
    for (const auto& e : bundled(dir))
      if (e.group->order() >= lo && e.group->order() <= hi && ids.insert(e.id).second) out.push_back(e);
  return out;
}

inline GroupPtr named(const std::string& selector) { return load_group("catalog:" + selector).group; }

inline GroupPtr cyclic(std::uint32_t n) {
  Permutation c(n);
  for (std::uint32_t i = 0; i < n; ++i) c[i] = (i + 1) % n;
  return group_from_permutations(std::vector<Permutation>{c}, "C" + std::to_string(n));
}

// Brute-force oracles on element sets.

using Set = std::set<Elem>;

inline Set closure(const FiniteGroup& g, const Set& gens) {
  Set s{0};
  std::vector<Elem> frontier{0};
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (Elem x : frontier)
      for (Elem y : gens) {
        const Elem z = g.mul(x, y);
        if (s.insert(z).second) next.push_back(z);
      }
    frontier = std::move(next);
  }
  return s;
}

inline Set as_set(const Subgroup& s) { return Set(s.members().begin(), s.members().end()); }

inline Set all_of(const FiniteGroup& g) {
  Set s;
  for (Elem x = 0; x < g.order(); ++x) s.insert(x);
  return s;
}

inline Set commutators(const FiniteGroup& g, const Set& a, const Set& b) {
  Set gens;
  for (Elem x : a)
    for (Elem y : b) gens.insert(g.commutator(x, y));
  return closure(g, gens);
}

inline Set with_powers(const FiniteGroup& g, Set gens, const Set& a) {
  for (Elem x : a) gens.insert(g.power(x, g.prime()));
  return closure(g, gens);
}

inline Set center_of(const FiniteGroup& g) {
  Set z;
  for (Elem x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Elem y = 0; y < g.order() && central; ++y) central = g.mul(x, y) == g.mul(y, x);
    if (central) z.insert(x);
  }
  return z;
}

/// Terms of a series straight from the definitions.
inline std::vector<Set> brute_series(const FiniteGroup& g, Functor f) {
  const Set all = all_of(g);
  std::vector<Set> terms;
  if (!is_ascending(f)) {
    terms.push_back(all);
    while (terms.back().size() > 1) {
      const Set& t = terms.back();
      Set next;
      if (f == Functor::L) next = commutators(g, t, all);
      if (f == Functor::Lp) next = with_powers(g, commutators(g, t, all), t);
      if (f == Functor::D) next = commutators(g, t, t);
      if (next == t) break;
      terms.push_back(next);
    }
    return terms;
  }
  terms.push_back({0});
  while (terms.back().size() < g.order()) {
    const Set& t = terms.back();
    Set next;
    for (Elem x = 0; x < g.order(); ++x) {
      bool ok = true;
      for (Elem y = 0; y < g.order() && ok; ++y) ok = t.count(g.commutator(x, y)) > 0;
      if (ok && f == Functor::Zp) ok = t.count(g.power(x, g.prime())) > 0;
      if (ok) next.insert(x);
    }
    next = closure(g, next);
    if (next == t) break;
    terms.push_back(next);
  }
  return terms;
}

/// log_p |G / [G,G] G^p|.
inline unsigned brute_rank(const FiniteGroup& g) {
  const Set all = all_of(g);
  const Set frattini = with_powers(g, commutators(g, all, all), all);
  unsigned d = 0;
  for (std::size_t q = g.order() / frattini.size(); q > 1; q /= g.prime()) ++d;
  return d;
}

/// Invariants of an abelian p-group from the counts of elements killed by p^k.
inline std::vector<std::uint64_t> brute_abelian_invariants(const FiniteGroup& g) {
  const unsigned p = g.prime();
  std::vector<unsigned> killed{0};  // log_p |{x : x^{p^k} = 1}|
  for (std::uint64_t pk = p; killed.back() < g.rank_exponent(); pk *= p) {
    std::size_t n = 0;
    for (Elem x = 0; x < g.order(); ++x) n += g.power(x, pk) == 0;
    unsigned e = 0;
    for (; n > 1; n /= p) ++e;
    killed.push_back(e);
  }
  // number of invariants >= p^k is killed[k] - killed[k-1]
  std::vector<std::uint64_t> inv;
  for (std::size_t k = 1; k < killed.size(); ++k) {
    const unsigned at_least = killed[k] - killed[k - 1];
    const unsigned more = k + 1 < killed.size() ? killed[k + 1] - killed[k] : 0;
    std::uint64_t pk = 1;
    for (std::size_t i = 0; i < k; ++i) pk *= p;
    for (unsigned i = more; i < at_least; ++i) inv.push_back(pk);
  }
  std::sort(inv.begin(), inv.end());
  return inv;
}

}  // namespace pgph::test
