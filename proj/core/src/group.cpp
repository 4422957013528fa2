#include "pgph/group.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "pgph/error.hpp"

namespace pgph {

namespace {

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : p) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

// p with order = p^k, 0 for 1, nullopt if not a prime power.
std::optional<unsigned> prime_of(std::size_t order) {
  if (order == 1) return 0u;
  std::size_t p = 2;
  while (order % p != 0) ++p;
  std::size_t rest = order;
  while (rest % p == 0) rest /= p;
  if (rest != 1) return std::nullopt;
  return static_cast<unsigned>(p);
}

}  // namespace

FiniteGroup::FiniteGroup(std::string name, std::size_t order, std::vector<Elem> table,
                         std::vector<Elem> generators, unsigned prime_hint)
    : name_(std::move(name)), order_(order), table_(std::move(table)), generators_(std::move(generators)) {
  if (order_ == 0 || table_.size() != order_ * order_)
    throw DataError(name_ + ": Cayley table has the wrong size");
  const auto p = prime_of(order_);
  if (!p) throw DataError(name_ + ": order " + std::to_string(order_) + " is not a prime power");
  prime_ = order_ == 1 ? prime_hint : *p;

  for (Elem x : table_)
    if (x >= order_) throw DataError(name_ + ": Cayley table entry out of range");
  for (std::size_t x = 0; x < order_; ++x)
    if (mul(0, static_cast<Elem>(x)) != x || mul(static_cast<Elem>(x), 0) != x)
      throw DataError(name_ + ": element 0 is not the identity");

  inverse_.assign(order_, 0);
  std::vector<char> seen(order_);
  for (std::size_t a = 0; a < order_; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    bool found = false;
    for (std::size_t b = 0; b < order_; ++b) {
      const Elem c = mul(static_cast<Elem>(a), static_cast<Elem>(b));
      if (seen[c]) throw DataError(name_ + ": Cayley table row is not a permutation");
      seen[c] = 1;
      if (c == 0) {
        inverse_[a] = static_cast<Elem>(b);
        found = true;
      }
    }
    if (!found) throw DataError(name_ + ": missing inverse");
  }
  for (std::size_t a = 0; a < order_; ++a)
    if (mul(inverse_[a], static_cast<Elem>(a)) != 0) throw DataError(name_ + ": left and right inverses differ");

  if (order_ <= 512) {
    for (std::size_t a = 0; a < order_; ++a)
      for (std::size_t b = 0; b < order_; ++b) {
        const Elem ab = mul(static_cast<Elem>(a), static_cast<Elem>(b));
        const std::size_t row = ab * order_;
        const std::size_t brow = b * order_;
        for (std::size_t c = 0; c < order_; ++c)
          if (table_[row + c] != mul(static_cast<Elem>(a), table_[brow + c]))
            throw DataError(name_ + ": multiplication is not associative");
      }
  }

  for (Elem g : generators_)
    if (g >= order_) throw DataError(name_ + ": generator index out of range");
  const Subgroup span = generated_subgroup(*this, generators_);
  if (span.size() != order_) throw DataError(name_ + ": generators do not generate the group");
}

Elem FiniteGroup::power(Elem a, std::uint64_t k) const noexcept {
  Elem result = 0;
  Elem base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

unsigned FiniteGroup::element_order(Elem a) const noexcept {
  unsigned k = 1;
  for (Elem x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const noexcept {
  for (Elem a : generators_)
    for (Elem b : generators_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

unsigned FiniteGroup::rank_exponent() const noexcept {
  unsigned k = 0;
  for (std::size_t n = order_; n > 1 && prime_ > 1; n /= prime_) ++k;
  return k;
}

Subgroup::Subgroup(std::vector<Elem> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Subgroup::contains(Elem x) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), x);
}

std::vector<bool> Subgroup::mask(std::size_t order) const {
  std::vector<bool> m(order);
  for (Elem x : members_) m[x] = true;
  return m;
}

GroupHom::GroupHom(GroupPtr source, GroupPtr target, std::vector<Elem> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  const auto& s = *source_;
  const auto& t = *target_;
  if (map_.size() != s.order()) throw InvariantViolation("homomorphism map has the wrong length");
  for (Elem y : map_)
    if (y >= t.order()) throw InvariantViolation("homomorphism image out of range");
  if (map_[0] != 0) throw InvariantViolation("homomorphism does not fix the identity");
  for (std::size_t x = 0; x < s.order(); ++x)
    for (std::size_t y = 0; y < s.order(); ++y)
      if (map_[s.mul(static_cast<Elem>(x), static_cast<Elem>(y))] != t.mul(map_[x], map_[y]))
        throw InvariantViolation("map " + s.name() + " -> " + t.name() + " is not a homomorphism");
  std::vector<char> hit(t.order());
  std::size_t count = 0;
  for (Elem y : map_)
    if (!hit[y]) {
      hit[y] = 1;
      ++count;
    }
  surjective_ = count == t.order();
}

GroupHom GroupHom::identity(const GroupPtr& g) {
  std::vector<Elem> map(g->order());
  std::iota(map.begin(), map.end(), Elem{0});
  return GroupHom(g, g, std::move(map));
}

GroupHom GroupHom::then(const GroupHom& next) const {
  if (target_.get() != next.source_.get() && !(*target_ == *next.source_))
    throw InvariantViolation("composing homomorphisms with mismatched groups");
  std::vector<Elem> map(map_.size());
  for (std::size_t x = 0; x < map_.size(); ++x) map[x] = next.map_[map_[x]];
  return GroupHom(source_, next.target_, std::move(map));
}

Subgroup GroupHom::kernel() const {
  std::vector<Elem> members;
  for (std::size_t x = 0; x < map_.size(); ++x)
    if (map_[x] == 0) members.push_back(static_cast<Elem>(x));
  return Subgroup(std::move(members));
}

GroupPtr group_from_permutations(std::span<const Permutation> generators, std::string name,
                                 std::size_t max_order) {
  if (max_order == 0) max_order = budget().max_group_order;
  if (generators.empty()) throw DataError(name + ": no generators");
  const std::size_t degree = generators.front().size();
  if (degree == 0) throw DataError(name + ": permutation of degree 0");
  for (const auto& g : generators) {
    if (g.size() != degree) throw DataError(name + ": generators have different degrees");
    std::vector<char> hit(degree);
    for (auto x : g) {
      if (x >= degree || hit[x]) throw DataError(name + ": generator is not a bijection");
      hit[x] = 1;
    }
  }

  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::vector<Permutation> elements{id};
  std::unordered_map<Permutation, Elem, PermutationHash> index{{id, 0}};
  std::vector<Elem> parent{0};
  std::vector<std::uint32_t> via{0};
  std::vector<Elem> right;  // right[x * ngens + i] = x * g_i
  const std::size_t ngens = generators.size();

  Permutation y(degree);
  for (std::size_t x = 0; x < elements.size(); ++x) {
    for (std::size_t i = 0; i < ngens; ++i) {
      const auto& g = generators[i];
      const auto& px = elements[x];
      for (std::size_t k = 0; k < degree; ++k) y[k] = g[px[k]];
      auto [it, inserted] = index.try_emplace(y, static_cast<Elem>(elements.size()));
      if (inserted) {
        if (elements.size() >= max_order)
          throw DataError(name + ": group order exceeds the cap of " + std::to_string(max_order));
        elements.push_back(y);
        parent.push_back(static_cast<Elem>(x));
        via.push_back(static_cast<std::uint32_t>(i));
      }
      right.push_back(it->second);
    }
  }

  const std::size_t n = elements.size();
  if (!prime_of(n)) throw DataError(name + ": order " + std::to_string(n) + " is not a prime power");

  // a * y = (a * parent(y)) * g_via(y), filled in discovery order of y.
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    table[a * n] = static_cast<Elem>(a);
    for (std::size_t e = 1; e < n; ++e)
      table[a * n + e] = right[std::size_t{table[a * n + parent[e]]} * ngens + via[e]];
  }

  std::vector<Elem> gens;
  for (std::size_t i = 0; i < ngens; ++i) {
    const Elem g = index.at(generators[i]);
    if (g != 0 && std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  }
  return std::make_shared<const FiniteGroup>(std::move(name), n, std::move(table), std::move(gens));
}

std::optional<GroupHom> hom_from_generator_images(const GroupPtr& source, std::span<const Elem> images,
                                                  const GroupPtr& target) {
  const auto& s = *source;
  const auto gens = s.generators();
  if (images.size() != gens.size()) return std::nullopt;
  constexpr Elem unset = ~Elem{0};
  std::vector<Elem> map(s.order(), unset);
  map[0] = 0;
  std::vector<Elem> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Elem x = queue[head];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Elem y = s.mul(x, gens[i]);
      const Elem image = target->mul(map[x], images[i]);
      if (map[y] == unset) {
        map[y] = image;
        queue.push_back(y);
      } else if (map[y] != image) {
        return std::nullopt;
      }
    }
  }
  try {
    return GroupHom(source, target, std::move(map));
  } catch (const InvariantViolation&) {
    return std::nullopt;
  }
}

Subgroup whole_group(const FiniteGroup& g) {
  std::vector<Elem> all(g.order());
  std::iota(all.begin(), all.end(), Elem{0});
  return Subgroup(std::move(all));
}

Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Elem> generators) {
  std::vector<char> in(g.order());
  std::vector<Elem> members{0};
  in[0] = 1;
  for (std::size_t head = 0; head < members.size(); ++head)
    for (Elem s : generators) {
      const Elem y = g.mul(members[head], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  return Subgroup(std::move(members));
}

bool is_subgroup(const FiniteGroup& g, const Subgroup& s) {
  const auto m = s.mask(g.order());
  if (!s.contains(0)) return false;
  for (Elem a : s.members()) {
    if (a >= g.order() || !m[g.inv(a)]) return false;
    for (Elem b : s.members())
      if (!m[g.mul(a, b)]) return false;
  }
  return true;
}

bool is_normal(const FiniteGroup& g, const Subgroup& n) {
  const auto m = n.mask(g.order());
  for (Elem x : n.members())
    for (Elem s : g.generators())
      if (!m[g.conjugate(x, s)]) return false;
  return true;
}

namespace {

Subgroup generated_by_mask(const FiniteGroup& g, const std::vector<char>& picked) {
  std::vector<Elem> gens;
  for (std::size_t x = 1; x < picked.size(); ++x)
    if (picked[x]) gens.push_back(static_cast<Elem>(x));
  return generated_subgroup(g, gens);
}

}  // namespace

Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  std::vector<char> picked(g.order());
  for (Elem x : a.members())
    for (Elem y : b.members()) picked[g.commutator(x, y)] = 1;
  return generated_by_mask(g, picked);
}

Subgroup agemo_closure(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  std::vector<char> picked(g.order());
  for (Elem x : a.members()) {
    for (Elem y : b.members()) picked[g.commutator(x, y)] = 1;
    if (g.prime() > 1) picked[g.power(x, g.prime())] = 1;
  }
  return generated_by_mask(g, picked);
}

Subgroup center(const FiniteGroup& g) { return center_preimage(g, Subgroup(), false); }

Subgroup center_preimage(const FiniteGroup& g, const Subgroup& z, bool exponent_p) {
  const auto m = z.mask(g.order());
  std::vector<Elem> members;
  for (std::size_t i = 0; i < g.order(); ++i) {
    const auto x = static_cast<Elem>(i);
    bool ok = !exponent_p || g.prime() < 2 || m[g.power(x, g.prime())];
    for (std::size_t k = 0; ok && k < g.generators().size(); ++k) ok = m[g.commutator(x, g.generators()[k])];
    if (ok) members.push_back(x);
  }
  return Subgroup(std::move(members));
}

Quotient quotient(const GroupPtr& gp, const Subgroup& n) {
  const auto& g = *gp;
  if (!is_subgroup(g, n) || !is_normal(g, n))
    throw DataError("quotient of " + g.name() + " by a subgroup that is not normal");
  const std::size_t order = g.order();
  constexpr Elem unset = ~Elem{0};
  std::vector<Elem> cls(order, unset);
  std::vector<Elem> reps;
  for (std::size_t x = 0; x < order; ++x) {
    if (cls[x] != unset) continue;
    const auto id = static_cast<Elem>(reps.size());
    reps.push_back(static_cast<Elem>(x));
    for (Elem k : n.members()) cls[g.mul(static_cast<Elem>(x), k)] = id;
  }
  const std::size_t q = reps.size();
  std::vector<Elem> table(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) table[a * q + b] = cls[g.mul(reps[a], reps[b])];
  std::vector<Elem> gens;
  for (Elem s : g.generators()) {
    const Elem c = cls[s];
    if (c != 0 && std::find(gens.begin(), gens.end(), c) == gens.end()) gens.push_back(c);
  }
  auto qg = std::make_shared<const FiniteGroup>(g.name() + "/N" + std::to_string(n.size()), q, std::move(table),
                                                std::move(gens), g.prime());
  GroupHom proj(gp, qg, std::move(cls));
  return Quotient{std::move(qg), std::move(proj)};
}

unsigned min_generators(const FiniteGroup& g) {
  if (g.order() == 1) return 0;
  const Subgroup all = whole_group(g);
  const Subgroup frattini = agemo_closure(g, all, all);
  unsigned d = 0;
  for (std::size_t k = g.order() / frattini.size(); k > 1; k /= g.prime()) ++d;
  return d;
}

std::vector<std::uint64_t> abelian_invariants(const FiniteGroup& g) {
  if (!g.is_abelian()) throw DataError(g.name() + " is not abelian");
  std::vector<std::uint64_t> out;
  if (g.order() == 1) return out;
  const unsigned p = g.prime();
  // sizes[k] = |{x^(p^k)}|, a subgroup because g is abelian
  std::vector<std::size_t> sizes{g.order()};
  std::uint64_t pk = 1;
  while (sizes.back() > 1) {
    pk *= p;
    std::vector<char> hit(g.order());
    std::size_t count = 0;
    for (std::size_t x = 0; x < g.order(); ++x) {
      const Elem y = g.power(static_cast<Elem>(x), pk);
      if (!hit[y]) {
        hit[y] = 1;
        ++count;
      }
    }
    sizes.push_back(count);
  }
  // at_least[k] = number of cyclic factors of order >= p^k
  std::vector<unsigned> at_least(sizes.size() + 1, 0);
  for (std::size_t k = 1; k < sizes.size(); ++k) {
    unsigned r = 0;
    for (std::size_t ratio = sizes[k - 1] / sizes[k]; ratio > 1; ratio /= p) ++r;
    at_least[k] = r;
  }
  std::uint64_t q = 1;
  for (std::size_t k = 1; k < sizes.size(); ++k) {
    q *= p;
    for (unsigned c = at_least[k + 1]; c < at_least[k]; ++c) out.push_back(q);
  }
  return out;
}

std::vector<std::uint64_t> abelianization_invariants(const GroupPtr& g) {
  const Subgroup all = whole_group(*g);
  const auto q = quotient(g, commutator_subgroup(*g, all, all));
  return abelian_invariants(*q.group);
}

}  // namespace pgph
