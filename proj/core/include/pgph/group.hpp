#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pgph {

/// Element index inside a FiniteGroup; 0 is always the identity.
using Elem = std::uint32_t;

/// Zero-based image list: p[i] is the image of point i.
using Permutation = std::vector<std::uint32_t>;

/// A finite p-group stored as a full Cayley table.
///
/// Immutable after construction. Shared between quotient chains, resolutions
/// and worker threads through GroupPtr.
class FiniteGroup {
 public:
  /// Validates the table (identity law, inverses, Latin rows, associativity)
  /// and that the order is a prime power. `generators` must generate the group.
  FiniteGroup(std::string name, std::size_t order, std::vector<Elem> table,
              std::vector<Elem> generators, unsigned prime_hint = 0);

  const std::string& name() const noexcept { return name_; }
  std::size_t order() const noexcept { return order_; }
  /// The prime p with order = p^k. For the trivial group this is the prime of
  /// the group it was derived from, or 0 when there is none.
  unsigned prime() const noexcept { return prime_; }

  Elem mul(Elem a, Elem b) const noexcept { return table_[std::size_t{a} * order_ + b]; }
  Elem inv(Elem a) const noexcept { return inverse_[a]; }
  /// a^-1 b^-1 a b
  Elem commutator(Elem a, Elem b) const noexcept { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  Elem power(Elem a, std::uint64_t k) const noexcept;
  Elem conjugate(Elem x, Elem g) const noexcept { return mul(mul(inv(g), x), g); }
  unsigned element_order(Elem a) const noexcept;

  std::span<const Elem> generators() const noexcept { return generators_; }
  std::span<const Elem> table() const noexcept { return table_; }
  std::span<const Elem> inverses() const noexcept { return inverse_; }

  bool is_abelian() const noexcept;
  /// log_p of the order.
  unsigned rank_exponent() const noexcept;

  /// Identical Cayley tables (names are ignored).
  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) noexcept {
    return a.order_ == b.order_ && a.table_ == b.table_;
  }

 private:
  std::string name_;
  std::size_t order_;
  unsigned prime_;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<Elem> generators_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Sorted set of element indices of some parent group, closed under the group law.
class Subgroup {
 public:
  Subgroup() : members_{0} {}
  explicit Subgroup(std::vector<Elem> members);

  std::span<const Elem> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(Elem x) const noexcept;
  /// Membership mask of length `order`.
  std::vector<bool> mask(std::size_t order) const;

  friend bool operator==(const Subgroup&, const Subgroup&) = default;

 private:
  std::vector<Elem> members_;
};

/// Homomorphism given elementwise. Validated on construction.
class GroupHom {
 public:
  GroupHom(GroupPtr source, GroupPtr target, std::vector<Elem> map);

  static GroupHom identity(const GroupPtr& g);

  const GroupPtr& source() const noexcept { return source_; }
  const GroupPtr& target() const noexcept { return target_; }
  Elem operator()(Elem x) const noexcept { return map_[x]; }
  std::span<const Elem> map() const noexcept { return map_; }
  bool surjective() const noexcept { return surjective_; }

  /// This map followed by `next`.
  GroupHom then(const GroupHom& next) const;
  Subgroup kernel() const;

 private:
  GroupPtr source_;
  GroupPtr target_;
  std::vector<Elem> map_;
  bool surjective_ = false;
};

/// Enumerates the group generated by `generators` (all of one degree).
/// Elements are numbered in breadth-first discovery order, trying generators
/// in the order given; the product a*b applies a first, then b.
/// Throws DataError when the order exceeds `max_order` or is not a prime power.
GroupPtr group_from_permutations(std::span<const Permutation> generators, std::string name,
                                 std::size_t max_order = 0);

/// Sends the i-th generator of `source` to images[i]; nullopt if that is not a homomorphism.
std::optional<GroupHom> hom_from_generator_images(const GroupPtr& source, std::span<const Elem> images,
                                                  const GroupPtr& target);

Subgroup whole_group(const FiniteGroup& g);
Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Elem> generators);
bool is_subgroup(const FiniteGroup& g, const Subgroup& s);
bool is_normal(const FiniteGroup& g, const Subgroup& n);

/// [A,B], generated by all a^-1 b^-1 a b.
Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);
/// [A,B] together with the p-th powers of elements of A.
Subgroup agemo_closure(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);
Subgroup center(const FiniteGroup& g);
/// {x : [x,g] in z for all g}; with `exponent_p` additionally x^p in z.
Subgroup center_preimage(const FiniteGroup& g, const Subgroup& z, bool exponent_p);

struct Quotient {
  GroupPtr group;
  GroupHom projection;
};

/// G/N on minimal coset representatives (quotient element i is the coset of
/// the i-th smallest representative). Throws DataError if N is not normal.
Quotient quotient(const GroupPtr& g, const Subgroup& n);

/// Dimension of G/[G,G]G^p over F_p.
unsigned min_generators(const FiniteGroup& g);
/// Ascending invariant factors of an abelian group. Throws DataError otherwise.
std::vector<std::uint64_t> abelian_invariants(const FiniteGroup& g);
/// Invariants of G/[G,G].
std::vector<std::uint64_t> abelianization_invariants(const GroupPtr& g);

}  // namespace pgph
