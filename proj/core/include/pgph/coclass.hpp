#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pgph/group.hpp"

namespace pgph {

/// The three families of 2-groups of maximal class.
enum class FamilyKind { dihedral, quaternion, semidihedral };

std::string_view to_string(FamilyKind k) noexcept;
std::optional<FamilyKind> parse_family(std::string_view s) noexcept;

/// The member of order 2^l (l >= 3, l >= 4 for semidihedral). Dihedral groups
/// act on the vertices of a 2^(l-1)-gon; the others use the regular representation.
GroupPtr family(FamilyKind kind, unsigned l);

/// Tree edge into level l: from family(kind, l + 1) onto the dihedral group of
/// order 2^l, with kernel the last nontrivial lower central term.
GroupHom tree_link(FamilyKind kind, unsigned l);

/// Stabilized persistent homology of the dihedral main line in one degree.
struct TreePersistenceReport {
  FamilyKind family = FamilyKind::dihedral;
  int degree = 0;
  std::vector<unsigned> levels;             ///< l_min..l_max
  std::vector<std::size_t> homology_dims;   ///< dim H_n(G_l) per level
  /// dim Im(H_n(G_{l+1}) -> H_n(G_l)) for l_min <= l < l_max.
  std::vector<std::size_t> image_dims;
  /// dim of the intersection over k of Im(H_n(G_{l+k}) -> H_n(G_l)) inside the window.
  std::vector<std::size_t> intersection_dims;
  std::optional<unsigned> stabilization_level;  ///< least l from which image_dims is constant
  std::optional<std::size_t> stabilized_dim;
};

TreePersistenceReport tree_persistence(int n, unsigned l_min, unsigned l_max);

struct SecondHomologyEntry {
  unsigned level = 0;
  std::size_t order = 0;
  std::size_t h2 = 0;
  bool leaf = false;
  std::size_t relator_bound = 0;  ///< dim PH_2 + 1 for non-leaves
  bool consistent = true;
};

/// Compares dim H_2 along a family with the stabilized main-line estimate:
/// equality with estimate + 1 for non-leaves at or above the stabilization
/// level, at least the estimate for leaves.
struct SecondHomologyReport {
  FamilyKind family = FamilyKind::dihedral;
  std::optional<std::size_t> estimate;
  std::optional<unsigned> stabilization_level;
  std::vector<SecondHomologyEntry> entries;

  bool consistent() const noexcept;
};

/// The estimate comes from the main-line window window_min..window_max.
SecondHomologyReport check_second_homology(FamilyKind kind, unsigned l_min, unsigned l_max, unsigned window_min = 3,
                                           unsigned window_max = 6);

}  // namespace pgph
