#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pgph/group.hpp"
#include "pgph/linalg.hpp"

namespace pgph {

/// Minimal free resolution ... -> F_1 -> F_0 -> F_p of the trivial module
/// over F_p[G].
///
/// F_n has rank b_n. Coordinates of F_n are indexed generator * |G| + element
/// and G acts from the left: g . (h e_j) = (gh) e_j. The boundary d_n is
/// stored by the images of the generators of F_n.
class MinimalResolution {
 public:
  const GroupPtr& group() const noexcept { return group_; }
  unsigned prime() const noexcept { return prime_; }
  /// Highest n for which d_n is exactly known together with its kernel.
  int max_degree() const noexcept { return max_degree_; }
  /// Set when construction stopped early on the budget; max_degree() is then
  /// the last complete degree.
  bool partial() const noexcept { return partial_; }

  /// b_n for 0 <= n <= max_degree() + 1.
  std::size_t rank(int n) const;
  const std::vector<std::size_t>& ranks() const noexcept { return ranks_; }

  /// b_n x (|G| b_{n-1}) matrix of generator images, 1 <= n <= max_degree() + 1.
  const FpMatrix& generator_images(int n) const;
  /// Full (|G| b_n) x (|G| b_{n-1}) matrix of d_n.
  FpMatrix boundary(int n) const;
  /// Solver for x d_n = y, 1 <= n <= max_degree().
  const RowSpaceSolver& solver(int n) const;

 private:
  friend MinimalResolution minimal_resolution(const GroupPtr&, unsigned, int, bool);

  GroupPtr group_;
  unsigned prime_ = 2;
  int max_degree_ = -1;
  bool partial_ = false;
  std::vector<std::size_t> ranks_;
  std::vector<FpMatrix> images_;  // images_[n], index 0 unused
  std::vector<std::shared_ptr<const RowSpaceSolver>> solvers_;
};

/// Computes d_1 .. d_{n_max+1}, hence b_0 .. b_{n_max+1}.
///
/// p must divide |G| unless G is trivial. Throws BudgetExceeded when a degree
/// would exceed the F_p entry budget, unless `allow_partial` is set, in which
/// case the result is truncated and marked partial.
MinimalResolution minimal_resolution(const GroupPtr& g, unsigned p, int n_max, bool allow_partial = false);

/// dim H_n(G, F_p) for n = 0..n_max.
std::vector<std::size_t> homology_dims(const GroupPtr& g, unsigned p, int n_max);

/// Checks d_{n-1} d_n = 0, exactness and minimality of every computed degree.
std::optional<std::string> verify_resolution(const MinimalResolution& r);

struct InducedHomologyMap {
  int degree;
  FpMatrix matrix;  ///< b_n(source) x b_n(target)
};

/// Homology matrices of `hom` in degrees 0..n from a single chain-map lift.
/// `src` must reach degree n - 1 (generator images up to n), `tgt` degree n.
std::vector<InducedHomologyMap> induced_maps(const GroupHom& hom, int n, const MinimalResolution& src,
                                             const MinimalResolution& tgt);

/// The degree-n matrix alone.
InducedHomologyMap induced_map(const GroupHom& hom, int n, const MinimalResolution& src,
                               const MinimalResolution& tgt);

}  // namespace pgph
