#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "pgph/group.hpp"
#include "pgph/integer_matrix.hpp"

namespace pgph {

/// Normalized bar complex of G with trivial coefficients.
///
/// C_n has one basis element per tuple [g_1|...|g_n] of non-identity elements,
/// indexed in base |G|-1 with g_1 most significant (digit d stands for
/// element d+1). C_0 is spanned by [].
std::size_t bar_dimension(std::size_t order, int n);

/// Calls emit(column, coefficient) for each term of d_n of basis tuple `index`.
/// Repeated columns are possible; callers sum them.
void bar_boundary_terms(const FiniteGroup& g, int n, std::size_t index,
                        const std::function<void(std::size_t, int)>& emit);

/// d_n as a dim C_n x dim C_{n-1} integer matrix.
IntMatrix bar_boundary_matrix(const FiniteGroup& g, int n);

/// dim H_n(G, F_p) from the normalized bar complex. Throws BudgetExceeded
/// when dim C_{n+1} * dim C_n is above the F_p budget.
std::size_t bar_homology_fp(const GroupPtr& g, unsigned p, int n);

/// H_n(G, Z) with enough data to compute induced maps.
struct IntegralHomology {
  GroupPtr group;
  int degree = 0;
  /// Torsion invariants ascending, then one 0 per free summand.
  std::vector<std::uint64_t> invariants;
  std::size_t chain_rank = 0;     ///< dim C_n
  std::size_t cycle_rank = 0;     ///< rank Z_n
  std::size_t boundary_rank = 0;  ///< rank B_n
};

/// Throws BudgetExceeded above the integral budget.
IntegralHomology integral_homology(const GroupPtr& g, int n);

/// Integer basis of the cycles Z_n(G), one row per basis vector of length dim C_n.
IntMatrix bar_cycles(const FiniteGroup& g, int n);

struct IntegralTriple {
  std::vector<std::uint64_t> source;    ///< H_n(G, Z)
  std::vector<std::uint64_t> target;    ///< H_n(Q, Z)
  std::vector<std::uint64_t> cokernel;  ///< coker H_n(f)
  friend bool operator==(const IntegralTriple&, const IntegralTriple&) = default;
};

/// Invariants of source, target and cokernel of H_n(f; Z) for a surjection f.
IntegralTriple integral_induced_triple(const GroupHom& hom, int n);

/// Invariants of coker H_n(f; Z) given H_n of the target.
std::vector<std::uint64_t> integral_cokernel(const GroupHom& hom, int n, const IntegralHomology& target);

}  // namespace pgph
