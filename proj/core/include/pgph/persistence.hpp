#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pgph/bar_complex.hpp"
#include "pgph/resolution.hpp"
#include "pgph/series.hpp"

namespace pgph {

/// Upper triangular rank matrix of the homology persistence module of a
/// quotient chain. Index 1 is G itself.
struct PersistenceMatrix {
  std::string group;
  Functor functor = Functor::L;
  int degree = 0;
  unsigned prime = 2;
  std::vector<std::size_t> term_orders;  ///< empty when rebuilt from a barcode
  /// entries[i][j] = p_{i+1,j+1}; zero below the diagonal.
  std::vector<std::vector<std::size_t>> entries;

  std::size_t size() const noexcept { return entries.size(); }
  /// One-based p_{i,j}; 0 outside 1 <= i <= j <= N.
  std::size_t at(std::size_t i, std::size_t j) const noexcept;

  friend bool operator==(const PersistenceMatrix&, const PersistenceMatrix&) = default;
};

/// Zero below the diagonal and p_{i,k} <= min(p_{i,j}, p_{j,k}) for i <= j <= k.
std::optional<std::string> verify_matrix(const PersistenceMatrix& m);

struct Bar {
  std::size_t birth;  ///< one-based column
  std::size_t death;
  std::size_t multiplicity;
  friend bool operator==(const Bar&, const Bar&) = default;
};

struct Barcode {
  int degree = 0;
  std::size_t columns = 0;
  std::vector<Bar> bars;  ///< ordered by birth, then death

  std::size_t total() const noexcept;
  friend bool operator==(const Barcode&, const Barcode&) = default;
};

/// Interval decomposition. Throws DataError on a negative multiplicity.
Barcode barcode(const PersistenceMatrix& m);
PersistenceMatrix matrix_from_barcode(const Barcode& b);

/// Persistence matrices of one group and functor in degrees 1..t.
struct PersistenceSequence {
  QuotientChain chain;
  std::vector<PersistenceMatrix> matrices;  ///< degree n at index n-1
  int requested = 0;
  bool partial = false;  ///< matrices stop short of `requested`
  std::string note;      ///< why the sequence is partial
};

/// One chain and one set of resolutions shared across all degrees. Throws
/// BudgetExceeded unless `allow_partial`, in which case the completed
/// degrees are returned and the sequence is marked.
PersistenceSequence persistence_sequence(const GroupPtr& g, Functor functor, int t, bool allow_partial = false);
PersistenceMatrix persistence_matrix(const GroupPtr& g, Functor functor, int n);

/// |G| from the degree 1 and 2 matrices of an Lp or Zp chain.
std::uint64_t recover_order(const PersistenceMatrix& p1, const PersistenceMatrix& p2);

/// Abelian invariants of an abelian group from its degree 1 and 2 Zp matrices.
std::vector<std::uint64_t> recover_abelian_invariants(const PersistenceMatrix& p1, const PersistenceMatrix& p2);

/// Checks of the lower central barcodes in degrees 1 and 2:
/// degree 1 consists of d(G) bars spanning all columns; in degree 2 every bar
/// of length > 1 starts in column 1; and column j >= 2 carries as many
/// isolated vertices as dim L_{c+2-j}/L_{c+3-j} (x) F_p.
struct LowerCentralReport {
  std::string group;
  bool full_bars = true;
  bool births_in_first_column = true;
  bool isolated_counts = true;
  std::vector<std::string> failures;

  bool passed() const noexcept { return failures.empty(); }
};
LowerCentralReport check_lower_central_structure(const GroupPtr& g);

/// Matrix of integral triples (H_n(Q_i), H_n(Q_j), coker) for i <= j.
struct IntegralPersistenceMatrix {
  std::string group;
  Functor functor = Functor::L;
  int degree = 0;
  std::vector<std::size_t> term_orders;
  std::vector<std::vector<IntegralTriple>> entries;  ///< empty triples below the diagonal

  std::size_t size() const noexcept { return entries.size(); }
  friend bool operator==(const IntegralPersistenceMatrix&, const IntegralPersistenceMatrix&) = default;
};

IntegralPersistenceMatrix integral_persistence_matrix(const GroupPtr& g, Functor functor, int n);
std::vector<IntegralPersistenceMatrix> integral_persistence_sequence(const GroupPtr& g, Functor functor, int t);

}  // namespace pgph
