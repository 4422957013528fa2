#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pgph {

using Integer = boost::multiprecision::cpp_int;

/// Dense integer matrix, row-major, arbitrary precision entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<Integer> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Integer> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Integer> values);

  IntMatrix operator*(const IntMatrix& rhs) const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Determinant by fraction-free elimination (Bareiss).
Integer determinant(const IntMatrix& a);

struct SmithForm {
  std::vector<Integer> diagonal;  ///< nonzero, positive, each dividing the next
  IntMatrix u;                    ///< rows x rows, unimodular
  IntMatrix v;                    ///< cols x cols, unimodular
};

/// U * A * V = diag(d_1, ..., d_r, 0, ...). Pivots of least absolute value.
SmithForm smith_normal_form(const IntMatrix& a);

/// Nonzero Smith diagonal without transforms; scales to large sparse matrices.
std::vector<Integer> elementary_divisors(const IntMatrix& a);

/// Incremental lattice basis of a row space using unimodular row operations.
/// Like EchelonBasis, rows may carry tracked columns that never hold pivots.
class LatticeEchelon {
 public:
  LatticeEchelon(std::size_t cols, std::size_t tracked = 0) : cols_(cols), tracked_(tracked) {}

  std::size_t cols() const noexcept { return cols_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  /// Inserts `row` (cols + tracked entries). Returns false when its main part
  /// reduced to zero; the residual (with its tracked part) is left in `row`.
  bool insert(std::vector<Integer>& row);

  const std::vector<Integer>& basis_row(std::size_t i) const noexcept { return rows_[i]; }
  std::size_t pivot(std::size_t i) const noexcept { return pivots_[i]; }

  /// Main parts of the basis rows as a matrix.
  IntMatrix basis() const;

 private:
  std::size_t cols_;
  std::size_t tracked_;
  std::vector<std::vector<Integer>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Lattice basis of {x in Z^rows : x A = 0}.
IntMatrix integer_kernel(const IntMatrix& a);

/// Abelian invariants of Z^ambient_rank / (row space of A): invariant factors
/// greater than 1 in ascending order, followed by one 0 per free summand.
std::vector<std::uint64_t> abelian_invariants_of_cokernel(const IntMatrix& a, std::size_t ambient_rank);

/// Smith invariants over the local ring Z/p^e.
///
/// `entries` is a rows x cols row-major matrix already reduced mod p^e. Returns
/// the valuations v with invariant p^v for every invariant that is nonzero
/// mod p^e, ascending. When the nonzero integral invariants of A are known to
/// be powers of p below p^e this equals their exponent list exactly.
std::vector<unsigned> local_smith_valuations(std::vector<std::uint64_t> entries, std::size_t rows,
                                             std::size_t cols, unsigned p, unsigned e);

}  // namespace pgph
