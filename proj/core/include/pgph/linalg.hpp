#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace pgph {

/// Packed row primitives over F_p.
///
/// A row of n entries occupies fp::words(p, n) 64-bit words: one bit per entry
/// for p = 2, one byte per entry (8 per word) for odd p < 256.
namespace fp {

using Word = std::uint64_t;

constexpr std::size_t words(unsigned p, std::size_t n) noexcept { return p == 2 ? (n + 63) / 64 : (n + 7) / 8; }

inline unsigned get(std::span<const Word> row, unsigned p, std::size_t i) noexcept {
  if (p == 2) return static_cast<unsigned>((row[i >> 6] >> (i & 63)) & 1u);
  return static_cast<unsigned>((row[i >> 3] >> ((i & 7) * 8)) & 0xffu);
}

inline void set(std::span<Word> row, unsigned p, std::size_t i, unsigned v) noexcept {
  if (p == 2) {
    const Word bit = Word{1} << (i & 63);
    if (v & 1u) row[i >> 6] |= bit;
    else row[i >> 6] &= ~bit;
    return;
  }
  const unsigned shift = (i & 7) * 8;
  row[i >> 3] = (row[i >> 3] & ~(Word{0xff} << shift)) | (Word{v % p} << shift);
}

/// dst[first_word..] += c * src[first_word..]
void axpy(std::span<Word> dst, std::span<const Word> src, unsigned c, unsigned p, std::size_t first_word = 0) noexcept;
void scale(std::span<Word> row, unsigned c, unsigned p) noexcept;
/// Index of the first nonzero entry below `limit`, or `limit`.
std::size_t leading(std::span<const Word> row, unsigned p, std::size_t limit) noexcept;
unsigned inverse(unsigned a, unsigned p) noexcept;

}  // namespace fp

/// Dense matrix over a prime field, rows packed as described in fp.
///
/// Maps act on row vectors from the right: the matrix of f: F_p^m -> F_p^n is
/// m x n and x |-> x A.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(unsigned prime, std::size_t rows, std::size_t cols);

  static FpMatrix identity(unsigned prime, std::size_t n);
  static FpMatrix from_rows(unsigned prime, std::initializer_list<std::initializer_list<int>> rows);
  static FpMatrix from_rows(unsigned prime, const std::vector<std::vector<int>>& rows, std::size_t cols);

  unsigned prime() const noexcept { return prime_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t stride() const noexcept { return stride_; }

  unsigned at(std::size_t r, std::size_t c) const noexcept { return fp::get(row(r), prime_, c); }
  void set(std::size_t r, std::size_t c, unsigned v) noexcept { fp::set(row(r), prime_, c, v); }

  std::span<fp::Word> row(std::size_t r) noexcept { return {data_.data() + r * stride_, stride_}; }
  std::span<const fp::Word> row(std::size_t r) const noexcept { return {data_.data() + r * stride_, stride_}; }
  std::vector<std::uint8_t> row_values(std::size_t r) const;

  void append_row(std::span<const fp::Word> packed);
  void append_values(std::span<const std::uint8_t> values);

  FpMatrix operator*(const FpMatrix& rhs) const;
  FpMatrix transpose() const;
  bool is_zero() const noexcept;

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  unsigned prime_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<fp::Word> data_;
};

/// Incrementally built row echelon basis.
///
/// Every stored row has its leading (lowest-index) nonzero main column equal
/// to 1 and zeros in the leading columns of rows stored before it. Rows may
/// carry `tracked` extra columns after the main ones; these never hold
/// pivots and record how a row was combined from the inputs.
class EchelonBasis {
 public:
  EchelonBasis(unsigned prime, std::size_t cols, std::size_t tracked = 0);

  unsigned prime() const noexcept { return prime_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t tracked() const noexcept { return tracked_; }
  std::size_t row_words() const noexcept { return words_; }
  std::size_t rank() const noexcept { return pivots_.size(); }

  std::vector<fp::Word> empty_row() const { return std::vector<fp::Word>(words_); }

  /// Reduces `row` (row_words() long) in place. Returns true if the main
  /// part became zero.
  bool reduce(std::span<fp::Word> row) const noexcept;
  /// Reduces and stores `row`; returns false (and leaves the residual in
  /// `row`) if it was dependent.
  bool insert(std::span<fp::Word> row);

  std::span<const fp::Word> basis_row(std::size_t i) const noexcept {
    return {rows_.data() + i * words_, words_};
  }
  std::size_t pivot(std::size_t i) const noexcept { return pivots_[i]; }

  unsigned main_entry(std::span<const fp::Word> row, std::size_t c) const noexcept { return fp::get(row, prime_, c); }
  unsigned tracked_entry(std::span<const fp::Word> row, std::size_t c) const noexcept {
    return fp::get(row, prime_, cols_ + c);
  }

 private:
  unsigned prime_;
  std::size_t cols_;
  std::size_t tracked_;
  std::size_t words_;
  std::vector<fp::Word> rows_;
  std::vector<std::size_t> pivots_;
};

std::size_t rank(const FpMatrix& a);

/// Basis of {v : v A = 0} in reduced row echelon form; rows(A) - rank(A) rows.
FpMatrix kernel_basis(const FpMatrix& a);

/// Reduced row echelon form with zero rows removed.
FpMatrix rref(const FpMatrix& a);

/// Solves x A = b. Inputs and output are residues in [0, p).
/// The solution only uses rows of A that are independent of earlier rows;
/// all other coordinates are 0. nullopt if b is not in the row space.
std::optional<std::vector<std::uint8_t>> solve(const FpMatrix& a, std::span<const std::uint8_t> b);

/// Multi-right-hand-side solver for x A = b against a fixed A.
class RowSpaceSolver {
 public:
  explicit RowSpaceSolver(const FpMatrix& a);
  /// Adopts a basis built from the rows of some A with tracked = rows(A),
  /// where row i was inserted with the unit vector e_i in its tracked part.
  explicit RowSpaceSolver(EchelonBasis tracked_basis);
  /// Packed right-hand side (fp::words(p, cols) long); packed solution of length rows(A).
  std::optional<std::vector<fp::Word>> solve_packed(std::span<const fp::Word> b) const;
  std::size_t rank() const noexcept { return basis_.rank(); }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return basis_.cols(); }

 private:
  EchelonBasis basis_;
  std::size_t rows_;
};

/// Basis (rref) of the intersection of the row spaces of a and b.
FpMatrix row_space_intersection(const FpMatrix& a, const FpMatrix& b);

}  // namespace pgph
