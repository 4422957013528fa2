#include "pgph/linalg.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>

#include "pgph/error.hpp"

namespace pgph {

namespace fp {

namespace {

std::uint8_t* bytes(std::span<Word> row) noexcept { return reinterpret_cast<std::uint8_t*>(row.data()); }
const std::uint8_t* bytes(std::span<const Word> row) noexcept {
  return reinterpret_cast<const std::uint8_t*>(row.data());
}

}  // namespace

void axpy(std::span<Word> dst, std::span<const Word> src, unsigned c, unsigned p, std::size_t first_word) noexcept {
  c %= p;
  if (c == 0) return;
  const std::size_t n = std::min(dst.size(), src.size());
  if (p == 2) {
    for (std::size_t w = first_word; w < n; ++w) dst[w] ^= src[w];
    return;
  }
  if (p < 128) {
    // bytewise a + b mod p inside one word; sums stay below 2p < 256
    const Word lanes = 0x0101010101010101ull;
    const Word bias = lanes * (128 - p), high = lanes * 0x80;
    auto add = [&](Word a, Word b) {
      const Word sum = a + b;
      const Word over = ((sum + bias) & high) >> 7;
      return sum - over * p;
    };
    for (std::size_t w = first_word; w < n; ++w) {
      Word x = src[w];
      if (x == 0) continue;
      Word acc = dst[w];
      for (unsigned k = c;;) {
        if (k & 1u) acc = add(acc, x);
        k >>= 1;
        if (k == 0) break;
        x = add(x, x);
      }
      dst[w] = acc;
    }
    return;
  }
  std::array<std::uint8_t, 256> times{};
  for (unsigned s = 0; s < p; ++s) times[s] = static_cast<std::uint8_t>((c * s) % p);
  std::uint8_t* d = bytes(dst);
  const std::uint8_t* s = bytes(src);
  for (std::size_t i = first_word * 8; i < n * 8; ++i) {
    if (s[i] == 0) continue;
    unsigned v = d[i] + times[s[i]];
    if (v >= p) v -= p;
    d[i] = static_cast<std::uint8_t>(v);
  }
}

void scale(std::span<Word> row, unsigned c, unsigned p) noexcept {
  if (p == 2) {
    if ((c & 1u) == 0) std::fill(row.begin(), row.end(), Word{0});
    return;
  }
  c %= p;
  std::uint8_t* d = bytes(row);
  for (std::size_t i = 0; i < row.size() * 8; ++i) d[i] = static_cast<std::uint8_t>((d[i] * c) % p);
}

std::size_t leading(std::span<const Word> row, unsigned p, std::size_t limit) noexcept {
  if (p == 2) {
    const std::size_t nw = std::min(row.size(), (limit + 63) / 64);
    for (std::size_t w = 0; w < nw; ++w)
      if (row[w] != 0) return std::min(limit, w * 64 + static_cast<std::size_t>(std::countr_zero(row[w])));
    return limit;
  }
  const std::size_t nw = std::min(row.size(), (limit + 7) / 8);
  for (std::size_t w = 0; w < nw; ++w)
    if (row[w] != 0) return std::min(limit, w * 8 + static_cast<std::size_t>(std::countr_zero(row[w])) / 8);
  return limit;
}

unsigned inverse(unsigned a, unsigned p) noexcept {
  a %= p;
  for (unsigned x = 1; x < p; ++x)
    if ((a * x) % p == 1) return x;
  return 0;
}

}  // namespace fp

namespace {

void check_prime(unsigned p) {
  if (p < 2 || p > 251) throw InvariantViolation("FpMatrix: prime out of range");
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) throw InvariantViolation("FpMatrix: modulus is not prime");
}

}  // namespace

FpMatrix::FpMatrix(unsigned prime, std::size_t rows, std::size_t cols)
    : prime_(prime), rows_(rows), cols_(cols), stride_(fp::words(prime, cols)), data_(rows * stride_) {
  check_prime(prime);
}

FpMatrix FpMatrix::identity(unsigned prime, std::size_t n) {
  FpMatrix m(prime, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FpMatrix FpMatrix::from_rows(unsigned prime, std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<std::vector<int>> v;
  std::size_t cols = 0;
  for (auto r : rows) {
    v.emplace_back(r);
    cols = std::max(cols, r.size());
  }
  return from_rows(prime, v, cols);
}

FpMatrix FpMatrix::from_rows(unsigned prime, const std::vector<std::vector<int>>& rows, std::size_t cols) {
  FpMatrix m(prime, rows.size(), cols);
  const int p = static_cast<int>(prime);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvariantViolation("FpMatrix::from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, static_cast<unsigned>(((rows[r][c] % p) + p) % p));
  }
  return m;
}

std::vector<std::uint8_t> FpMatrix::row_values(std::size_t r) const {
  std::vector<std::uint8_t> out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out[c] = static_cast<std::uint8_t>(at(r, c));
  return out;
}

void FpMatrix::append_row(std::span<const fp::Word> packed) {
  if (packed.size() < stride_) throw InvariantViolation("FpMatrix::append_row: short row");
  data_.insert(data_.end(), packed.begin(), packed.begin() + static_cast<std::ptrdiff_t>(stride_));
  // clear padding beyond cols so equality and zero tests stay exact
  auto r = row(rows_);
  for (std::size_t c = cols_; c < stride_ * (prime_ == 2 ? 64 : 8); ++c) fp::set(r, prime_, c, 0);
  ++rows_;
}

void FpMatrix::append_values(std::span<const std::uint8_t> values) {
  if (values.size() != cols_) throw InvariantViolation("FpMatrix::append_values: wrong length");
  data_.resize(data_.size() + stride_);
  auto r = row(rows_);
  for (std::size_t c = 0; c < cols_; ++c) fp::set(r, prime_, c, values[c] % prime_);
  ++rows_;
}

FpMatrix FpMatrix::operator*(const FpMatrix& rhs) const {
  if (cols_ != rhs.rows_ || prime_ != rhs.prime_) throw InvariantViolation("FpMatrix: shape mismatch in product");
  FpMatrix out(prime_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (const unsigned a = at(i, k); a != 0) fp::axpy(out.row(i), rhs.row(k), a, prime_);
  return out;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix out(prime_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (const unsigned a = at(i, j); a != 0) out.set(j, i, a);
  return out;
}

bool FpMatrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](fp::Word w) { return w == 0; });
}

EchelonBasis::EchelonBasis(unsigned prime, std::size_t cols, std::size_t tracked)
    : prime_(prime), cols_(cols), tracked_(tracked), words_(fp::words(prime, cols + tracked)) {
  check_prime(prime);
}

bool EchelonBasis::reduce(std::span<fp::Word> row) const noexcept {
  const unsigned p = prime_;
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    const std::size_t c = pivots_[k];
    const unsigned a = fp::get(row, p, c);
    if (a == 0) continue;
    const std::size_t first = p == 2 ? c / 64 : c / 8;
    fp::axpy(row, basis_row(k), p - a, p, first);
  }
  return fp::leading(row, p, cols_) == cols_;
}

bool EchelonBasis::insert(std::span<fp::Word> row) {
  if (reduce(row)) return false;
  const std::size_t c = fp::leading(row, prime_, cols_);
  const unsigned a = fp::get(row, prime_, c);
  if (a != 1) fp::scale(row, fp::inverse(a, prime_), prime_);
  rows_.insert(rows_.end(), row.begin(), row.begin() + static_cast<std::ptrdiff_t>(words_));
  pivots_.push_back(c);
  return true;
}

std::size_t rank(const FpMatrix& a) {
  EchelonBasis basis(a.prime(), a.cols());
  std::vector<fp::Word> row(basis.row_words());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::copy(a.row(r).begin(), a.row(r).end(), row.begin());
    basis.insert(row);
    if (basis.rank() == a.cols()) break;
  }
  return basis.rank();
}

FpMatrix rref(const FpMatrix& a) {
  const unsigned p = a.prime();
  EchelonBasis basis(p, a.cols());
  std::vector<fp::Word> row(basis.row_words());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::copy(a.row(r).begin(), a.row(r).end(), row.begin());
    basis.insert(row);
  }
  std::vector<std::size_t> order(basis.rank());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return basis.pivot(x) < basis.pivot(y); });

  FpMatrix out(p, 0, a.cols());
  std::vector<std::vector<fp::Word>> rows;
  for (std::size_t i : order) rows.emplace_back(basis.basis_row(i).begin(), basis.basis_row(i).end());
  // back-substitute: clear each pivot column from every other row
  for (std::size_t i = rows.size(); i-- > 0;) {
    const std::size_t c = basis.pivot(order[i]);
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (j == i) continue;
      const unsigned v = fp::get(rows[j], p, c);
      if (v != 0) fp::axpy(rows[j], rows[i], p - v, p);
    }
  }
  for (const auto& r : rows) out.append_row(r);
  return out;
}

FpMatrix kernel_basis(const FpMatrix& a) {
  const unsigned p = a.prime();
  const std::size_t n = a.rows();
  EchelonBasis basis(p, a.cols(), n);
  FpMatrix kernel(p, 0, n);
  std::vector<fp::Word> row(basis.row_words());
  std::vector<std::uint8_t> dep(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(row.begin(), row.end(), fp::Word{0});
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (const unsigned v = a.at(r, c); v != 0) fp::set(row, p, c, v);
    fp::set(row, p, a.cols() + r, 1);
    if (!basis.insert(row)) {
      for (std::size_t i = 0; i < n; ++i) dep[i] = static_cast<std::uint8_t>(basis.tracked_entry(row, i));
      kernel.append_values(dep);
    }
  }
  return rref(kernel);
}

RowSpaceSolver::RowSpaceSolver(const FpMatrix& a) : basis_(a.prime(), a.cols(), a.rows()), rows_(a.rows()) {
  const unsigned p = a.prime();
  std::vector<fp::Word> row(basis_.row_words());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::fill(row.begin(), row.end(), fp::Word{0});
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (const unsigned v = a.at(r, c); v != 0) fp::set(row, p, c, v);
    fp::set(row, p, a.cols() + r, 1);
    basis_.insert(row);
  }
}

RowSpaceSolver::RowSpaceSolver(EchelonBasis tracked_basis)
    : basis_(std::move(tracked_basis)), rows_(basis_.tracked()) {}

std::optional<std::vector<fp::Word>> RowSpaceSolver::solve_packed(std::span<const fp::Word> b) const {
  const unsigned p = basis_.prime();
  std::vector<fp::Word> row = basis_.empty_row();
  for (std::size_t c = 0; c < basis_.cols(); ++c)
    if (const unsigned v = fp::get(b, p, c); v != 0) fp::set(row, p, c, v);
  if (!basis_.reduce(row)) return std::nullopt;
  std::vector<fp::Word> x(fp::words(p, rows_));
  for (std::size_t i = 0; i < rows_; ++i)
    if (const unsigned v = basis_.tracked_entry(row, i); v != 0) fp::set(x, p, i, (p - v) % p);
  return x;
}

std::optional<std::vector<std::uint8_t>> solve(const FpMatrix& a, std::span<const std::uint8_t> b) {
  if (b.size() != a.cols()) throw InvariantViolation("solve: right-hand side has the wrong length");
  const unsigned p = a.prime();
  RowSpaceSolver solver(a);
  std::vector<fp::Word> packed(fp::words(p, a.cols()));
  for (std::size_t c = 0; c < b.size(); ++c) fp::set(packed, p, c, b[c] % p);
  auto x = solver.solve_packed(packed);
  if (!x) return std::nullopt;
  std::vector<std::uint8_t> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) out[i] = static_cast<std::uint8_t>(fp::get(*x, p, i));
  return out;
}

FpMatrix row_space_intersection(const FpMatrix& a, const FpMatrix& b) {
  if (a.cols() != b.cols() || a.prime() != b.prime())
    throw InvariantViolation("row_space_intersection: shape mismatch");
  const unsigned p = a.prime();
  const std::size_t n = a.cols();
  // Zassenhaus: echelonize [a | a] over [b | 0]; rows with zero left half span the intersection
  EchelonBasis basis(p, 2 * n);
  std::vector<fp::Word> row(basis.row_words());
  auto feed = [&](const FpMatrix& m, bool twice) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      std::fill(row.begin(), row.end(), fp::Word{0});
      for (std::size_t c = 0; c < n; ++c)
        if (const unsigned v = m.at(r, c); v != 0) {
          fp::set(row, p, c, v);
          if (twice) fp::set(row, p, n + c, v);
        }
      basis.insert(row);
    }
  };
  feed(a, true);
  feed(b, false);
  FpMatrix out(p, 0, n);
  std::vector<std::uint8_t> values(n);
  for (std::size_t i = 0; i < basis.rank(); ++i) {
    if (basis.pivot(i) < n) continue;
    const auto r = basis.basis_row(i);
    for (std::size_t c = 0; c < n; ++c) values[c] = static_cast<std::uint8_t>(fp::get(r, p, n + c));
    out.append_values(values);
  }
  return rref(out);
}

}  // namespace pgph
