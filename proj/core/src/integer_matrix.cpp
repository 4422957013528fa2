#include "pgph/integer_matrix.hpp"

#include <algorithm>
#include <utility>

#include "pgph/error.hpp"

namespace pgph {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
  std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  IntMatrix m(rows.size(), cols);
  std::size_t r = 0;
  for (auto row : rows) {
    if (row.size() != cols) throw InvariantViolation("IntMatrix::from_rows: ragged rows");
    std::size_t c = 0;
    for (long long v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

void IntMatrix::append_row(std::span<const Integer> values) {
  if (values.size() != cols_) throw InvariantViolation("IntMatrix::append_row: wrong length");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw InvariantViolation("IntMatrix: shape mismatch in product");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        if (rhs(k, j) != 0) out(i, j) += a * rhs(k, j);
    }
  return out;
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw InvariantViolation("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {

// Extended gcd with g = s*a + t*b, g > 0 when (a, b) != (0, 0).
void xgcd(const Integer& a, const Integer& b, Integer& g, Integer& s, Integer& t) {
  Integer r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    Integer q = r0 / r1;
    Integer tmp = r0 - q * r1;
    r0 = std::move(r1);
    r1 = std::move(tmp);
    tmp = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(tmp);
    tmp = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(tmp);
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  g = std::move(r0);
  s = std::move(s0);
  t = std::move(t0);
}

// Works in place on a; optionally records row ops in u and column ops in v.
class SmithReducer {
 public:
  SmithReducer(IntMatrix& a, IntMatrix* u, IntMatrix* v) : a_(a), u_(u), v_(v) {}

  std::vector<Integer> run() {
    const std::size_t rows = a_.rows();
    const std::size_t cols = a_.cols();
    std::vector<Integer> diagonal;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
      if (!move_smallest_to(t)) break;
      for (;;) {
        bool dirty = clear_column(t);
        dirty = clear_row(t) || dirty;
        if (dirty) continue;
        // divisibility: fold in any row whose entries the pivot does not divide
        std::size_t bad = rows;
        for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
          for (std::size_t j = t + 1; j < cols; ++j)
            if (a_(i, j) % a_(t, t) != 0) {
              bad = i;
              break;
            }
        if (bad == rows) break;
        add_row(t, bad, 1);
      }
      if (a_(t, t) < 0) negate_row(t);
      diagonal.push_back(a_(t, t));
    }
    return diagonal;
  }

 private:
  bool move_smallest_to(std::size_t t) {
    std::size_t bi = 0, bj = 0;
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < a_.rows(); ++i)
      for (std::size_t j = t; j < a_.cols(); ++j) {
        const Integer& x = a_(i, j);
        if (x == 0) continue;
        Integer ax = abs(x);
        if (!found || ax < best) {
          best = std::move(ax);
          bi = i;
          bj = j;
          found = true;
          if (best == 1) goto done;
        }
      }
  done:
    if (!found) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  // Returns true if a smaller remainder was moved into the pivot.
  bool clear_column(std::size_t t) {
    bool changed = false;
    for (std::size_t i = t + 1; i < a_.rows(); ++i) {
      if (a_(i, t) == 0) continue;
      const Integer q = a_(i, t) / a_(t, t);
      add_row(i, t, -q);
      if (a_(i, t) != 0) {
        swap_rows(t, i);
        changed = true;
        i = t;  // restart the sweep with the smaller pivot
      }
    }
    return changed;
  }

  bool clear_row(std::size_t t) {
    bool changed = false;
    for (std::size_t j = t + 1; j < a_.cols(); ++j) {
      if (a_(t, j) == 0) continue;
      const Integer q = a_(t, j) / a_(t, t);
      add_col(j, t, -q);
      if (a_(t, j) != 0) {
        swap_cols(t, j);
        changed = true;
        j = t;
      }
    }
    return changed;
  }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t c = 0; c < a_.cols(); ++c) std::swap(a_(i, c), a_(k, c));
    if (u_)
      for (std::size_t c = 0; c < u_->cols(); ++c) std::swap((*u_)(i, c), (*u_)(k, c));
  }
  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t r = 0; r < a_.rows(); ++r) std::swap(a_(r, j), a_(r, k));
    if (v_)
      for (std::size_t r = 0; r < v_->rows(); ++r) std::swap((*v_)(r, j), (*v_)(r, k));
  }
  // row_dst += q * row_src
  void add_row(std::size_t dst, std::size_t src, const Integer& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < a_.cols(); ++c)
      if (a_(src, c) != 0) a_(dst, c) += q * a_(src, c);
    if (u_)
      for (std::size_t c = 0; c < u_->cols(); ++c)
        if ((*u_)(src, c) != 0) (*u_)(dst, c) += q * (*u_)(src, c);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < a_.rows(); ++r)
      if (a_(r, src) != 0) a_(r, dst) += q * a_(r, src);
    if (v_)
      for (std::size_t r = 0; r < v_->rows(); ++r)
        if ((*v_)(r, src) != 0) (*v_)(r, dst) += q * (*v_)(r, src);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a_.cols(); ++c) a_(i, c) = -a_(i, c);
    if (u_)
      for (std::size_t c = 0; c < u_->cols(); ++c) (*u_)(i, c) = -(*u_)(i, c);
  }

  IntMatrix& a_;
  IntMatrix* u_;
  IntMatrix* v_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  SmithForm out{{}, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols())};
  IntMatrix work = a;
  out.diagonal = SmithReducer(work, &out.u, &out.v).run();
  return out;
}

std::vector<Integer> elementary_divisors(const IntMatrix& a) {
  LatticeEchelon echelon(a.cols());
  std::vector<Integer> row;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    row.assign(a.row(r).begin(), a.row(r).end());
    echelon.insert(row);
  }
  IntMatrix basis = echelon.basis();
  return SmithReducer(basis, nullptr, nullptr).run();
}

bool LatticeEchelon::insert(std::vector<Integer>& row) {
  if (row.size() != cols_ + tracked_) throw InvariantViolation("LatticeEchelon::insert: wrong row length");
  const std::size_t width = cols_ + tracked_;
  Integer g, s, t;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t c = pivots_[k];
    if (row[c] == 0) continue;
    auto& base = rows_[k];
    if (row[c] % base[c] == 0) {
      const Integer q = row[c] / base[c];
      for (std::size_t j = 0; j < width; ++j)
        if (base[j] != 0) row[j] -= q * base[j];
      continue;
    }
    // [base; row] <- [[s, t], [row_c/g, -base_c/g]] [base; row], determinant -1
    xgcd(base[c], row[c], g, s, t);
    const Integer x = row[c] / g;
    const Integer y = base[c] / g;
    for (std::size_t j = 0; j < width; ++j) {
      if (base[j] == 0 && row[j] == 0) continue;
      Integer nb = s * base[j] + t * row[j];
      row[j] = x * base[j] - y * row[j];
      base[j] = std::move(nb);
    }
  }
  std::size_t lead = 0;
  while (lead < cols_ && row[lead] == 0) ++lead;
  if (lead == cols_) return false;
  if (row[lead] < 0)
    for (auto& v : row) v = -v;
  rows_.push_back(row);
  pivots_.push_back(lead);
  return true;
}

IntMatrix LatticeEchelon::basis() const {
  IntMatrix m(0, cols_);
  for (const auto& r : rows_) m.append_row(std::span<const Integer>(r.data(), cols_));
  return m;
}

IntMatrix integer_kernel(const IntMatrix& a) {
  const std::size_t n = a.rows();
  LatticeEchelon echelon(a.cols(), n);
  IntMatrix kernel(0, n);
  std::vector<Integer> row;
  for (std::size_t r = 0; r < n; ++r) {
    row.assign(a.cols() + n, Integer(0));
    std::copy(a.row(r).begin(), a.row(r).end(), row.begin());
    row[a.cols() + r] = 1;
    if (!echelon.insert(row))
      kernel.append_row(std::span<const Integer>(row.data() + a.cols(), n));
  }
  return kernel;
}

std::vector<std::uint64_t> abelian_invariants_of_cokernel(const IntMatrix& a, std::size_t ambient_rank) {
  if (a.cols() != ambient_rank) throw InvariantViolation("abelian_invariants_of_cokernel: column count mismatch");
  const auto diagonal = elementary_divisors(a);
  std::vector<std::uint64_t> out;
  for (const auto& d : diagonal)
    if (d > 1) out.push_back(d.convert_to<std::uint64_t>());
  for (std::size_t i = diagonal.size(); i < ambient_rank; ++i) out.push_back(0);
  return out;
}

std::vector<unsigned> local_smith_valuations(std::vector<std::uint64_t> entries, std::size_t rows,
                                             std::size_t cols, unsigned p, unsigned e) {
  if (entries.size() != rows * cols) throw InvariantViolation("local_smith_valuations: wrong entry count");
  std::uint64_t modulus = 1;
  for (unsigned i = 0; i < e; ++i) modulus *= p;
  auto valuation = [&](std::uint64_t x) {
    unsigned v = 0;
    while (x % p == 0) {
      x /= p;
      ++v;
    }
    return v;
  };
  auto unit_inverse = [&](std::uint64_t u) {
    // u is a unit mod p^e; Newton iteration from the inverse mod p
    std::uint64_t x = 1;
    while ((u * x) % p != 1) ++x;
    for (unsigned k = 1; k < e; k *= 2) x = (x * ((2 + modulus - (u * x) % modulus) % modulus)) % modulus;
    return x;
  };
  auto at = [&](std::size_t r, std::size_t c) -> std::uint64_t& { return entries[r * cols + c]; };

  std::vector<std::size_t> live(rows);
  for (std::size_t r = 0; r < rows; ++r) live[r] = r;
  std::vector<bool> used_col(cols, false);
  std::vector<unsigned> out;
  while (!live.empty()) {
    // entry of least valuation among live rows and unused columns
    std::size_t br = rows, bc = cols, bpos = 0;
    unsigned best = e;
    for (std::size_t i = 0; i < live.size() && best > 0; ++i)
      for (std::size_t c = 0; c < cols; ++c) {
        const std::uint64_t x = at(live[i], c);
        if (x == 0 || used_col[c]) continue;
        if (const unsigned v = valuation(x); v < best) {
          best = v;
          br = live[i];
          bc = c;
          bpos = i;
          if (v == 0) break;
        }
      }
    if (br == rows) break;
    out.push_back(best);
    used_col[bc] = true;
    live.erase(live.begin() + static_cast<std::ptrdiff_t>(bpos));
    std::uint64_t scale = 1;
    for (unsigned i = 0; i < best; ++i) scale *= p;
    const std::uint64_t inv = unit_inverse(at(br, bc) / scale);
    for (std::size_t c = 0; c < cols; ++c) at(br, c) = (at(br, c) * inv) % modulus;
    // pivot is now p^best; clear its column from the live rows
    for (std::size_t r : live) {
      const std::uint64_t x = at(r, bc);
      if (x == 0) continue;
      const std::uint64_t q = x / scale;
      for (std::size_t c = 0; c < cols; ++c)
        if (const std::uint64_t y = at(br, c); y != 0) at(r, c) = (at(r, c) + (modulus - q) * y % modulus) % modulus;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pgph
