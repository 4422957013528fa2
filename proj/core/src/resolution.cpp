#include "pgph/resolution.hpp"

#include <algorithm>
#include <bit>

#include "pgph/error.hpp"

namespace pgph {

namespace {

// Calls f(index, value) for every nonzero entry among the first `len`.
template <class F>
void for_nonzero(std::span<const fp::Word> v, unsigned p, std::size_t len, F&& f) {
  if (p == 2) {
    const std::size_t nw = std::min(v.size(), fp::words(2, len));
    for (std::size_t w = 0; w < nw; ++w)
      for (fp::Word bits = v[w]; bits != 0; bits &= bits - 1) {
        const std::size_t i = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        if (i < len) f(i, 1u);
      }
    return;
  }
  const std::size_t nw = std::min(v.size(), fp::words(p, len));
  for (std::size_t w = 0; w < nw; ++w) {
    if (v[w] == 0) continue;
    for (std::size_t b = 0; b < 8; ++b)
      if (const unsigned a = static_cast<unsigned>((v[w] >> (b * 8)) & 0xffu); a != 0 && w * 8 + b < len)
        f(w * 8 + b, a);
  }
}

// out += c * (x . v) in F_p[G]^rank, len = rank * |G|.
void add_translate(const FiniteGroup& g, unsigned p, std::span<fp::Word> out, std::span<const fp::Word> v,
                   std::size_t len, Elem x, unsigned c) {
  const std::size_t n = g.order();
  const Elem* row = g.table().data() + std::size_t{x} * n;
  if (p == 2) {
    for_nonzero(v, p, len, [&](std::size_t i, unsigned) {
      const std::size_t t = (i / n) * n + row[i % n];
      out[t >> 6] ^= fp::Word{1} << (t & 63);
    });
    return;
  }
  for_nonzero(v, p, len, [&](std::size_t i, unsigned a) {
    const std::size_t t = (i / n) * n + row[i % n];
    fp::set(out, p, t, (fp::get(out, p, t) + a * c) % p);
  });
}

std::vector<fp::Word> tracked_part(const EchelonBasis& basis, std::span<const fp::Word> row) {
  const unsigned p = basis.prime();
  std::vector<fp::Word> out(fp::words(p, basis.tracked()));
  const std::size_t offset = basis.cols();
  if (p == 2 && offset % 64 == 0) {
    std::copy_n(row.begin() + static_cast<std::ptrdiff_t>(offset / 64), out.size(), out.begin());
    return out;
  }
  for (std::size_t i = 0; i < basis.tracked(); ++i)
    if (const unsigned v = fp::get(row, p, offset + i); v != 0) fp::set(out, p, i, v);
  return out;
}

}  // namespace

std::size_t MinimalResolution::rank(int n) const {
  if (n < 0 || static_cast<std::size_t>(n) >= ranks_.size())
    throw InvariantViolation("MinimalResolution::rank: degree " + std::to_string(n) + " not computed");
  return ranks_[static_cast<std::size_t>(n)];
}

const FpMatrix& MinimalResolution::generator_images(int n) const {
  if (n < 1 || static_cast<std::size_t>(n) >= images_.size())
    throw InvariantViolation("MinimalResolution: boundary " + std::to_string(n) + " not computed");
  return images_[static_cast<std::size_t>(n)];
}

FpMatrix MinimalResolution::boundary(int n) const {
  const FpMatrix& img = generator_images(n);
  const std::size_t order = group_->order();
  FpMatrix out(prime_, 0, img.cols());
  std::vector<fp::Word> row(fp::words(prime_, img.cols()));
  for (std::size_t k = 0; k < img.rows(); ++k)
    for (std::size_t x = 0; x < order; ++x) {
      std::fill(row.begin(), row.end(), fp::Word{0});
      add_translate(*group_, prime_, row, img.row(k), img.cols(), static_cast<Elem>(x), 1);
      out.append_row(row);
    }
  return out;
}

const RowSpaceSolver& MinimalResolution::solver(int n) const {
  if (n < 1 || static_cast<std::size_t>(n) >= solvers_.size())
    throw InvariantViolation("MinimalResolution: solver " + std::to_string(n) + " not computed");
  return *solvers_[static_cast<std::size_t>(n)];
}

MinimalResolution minimal_resolution(const GroupPtr& g, unsigned p, int n_max, bool allow_partial) {
  if (n_max < 0) throw InvariantViolation("minimal_resolution: negative degree");
  if (g->order() > 1 && g->prime() != p)
    throw InvariantViolation("minimal_resolution: " + std::to_string(p) + " does not divide |" + g->name() + "|");
  const std::size_t order = g->order();
  const std::size_t limit = budget().fp_entries;

  MinimalResolution r;
  r.group_ = g;
  r.prime_ = p;
  r.ranks_ = {1};
  r.images_.emplace_back();
  r.solvers_.emplace_back();

  for (int n = 0; n <= n_max; ++n) {
    const std::size_t rows = order * r.ranks_[static_cast<std::size_t>(n)];
    const std::size_t cols = n == 0 ? 1 : order * r.ranks_[static_cast<std::size_t>(n) - 1];
    if (rows * (cols + rows) > limit) {
      if (!allow_partial)
        throw BudgetExceeded("resolution of " + g->name() + " exceeds the F_p budget in degree " +
                                 std::to_string(n + 1),
                             n - 1);
      r.partial_ = true;
      break;
    }

    // Echelonize the rows x . d_n(e_k); dependent rows give the kernel.
    EchelonBasis basis(p, cols, rows);
    std::vector<std::vector<fp::Word>> kernel;
    std::vector<fp::Word> row = basis.empty_row();
    for (std::size_t k = 0; k * order < rows; ++k)
      for (std::size_t x = 0; x < order; ++x) {
        std::fill(row.begin(), row.end(), fp::Word{0});
        if (n == 0) fp::set(row, p, 0, 1);
        else add_translate(*g, p, row, r.images_[static_cast<std::size_t>(n)].row(k), cols, static_cast<Elem>(x), 1);
        fp::set(row, p, cols + k * order + x, 1);
        if (!basis.insert(row)) kernel.push_back(tracked_part(basis, row));
      }
    if (n >= 1) r.solvers_.push_back(std::make_shared<const RowSpaceSolver>(std::move(basis)));

    // I K is spanned by (s - 1) w over group generators s and a basis w of K.
    EchelonBasis radical(p, rows);
    std::vector<fp::Word> buf = radical.empty_row();
    for (const auto& w : kernel)
      for (Elem s : g->generators()) {
        std::fill(buf.begin(), buf.end(), fp::Word{0});
        add_translate(*g, p, buf, w, rows, s, 1);
        fp::axpy(buf, w, p - 1, p);
        radical.insert(buf);
      }
    const std::size_t radical_dim = radical.rank();

    FpMatrix images(p, 0, rows);
    for (const auto& w : kernel) {
      std::copy(w.begin(), w.end(), buf.begin());
      if (radical.insert(buf)) images.append_row(w);
    }
    if (images.rows() != kernel.size() - radical_dim)
      throw InvariantViolation("minimal_resolution: generator count disagrees with dim K/IK");
    r.ranks_.push_back(images.rows());
    r.images_.push_back(std::move(images));
    r.max_degree_ = n;
  }
  return r;
}

std::vector<std::size_t> homology_dims(const GroupPtr& g, unsigned p, int n_max) {
  const auto r = minimal_resolution(g, p, std::max(n_max - 1, 0));
  return {r.ranks().begin(), r.ranks().begin() + n_max + 1};
}

std::optional<std::string> verify_resolution(const MinimalResolution& r) {
  const auto& g = *r.group();
  const unsigned p = r.prime();
  const std::size_t order = g.order();
  const int top = r.max_degree() + 1;
  std::vector<std::size_t> boundary_rank(static_cast<std::size_t>(top) + 2, 0);
  boundary_rank[0] = order > 0 ? 1 : 0;  // augmentation

  for (int n = 1; n <= top; ++n) {
    const FpMatrix& img = r.generator_images(n);
    const std::size_t prev = r.rank(n - 1);
    if (img.rows() != r.rank(n) || img.cols() != order * prev)
      return "boundary " + std::to_string(n) + " has the wrong shape";
    for (std::size_t k = 0; k < img.rows(); ++k)
      for (std::size_t j = 0; j < prev; ++j) {
        unsigned sum = 0;
        for (std::size_t h = 0; h < order; ++h) sum += img.at(k, j * order + h);
        if (sum % p != 0) return "boundary " + std::to_string(n) + " is not minimal";
      }
    if (n >= 2) {
      const FpMatrix& lower = r.generator_images(n - 1);
      std::vector<fp::Word> acc(fp::words(p, lower.cols()));
      for (std::size_t k = 0; k < img.rows(); ++k) {
        std::fill(acc.begin(), acc.end(), fp::Word{0});
        for_nonzero(img.row(k), p, img.cols(), [&](std::size_t i, unsigned a) {
          add_translate(g, p, acc, lower.row(i / order), lower.cols(), static_cast<Elem>(i % order), a);
        });
        if (std::any_of(acc.begin(), acc.end(), [](fp::Word w) { return w != 0; }))
          return "d_" + std::to_string(n - 1) + " d_" + std::to_string(n) + " is not zero";
      }
    }
    boundary_rank[static_cast<std::size_t>(n)] = pgph::rank(r.boundary(n));
  }
  for (int n = 0; n < top; ++n) {
    const std::size_t kernel = order * r.rank(n) - boundary_rank[static_cast<std::size_t>(n)];
    if (kernel != boundary_rank[static_cast<std::size_t>(n) + 1])
      return "resolution is not exact at degree " + std::to_string(n);
  }
  return std::nullopt;
}

std::vector<InducedHomologyMap> induced_maps(const GroupHom& hom, int n, const MinimalResolution& src,
                                             const MinimalResolution& tgt) {
  if (src.group() != hom.source() || tgt.group() != hom.target())
    throw InvariantViolation("induced_maps: resolutions do not match the homomorphism");
  if (src.prime() != tgt.prime()) throw InvariantViolation("induced_maps: primes differ");
  if (src.max_degree() + 1 < n || tgt.max_degree() < n)
    throw InvariantViolation("induced_maps: resolutions too short for degree " + std::to_string(n));
  const unsigned p = src.prime();
  const FiniteGroup& q = *tgt.group();
  const std::size_t ng = src.group()->order();
  const std::size_t nq = q.order();

  std::vector<InducedHomologyMap> out;
  FpMatrix f(p, 1, nq);
  f.set(0, 0, 1);
  out.push_back({0, FpMatrix::identity(p, 1)});

  std::vector<unsigned> coeff;
  for (int m = 1; m <= n; ++m) {
    const FpMatrix& img = src.generator_images(m);
    const std::size_t bt = tgt.rank(m);
    FpMatrix next(p, 0, nq * bt);
    std::vector<fp::Word> y(fp::words(p, f.cols()));
    for (std::size_t k = 0; k < img.rows(); ++k) {
      std::fill(y.begin(), y.end(), fp::Word{0});
      // push the coefficients of d(e_k) to F_p[Q], block by block
      coeff.assign(f.rows() * nq, 0u);
      for_nonzero(img.row(k), p, img.cols(), [&](std::size_t i, unsigned a) {
        coeff[(i / ng) * nq + hom(static_cast<Elem>(i % ng))] += a;
      });
      for (std::size_t j = 0; j < f.rows(); ++j)
        for (std::size_t x = 0; x < nq; ++x)
          if (const unsigned c = coeff[j * nq + x] % p; c != 0)
            add_translate(q, p, y, f.row(j), f.cols(), static_cast<Elem>(x), c);
      auto x = tgt.solver(m).solve_packed(y);
      if (!x) throw InvariantViolation("induced_maps: chain map lift has no solution in degree " + std::to_string(m));
      next.append_row(*x);
    }
    FpMatrix h(p, img.rows(), bt);
    for (std::size_t k = 0; k < img.rows(); ++k)
      for_nonzero(next.row(k), p, next.cols(), [&](std::size_t i, unsigned a) {
        const std::size_t j = i / nq;
        h.set(k, j, (h.at(k, j) + a) % p);
      });
    out.push_back({m, std::move(h)});
    f = std::move(next);
  }
  return out;
}

InducedHomologyMap induced_map(const GroupHom& hom, int n, const MinimalResolution& src,
                               const MinimalResolution& tgt) {
  auto all = induced_maps(hom, n, src, tgt);
  return std::move(all.back());
}

}  // namespace pgph
