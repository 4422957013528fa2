#include "pgph/bar_complex.hpp"

#include <algorithm>

#include "pgph/error.hpp"
#include "pgph/linalg.hpp"

namespace pgph {

namespace {

std::size_t ipow(std::size_t base, int n) {
  std::size_t r = 1;
  for (int i = 0; i < n; ++i) r *= base;
  return r;
}

void decode(std::size_t index, std::size_t base, int n, std::vector<Elem>& out) {
  out.resize(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = static_cast<Elem>(index % base + 1);
    index /= base;
  }
}

// Index of the tuple formed by `t` with position `skip` left out (skip >= size keeps all).
std::size_t encode(const std::vector<Elem>& t, std::size_t base, std::size_t skip = ~std::size_t{0}) {
  std::size_t index = 0;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (i != skip) index = index * base + (t[i] - 1);
  return index;
}

struct Local {
  unsigned p;
  unsigned e;
  std::uint64_t modulus;
};

// Z/p^e with p^e > |G| sees every nonzero invariant of a bar boundary exactly.
Local local_ring(const FiniteGroup& g) {
  Local l{g.prime(), g.rank_exponent() + 1, 1};
  for (unsigned i = 0; i < l.e; ++i) l.modulus *= l.p;
  return l;
}

void add_boundary_rows(const FiniteGroup& g, int n, std::uint64_t modulus, std::vector<std::uint64_t>& dense) {
  const std::size_t rows = bar_dimension(g.order(), n);
  const std::size_t cols = bar_dimension(g.order(), n - 1);
  const std::size_t offset = dense.size();
  dense.resize(offset + rows * cols, 0);
  const auto m = static_cast<std::int64_t>(modulus);
  for (std::size_t r = 0; r < rows; ++r)
    bar_boundary_terms(g, n, r, [&](std::size_t c, int coeff) {
      auto& x = dense[offset + r * cols + c];
      x = static_cast<std::uint64_t>(((static_cast<std::int64_t>(x) + coeff) % m + m) % m);
    });
}

std::vector<unsigned> boundary_valuations(const FiniteGroup& g, int n, const Local& l) {
  std::vector<std::uint64_t> dense;
  add_boundary_rows(g, n, l.modulus, dense);
  return local_smith_valuations(std::move(dense), bar_dimension(g.order(), n), bar_dimension(g.order(), n - 1),
                                l.p, l.e);
}

void check_integral_budget(const FiniteGroup& g, std::size_t entries, int n) {
  if (entries > budget().integral_entries)
    throw BudgetExceeded("integral bar complex of " + g.name() + " exceeds the integral budget in degree " +
                             std::to_string(n),
                         n - 1);
}

std::vector<std::uint64_t> invariants_from(const std::vector<unsigned>& valuations, unsigned p, std::size_t free) {
  std::vector<std::uint64_t> out;
  for (unsigned v : valuations)
    if (v > 0) out.push_back(ipow(p, static_cast<int>(v)));
  out.insert(out.end(), free, 0);
  return out;
}

}  // namespace

std::size_t bar_dimension(std::size_t order, int n) {
  if (n < 0) return 0;
  return ipow(order == 0 ? 0 : order - 1, n);
}

void bar_boundary_terms(const FiniteGroup& g, int n, std::size_t index,
                        const std::function<void(std::size_t, int)>& emit) {
  if (n <= 0) return;
  const std::size_t base = g.order() - 1;
  std::vector<Elem> t;
  decode(index, base, n, t);
  emit(encode(t, base, 0), 1);
  std::vector<Elem> merged;
  for (int i = 1; i < n; ++i) {
    const Elem prod = g.mul(t[static_cast<std::size_t>(i) - 1], t[static_cast<std::size_t>(i)]);
    if (prod == 0) continue;
    merged.assign(t.begin(), t.end());
    merged[static_cast<std::size_t>(i) - 1] = prod;
    emit(encode(merged, base, static_cast<std::size_t>(i)), i % 2 == 0 ? 1 : -1);
  }
  emit(encode(t, base, static_cast<std::size_t>(n) - 1), n % 2 == 0 ? 1 : -1);
}

IntMatrix bar_boundary_matrix(const FiniteGroup& g, int n) {
  IntMatrix d(bar_dimension(g.order(), n), bar_dimension(g.order(), n - 1));
  for (std::size_t r = 0; r < d.rows(); ++r)
    bar_boundary_terms(g, n, r, [&](std::size_t c, int coeff) { d(r, c) += coeff; });
  return d;
}

std::size_t bar_homology_fp(const GroupPtr& g, unsigned p, int n) {
  if (n < 0) return 0;
  if (n == 0) return 1;
  const std::size_t order = g->order();
  const std::size_t cn = bar_dimension(order, n);
  if (bar_dimension(order, n + 1) * cn > budget().fp_entries)
    throw BudgetExceeded("bar complex of " + g->name() + " exceeds the F_p budget in degree " + std::to_string(n),
                         n - 1);
  auto rank_of = [&](int k) -> std::size_t {
    const std::size_t rows = bar_dimension(order, k);
    const std::size_t cols = bar_dimension(order, k - 1);
    if (k <= 1 || rows == 0 || cols == 0) return 0;
    EchelonBasis basis(p, cols);
    std::vector<fp::Word> row = basis.empty_row();
    std::vector<int> acc(cols, 0);
    std::vector<std::size_t> touched;
    for (std::size_t r = 0; r < rows && basis.rank() < cols; ++r) {
      touched.clear();
      bar_boundary_terms(*g, k, r, [&](std::size_t c, int coeff) {
        if (acc[c] == 0) touched.push_back(c);
        acc[c] += coeff;
      });
      std::fill(row.begin(), row.end(), fp::Word{0});
      for (std::size_t c : touched) {
        const int v = ((acc[c] % static_cast<int>(p)) + static_cast<int>(p)) % static_cast<int>(p);
        if (v != 0) fp::set(row, p, c, static_cast<unsigned>(v));
        acc[c] = 0;
      }
      basis.insert(row);
    }
    return basis.rank();
  };
  return cn - rank_of(n) - rank_of(n + 1);
}

IntegralHomology integral_homology(const GroupPtr& g, int n) {
  IntegralHomology h;
  h.group = g;
  h.degree = n;
  if (n < 0) return h;
  if (n == 0) {
    h.invariants = {0};
    h.chain_rank = h.cycle_rank = 1;
    return h;
  }
  const std::size_t order = g->order();
  h.chain_rank = bar_dimension(order, n);
  if (h.chain_rank == 0) return h;
  check_integral_budget(*g, bar_dimension(order, n + 1) * h.chain_rank, n);
  const Local l = local_ring(*g);
  const std::size_t rank_dn = n >= 2 ? boundary_valuations(*g, n, l).size() : 0;
  const auto valuations = boundary_valuations(*g, n + 1, l);
  h.cycle_rank = h.chain_rank - rank_dn;
  h.boundary_rank = valuations.size();
  h.invariants = invariants_from(valuations, l.p, h.cycle_rank - h.boundary_rank);
  return h;
}

IntMatrix bar_cycles(const FiniteGroup& g, int n) {
  const std::size_t rows = bar_dimension(g.order(), n);
  check_integral_budget(g, rows * (rows + bar_dimension(g.order(), n - 1)), n);
  return integer_kernel(bar_boundary_matrix(g, n));
}

IntegralTriple integral_induced_triple(const GroupHom& hom, int n) {
  const auto hq = integral_homology(hom.target(), n);
  IntegralTriple out;
  out.source = integral_homology(hom.source(), n).invariants;
  out.target = hq.invariants;
  out.cokernel = integral_cokernel(hom, n, hq);
  return out;
}

std::vector<std::uint64_t> integral_cokernel(const GroupHom& hom, int n, const IntegralHomology& hq) {
  if (!hom.surjective()) throw InvariantViolation("integral_cokernel: map is not surjective");
  const auto& src = hom.source();
  const auto& tgt = hom.target();
  if (hq.group != tgt || hq.degree != n) throw InvariantViolation("integral_cokernel: homology of the wrong group");
  if (n <= 0 || tgt->order() == 1) return {};

  // coker = Z_n(Q) / (B_n(Q) + f Z_n(G)); Z_n(Q) is saturated in C_n(Q), so the
  // torsion of C_n(Q) / (B_n(Q) + f Z_n(G)) is the torsion of the cokernel.
  const Local l = local_ring(*tgt);
  const std::size_t cols = bar_dimension(tgt->order(), n);
  std::vector<std::uint64_t> dense;
  add_boundary_rows(*tgt, n + 1, l.modulus, dense);
  std::size_t rows = bar_dimension(tgt->order(), n + 1);

  const IntMatrix cycles = bar_cycles(*src, n);
  const std::size_t src_base = src->order() - 1;
  const std::size_t tgt_base = tgt->order() - 1;
  const Integer modulus(l.modulus);
  std::vector<Elem> t;
  for (std::size_t r = 0; r < cycles.rows(); ++r) {
    std::vector<std::uint64_t> image(cols, 0);
    for (std::size_t c = 0; c < cycles.cols(); ++c) {
      const Integer& x = cycles(r, c);
      if (x == 0) continue;
      decode(c, src_base, n, t);
      bool degenerate = false;
      for (Elem& y : t) {
        y = hom(y);
        degenerate = degenerate || y == 0;
      }
      if (degenerate) continue;
      Integer v = x % modulus;
      if (v < 0) v += modulus;
      auto& slot = image[encode(t, tgt_base)];
      slot = (slot + v.convert_to<std::uint64_t>()) % l.modulus;
    }
    dense.insert(dense.end(), image.begin(), image.end());
    ++rows;
  }
  const auto valuations = local_smith_valuations(std::move(dense), rows, cols, l.p, l.e);
  return invariants_from(valuations, l.p, hq.cycle_rank - valuations.size());
}

}  // namespace pgph
